"""Link-level physics for the gateway - platform - gNB triangle.

Everything here is deterministic line-of-sight budgeting: slant geometry,
free-space path loss, dry-air gaseous attenuation, a fixed scintillation
margin, thermal noise, and the resulting per-link SNR. No fading draws,
no randomness.
"""

import math
from dataclasses import dataclass

SPEED_OF_LIGHT = 2.998e8  # m/s, used for both loss and propagation delay

# Validity window of the simplified sub-54-GHz oxygen attenuation term.
DRY_AIR_F_MIN_HZ = 1e9
DRY_AIR_F_MAX_HZ = 50e9


# =====================================================================
# Scenario containers
# =====================================================================

@dataclass(frozen=True)
class ScenarioGeometry:
    """Ground layout: gateway at x=0, gNB at x=D, platform at offset x, height H."""

    D: float  # gateway -> gNB ground distance, m
    H: float  # platform altitude, m
    x: float  # platform horizontal offset from the gateway, m

    def __post_init__(self):
        if self.D <= 0:
            raise ValueError(f"ground distance D must be positive, got {self.D}")
        if self.H <= 0:
            raise ValueError(f"altitude H must be positive, got {self.H}")
        if not 0 <= self.x <= self.D:
            raise ValueError(
                f"platform offset x={self.x} outside the corridor [0, {self.D}]"
            )

    @property
    def d_gateway(self):
        """Slant range gateway -> platform, m."""
        return slant_distance(self.x, self.H)

    @property
    def d_gnb(self):
        """Slant range gNB -> platform, m."""
        return slant_distance(self.D - self.x, self.H)


@dataclass(frozen=True)
class RadioParams:
    """Carrier, powers, gains and environment shared by every mode."""

    f: float = 2e9                # carrier frequency, Hz
    B: float = 2e7                # bandwidth, Hz
    noise_figure: float = 5.0     # dB
    P_gNB: float = 35.0           # gNB transmit power, dBm
    G_gNB: float = 15.0           # gNB antenna gain, dB
    P0_max: float = 33.0          # gateway max transmit power, dBm
    G0_max: float = 43.2          # gateway antenna gain, dB
    G_RS: float = 15.0            # relay payload antenna gain, dB
    G_H_rx: float = 0.0           # platform receive gain on the gNB access link, dB
    scintillation_dB: float = 0.5  # per-hop tropospheric scintillation margin, dB
    pressure_Pa: float = 101300.0
    temperature_C: float = 15.0

    def __post_init__(self):
        if self.f <= 0 or self.B <= 0:
            raise ValueError("carrier frequency and bandwidth must be positive")
        if self.scintillation_dB < 0:
            raise ValueError("scintillation margin cannot be negative")


@dataclass(frozen=True)
class Link:
    """One directed hop: distance plus the powers/gains at its two ends."""

    distance: float  # m
    tx_power: float  # dBm
    tx_gain: float   # dB
    rx_gain: float   # dB

    def __post_init__(self):
        if self.distance <= 0:
            raise ValueError("link distance must be positive")


# =====================================================================
# Geometry
# =====================================================================

def slant_distance(x_offset, h):
    """Straight-line range to a platform at height h and ground offset x_offset."""
    if h <= 0:
        raise ValueError("height must be positive")
    return math.hypot(x_offset, h)


def elevation_angle(x_offset, h):
    """Elevation of the platform seen from the ground point, radians in (0, pi/2]."""
    if h <= 0:
        raise ValueError("height must be positive")
    return math.atan2(h, x_offset)


# =====================================================================
# Losses and noise
# =====================================================================

def fspl_dB(d, f):
    """Free-space path loss 20*log10(4*pi*d*f/c) in dB."""
    if d <= 0 or f <= 0:
        raise ValueError("distance and frequency must be positive")
    return 20.0 * math.log10(4.0 * math.pi * d * f / SPEED_OF_LIGHT)


def _pt_correction(rp, rt, a, b, c, d):
    # pressure/temperature correction factor shared by the oxygen terms
    return rp ** a * rt ** b * math.exp(c * (1.0 - rp) + d * (1.0 - rt))


def dry_air_specific_attenuation(f, pressure_Pa=101300.0, temperature_C=15.0):
    """Oxygen (dry air) specific attenuation in dB/km.

    Simplified sub-54-GHz model with pressure/temperature correction
    factors. rp and rt normalise to 1013 hPa and 288 K.
    """
    if not DRY_AIR_F_MIN_HZ <= f <= DRY_AIR_F_MAX_HZ:
        raise ValueError(
            f"frequency {f} Hz outside the model validity window "
            f"[{DRY_AIR_F_MIN_HZ:.0e}, {DRY_AIR_F_MAX_HZ:.0e}]"
        )
    f_ghz = f / 1e9
    rp = (pressure_Pa / 100.0) / 1013.0
    rt = 288.0 / (273.0 + temperature_C)
    xi1 = _pt_correction(rp, rt, 0.0717, -1.8132, 0.0156, -1.6515)
    xi2 = _pt_correction(rp, rt, 0.5146, -4.6368, -0.1921, -5.7416)
    xi3 = _pt_correction(rp, rt, 0.3414, -6.5851, 0.2130, -8.5854)
    gamma = (
        7.2 * rt ** 2.8 / (f_ghz ** 2 + 0.34 * rp ** 2 * rt ** 1.6)
        + 0.62 * xi3 / ((54.0 - f_ghz) ** (1.16 * xi1) + 0.83 * xi2)
    )
    return gamma * f_ghz ** 2 * rp ** 2 * 1e-3


def total_link_loss_dB(d, radio: RadioParams):
    """FSPL + gaseous attenuation over the whole slant path + scintillation.

    The platform sits inside the bulk atmosphere, so the full path is
    charged the specific attenuation (no layered integration).
    """
    gamma0 = dry_air_specific_attenuation(
        radio.f, radio.pressure_Pa, radio.temperature_C
    )
    return fspl_dB(d, radio.f) + gamma0 * d / 1000.0 + radio.scintillation_dB


def noise_power_dBm(B, noise_figure):
    """Thermal noise floor -174 + 10*log10(B) + NF in dBm."""
    if B <= 0:
        raise ValueError("bandwidth must be positive")
    return -174.0 + 10.0 * math.log10(B) + noise_figure


def link_snr_linear(link: Link, radio: RadioParams):
    """Received SNR of one hop as a linear ratio."""
    snr_db = (
        link.tx_power
        + link.tx_gain
        + link.rx_gain
        - total_link_loss_dB(link.distance, radio)
        - noise_power_dBm(radio.B, radio.noise_figure)
    )
    return 10.0 ** (snr_db / 10.0)


def propagation_delay_s(path_m):
    """One-way free-space propagation delay over path_m metres."""
    if path_m < 0:
        raise ValueError("path length cannot be negative")
    return path_m / SPEED_OF_LIGHT


def db_to_linear(db):
    return 10.0 ** (db / 10.0)


def linear_to_db(value):
    if value <= 0:
        raise ValueError("dB conversion needs a positive ratio")
    return 10.0 * math.log10(value)

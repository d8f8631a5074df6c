"""Scenario configuration: sectioned key=value files over built-in defaults.

A bare run needs no file at all; every parameter of the shipped case
study is the default. A file given via --config (or the HAPSLINK_CONFIG
environment variable) overrides individual keys. Unknown sections or
keys are rejected with the offending name, not ignored.
"""

import configparser
import os
from dataclasses import dataclass
from typing import Optional

from .modes import ModeConfigs, RisConfig, RsConfig, SmbsConfig
from .offload import CloudConfig
from .propagation import RadioParams, ScenarioGeometry

ENV_CONFIG_VAR = "HAPSLINK_CONFIG"

SWEEP_VARIABLES = ("x", "S")

# Command defaults when no [sweep] section is given: the placement sweep
# walks the whole corridor, the task-size sweep spans 0..5 Mbit.
DEFAULT_X_SWEEP = (0.0, 60000.0, 500.0)
DEFAULT_S_SWEEP = (0.0, 5e6, 5e4)


class ConfigError(ValueError):
    """Bad configuration; message names the offending section/key."""


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(
                f"[sweep] variable must be one of {SWEEP_VARIABLES}, "
                f"got {self.variable!r}"
            )
        if self.step <= 0:
            raise ConfigError(f"[sweep] step must be positive, got {self.step}")
        if self.stop < self.start:
            raise ConfigError("[sweep] stop must not precede start")

    def grid(self):
        values = []
        v = self.start
        i = 0
        while v <= self.stop + 1e-9 * max(1.0, abs(self.stop)):
            values.append(min(v, self.stop))
            i += 1
            v = self.start + i * self.step
        return values


@dataclass(frozen=True)
class ScenarioConfig:
    geom: ScenarioGeometry = ScenarioGeometry(D=60000.0, H=20000.0, x=30000.0)
    radio: RadioParams = RadioParams()
    rs: RsConfig = RsConfig()
    ris: RisConfig = RisConfig()
    smbs: SmbsConfig = SmbsConfig()
    cloud: CloudConfig = CloudConfig()
    ris_N_list: tuple = (10000, 30000, 50000)
    smbs_F_H_list: tuple = (1e9, 2e9, 3e9)
    popularity_threshold: int = 3
    cycles_per_bit: float = 4.0
    sweep: Optional[SweepSpec] = None
    output_path: Optional[str] = None

    @property
    def configs(self) -> ModeConfigs:
        return ModeConfigs(rs=self.rs, ris=self.ris, smbs=self.smbs)

    def sweep_for(self, variable, step_override=None) -> SweepSpec:
        """Sweep spec for a command that needs to walk `variable`."""
        if self.sweep is not None:
            if self.sweep.variable != variable:
                raise ConfigError(
                    f"[sweep] variable is {self.sweep.variable!r} but this "
                    f"command sweeps {variable!r}"
                )
            spec = self.sweep
        else:
            start, stop, step = (
                DEFAULT_X_SWEEP if variable == "x" else DEFAULT_S_SWEEP
            )
            if variable == "x":
                stop = self.geom.D
            spec = SweepSpec(variable, start, stop, step)
        if step_override is not None:
            spec = SweepSpec(spec.variable, spec.start, spec.stop, step_override)
        return spec


# =====================================================================
# File parsing
# =====================================================================

def _get(parser, section, key, cast, current):
    if not parser.has_option(section, key):
        return current
    raw = parser.get(section, key)
    try:
        return cast(raw)
    except (ValueError, TypeError):
        raise ConfigError(f"[{section}] {key}: cannot parse {raw!r}") from None


def _int(raw):
    return int(float(raw))


def _float_list(raw):
    return tuple(float(tok) for tok in raw.split(",") if tok.strip())


def _int_list(raw):
    return tuple(int(float(tok)) for tok in raw.split(",") if tok.strip())


_KNOWN_KEYS = {
    "geometry": {"D", "H", "x"},
    "radio": {
        "f", "B", "noise_figure", "P_gNB", "G_gNB", "P0_max", "G0_max",
        "G_RS", "G_H_rx", "scintillation_dB", "pressure_Pa", "temperature_C",
    },
    "rs": {"alpha", "payload_power_W"},
    "ris": {"N", "beta", "per_element_power_W", "N_list"},
    "smbs": {"F_H", "payload_power_W", "cache_capacity", "F_H_list"},
    "cloud": {"F_C"},
    "engine": {"popularity_threshold", "cycles_per_bit"},
    "sweep": {"variable", "start", "stop", "step"},
    "output": {"path"},
}


def _reject_unknown(parser):
    for section in parser.sections():
        if section not in _KNOWN_KEYS:
            raise ConfigError(f"unknown section [{section}]")
        for key in parser.options(section):
            if key not in _KNOWN_KEYS[section]:
                raise ConfigError(f"unknown key {key!r} in section [{section}]")


def load_config(path=None) -> ScenarioConfig:
    """Build a ScenarioConfig from defaults plus an optional override file.

    Resolution order: explicit path, then the HAPSLINK_CONFIG environment
    variable, then pure defaults.
    """
    if path is None:
        path = os.environ.get(ENV_CONFIG_VAR) or None
    base = ScenarioConfig()
    if path is None:
        return base
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")

    parser = configparser.ConfigParser()
    parser.optionxform = str  # keys are case-sensitive (B vs b, N vs n)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    except configparser.Error as err:
        raise ConfigError(f"cannot parse {path}: {err}") from None
    _reject_unknown(parser)

    g = base.geom
    D = _get(parser, "geometry", "D", float, g.D)
    H = _get(parser, "geometry", "H", float, g.H)
    x = _get(parser, "geometry", "x", float, g.x)
    try:
        geom = ScenarioGeometry(D=D, H=H, x=x)
    except ValueError as err:
        raise ConfigError(f"[geometry] {err}") from None

    r = base.radio
    try:
        radio = RadioParams(
            f=_get(parser, "radio", "f", float, r.f),
            B=_get(parser, "radio", "B", float, r.B),
            noise_figure=_get(parser, "radio", "noise_figure", float, r.noise_figure),
            P_gNB=_get(parser, "radio", "P_gNB", float, r.P_gNB),
            G_gNB=_get(parser, "radio", "G_gNB", float, r.G_gNB),
            P0_max=_get(parser, "radio", "P0_max", float, r.P0_max),
            G0_max=_get(parser, "radio", "G0_max", float, r.G0_max),
            G_RS=_get(parser, "radio", "G_RS", float, r.G_RS),
            G_H_rx=_get(parser, "radio", "G_H_rx", float, r.G_H_rx),
            scintillation_dB=_get(
                parser, "radio", "scintillation_dB", float, r.scintillation_dB
            ),
            pressure_Pa=_get(parser, "radio", "pressure_Pa", float, r.pressure_Pa),
            temperature_C=_get(
                parser, "radio", "temperature_C", float, r.temperature_C
            ),
        )
        rs = RsConfig(
            alpha=_get(parser, "rs", "alpha", float, base.rs.alpha),
            payload_power_W=_get(
                parser, "rs", "payload_power_W", float, base.rs.payload_power_W
            ),
        )
        ris = RisConfig(
            N=_get(parser, "ris", "N", _int, base.ris.N),
            beta=_get(parser, "ris", "beta", float, base.ris.beta),
            per_element_power_W=_get(
                parser, "ris", "per_element_power_W", float,
                base.ris.per_element_power_W,
            ),
        )
        smbs = SmbsConfig(
            F_H=_get(parser, "smbs", "F_H", float, base.smbs.F_H),
            payload_power_W=_get(
                parser, "smbs", "payload_power_W", float, base.smbs.payload_power_W
            ),
            cache_capacity=_get(
                parser, "smbs", "cache_capacity", _int, base.smbs.cache_capacity
            ),
        )
        cloud = CloudConfig(F_C=_get(parser, "cloud", "F_C", float, base.cloud.F_C))
    except ValueError as err:
        if isinstance(err, ConfigError):
            raise
        raise ConfigError(str(err)) from None

    ris_N_list = _get(parser, "ris", "N_list", _int_list, base.ris_N_list)
    smbs_F_H_list = _get(parser, "smbs", "F_H_list", _float_list, base.smbs_F_H_list)
    if not ris_N_list:
        raise ConfigError("[ris] N_list must not be empty")
    if not smbs_F_H_list:
        raise ConfigError("[smbs] F_H_list must not be empty")

    threshold = _get(
        parser, "engine", "popularity_threshold", _int, base.popularity_threshold
    )
    cycles = _get(parser, "engine", "cycles_per_bit", float, base.cycles_per_bit)
    if threshold < 1:
        raise ConfigError("[engine] popularity_threshold must be at least 1")
    if cycles <= 0:
        raise ConfigError("[engine] cycles_per_bit must be positive")

    sweep = None
    if parser.has_section("sweep"):
        for key in ("variable", "start", "stop", "step"):
            if not parser.has_option("sweep", key):
                raise ConfigError(f"[sweep] missing key {key!r}")
        sweep = SweepSpec(
            variable=parser.get("sweep", "variable").strip(),
            start=_get(parser, "sweep", "start", float, 0.0),
            stop=_get(parser, "sweep", "stop", float, 0.0),
            step=_get(parser, "sweep", "step", float, 1.0),
        )

    output_path = None
    if parser.has_option("output", "path"):
        output_path = parser.get("output", "path").strip() or None

    return ScenarioConfig(
        geom=geom,
        radio=radio,
        rs=rs,
        ris=ris,
        smbs=smbs,
        cloud=cloud,
        ris_N_list=ris_N_list,
        smbs_F_H_list=smbs_F_H_list,
        popularity_threshold=threshold,
        cycles_per_bit=cycles,
        sweep=sweep,
        output_path=output_path,
    )

import math

import pytest
from hypothesis import given, strategies as st

from hapslink import (
    Mode,
    ModeConfigs,
    RadioParams,
    RisConfig,
    RsConfig,
    ScenarioGeometry,
    SmbsConfig,
    energy_efficiency,
    mode_capacity_bps_hz,
    mode_payload_power_W,
    mode_result,
    ris_capacity,
    ris_placement_roots,
    ris_snr_linear,
    rs_capacity,
    smbs_access_capacity,
)
from hapslink.modes import rs_hop_snrs_full_power
from hapslink.propagation import fspl_dB, noise_power_dBm

from conftest import geom_at


# ---------------------------------------------------------------
# config validation
# ---------------------------------------------------------------

def test_rs_config_rejects_bad_alpha():
    with pytest.raises(ValueError):
        RsConfig(alpha=0.0)
    with pytest.raises(ValueError):
        RsConfig(alpha=1.0)


def test_ris_config_rejects_bad_values():
    with pytest.raises(ValueError):
        RisConfig(N=0)
    with pytest.raises(ValueError):
        RisConfig(beta=0.0)
    with pytest.raises(ValueError):
        RisConfig(beta=1.5)
    assert RisConfig(N=1).N == 1


def test_smbs_config_rejects_bad_values():
    with pytest.raises(ValueError):
        SmbsConfig(F_H=0)
    with pytest.raises(ValueError):
        SmbsConfig(payload_power_W=0)


# ---------------------------------------------------------------
# relay
# ---------------------------------------------------------------

def test_rs_symmetric_geometry_balances(radio):
    # equal end gains and the midpoint make the two hops identical, so
    # the even split hits C = 1/2 log2(1 + snr/2)
    sym_radio = RadioParams(G0_max=20.0, G_gNB=20.0)
    geom = geom_at(30000.0)
    snr1, snr2 = rs_hop_snrs_full_power(geom, sym_radio)
    assert snr1 == pytest.approx(snr2, rel=1e-12)
    cap = rs_capacity(geom, sym_radio, RsConfig(alpha=0.5))
    assert cap == pytest.approx(0.5 * math.log2(1 + 0.5 * snr1), rel=1e-12)


def test_rs_capacity_vanishes_as_alpha_vanishes(radio, configs):
    geom = geom_at(30000.0)
    caps = [
        rs_capacity(geom, radio, configs.rs, alpha=a)
        for a in (1e-3, 1e-6, 1e-9, 1e-12)
    ]
    assert all(c2 < c1 for c1, c2 in zip(caps, caps[1:]))
    assert caps[-1] < 1e-6


def test_rs_capacity_alpha05_frozen(radio, configs):
    got = rs_capacity(geom_at(30000.0), radio, configs.rs, alpha=0.5)
    assert got == pytest.approx(4.259291804624754, rel=1e-12)


def test_rs_rejects_alpha_out_of_range(radio, configs):
    with pytest.raises(ValueError):
        rs_capacity(geom_at(30000.0), radio, configs.rs, alpha=0.0)
    with pytest.raises(ValueError):
        rs_capacity(geom_at(30000.0), radio, configs.rs, alpha=1.2)


@given(alpha=st.floats(min_value=1e-6, max_value=1 - 1e-6))
def test_rs_min_structure(alpha):
    # the half-duplex capacity can never beat either individual hop
    radio = RadioParams()
    geom = geom_at(25000.0)
    snr1, snr2 = rs_hop_snrs_full_power(geom, radio)
    cap = rs_capacity(geom, radio, RsConfig(), alpha=alpha)
    assert cap <= 0.5 * math.log2(1 + alpha * snr1) + 1e-12
    assert cap <= 0.5 * math.log2(1 + (1 - alpha) * snr2) + 1e-12


def test_rs_unimodal_in_alpha(radio, configs):
    # discrete slope changes sign exactly once over a fine alpha grid
    geom = geom_at(40000.0)
    alphas = [i / 2000 for i in range(1, 2000)]
    caps = [rs_capacity(geom, radio, configs.rs, alpha=a) for a in alphas]
    diffs = [b - a for a, b in zip(caps, caps[1:])]
    sign_changes = sum(
        1 for d1, d2 in zip(diffs, diffs[1:]) if (d1 > 0) != (d2 > 0)
    )
    assert sign_changes == 1


# ---------------------------------------------------------------
# reflecting surface
# ---------------------------------------------------------------

def test_ris_snr_quadruples_with_doubled_elements(radio):
    geom = geom_at(20000.0)
    for n in (1, 10, 10000):
        lo = ris_snr_linear(geom, radio, RisConfig(N=n))
        hi = ris_snr_linear(geom, radio, RisConfig(N=2 * n))
        assert hi / lo == pytest.approx(4.0, rel=1e-12)


def test_ris_capacity_monotone_in_N(radio):
    geom = geom_at(20000.0)
    caps = [ris_capacity(geom, radio, RisConfig(N=n)) for n in (10000, 30000, 50000)]
    assert caps[0] < caps[1] < caps[2]


def test_ris_snr_vanishes_with_beta(radio):
    geom = geom_at(20000.0)
    tiny = ris_snr_linear(geom, radio, RisConfig(N=50000, beta=1e-9))
    assert tiny < 1e-12


def test_ris_placement_roots_two_solutions():
    r1, r2 = ris_placement_roots(60000, 20000)
    assert r1 == pytest.approx(7639.320225002102, rel=1e-12)
    assert r2 == pytest.approx(52360.6797749979, rel=1e-12)
    # roots are symmetric about the midpoint
    assert r1 + r2 == pytest.approx(60000, rel=1e-12)


def test_ris_placement_roots_collapse():
    assert ris_placement_roots(60000, 30000) == (30000.0,)
    assert ris_placement_roots(60000, 40000) == (30000.0,)


def test_ris_capacity_frozen_at_root(radio, configs):
    root = ris_placement_roots(60000, 20000)[0]
    got = ris_capacity(geom_at(root), radio, configs.ris)
    assert got == pytest.approx(7.031361895295138, rel=1e-12)


def test_ris_snr_symmetric_about_midpoint(radio, configs):
    for x in (5000.0, 12000.0, 29000.0):
        a = ris_snr_linear(geom_at(x), radio, configs.ris)
        b = ris_snr_linear(geom_at(60000.0 - x), radio, configs.ris)
        assert a == pytest.approx(b, rel=1e-12)


def test_ris_equal_capacity_at_both_roots(radio, configs):
    r1, r2 = ris_placement_roots(60000, 20000)
    c1 = ris_capacity(geom_at(r1), radio, configs.ris)
    c2 = ris_capacity(geom_at(r2), radio, configs.ris)
    assert c1 == pytest.approx(c2, rel=1e-12)


def test_ris_capacity_simple_snr_points(radio, configs):
    # log2(1 + snr) endpoints sanity: tiny snr ~ 0 bps/Hz
    geom = geom_at(30000.0)
    tiny = RisConfig(N=1, beta=1e-6)
    assert ris_capacity(geom, radio, tiny) < 1e-9


# ---------------------------------------------------------------
# base-station payload
# ---------------------------------------------------------------

def test_smbs_capacity_frozen_above_gnb(radio):
    assert smbs_access_capacity(geom_at(60000.0), radio) == pytest.approx(
        6.943870592632252, rel=1e-12
    )


def test_smbs_capacity_decays_away_from_gnb(radio):
    caps = [smbs_access_capacity(geom_at(x), radio) for x in (60000, 45000, 30000, 0)]
    assert all(c2 < c1 for c1, c2 in zip(caps, caps[1:]))


def test_smbs_toy_balanced_link_gives_one_bit():
    radio = RadioParams(pressure_Pa=0.0, scintillation_dB=0.0, G_gNB=0.0, G_H_rx=0.0)
    d = 20000.0
    balanced = fspl_dB(d, radio.f) + noise_power_dBm(radio.B, radio.noise_figure)
    radio = RadioParams(
        P_gNB=balanced, G_gNB=0.0, G_H_rx=0.0,
        pressure_Pa=0.0, scintillation_dB=0.0,
    )
    cap = smbs_access_capacity(geom_at(60000.0), radio)
    assert cap == pytest.approx(1.0, rel=1e-12)


# ---------------------------------------------------------------
# power and efficiency
# ---------------------------------------------------------------

def test_mode_payload_power(configs):
    assert mode_payload_power_W(Mode.RS, configs) == 1000.0
    thirty_k = ModeConfigs(rs=configs.rs, ris=RisConfig(N=30000), smbs=configs.smbs)
    assert mode_payload_power_W(Mode.RIS, thirty_k) == pytest.approx(234.0, rel=1e-12)
    single = ModeConfigs(rs=configs.rs, ris=RisConfig(N=1), smbs=configs.smbs)
    assert mode_payload_power_W(Mode.RIS, single) == pytest.approx(0.0078, rel=1e-12)
    assert mode_payload_power_W(Mode.SMBS, configs) == 3000.0


def test_energy_efficiency_arithmetic():
    assert energy_efficiency(1000.0, 10.0) == 100.0
    assert energy_efficiency(0.0, 10.0) == 0.0
    with pytest.raises(ValueError):
        energy_efficiency(1000.0, 0.0)


def test_mode_result_consistency(radio, configs):
    geom = geom_at(30000.0)
    for mode in Mode:
        res = mode_result(mode, geom, radio, configs)
        assert res.capacity_bps == pytest.approx(
            res.capacity_bps_hz * radio.B, rel=1e-12
        )
        assert res.energy_efficiency_bits_per_joule == pytest.approx(
            res.capacity_bps / res.payload_power_W, rel=1e-12
        )
        assert res.capacity_bps_hz == pytest.approx(
            mode_capacity_bps_hz(mode, geom, radio, configs), rel=1e-12
        )

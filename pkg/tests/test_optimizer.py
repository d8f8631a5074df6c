import math
import random

import pytest

from hapslink import (
    Action,
    Mode,
    ModeConfigs,
    Objective,
    ObjectiveKind,
    RadioParams,
    RisConfig,
    RsConfig,
    ScenarioGeometry,
    golden_section_max,
    optimal_ris_positions,
    optimize_alpha,
    optimize_placement_numeric,
    ris_capacity,
    rs_capacity,
    select_mode_for_communication,
)
from hapslink.modes import rs_hop_snrs_full_power

from conftest import geom_at


# ---------------------------------------------------------------
# golden-section search
# ---------------------------------------------------------------

def test_golden_section_on_parabola():
    x, fx, iters = golden_section_max(lambda x: -(x - 3.7) ** 2, 0.0, 10.0, 1e-7)
    assert x == pytest.approx(3.7, abs=1e-6)
    assert fx == pytest.approx(0.0, abs=1e-12)
    assert iters > 10


def test_golden_section_rejects_empty_interval():
    with pytest.raises(ValueError):
        golden_section_max(lambda x: x, 1.0, 1.0, 1e-6)


# ---------------------------------------------------------------
# power split
# ---------------------------------------------------------------

def test_alpha_symmetric_link_splits_evenly():
    radio = RadioParams(G0_max=20.0, G_gNB=20.0)
    alpha, _ = optimize_alpha(geom_at(30000.0), radio, RsConfig())
    assert alpha == pytest.approx(0.5, abs=1e-5)


def test_alpha_opt_frozen_above_gnb(radio, configs):
    alpha, cap = optimize_alpha(geom_at(60000.0), radio, configs.rs)
    assert alpha == pytest.approx(0.015919920374141607, abs=1e-9)
    assert cap == pytest.approx(5.614030123886195, rel=1e-12)


def test_alpha_opt_beats_even_split(radio, configs):
    for x in (0.0, 15000.0, 30000.0, 45000.0, 60000.0):
        geom = geom_at(x)
        _, cap_opt = optimize_alpha(geom, radio, configs.rs)
        assert cap_opt >= rs_capacity(geom, radio, configs.rs, alpha=0.5)


def test_alpha_matches_brute_force_grid(radio, configs):
    # spot geometries; the full 10-seed oracle run lives in the
    # acceptance suite
    rng = random.Random(7)
    for _ in range(3):
        D = rng.uniform(30000.0, 90000.0)
        H = rng.uniform(10000.0, 25000.0)
        x = rng.uniform(0.0, D)
        geom = ScenarioGeometry(D=D, H=H, x=x)
        snr1, snr2 = rs_hop_snrs_full_power(geom, radio)

        def cap(a):
            return 0.5 * math.log2(1.0 + min(a * snr1, (1.0 - a) * snr2))

        grid_best = max((i * 1e-4 for i in range(1, 10000)), key=cap)
        alpha, _ = optimize_alpha(geom, radio, configs.rs)
        assert abs(alpha - grid_best) <= 2e-4


def test_alpha_never_worse_than_verification_grid(radio, configs):
    geom = geom_at(22000.0)
    alpha, cap = optimize_alpha(geom, radio, configs.rs)
    for i in range(1, 1000):
        grid_cap = rs_capacity(geom, radio, configs.rs, alpha=i / 1000)
        assert cap >= grid_cap * (1.0 - 1e-9)


# ---------------------------------------------------------------
# placement
# ---------------------------------------------------------------

def test_optimal_ris_positions_frozen():
    r1, r2 = optimal_ris_positions(60000, 20000)
    assert r1 == pytest.approx(7639.320225002102, rel=1e-12)
    assert r2 == pytest.approx(52360.6797749979, rel=1e-12)


def test_optimal_ris_positions_degenerate():
    assert optimal_ris_positions(60000, 30000) == (30000.0,)
    assert optimal_ris_positions(60000, 45000) == (30000.0,)


def test_ris_roots_minimise_distance_product():
    for root in optimal_ris_positions(60000, 20000):
        at_root = _distance_product_sq(root)
        assert at_root <= _distance_product_sq(root - 100.0)
        assert at_root <= _distance_product_sq(root + 100.0)


def _distance_product_sq(x, D=60000.0, H=20000.0):
    d1_sq = x * x + H * H
    d2_sq = (D - x) * (D - x) + H * H
    return d1_sq * d2_sq


def test_placement_rs_lands_next_to_gnb(radio, configs):
    result = optimize_placement_numeric(Mode.RS, geom_at(0.0), radio, configs)
    # the true peak sits a shade inside the corridor: right above the gNB
    # the short hop stops improving while the long hop keeps paying
    assert result.x_opt == pytest.approx(59905.764, abs=0.5)
    assert abs(result.x_opt - 60000.0) <= 100.0  # within one grid step of D
    assert result.objective_value == pytest.approx(5.6140508721754445, rel=1e-9)


def test_placement_smbs_on_top_of_gnb(radio, configs):
    result = optimize_placement_numeric(Mode.SMBS, geom_at(0.0), radio, configs)
    assert result.x_opt == 60000.0


def test_placement_ris_matches_closed_form(radio, configs):
    result = optimize_placement_numeric(Mode.RIS, geom_at(0.0), radio, configs)
    roots = optimal_ris_positions(60000, 20000)
    assert min(abs(result.x_opt - r) for r in roots) <= 100.0
    # refinement should land much closer than the grid step
    assert min(abs(result.x_opt - r) for r in roots) <= 1e-2


def test_placement_never_worse_than_grid(radio, configs):
    result = optimize_placement_numeric(Mode.RIS, geom_at(0.0), radio, configs)
    for x in range(0, 60001, 500):
        cap = ris_capacity(geom_at(float(x)), radio, configs.ris)
        assert result.objective_value >= cap * (1.0 - 1e-9)


def test_placement_rejects_bad_grid(radio, configs):
    with pytest.raises(ValueError):
        optimize_placement_numeric(Mode.RS, geom_at(0.0), radio, configs, grid_step=0.0)


# ---------------------------------------------------------------
# mode selection
# ---------------------------------------------------------------

def test_select_max_capacity_midcorridor(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MAX_CAPACITY), geom_at(30000.0), radio, configs
    )
    assert decision.mode is Mode.RIS
    assert decision.action is Action.FORWARD_VIA_GATEWAY
    assert decision.objective_value == pytest.approx(136046417.8623018, rel=1e-9)


def test_select_max_capacity_above_gnb(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MAX_CAPACITY), geom_at(60000.0), radio, configs
    )
    assert decision.mode is Mode.SMBS
    assert decision.action is Action.SERVE_DIRECT


def test_select_max_ee_prefers_surface(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MAX_ENERGY_EFFICIENCY), geom_at(30000.0), radio, configs
    )
    assert decision.mode is Mode.RIS


def test_select_min_energy_feasible(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS, qos_min_bps=1e8),
        geom_at(30000.0), radio, configs,
    )
    assert decision.mode is Mode.RIS
    assert decision.objective_value == pytest.approx(390.0, rel=1e-12)


def test_select_min_energy_only_smbs_meets_qos(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS, qos_min_bps=1.38e8),
        geom_at(60000.0), radio, configs,
    )
    assert decision.mode is Mode.SMBS


def test_select_min_energy_infeasible(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS, qos_min_bps=1e12),
        geom_at(30000.0), radio, configs,
    )
    assert decision.mode is None
    assert decision.action is Action.INFEASIBLE


def test_select_tie_breaks_toward_passive(radio, configs):
    # equal payload power for relay and surface: the passive one wins
    tied = ModeConfigs(
        rs=configs.rs,
        ris=RisConfig(N=50000, per_element_power_W=0.02),  # 1000 W
        smbs=configs.smbs,
    )
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS, qos_min_bps=1e6),
        geom_at(30000.0), radio, tied,
    )
    assert decision.mode is Mode.RIS


def test_select_respects_enabled_subset(radio, configs):
    decision = select_mode_for_communication(
        Objective(ObjectiveKind.MAX_CAPACITY), geom_at(30000.0), radio, configs,
        enabled=(Mode.RS,),
    )
    assert decision.mode is Mode.RS
    with pytest.raises(ValueError):
        select_mode_for_communication(
            Objective(ObjectiveKind.MAX_CAPACITY), geom_at(30000.0), radio, configs,
            enabled=(),
        )


def test_select_deterministic(radio, configs):
    obj = Objective(ObjectiveKind.MAX_CAPACITY)
    a = select_mode_for_communication(obj, geom_at(25000.0), radio, configs)
    b = select_mode_for_communication(obj, geom_at(25000.0), radio, configs)
    assert a == b


def test_objective_requires_qos_for_min_energy():
    with pytest.raises(ValueError):
        Objective(ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS)
    with pytest.raises(ValueError):
        Objective(ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS, qos_min_bps=0.0)


def test_gain_shift_leaves_argmaxes_alone(radio, configs):
    # a common pedestal on every antenna gain rescales all SNRs and
    # cannot move either optimiser
    boosted = RadioParams(
        G_gNB=radio.G_gNB + 7.0,
        G0_max=radio.G0_max + 7.0,
        G_RS=radio.G_RS + 7.0,
        G_H_rx=radio.G_H_rx + 7.0,
    )
    for x in (10000.0, 30000.0, 52000.0):
        geom = geom_at(x)
        a0, _ = optimize_alpha(geom, radio, configs.rs)
        a1, _ = optimize_alpha(geom, boosted, configs.rs)
        assert abs(a0 - a1) <= 2e-4
    base_place = optimize_placement_numeric(Mode.RIS, geom_at(0.0), radio, configs)
    boost_place = optimize_placement_numeric(Mode.RIS, geom_at(0.0), boosted, configs)
    assert abs(base_place.x_opt - boost_place.x_opt) <= 100.0

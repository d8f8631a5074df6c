"""One-dimensional searches and objective-driven mode selection.

The two tuned knobs are the relay power split alpha and the platform
placement x. Both capacity profiles are unimodal on their search
intervals (the reflected path is bimodal in x, which the grid-then-refine
scheme handles), so a plain golden-section search is enough.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .modes import (
    Action,
    Mode,
    ModeConfigs,
    mode_capacity_bps_hz,
    mode_payload_power_W,
    ris_capacity,
    ris_placement_roots,
    rs_capacity,
    rs_hop_snrs_full_power,
    smbs_access_capacity,
)
from .propagation import RadioParams, ScenarioGeometry

GOLDEN_RATIO = (math.sqrt(5.0) + 1.0) / 2.0

# Fixed tie-break: prefer the most passive payload.
_PASSIVE_ORDER = (Mode.RIS, Mode.RS, Mode.SMBS)


class ObjectiveKind(Enum):
    MAX_CAPACITY = "max_capacity"
    MAX_ENERGY_EFFICIENCY = "max_energy_efficiency"
    MIN_ENERGY_SUBJECT_TO_QOS = "min_energy_subject_to_qos"


@dataclass(frozen=True)
class Objective:
    kind: ObjectiveKind = ObjectiveKind.MAX_CAPACITY
    qos_min_bps: Optional[float] = None

    def __post_init__(self):
        if self.kind is ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS:
            if self.qos_min_bps is None or self.qos_min_bps <= 0:
                raise ValueError("a positive qos_min_bps is required for min_energy")


@dataclass(frozen=True)
class PlacementResult:
    x_opt: float
    objective_value: float
    iterations: int


@dataclass(frozen=True)
class ModeDecision:
    """Outcome of one selection: which payload, doing what, scoring how much.

    objective_value carries the chosen objective's figure: capacity in bps
    for max_capacity, bits per joule for max_energy_efficiency, payload
    watts for min_energy_subject_to_qos. mode is None only for infeasible
    outcomes. latency_s and energy_J are filled when a payload size is
    known.
    """

    mode: Optional[Mode]
    action: Action
    objective_value: float
    latency_s: Optional[float] = None
    energy_J: Optional[float] = None


# =====================================================================
# Golden-section search
# =====================================================================

def golden_section_max(fn, lo, hi, tol):
    """Maximise a unimodal fn on [lo, hi]; returns (x, fn(x), iterations)."""
    if not hi > lo:
        raise ValueError("need hi > lo")
    a, b = lo, hi
    c = b - (b - a) / GOLDEN_RATIO
    d = a + (b - a) / GOLDEN_RATIO
    fc, fd = fn(c), fn(d)
    iterations = 0
    while abs(b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - (b - a) / GOLDEN_RATIO
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) / GOLDEN_RATIO
            fd = fn(d)
        iterations += 1
    x = (a + b) / 2.0
    return x, fn(x), iterations


# =====================================================================
# Power split
# =====================================================================

ALPHA_TOL = 1e-5


def optimize_alpha(geom: ScenarioGeometry, radio: RadioParams, rs):
    """Best relay power split for this geometry; returns (alpha_opt, capacity).

    The bottleneck min(alpha * snr1, (1 - alpha) * snr2) is piecewise
    monotone with a single crest, so golden section on (0, 1) converges.
    """
    snr1, snr2 = rs_hop_snrs_full_power(geom, radio)

    def cap(a):
        return 0.5 * math.log2(1.0 + min(a * snr1, (1.0 - a) * snr2))

    eps = 1e-9  # stay strictly inside (0, 1)
    alpha, value, _ = golden_section_max(cap, eps, 1.0 - eps, ALPHA_TOL)
    return alpha, value


def rs_capacity_alpha_opt(geom, radio, rs):
    """Relay capacity with the per-geometry optimal split."""
    return optimize_alpha(geom, radio, rs)[1]


# =====================================================================
# Placement
# =====================================================================

def optimal_ris_positions(D, H):
    """Closed-form best offsets for the reflected path.

    Two roots for H < D/2; the degenerate geometries (H >= D/2) collapse
    to the single midpoint value D/2.
    """
    return ris_placement_roots(D, H)


def optimize_placement_numeric(
    mode: Mode,
    geom_template: ScenarioGeometry,
    radio: RadioParams,
    configs: ModeConfigs,
    grid_step=100.0,
    refine_tol=1e-3,
) -> PlacementResult:
    """Grid scan over x in [0, D] plus golden refinement in the winning cell.

    The grid guards against multiple peaks (the reflected path has two);
    refinement then only ever sees the single peak inside one cell.
    """
    if grid_step <= 0:
        raise ValueError("grid step must be positive")
    D, H = geom_template.D, geom_template.H

    def objective(x):
        geom = ScenarioGeometry(D=D, H=H, x=x)
        if mode is Mode.RS:
            return rs_capacity_alpha_opt(geom, radio, configs.rs)
        return mode_capacity_bps_hz(mode, geom, radio, configs)

    n_cells = max(1, math.ceil(D / grid_step))
    xs = [min(D, i * grid_step) for i in range(n_cells + 1)]
    values = [objective(x) for x in xs]
    best = max(range(len(xs)), key=lambda i: values[i])

    lo = xs[max(0, best - 1)]
    hi = xs[min(len(xs) - 1, best + 1)]
    x_opt, value, iterations = golden_section_max(objective, lo, hi, refine_tol)
    if values[best] > value:  # keep the grid point if refinement lost it
        x_opt, value = xs[best], values[best]
    return PlacementResult(x_opt=x_opt, objective_value=value, iterations=iterations)


# =====================================================================
# Mode selection for a communication demand
# =====================================================================

def _mode_metrics(geom, radio, configs, enabled):
    for mode in _PASSIVE_ORDER:
        if mode not in enabled:
            continue
        if mode is Mode.RS:
            capacity_hz = rs_capacity_alpha_opt(geom, radio, configs.rs)
        else:
            capacity_hz = mode_capacity_bps_hz(mode, geom, radio, configs)
        yield mode, capacity_hz * radio.B, mode_payload_power_W(mode, configs)


def _action_for(mode: Mode) -> Action:
    return Action.SERVE_DIRECT if mode is Mode.SMBS else Action.FORWARD_VIA_GATEWAY


def select_mode_for_communication(
    objective: Objective,
    geom: ScenarioGeometry,
    radio: RadioParams,
    configs: ModeConfigs,
    enabled=(Mode.RIS, Mode.RS, Mode.SMBS),
) -> ModeDecision:
    """Pick the payload that best serves one communication demand at the
    platform's current position. Ties fall to the more passive payload."""
    enabled = tuple(enabled)
    if not enabled:
        raise ValueError("at least one mode must be enabled")
    metrics = list(_mode_metrics(geom, radio, configs, enabled))

    kind = objective.kind
    if kind is ObjectiveKind.MAX_CAPACITY:
        mode, capacity, _ = max(metrics, key=lambda m: m[1])
        return ModeDecision(mode, _action_for(mode), capacity)
    if kind is ObjectiveKind.MAX_ENERGY_EFFICIENCY:
        mode, capacity, power = max(metrics, key=lambda m: m[1] / m[2])
        return ModeDecision(mode, _action_for(mode), capacity / power)
    if kind is ObjectiveKind.MIN_ENERGY_SUBJECT_TO_QOS:
        feasible = [m for m in metrics if m[1] >= objective.qos_min_bps]
        if not feasible:
            return ModeDecision(None, Action.INFEASIBLE, 0.0)
        mode, _, power = min(feasible, key=lambda m: m[2])
        return ModeDecision(mode, _action_for(mode), power)
    raise ValueError(f"unknown objective kind {kind!r}")

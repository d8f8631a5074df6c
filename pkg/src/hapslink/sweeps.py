"""Parameter sweeps behind the sweep-* commands.

Each sweep walks one variable (platform offset x or task size S),
evaluates every mode per grid point, and returns an ordered table plus a
handful of scalar observations (spreads, degradations, crossovers) that
the CLI reports alongside the CSV.
"""

from dataclasses import dataclass, field

from .config import ScenarioConfig
from .modes import (
    Mode,
    ModeConfigs,
    RisConfig,
    SmbsConfig,
    energy_efficiency,
    ris_capacity,
    rs_capacity,
)
from .offload import ComputeTask, offload_latency
from .optimizer import (
    optimal_ris_positions,
    optimize_alpha,
    optimize_placement_numeric,
)
from .propagation import ScenarioGeometry


@dataclass(frozen=True)
class SweepResult:
    header: tuple
    rows: tuple
    notes: dict = field(default_factory=dict)

    def to_csv(self):
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(",".join(_fmt(v) for v in row))
        return "\n".join(lines) + "\n"

    def column(self, name):
        idx = self.header.index(name)
        return [row[idx] for row in self.rows]


def _fmt(value):
    # 9 significant digits, scientific; keeps golden files platform-stable
    return f"{value:.8e}"


def _geom_at(cfg: ScenarioConfig, x):
    return ScenarioGeometry(D=cfg.geom.D, H=cfg.geom.H, x=x)


# =====================================================================
# Capacity vs placement
# =====================================================================

def sweep_capacity(cfg: ScenarioConfig, step=None) -> SweepResult:
    """Relay (fixed and optimal split) and reflected-path capacity over x."""
    spec = cfg.sweep_for("x", step)
    header = ["x_m", "rs_alpha05_bps_hz", "rs_alpha_opt_bps_hz", "alpha_opt"]
    header += [f"ris_N{n}_bps_hz" for n in cfg.ris_N_list]
    rows = []
    for x in spec.grid():
        geom = _geom_at(cfg, x)
        alpha_opt, cap_opt = optimize_alpha(geom, cfg.radio, cfg.rs)
        row = [
            x,
            rs_capacity(geom, cfg.radio, cfg.rs, alpha=0.5),
            cap_opt,
            alpha_opt,
        ]
        for n in cfg.ris_N_list:
            ris = RisConfig(
                N=n, beta=cfg.ris.beta,
                per_element_power_W=cfg.ris.per_element_power_W,
            )
            row.append(ris_capacity(geom, cfg.radio, ris))
        rows.append(tuple(row))

    cap05 = [r[1] for r in rows]
    capopt = [r[2] for r in rows]
    degradation = [
        100.0 * (1.0 - c5 / co) if co > 0 else 0.0
        for c5, co in zip(cap05, capopt)
    ]
    notes = {
        "alpha05_max_degradation_pct": max(degradation),
        "alpha05_degradation_at_stop_pct": degradation[-1],
        "ris_roots_m": optimal_ris_positions(cfg.geom.D, cfg.geom.H),
    }
    return SweepResult(tuple(header), tuple(rows), notes)


# =====================================================================
# Energy efficiency vs placement
# =====================================================================

def sweep_ee(cfg: ScenarioConfig, step=None) -> SweepResult:
    """Bits per joule over x for the relay and each configured surface size."""
    spec = cfg.sweep_for("x", step)
    header = ["x_m", "ee_rs_alpha05_bits_per_J", "ee_rs_alpha_opt_bits_per_J"]
    header += [f"ee_ris_N{n}_bits_per_J" for n in cfg.ris_N_list]
    rows = []
    for x in spec.grid():
        geom = _geom_at(cfg, x)
        _, cap_opt = optimize_alpha(geom, cfg.radio, cfg.rs)
        row = [
            x,
            energy_efficiency(
                rs_capacity(geom, cfg.radio, cfg.rs, alpha=0.5) * cfg.radio.B,
                cfg.rs.payload_power_W,
            ),
            energy_efficiency(cap_opt * cfg.radio.B, cfg.rs.payload_power_W),
        ]
        for n in cfg.ris_N_list:
            ris = RisConfig(
                N=n, beta=cfg.ris.beta,
                per_element_power_W=cfg.ris.per_element_power_W,
            )
            cap = ris_capacity(geom, cfg.radio, ris)
            row.append(energy_efficiency(cap * cfg.radio.B, n * ris.per_element_power_W))
        rows.append(tuple(row))

    notes = {}
    for j, n in enumerate(cfg.ris_N_list):
        col = [r[3 + j] for r in rows]
        notes[f"ris_N{n}_ee_spread_pct"] = 100.0 * (max(col) / min(col) - 1.0)
    return SweepResult(tuple(header), tuple(rows), notes)


# =====================================================================
# Offload latency vs task size
# =====================================================================

def latency_sweep_placements(cfg: ScenarioConfig):
    """Per-mode placements used by the latency sweep.

    Each mode sits at its own best offset: the base-station payload right
    above the gNB, the relay at its numeric optimum, the surface at the
    closed-form root.
    """
    smbs_geom = _geom_at(cfg, cfg.geom.D)
    rs_place = optimize_placement_numeric(Mode.RS, cfg.geom, cfg.radio, cfg.configs)
    rs_geom = _geom_at(cfg, rs_place.x_opt)
    ris_geom = _geom_at(cfg, optimal_ris_positions(cfg.geom.D, cfg.geom.H)[0])
    return smbs_geom, rs_geom, ris_geom


def sweep_latency(cfg: ScenarioConfig, step=None) -> SweepResult:
    """Offload latency over task size, one column per compute placement."""
    spec = cfg.sweep_for("S", step)
    smbs_geom, rs_geom, ris_geom = latency_sweep_placements(cfg)

    header = ["S_bits"]
    header += [f"smbs_FH{fh / 1e9:g}GHz_s" for fh in cfg.smbs_F_H_list]
    header += ["rs_s", "ris_s"]

    smbs_variants = [
        SmbsConfig(
            F_H=fh,
            payload_power_W=cfg.smbs.payload_power_W,
            cache_capacity=cfg.smbs.cache_capacity,
        )
        for fh in cfg.smbs_F_H_list
    ]
    rows = []
    for s in spec.grid():
        task = ComputeTask(s, cfg.cycles_per_bit)
        row = [s]
        for smbs in smbs_variants:
            configs = ModeConfigs(rs=cfg.rs, ris=cfg.ris, smbs=smbs)
            row.append(
                offload_latency(Mode.SMBS, smbs_geom, cfg.radio, configs,
                                task, cfg.cloud)
            )
        row.append(
            offload_latency(Mode.RS, rs_geom, cfg.radio, cfg.configs,
                            task, cfg.cloud)
        )
        row.append(
            offload_latency(Mode.RIS, ris_geom, cfg.radio, cfg.configs,
                            task, cfg.cloud)
        )
        rows.append(tuple(row))

    notes = {}
    n_fh = len(cfg.smbs_F_H_list)
    relay_best = [min(r[1 + n_fh], r[2 + n_fh]) for r in rows]
    s_col = [r[0] for r in rows]
    for j, fh in enumerate(cfg.smbs_F_H_list):
        smbs_col = [r[1 + j] for r in rows]
        crossing = None
        for i in range(1, len(rows)):
            before = smbs_col[i - 1] - relay_best[i - 1]
            after = smbs_col[i] - relay_best[i]
            if before < 0 <= after:
                # linear interpolation inside the bracketing cell
                frac = before / (before - after)
                crossing = s_col[i - 1] + frac * (s_col[i] - s_col[i - 1])
                break
        notes[f"smbs_FH{fh / 1e9:g}GHz_crossover_S_bits"] = crossing
    return SweepResult(tuple(header), tuple(rows), notes)

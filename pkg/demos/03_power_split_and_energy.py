"""
Relay power split and bits per joule
====================================

The relay splits its gateway power budget: a fraction alpha feeds the
uplink hop, the rest the downlink hop. The best split equalizes the two
hop SNRs. The second half compares energy efficiency: a 1 kW relay
payload against a passive surface drawing 7.8 mW per element.
"""

import numpy as np

from hapslink import (
    RadioParams,
    RsConfig,
    ScenarioGeometry,
    load_config,
    optimize_alpha,
    rs_capacity,
    sweep_ee,
)

radio = RadioParams()
rs = RsConfig()

# the split only matters because the two hops are asymmetric: the
# gateway antenna is much stronger than the relay's own
for x_km in (10, 30, 50, 60):
    geom = ScenarioGeometry(D=60000.0, H=20000.0, x=x_km * 1000.0)
    alpha, cap = optimize_alpha(geom, radio, rs)
    cap_half = rs_capacity(geom, radio, rs, alpha=0.5)
    print(f"x = {x_km:2d} km: alpha_opt = {alpha:8.6f}, "
          f"C(alpha_opt) = {cap:5.3f} bps/Hz, C(0.5) = {cap_half:5.3f} "
          f"({100 * (1 - cap_half / cap):4.1f}% loss)")

# sanity check: the optimized split really equalizes the weighted hops
geom = ScenarioGeometry(D=60000.0, H=20000.0, x=60000.0)
alpha, _ = optimize_alpha(geom, radio, rs)
grid = np.linspace(1e-4, 1 - 1e-4, 9999)
caps = [rs_capacity(geom, radio, rs, alpha=a) for a in grid]
print(f"\nbrute-force argmax at x = D: {grid[int(np.argmax(caps))]:.6f} "
      f"(optimizer said {alpha:.6f})")

# energy efficiency across the corridor
cfg = load_config(None)
result = sweep_ee(cfg)
rs_col = result.column("ee_rs_alpha_opt_bits_per_J")
print("\nbits per joule, worst offset each")
print(f"  relay (1 kW):          {min(rs_col):12.0f}")
for n in cfg.ris_N_list:
    col = result.column(f"ee_ris_N{n}_bits_per_J")
    watts = n * cfg.ris.per_element_power_W
    print(f"  surface N = {n:6d} ({watts:5.0f} W): {min(col):12.0f}")
print("\nthe passive surface wins at every offset and element count;")
print("its efficiency barely moves with x:")
for n in cfg.ris_N_list:
    spread = result.notes[f"ris_N{n}_ee_spread_pct"]
    print(f"  N = {n:6d}: max/min spread {spread:.1f}%")

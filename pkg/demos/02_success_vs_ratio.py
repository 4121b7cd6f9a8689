"""Reachable ratio vs gate phase, and best success vs target ratio.

Writes ``ratio_sweep.csv`` and ``success_sweep.csv`` into the working
directory; both are ready for any plotting tool.
"""
import math

from klmprep import strategy_threshold
from klmprep.experiments import (
    PAPER_THRESHOLD,
    RATIO_HEADER,
    SUCCESS_HEADER,
    sweep_ratio,
    sweep_success,
    to_csv,
)

ratio_rows = sweep_ratio(0.0, math.pi, 181)
with open("ratio_sweep.csv", "w") as fh:
    fh.write(to_csv(ratio_rows, RATIO_HEADER))

success_rows = sweep_success(0.01, 3.0, 300)
with open("success_sweep.csv", "w") as fh:
    fh.write(to_csv(success_rows, SUCCESS_HEADER))

print("phase   max ratio   gate success")
for row in ratio_rows[::30]:
    print(f"{row.x:5.3f}  {row.columns['max_ratio']:10.4f}  {row.columns['p_cphase']:.4f}")

r_star = strategy_threshold()
print(f"\nstrategy switches at r* = {r_star:.5f} (= 1/sqrt(3); the figure caption quotes {PAPER_THRESHOLD})")
for row in success_rows:
    if abs(row.x - r_star) < 0.02:
        c = row.columns
        print(f"r={row.x:.3f}  p={c['p_opt']:.4f}  phi={c['phi_opt']:.4f}  theta_s={c['theta_s_opt']:.4f}")

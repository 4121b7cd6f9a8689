"""Two-qubit KLM states from one tunable c-phase gate.

Run with ``python demos/01_two_qubit_step.py``.
"""
import math

import numpy as np

from klmprep import (
    QubitParams,
    apply_1q,
    apply_cphase,
    family_spec,
    plan,
    product_state,
    signal_basis_rotation,
    simulate_plan,
    tau_epsilon,
)

# A control and a signal qubit in product form
tc, ts, gate = 1.1, math.pi / 8, math.pi
psi = product_state([QubitParams(tc), QubitParams(ts)])
psi = apply_cphase(psi, 1, 2, gate)
psi = apply_1q(psi, 2, signal_basis_rotation(ts, 0.0))
print("amplitudes |00>,|01>,|10>,|11>:", np.round(psi.amps, 6))

# Only |00>, |10>, |11> are populated: a 2-qubit KLM state.
te = tau_epsilon(ts, 0.0, gate)
print("tau, epsilon:", np.round(te.tau, 6), np.round(te.epsilon, 6))

# Triangular target (r, 1, r) with r = 0.25. A full phase-pi gate works
# but a smaller phase needs fewer photons lost to post-selection.
target = family_spec("triangular-2q", ratio=0.25)
for strategy in ("franson-pi", "optimal"):
    p = plan(target, strategy)
    _, fid = simulate_plan(p)
    step = p.steps[0]
    print(f"{strategy:>10}: phase {step.gate_phase:.4f}  theta_s {step.signal.theta:.4f}  "
          f"success {p.total:.4f}  fidelity {fid:.12f}")

opt = plan(target)
print(f"improvement over phase-pi gate: {opt.report.improvement_percent:.0f}%")

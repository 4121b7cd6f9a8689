"""Growing a KLM state by one qubit with a Hadamard-sandwiched c-phase at pi/2.

Splitting the last amplitude in half does not keep a uniform state uniform;
planning the larger state directly does.
"""
import numpy as np

from klmprep import extend_equal_split, family_spec, klm_amplitudes, p_cphase, plan, simulate_extension

spec = family_spec("uniform", 2)
bigger, step = extend_equal_split(spec)
state = simulate_extension(spec, step)
print("after split:", np.round(klm_amplitudes(state).real, 6))
print("expected:   ", np.round(bigger.alphas.real, 6))
print(f"step success {p_cphase(step.gate_phase):.5f}")

direct = plan(family_spec("uniform", 3))
print(f"uniform 3-qubit state planned directly: success {direct.total:.5f}")

"""Four-qubit triangular ancilla (1, 3, 6, 3, 1), planned three ways and cross-checked."""
from klmprep import STRATEGIES, brute_force_plan, family_spec, plan, required_ratios, simulate_plan

spec = family_spec("triangular-4q")
print("target:", spec)
print("per-step split ratios:", [round(r, 5) for r in required_ratios(spec)])

for strategy in STRATEGIES:
    p = plan(spec, strategy)
    _, fid = simulate_plan(p)
    phases = ", ".join(f"{s.gate_phase:.4f}" for s in p.steps)
    print(f"{strategy:>10}: phases [{phases}]  success {100 * p.total:.3f}%  fidelity {fid:.12f}")

best = plan(spec)
print(f"gain over all-pi gates: {best.report.improvement_percent:.1f}%")

bf = brute_force_plan(spec, grid=201)
print(f"grid-search oracle: {100 * bf.total:.3f}%")

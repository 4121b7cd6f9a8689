"""Exit criteria for the package, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the terminal summary.
"""
import csv
import io
import math
import time

import numpy as np
import pytest

from klmprep import (
    STRATEGIES,
    QubitParams,
    apply_1q,
    apply_cphase,
    brute_force_plan,
    extend_equal_split,
    family_spec,
    klm_amplitudes,
    make_spec,
    p_cphase,
    plan,
    product_state,
    required_ratios,
    signal_basis_rotation,
    simulate_extension,
    simulate_plan,
    strategy_threshold,
    tau_epsilon,
)
from klmprep.experiments import PAPER_THRESHOLD, RATIO_HEADER, sweep_ratio, sweep_success, to_csv

from conftest import ACCEPTANCE_LINES, random_spec


def record(number, ok, detail, started):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail} ({time.perf_counter() - started:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def random_200():
    rng = np.random.default_rng(2012)
    return [random_spec(rng, int(rng.integers(2, 7))) for _ in range(200)]


@pytest.fixture(scope="module")
def plans_200(random_200):
    return [{s: plan(spec, s) for s in STRATEGIES} for spec in random_200]


def test_c01_gate_success_at_pi():
    t = time.perf_counter()
    p = p_cphase(math.pi)
    record(1, abs(p - 1 / 9) <= 1e-12, f"p_cphase(pi) = {p:.15f}", t)


def test_c02_two_qubit_example():
    t = time.perf_counter()
    p = plan(family_spec("triangular-2q", ratio=0.25), "optimal")
    base = plan(family_spec("triangular-2q", ratio=0.25), "franson-pi").total
    imp = 100 * (p.total / base - 1)
    ok = 0.178 <= p.total <= 0.186 and imp >= 60 and time.perf_counter() - t < 1
    record(2, ok, f"total {p.total:.5f}, improvement {imp:.1f}% over {base:.5f}", t)


def test_c03_four_qubit_example():
    t = time.perf_counter()
    spec = make_spec([1, 3, 6, 3, 1])
    opt, fr = plan(spec, "optimal").total, plan(spec, "franson-pi").total
    imp = 100 * (opt / fr - 1)
    ok = 0.0019 <= opt <= 0.0021 and 0.00135 <= fr <= 0.00140 and 35 <= imp <= 50
    ok = ok and time.perf_counter() - t < 1
    record(3, ok, f"optimal {opt:.5f}, franson-pi {fr:.5f}, improvement {imp:.1f}%", t)


def _grid_max_ratio(phase, thetas):
    best = 0.0
    for th in thetas:
        te = tau_epsilon(float(th), 0.0, phase)
        if abs(te.tau) > 0:
            best = max(best, abs(te.epsilon) / abs(te.tau))
    return best


def test_c04_ratio_sweep():
    t = time.perf_counter()
    rows = sweep_ratio(0.0, math.pi, 1000)
    parsed = list(csv.DictReader(io.StringIO(to_csv(rows, RATIO_HEADER))))
    worst = 0.0
    for row, rec in zip(rows, parsed):
        if row.x == math.pi:
            assert math.isinf(row.columns["max_ratio"]) and rec["max_ratio"] == "inf"
            continue
        expect = math.tan(row.x / 2)
        worst = max(worst, abs(row.columns["max_ratio"] - expect))
        assert float(rec["max_ratio"]) == pytest.approx(expect, rel=1e-11, abs=1e-12)
    mono = all(b.columns["max_ratio"] >= a.columns["max_ratio"] for a, b in zip(rows, rows[1:]))
    thetas = np.linspace(0, math.pi / 2, 10_001)
    picks = np.linspace(0, len(rows) - 2, 20).astype(int)
    oracle_err = max(abs(_grid_max_ratio(rows[k].x, thetas) - rows[k].columns["max_ratio"]) for k in picks)
    ok = worst <= 1e-9 and oracle_err <= 1e-4 and mono and time.perf_counter() - t < 10
    record(4, ok, f"max |row - tan(phi/2)| = {worst:.1e}, grid oracle err {oracle_err:.1e}, monotone={mono}", t)


def test_c05_success_sweep():
    t = time.perf_counter()
    r_star = strategy_threshold()
    rows = sweep_success(0.01, 3.0, 1000)
    below = [r for r in rows if r.x < r_star]
    above = [r for r in rows if r.x > r_star]
    a = all(abs(r.columns["theta_s_opt"] - math.pi / 4) <= 1e-12 for r in below)
    b = all(r.columns["phi_opt"] == math.pi for r in above)
    phis = np.array([r.columns["phi_opt"] for r in rows])
    jumps = int(np.sum(np.abs(np.diff(phis)) > 0.5))
    ok = a and b and jumps == 1 and 0.45 <= r_star <= 0.65 and time.perf_counter() - t < 10
    record(5, ok, f"threshold {r_star:.5f} (paper quotes {PAPER_THRESHOLD}), "
                  f"theta=pi/4 below: {a}, phi=pi above: {b}, jumps in phi_opt: {jumps}", t)


def test_c06_exact_preparation(random_200, plans_200):
    t = time.perf_counter()
    worst = 1.0
    for plans in plans_200:
        for p in plans.values():
            worst = min(worst, simulate_plan(p)[1])
    ok = worst >= 1 - 1e-9 and time.perf_counter() - t < 30
    record(6, ok, f"min fidelity over 200 specs x {len(STRATEGIES)} strategies = {worst:.15f}", t)


def test_c07_dominance(random_200, plans_200):
    t = time.perf_counter()
    r_star = strategy_threshold()
    dominated = saturated = saturating = 0
    for spec, plans in zip(random_200, plans_200):
        opt, fr = plans["optimal"].total, plans["franson-pi"].total
        dominated += opt >= fr - 1e-12
        if all(r >= r_star for r in required_ratios(spec)):
            saturating += 1
            saturated += math.isclose(opt, fr, rel_tol=1e-12)
    ok = dominated == len(random_200) and saturated == saturating
    record(7, ok, f"optimal >= franson-pi for {dominated}/200; equality on {saturated}/{saturating} all-above-threshold specs", t)


def test_c08_oracle_equivalence():
    t = time.perf_counter()
    rng = np.random.default_rng(8)
    worst2 = worst3 = 0.0
    for _ in range(25):
        spec = random_spec(rng, 2)
        worst2 = max(worst2, abs(brute_force_plan(spec, grid=2001).total - plan(spec).total))
    for _ in range(10):
        spec = random_spec(rng, 3)
        worst3 = max(worst3, abs(brute_force_plan(spec, grid=201).total - plan(spec).total))
    ok = worst2 <= 1e-3 and worst3 <= 2e-3 and time.perf_counter() - t < 120
    record(8, ok, f"max |brute force - optimal|: n=2 {worst2:.1e}, n=3 {worst3:.1e}", t)


def test_c09_step_unitarity_and_closed_form():
    t = time.perf_counter()
    rng = np.random.default_rng(9)
    worst_norm = 0.0
    for th, ph, g in zip(rng.uniform(0, math.pi / 2, 100_000), rng.uniform(-math.pi, math.pi, 100_000),
                         rng.uniform(0, math.pi, 100_000)):
        te = tau_epsilon(th, ph, g)
        worst_norm = max(worst_norm, abs(abs(te.tau) ** 2 + abs(te.epsilon) ** 2 - 1))
    worst_amp = 0.0
    for _ in range(1000):
        tc, ts = rng.uniform(0, math.pi / 2, 2)
        pc, ps = rng.uniform(-math.pi, math.pi, 2)
        g = rng.uniform(0, math.pi)
        psi = product_state([QubitParams(tc, pc), QubitParams(ts, ps)])
        psi = apply_1q(apply_cphase(psi, 1, 2, g), 2, signal_basis_rotation(ts, ps))
        te = tau_epsilon(ts, ps, g)
        e = np.exp(1j * pc)
        expect = np.array([math.cos(tc), 0, e * te.tau * math.sin(tc), e * te.epsilon * math.sin(tc)])
        worst_amp = max(worst_amp, float(np.max(np.abs(psi.amps - expect))))
    ok = worst_norm <= 1e-12 and worst_amp <= 1e-10 and time.perf_counter() - t < 10
    record(9, ok, f"max ||tau|^2+|eps|^2-1| = {worst_norm:.1e}, closed form vs simulation {worst_amp:.1e}", t)


def test_c10_equal_split_extension():
    t = time.perf_counter()
    spec = family_spec("uniform", 2)
    new, step = extend_equal_split(spec)
    expect = np.array([1, 1, 1 / math.sqrt(2), 1 / math.sqrt(2)])
    expect /= np.linalg.norm(expect)
    shape_err = float(np.max(np.abs(new.alphas - expect)))
    p = p_cphase(step.gate_phase)
    state = simulate_extension(spec, step)
    fid = abs(np.vdot(klm_amplitudes(state), new.alphas)) ** 2
    ok = shape_err <= 1e-12 and abs(p - 0.09048) <= 1e-5 and fid >= 1 - 1e-9 and time.perf_counter() - t < 1
    record(10, ok, f"split shape err {shape_err:.1e}, step success {p:.5f}, fidelity {fid:.15f}", t)

"""Exhaustive grid-search planner used to cross-check :func:`klmprep.planner.plan`.

Nothing here uses the closed-form ratio formulas. For every grid point
``(phase, theta_s)`` the signal state is pushed through the c-phase gate
numerically and the weight leaking out of ``|psi_s>`` is measured by
projection. Phases whose best ``theta_s`` on the grid can deliver a step's
demanded split are feasible; the lowest feasible phase is refined by
bisection; the joint product of gate successes is then maximized by brute
force over all steps at once. The winner is rebuilt, simulated, and kept
only if it reproduces the target.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from . import gates
from .errors import SizeError
from .klm import KlmSpec, klm_amplitudes
from .planner import PrepPlan, PrepStep, apply_phase_fix, phase_fix_angles, simulate_plan, simulate_steps
from .state import QubitParams
from .success import p_cphase_array, plan_success

MAX_ORACLE_QUBITS = 4
ORACLE_FIDELITY_TOL = 1e-6


def _leak(phase, theta):
    """Norm of the part of the gated signal orthogonal to the input signal (control in ``|1>``).

    The gate acts on the signal as ``diag(1, exp(i phase))``; the overlap with the
    input is ``sum_k |s_k|^2 g_k`` and the leak is ``sqrt(1 - |overlap|^2)``.
    Broadcasts over ``phase`` and ``theta``.
    """
    phase = np.asarray(phase, float)
    theta = np.asarray(theta, float)
    w1 = np.sin(theta) ** 2
    w0 = np.cos(theta) ** 2
    overlap = w0 + w1 * np.exp(1j * phase)
    return np.sqrt(np.clip(1.0 - np.abs(overlap) ** 2, 0.0, None))


def _split_fractions(alphas: np.ndarray) -> list[float]:
    """Share of the remaining weight that each step must push into the new qubit."""
    mags = np.abs(alphas)
    fr = []
    for i in range(1, len(mags) - 1):
        rest = math.sqrt(float(np.sum(mags[i + 1:] ** 2)))
        here = math.sqrt(float(mags[i] ** 2) + rest ** 2)
        fr.append(0.0 if here == 0.0 else min(rest / here, 1.0))
    return fr


def _feasible_phases(frac: float, phases: np.ndarray, thetas: np.ndarray, tol: float = 1e-12):
    best = _leak(phases[:, None], thetas[None, :]).max(axis=1)
    ok = best >= frac - tol
    cand = list(phases[ok])
    k = int(np.argmax(ok)) if ok.any() else None
    if k is None:
        return np.array([])
    if k > 0 and frac > 0:
        def g(ph):
            return _leak(np.full_like(thetas, ph), thetas).max() - frac
        lo, hi = phases[k - 1], phases[k]
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if g(mid) >= -tol:
                hi = mid
            else:
                lo = mid
        cand.append(hi)
    return np.unique(np.array(cand))


def _signal_theta(frac: float, phase: float, thetas: np.ndarray) -> float:
    if frac == 0.0:
        return 0.0
    leak = _leak(np.full_like(thetas, phase), thetas)
    k = int(np.argmax(leak))
    top = thetas[k]
    if leak[k] - frac <= 1e-12:
        return float(top)
    return brentq(lambda t: float(_leak(phase, t)) - frac, 0.0, top, xtol=1e-15, rtol=1e-15)


def _build(spec: KlmSpec, phases, fracs, thetas) -> PrepPlan:
    first = QubitParams(math.acos(min(abs(spec.alphas[0]), 1.0)), 0.0)
    steps = []
    for i, (ph, fr) in enumerate(zip(phases, fracs), start=1):
        th = _signal_theta(fr, ph, thetas)
        steps.append(PrepStep(i, i + 1, float(ph), QubitParams(th, 0.0),
                              gates.signal_basis_rotation(th, 0.0)))
    raw = simulate_steps(first, steps, spec.n)
    fix = phase_fix_angles(spec.alphas, klm_amplitudes(raw))
    report = plan_success([float(ph) for ph in phases])
    return PrepPlan(spec.n, first, tuple(steps), tuple(fix), report, spec, "brute-force")


def brute_force_plan(spec: KlmSpec, grid: int = 201, max_candidates: int = 16) -> PrepPlan:
    """Best plan found by exhaustive search over a ``grid``-point lattice per axis.

    Candidates are tried in order of decreasing total success (ties broken by
    the lexicographically smallest phase tuple) until one simulates to
    fidelity >= 1 - 1e-6.
    """
    if spec.n > MAX_ORACLE_QUBITS:
        raise SizeError(f"brute force is limited to n <= {MAX_ORACLE_QUBITS}")
    if grid < 3:
        raise SizeError("grid needs at least 3 points")
    phases = np.linspace(0.0, math.pi, grid)
    thetas = np.linspace(0.0, math.pi / 2, grid)
    fracs = _split_fractions(spec.alphas)
    if not fracs:
        return _build(spec, [], [], thetas)
    cands = [_feasible_phases(f, phases, thetas) for f in fracs]
    if any(c.size == 0 for c in cands):
        raise RuntimeError("no feasible phase on the grid")
    total = np.ones(())
    for c in cands:
        total = np.multiply.outer(total, p_cphase_array(c))
    flat = total.ravel()
    # stable sort on -total keeps C order (lexicographic) among ties
    order = np.argsort(-flat, kind="stable")[:max_candidates]
    for idx in order:
        multi = np.unravel_index(idx, total.shape)
        chosen = [c[m] for c, m in zip(cands, multi)]
        candidate = _build(spec, chosen, fracs, thetas)
        _, fid = simulate_plan(candidate)
        if fid >= 1 - ORACLE_FIDELITY_TOL:
            return candidate
    raise RuntimeError("no grid candidate reproduced the target state")

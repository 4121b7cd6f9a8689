"""Preparation plans for KLM states built as a chain of tunable c-phase gates.

Qubit 1 starts in ``cos(tc)|0> + sin(tc)|1>``. Step ``i`` adds qubit ``i+1``
in a signal state, entangles it with qubit ``i`` through a c-phase gate and
rotates its basis so that the weight carried by ``|1>^i`` is split between
``|1>^i|0>`` and ``|1>^(i+1)``. A closing layer of phase gates repairs every
amplitude argument.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import bisect

from . import gates
from .errors import DegenerateSpecError, FeasibilityError, SizeError, ValidationError
from .klm import KlmSpec, fidelity_to_spec, make_spec, tail_norm, to_state_vector
from .state import MAX_QUBITS, QubitParams, StateVector, apply_1q, apply_cphase, product_state, wrap_angle
from .success import P_PI, SuccessReport, p_cphase, plan_success

STRATEGIES = ("optimal", "franson-pi", "min-phase")
FIDELITY_TOL = 1e-9
# arcsin(1 - eps) loses ~sqrt(eps) accuracy, so ratios this close to the
# boundary snap to theta_s = pi/4
_BOUNDARY_SNAP = 1e-14


@dataclass(frozen=True, eq=False)
class PrepStep:
    control_qubit: int
    new_qubit: int
    gate_phase: float
    signal: QubitParams
    post_rotation: np.ndarray = field(repr=False)
    required_ratio: float = math.nan
    # (qubit, delta) phase gates applied right after the post rotation
    corrections: tuple[tuple[int, float], ...] = ()


@dataclass(frozen=True, eq=False)
class PrepPlan:
    n: int
    first_qubit: QubitParams
    steps: tuple[PrepStep, ...]
    phase_fix: tuple[float, ...]
    report: SuccessReport
    target: KlmSpec
    strategy: str = "optimal"

    @property
    def total(self) -> float:
        return self.report.total


def required_ratios(spec: KlmSpec) -> list[float]:
    """Split ratio demanded of each step: ``tail_norm(i+1) / |alpha_i|`` for ``i = 1..n-1``.

    Zero tail gives 0 (nothing left to split); zero ``alpha_i`` under a
    nonzero tail gives ``inf``.
    """
    out = []
    for i in range(1, spec.n):
        tail = tail_norm(spec, i + 1)
        a = float(abs(spec.alphas[i]))
        if tail == 0.0:
            out.append(0.0)
        elif a == 0.0:
            out.append(math.inf)
        else:
            out.append(tail / a)
    return out


def _check_ratio(r: float) -> float:
    if math.isnan(r) or r < 0:
        raise ValidationError(f"ratio must be >= 0, got {r!r}")
    return float(r)


def min_phase(r: float) -> float:
    """Smallest gate phase able to reach split ratio ``r``: ``2 atan(r)``."""
    r = _check_ratio(r)
    return math.pi if math.isinf(r) else 2 * math.atan(r)


def optimal_phase(r: float) -> tuple[float, float]:
    """Gate phase maximizing success subject to reaching split ratio ``r``.

    The feasible phases are ``[2 atan(r), pi]``. Success dips and then rises
    again on that interval, so the best value sits at one of its ends; ties go
    to pi.
    """
    r = _check_ratio(r)
    if r == 0.0:
        return 0.0, 1.0
    if math.isinf(r):
        return math.pi, P_PI
    lo = 2 * math.atan(r)
    p_lo = p_cphase(lo)
    if p_lo > P_PI:
        return lo, p_lo
    return math.pi, P_PI


def strategy_threshold(tol: float = 1e-10) -> float:
    """Ratio above which running the gate at pi beats the smallest feasible phase."""
    return bisect(lambda r: p_cphase(2 * math.atan(r)) - P_PI, 0.3, 0.9, xtol=tol)


def step_params(r: float, phase: float) -> QubitParams:
    """Signal state giving ``|epsilon/tau| = r`` at ``phase`` (branch ``theta_s <= pi/4``, ``phi_s = 0``)."""
    r = _check_ratio(r)
    if not (0.0 <= phase <= math.pi):
        raise ValidationError(f"gate phase {phase!r} outside [0, pi]")
    if r == 0.0:
        return QubitParams(0.0, 0.0)
    if math.isinf(r):
        if phase != math.pi:
            raise FeasibilityError("an unbounded ratio needs the gate at phase pi")
        return QubitParams(gates.QUARTER_PI, 0.0)
    u = r / math.sqrt(1.0 + r * r)
    s = math.sin(phase / 2)
    if s == 0.0 or u > s * (1 + 1e-12):
        raise FeasibilityError(f"ratio {r:.6g} exceeds max_ratio {gates.max_ratio(phase):.6g} at phase {phase:.6g}")
    x = u / s
    if x >= 1.0 - _BOUNDARY_SNAP:
        return QubitParams(gates.QUARTER_PI, 0.0)
    return QubitParams(0.5 * math.asin(x), 0.0)


def _phase_for(strategy: str, r: float) -> float:
    if strategy == "optimal":
        return optimal_phase(r)[0]
    if strategy == "franson-pi":
        return math.pi
    if strategy == "min-phase":
        return min_phase(r)
    raise ValidationError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")


def phase_fix_angles(target: np.ndarray, achieved: np.ndarray) -> list[float]:
    """Angles ``delta_1..delta_n`` with ``sum_{k<=j} delta_k = arg(target_j) - arg(achieved_j)``.

    Amplitudes that vanish on either side inherit the previous cumulative
    correction, so their ``delta`` is zero.
    """
    d_prev = 0.0
    cumulative = []
    for t, a in zip(target, achieved):
        if abs(t) > 0 and abs(a) > 0:
            d_prev = float(np.angle(t) - np.angle(a))
        cumulative.append(d_prev)
    return [wrap_angle(cumulative[k] - cumulative[k - 1]) for k in range(1, len(cumulative))]


def _achieved_amplitudes(first: QubitParams, steps: Sequence[PrepStep]) -> np.ndarray:
    out = [complex(math.cos(first.theta))]
    carry = complex(np.exp(1j * first.phi) * math.sin(first.theta))
    for st in steps:
        te = gates.tau_epsilon(st.signal.theta, st.signal.phi, st.gate_phase)
        out.append(carry * te.tau)
        carry = carry * te.epsilon
    out.append(carry)
    return np.array(out)


def plan(spec: KlmSpec, strategy: str = "optimal") -> PrepPlan:
    """Build a preparation plan for ``spec`` under one of :data:`STRATEGIES`.

    ``optimal`` picks each gate phase by :func:`optimal_phase`, ``franson-pi``
    runs every gate at pi and ``min-phase`` uses the smallest feasible phase.
    """
    if strategy not in STRATEGIES:
        raise ValidationError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if spec.n > MAX_QUBITS:
        raise SizeError(f"at most {MAX_QUBITS} qubits supported")
    first = QubitParams(math.acos(min(abs(spec.alphas[0]), 1.0)), 0.0)
    steps = []
    for i, r in enumerate(required_ratios(spec), start=1):
        phase = _phase_for(strategy, r)
        signal = step_params(r, phase)
        steps.append(PrepStep(
            control_qubit=i,
            new_qubit=i + 1,
            gate_phase=phase,
            signal=signal,
            post_rotation=gates.signal_basis_rotation(signal.theta, signal.phi),
            required_ratio=r,
        ))
    achieved = _achieved_amplitudes(first, steps)
    fix = phase_fix_angles(spec.alphas, achieved)
    report = plan_success([st.gate_phase for st in steps])
    return PrepPlan(spec.n, first, tuple(steps), tuple(fix), report, spec, strategy)


def apply_step(state: StateVector, step: PrepStep) -> StateVector:
    """Run one step on a register whose ``new_qubit`` is still ``|0>``."""
    prep = gates.signal_basis_rotation(step.signal.theta, step.signal.phi).conj().T
    state = apply_1q(state, step.new_qubit, prep)
    state = apply_cphase(state, step.control_qubit, step.new_qubit, step.gate_phase)
    state = apply_1q(state, step.new_qubit, step.post_rotation)
    for k, delta in step.corrections:
        state = apply_1q(state, k, gates.phase_gate(delta))
    return state


def apply_phase_fix(state: StateVector, deltas: Sequence[float]) -> StateVector:
    for k, delta in enumerate(deltas, start=1):
        if delta != 0.0:
            state = apply_1q(state, k, gates.phase_gate(delta))
    return state


def simulate_steps(first: QubitParams, steps: Sequence[PrepStep], n: int) -> StateVector:
    state = product_state([first] + [QubitParams(0.0, 0.0)] * (n - 1))
    for st in steps:
        state = apply_step(state, st)
    return state


def simulate_plan(p: PrepPlan) -> tuple[StateVector, float]:
    """Execute ``p`` on a dense state vector; returns the final state and its fidelity to the target."""
    state = simulate_steps(p.first_qubit, p.steps, p.n)
    state = apply_phase_fix(state, p.phase_fix)
    return state, fidelity_to_spec(state, p.target)


def extend_equal_split(spec: KlmSpec) -> tuple[KlmSpec, PrepStep]:
    """Append a qubit that splits ``alpha_n`` into two equal halves.

    The new qubit goes through a Hadamard, a c-phase at pi/2 with qubit ``n``
    and a second Hadamard; two phase gates then remove the ``exp(+-i pi/4)``
    factors that leaves on the split amplitudes.
    """
    a_n = spec.alphas[-1]
    if a_n == 0:
        raise DegenerateSpecError("last amplitude is zero; nothing to split")
    if spec.n + 1 > MAX_QUBITS:
        raise SizeError(f"at most {MAX_QUBITS} qubits supported")
    half = a_n / math.sqrt(2)
    new_spec = make_spec(np.concatenate([spec.alphas[:-1], [half, half]]))
    n = spec.n
    step = PrepStep(
        control_qubit=n,
        new_qubit=n + 1,
        gate_phase=math.pi / 2,
        signal=QubitParams(gates.QUARTER_PI, 0.0),
        post_rotation=gates.hadamard(),
        required_ratio=1.0,
        corrections=((n, -math.pi / 4), (n + 1, math.pi / 2)),
    )
    return new_spec, step


def simulate_extension(spec: KlmSpec, step: PrepStep) -> StateVector:
    """Start from ``spec`` with a fresh ``|0>`` appended and run ``step``."""
    amps = np.kron(to_state_vector(spec).amps, [1.0, 0.0])
    return apply_step(StateVector(amps), step)

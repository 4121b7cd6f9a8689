"""Closed-form algebra of a single preparation step.

A signal qubit ``cos(ts)|0> + exp(i*ps) sin(ts)|1>`` passes a c-phase gate
together with a control qubit. On the control's ``|1>`` branch the signal
leaves as ``tau |psi_s> + epsilon |psi_s_perp>``; rotating the signal basis
afterwards turns that into ``tau |0> + epsilon |1>``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

HALF_PI = math.pi / 2
QUARTER_PI = math.pi / 4
_EDGE = 1e-12


def _check_range(name: str, x: float, lo: float, hi: float) -> float:
    if not math.isfinite(x) or x < lo - _EDGE or x > hi + _EDGE:
        raise ValidationError(f"{name}={x!r} outside [{lo:.6g}, {hi:.6g}]")
    return min(max(float(x), lo), hi)


@dataclass(frozen=True)
class TauEpsilon:
    tau: complex
    epsilon: complex

    @property
    def ratio(self) -> float:
        """``|epsilon / tau|``, ``inf`` when tau vanishes."""
        t = abs(self.tau)
        return math.inf if t == 0.0 else abs(self.epsilon) / t


def tau_epsilon(theta_s: float, phi_s: float, phase: float) -> TauEpsilon:
    theta_s = _check_range("theta_s", theta_s, 0.0, HALF_PI)
    phase = _check_range("phase", phase, 0.0, math.pi)
    if not math.isfinite(phi_s):
        raise ValidationError("phi_s must be finite")
    c, s = math.cos(theta_s), math.sin(theta_s)
    g = complex(math.cos(phase), math.sin(phase))
    tau = c * c + g * s * s
    eps = complex(math.cos(phi_s), math.sin(phi_s)) * s * c * (1 - g)
    if theta_s == QUARTER_PI and phase == math.pi:
        tau = 0j
    return TauEpsilon(tau, eps)


def signal_basis_rotation(theta_s: float, phi_s: float) -> np.ndarray:
    """Unitary sending ``|psi_s> -> |0>`` and ``|psi_s_perp> -> |1>``.

    ``|psi_s_perp> = exp(-i*phi_s) sin(ts)|0> - cos(ts)|1>``; this choice keeps
    the ``exp(i*phi_s)`` prefactor inside epsilon.
    """
    theta_s = _check_range("theta_s", theta_s, 0.0, HALF_PI)
    c, s = math.cos(theta_s), math.sin(theta_s)
    e = complex(math.cos(phi_s), math.sin(phi_s))
    return np.array([[c, e.conjugate() * s], [e * s, -c]], dtype=complex)


def control_ratio(theta_c: float) -> float:
    """``(|a1|^2 + |a2|^2) / |a0|^2`` set by the control angle, i.e. ``tan(theta_c)**2``."""
    theta_c = _check_range("theta_c", theta_c, 0.0, HALF_PI)
    if theta_c >= HALF_PI:
        raise ValidationError("theta_c = pi/2 leaves alpha_0 = 0; the ratio is unbounded")
    return math.tan(theta_c) ** 2


def pi_phase_ratio(theta_s: float) -> float:
    """``|alpha_2/alpha_1| = tan(2 theta_s)`` for a gate at phase pi."""
    theta_s = _check_range("theta_s", theta_s, 0.0, QUARTER_PI)
    if theta_s == QUARTER_PI:
        return math.inf
    return math.tan(2 * theta_s)


def split_ratio(theta_s: float, phase: float) -> float:
    """``|epsilon/tau|`` for any phase: ``u / sqrt(1 - u^2)`` with ``u = sin(2 ts) sin(phase/2)``."""
    theta_s = _check_range("theta_s", theta_s, 0.0, HALF_PI)
    phase = _check_range("phase", phase, 0.0, math.pi)
    u = abs(math.sin(2 * theta_s)) * math.sin(phase / 2)
    if u >= 1.0:
        return math.inf
    return u / math.sqrt(1.0 - u * u)


def max_ratio(phase: float) -> float:
    """Largest ``|epsilon/tau|`` reachable at ``phase``: ``tan(phase/2)``, reached at ``theta_s = pi/4``."""
    phase = _check_range("phase", phase, 0.0, math.pi)
    if phase == math.pi:
        return math.inf
    return math.tan(phase / 2)


def hadamard() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def phase_gate(delta: float) -> np.ndarray:
    """``diag(1, exp(i*delta))``."""
    delta = _check_range("delta", delta, -math.pi, math.pi)
    return np.diag([1.0, complex(math.cos(delta), math.sin(delta))])


def elementary(kind: str, delta: float | None = None) -> np.ndarray:
    if kind == "hadamard":
        return hadamard()
    if kind == "phase":
        if delta is None:
            raise ValidationError("phase gate needs an angle")
        return phase_gate(delta)
    raise ValidationError(f"unknown elementary gate {kind!r}")

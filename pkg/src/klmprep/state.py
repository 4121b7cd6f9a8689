"""Dense pure-state simulation of small qubit registers.

Qubit 1 is the most significant bit of the amplitude index, so the basis
state ``|q1 q2 ... qn>`` lives at index ``sum(q_k * 2**(n - k))``.
All functions return new objects; inputs are never mutated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import QubitIndexError, SizeError, ValidationError

MAX_QUBITS = 24
NORM_TOL = 1e-10
UNITARY_TOL = 1e-9


def wrap_angle(phi: float) -> float:
    """Map an angle into [-pi, pi)."""
    w = math.fmod(phi + math.pi, 2 * math.pi)
    if w < 0:
        w += 2 * math.pi
    return w - math.pi


@dataclass(frozen=True)
class QubitParams:
    """Single-qubit state ``cos(theta)|0> + exp(i*phi) sin(theta)|1>``.

    ``phi`` is wrapped into [-pi, pi) on construction.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if not (-1e-12 <= theta <= math.pi / 2 + 1e-12) or not math.isfinite(self.phi):
            raise ValidationError(f"theta={self.theta!r} outside [0, pi/2] or phi not finite")
        object.__setattr__(self, "theta", min(max(theta, 0.0), math.pi / 2))
        object.__setattr__(self, "phi", wrap_angle(float(self.phi)))

    def ket(self) -> np.ndarray:
        return np.array(
            [math.cos(self.theta), np.exp(1j * self.phi) * math.sin(self.theta)],
            dtype=complex,
        )


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized dense amplitude vector of ``n`` qubits (read-only)."""

    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex).ravel()
        size = amps.size
        n = size.bit_length() - 1
        if size < 2 or size != 1 << n or n > MAX_QUBITS:
            raise SizeError(f"amplitude array of length {size} is not 2**n with 1 <= n <= {MAX_QUBITS}")
        if not np.all(np.isfinite(amps)):
            raise ValidationError("non-finite amplitude")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"state norm {norm} differs from 1")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def n(self) -> int:
        return self.amps.size.bit_length() - 1

    def __len__(self) -> int:
        return self.amps.size

    def __repr__(self) -> str:
        return f"StateVector(n={self.n})"

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


def basis_state(bits: str) -> StateVector:
    """Computational basis state from a bit string such as ``"101"``."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValidationError(f"bad bit string {bits!r}")
    amps = np.zeros(1 << len(bits), dtype=complex)
    amps[int(bits, 2)] = 1.0
    return StateVector(amps)


def product_state(params: Sequence[QubitParams]) -> StateVector:
    """Tensor product of single-qubit states, qubit 1 first."""
    if not 1 <= len(params) <= MAX_QUBITS:
        raise SizeError(f"need between 1 and {MAX_QUBITS} qubits, got {len(params)}")
    amps = np.ones(1, dtype=complex)
    for p in params:
        amps = np.kron(amps, p.ket())
    return StateVector(amps)


def check_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValidationError(f"expected a 2x2 matrix, got shape {u.shape}")
    err = np.max(np.abs(u.conj().T @ u - np.eye(2)))
    if err > tol:
        raise ValidationError(f"matrix is not unitary (max deviation {err:.3g})")
    return u


def _check_qubit(state: StateVector, k: int) -> None:
    if not 1 <= k <= state.n:
        raise QubitIndexError(f"qubit {k} out of range 1..{state.n}")


def apply_1q(state: StateVector, k: int, u: np.ndarray) -> StateVector:
    """Apply the 2x2 unitary ``u`` to qubit ``k`` (1-based)."""
    _check_qubit(state, k)
    u = check_unitary(u)
    n = state.n
    psi = state.amps.reshape(1 << (k - 1), 2, 1 << (n - k))
    out = np.einsum("ab,ibj->iaj", u, psi)
    return StateVector(out.ravel())


def _bit(n: int, k: int) -> np.ndarray:
    return (np.arange(1 << n) >> (n - k)) & 1


def apply_cphase(state: StateVector, i: int, j: int, phase: float) -> StateVector:
    """Multiply every amplitude with qubits ``i`` and ``j`` both set by ``exp(i*phase)``.

    ``phase`` must lie in [0, pi]; other phases are realized by single-qubit
    corrections elsewhere.
    """
    _check_qubit(state, i)
    _check_qubit(state, j)
    if i == j:
        raise QubitIndexError("c-phase needs two distinct qubits")
    if not (0.0 <= phase <= math.pi) or not math.isfinite(phase):
        raise ValidationError(f"gate phase {phase!r} outside [0, pi]")
    n = state.n
    both = (_bit(n, i) & _bit(n, j)).astype(bool)
    out = state.amps.copy()
    out[both] *= np.exp(1j * phase)
    return StateVector(out)


def fidelity(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|**2``, clipped into [0, 1]."""
    if a.n != b.n:
        raise SizeError(f"cannot compare {a.n}-qubit and {b.n}-qubit states")
    f = abs(np.vdot(a.amps, b.amps)) ** 2
    return float(min(max(f, 0.0), 1.0))

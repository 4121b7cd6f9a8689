"""Target KLM states ``sum_j alpha_j |1>^j |0>^(n-j)``."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DegenerateSpecError, QubitIndexError, SizeError, ValidationError
from .state import MAX_QUBITS, StateVector, fidelity

SPEC_NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class KlmSpec:
    """Normalized amplitudes ``alpha_0 .. alpha_n`` of an ``n``-qubit KLM state.

    Build instances with :func:`make_spec`, which normalizes and fixes the
    global phase; the constructor only validates.
    """

    alphas: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.array(self.alphas, dtype=complex).ravel()
        if a.size < 2:
            raise SizeError("a KLM spec needs at least two amplitudes")
        if not np.all(np.isfinite(a)):
            raise ValidationError("non-finite amplitude")
        norm = float(np.sum(np.abs(a) ** 2))
        if abs(norm - 1.0) > SPEC_NORM_TOL:
            raise ValidationError(f"amplitudes not normalized (sum |a|^2 = {norm})")
        a.flags.writeable = False
        object.__setattr__(self, "alphas", a)

    @property
    def n(self) -> int:
        return self.alphas.size - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, KlmSpec):
            return NotImplemented
        return self.n == other.n and bool(np.allclose(self.alphas, other.alphas, rtol=0, atol=1e-12))

    def __hash__(self):
        return hash(self.n)

    def __repr__(self) -> str:
        body = ", ".join(f"{z.real:.5g}{z.imag:+.5g}j" if z.imag else f"{z.real:.5g}" for z in self.alphas)
        return f"KlmSpec(n={self.n}, alphas=[{body}])"


def make_spec(raw: Sequence[complex]) -> KlmSpec:
    """Normalize ``raw`` and rotate the global phase so the first nonzero amplitude is real positive."""
    a = np.array(raw, dtype=complex).ravel()
    if a.size < 2:
        raise SizeError(f"need at least 2 amplitudes, got {a.size}")
    if a.size - 1 > MAX_QUBITS:
        raise SizeError(f"at most {MAX_QUBITS} qubits supported")
    if not np.all(np.isfinite(a)):
        raise ValidationError("non-finite amplitude")
    norm = math.sqrt(float(np.sum(np.abs(a) ** 2)))
    if norm == 0.0:
        raise DegenerateSpecError("all amplitudes are zero")
    a = a / norm
    lead = a[np.flatnonzero(a)[0]]
    a = a * (abs(lead) / lead)
    # one more pass removes the rounding left by the division
    a = a / math.sqrt(float(np.sum(np.abs(a) ** 2)))
    return KlmSpec(a)


def family_spec(kind: str, n: int | None = None, ratio: float | None = None) -> KlmSpec:
    """Named target families.

    ``"uniform"``
        all ``alpha_j = 1/sqrt(n+1)`` (original KLM ancilla).
    ``"triangular-2q"``
        ``(r, 1, r)`` normalized, with ``r = ratio = |alpha_0/alpha_1|``; ``n`` must be 2 or None.
    ``"triangular-4q"``
        ``(1, 3, 6, 3, 1)`` normalized; ``n`` must be 4 or None.
    """
    if kind == "uniform":
        if n is None or n < 1:
            raise ValidationError("uniform family needs n >= 1")
        return make_spec(np.ones(n + 1))
    if kind == "triangular-2q":
        if n not in (None, 2):
            raise ValidationError("triangular-2q is defined for n = 2 only")
        if ratio is None or not (0 < ratio < math.inf):
            raise ValidationError("triangular-2q needs a finite ratio > 0")
        return make_spec([ratio, 1.0, ratio])
    if kind == "triangular-4q":
        if n not in (None, 4):
            raise ValidationError("triangular-4q is defined for n = 4 only")
        return make_spec([1, 3, 6, 3, 1])
    raise ValidationError(f"unknown family {kind!r}")


def ramp_spec(n: int, base: float = 1.0) -> KlmSpec:
    """Triangular profile ``base + min(j, n - j)``, peaking at the middle amplitude."""
    if n < 1:
        raise ValidationError("ramp needs n >= 1")
    j = np.arange(n + 1)
    return make_spec(base + np.minimum(j, n - j))


def tail_norm(spec: KlmSpec, i: int) -> float:
    """``sqrt(sum_{j >= i} |alpha_j|**2)``."""
    if not 0 <= i <= spec.n:
        raise QubitIndexError(f"index {i} out of range 0..{spec.n}")
    return math.sqrt(float(np.sum(np.abs(spec.alphas[i:]) ** 2)))


def klm_indices(n: int) -> np.ndarray:
    """Array indices of ``|1>^j |0>^(n-j)`` for ``j = 0..n``."""
    j = np.arange(n + 1)
    return (1 << n) - (1 << (n - j))


def to_state_vector(spec: KlmSpec) -> StateVector:
    if spec.n > MAX_QUBITS:
        raise SizeError(f"at most {MAX_QUBITS} qubits supported")
    amps = np.zeros(1 << spec.n, dtype=complex)
    amps[klm_indices(spec.n)] = spec.alphas
    return StateVector(amps)


def klm_amplitudes(state: StateVector) -> np.ndarray:
    """Read ``alpha_0 .. alpha_n`` back out of a state vector."""
    return state.amps[klm_indices(state.n)].copy()


def fidelity_to_spec(state: StateVector, spec: KlmSpec) -> float:
    if state.n != spec.n:
        raise SizeError(f"state has {state.n} qubits, spec has {spec.n}")
    return fidelity(state, to_state_vector(spec))


# JSON form: {"amplitudes": [[re, im], ...]}

def spec_to_json(spec: KlmSpec) -> dict:
    return {"amplitudes": [[float(z.real), float(z.imag)] for z in spec.alphas]}


def spec_from_json(obj) -> KlmSpec:
    try:
        pairs = obj["amplitudes"]
        raw = []
        for p in pairs:
            if isinstance(p, (int, float)):
                raw.append(complex(p))
            else:
                re, im = p
                raw.append(complex(float(re), float(im)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed spec JSON: {exc}") from exc
    return make_spec(raw)


def load_spec(path: str | Path) -> KlmSpec:
    try:
        text = Path(path).read_text()
        obj = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read spec file {path}: {exc}") from exc
    return spec_from_json(obj)

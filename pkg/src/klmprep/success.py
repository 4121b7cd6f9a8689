"""Success probability of linear-optical c-phase gates and of whole preparations."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError

P_PI = 1.0 / 9.0


def _p(phase):
    s = np.abs(np.sin(phase / 2))
    return (1 + 2 * s + 2 ** 1.5 * np.sin((np.pi - phase) / 4) * np.sqrt(s)) ** -2


def p_cphase(phase: float) -> float:
    """Optimal heralded success probability of a linear-optical c-phase gate.

    ``(1 + 2|sin(phase/2)| + 2^(3/2) sin((pi - phase)/4) |sin(phase/2)|^(1/2))^-2``,
    which is 1 at phase 0 and 1/9 at phase pi, with a dip below 1/9 in between.
    """
    if not math.isfinite(phase) or not (-1e-12 <= phase <= math.pi + 1e-12):
        raise ValidationError(f"gate phase {phase!r} outside [0, pi]")
    phase = min(max(phase, 0.0), math.pi)
    if phase == math.pi:
        return P_PI
    return float(_p(phase))


def p_cphase_array(phases) -> np.ndarray:
    """Vectorized :func:`p_cphase` without per-element validation beyond the range check."""
    phases = np.asarray(phases, dtype=float)
    if np.any((phases < -1e-12) | (phases > math.pi + 1e-12)):
        raise ValidationError("gate phase outside [0, pi]")
    return _p(np.clip(phases, 0.0, math.pi))


@dataclass(frozen=True)
class SuccessReport:
    per_step: tuple[tuple[float, float], ...]
    total: float
    baseline: float

    @property
    def improvement_percent(self) -> float:
        return 100.0 * (self.total / self.baseline - 1.0)


def plan_success(phases: Sequence[float]) -> SuccessReport:
    per_step = tuple((float(ph), p_cphase(ph)) for ph in phases)
    total = math.prod(p for _, p in per_step)
    return SuccessReport(per_step, total, P_PI ** len(per_step))


def franson_baseline(n: int) -> float:
    """Total success when every one of the ``n - 1`` gates runs at phase pi."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    return P_PI ** (n - 1)

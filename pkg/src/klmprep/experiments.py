"""Sweep tables behind the ratio-vs-phase and success-vs-ratio figures."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .gates import max_ratio
from .planner import optimal_phase, step_params
from .success import p_cphase

RATIO_HEADER = ("phi", "max_ratio", "p_cphase")
SUCCESS_HEADER = ("r", "p_opt", "phi_opt", "theta_s_opt")
PAPER_THRESHOLD = 0.54


@dataclass(frozen=True)
class SweepRow:
    x: float
    columns: dict = field(default_factory=dict)


def sweep_ratio(phi_min: float = 0.0, phi_max: float = math.pi, points: int = 1000) -> list[SweepRow]:
    if not (0.0 <= phi_min < phi_max <= math.pi):
        raise ValidationError("need 0 <= phi_min < phi_max <= pi")
    if points < 2:
        raise ValidationError("need at least 2 points")
    xs = np.linspace(phi_min, phi_max, points)
    xs[-1] = phi_max  # keep an exact pi end point
    return [SweepRow(float(x), {"max_ratio": max_ratio(x), "p_cphase": p_cphase(x)}) for x in xs]


def sweep_success(r_min: float = 0.01, r_max: float = 3.0, points: int = 300) -> list[SweepRow]:
    if not (0.0 < r_min < r_max) or not math.isfinite(r_max):
        raise ValidationError("need 0 < r_min < r_max < inf")
    if points < 2:
        raise ValidationError("need at least 2 points")
    rows = []
    for r in np.linspace(r_min, r_max, points):
        phase, p = optimal_phase(float(r))
        theta = step_params(float(r), phase).theta
        rows.append(SweepRow(float(r), {"p_opt": p, "phi_opt": phase, "theta_s_opt": theta}))
    return rows


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def to_csv(rows: Sequence[SweepRow], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(row.x)] + [_fmt(row.columns[h]) for h in header[1:]])
    return buf.getvalue()

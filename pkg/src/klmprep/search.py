"""One-dimensional maximization for functions that are not unimodal."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_max(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200):
    """Golden-section search for the maximum of a unimodal ``f`` on ``[lo, hi]``.

    Returns ``(x, f(x))``. The interval end points are compared against the
    interior optimum, so monotone functions return their best end point.
    """
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    x = 0.5 * (a + b)
    best = (x, f(x))
    for edge in (lo, hi):
        fe = f(edge)
        if fe > best[1]:
            best = (edge, fe)
    return best


def grid_golden_max(f: Callable[[float], float], lo: float, hi: float, points: int = 512, tol: float = 1e-12):
    """Grid scan then golden-section refinement around the best grid cell.

    The scan makes the result robust when ``f`` has several local maxima
    (for example a dip between two rising ends).
    """
    if hi <= lo:
        return lo, f(lo)
    xs = np.linspace(lo, hi, points)
    fs = np.array([f(x) for x in xs])
    k = int(np.argmax(fs))
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, points - 1)]
    x, fx = golden_max(f, a, b, tol=tol)
    if fs[k] > fx:
        return float(xs[k]), float(fs[k])
    return float(x), float(fx)

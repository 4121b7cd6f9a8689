"""JSON forms of plans and verification reports (12 significant digits, radians)."""
from __future__ import annotations

import json
import math

import numpy as np

from .klm import spec_to_json
from .planner import PrepPlan


def r12(x: float):
    """Round to 12 significant digits; infinities become the string ``"inf"``."""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(f"{x:.12g}")


def _matrix(u: np.ndarray):
    return [[[r12(z.real), r12(z.imag)] for z in row] for row in u]


def plan_to_json(p: PrepPlan) -> dict:
    steps = []
    for st in p.steps:
        d = {
            "control_qubit": st.control_qubit,
            "new_qubit": st.new_qubit,
            "required_ratio": r12(st.required_ratio),
            "gate_phase": r12(st.gate_phase),
            "signal": {"theta": r12(st.signal.theta), "phi": r12(st.signal.phi)},
            "post_rotation": _matrix(st.post_rotation),
        }
        if st.corrections:
            d["corrections"] = [[k, r12(delta)] for k, delta in st.corrections]
        steps.append(d)
    target = spec_to_json(p.target)
    target["amplitudes"] = [[r12(a), r12(b)] for a, b in target["amplitudes"]]
    return {
        "strategy": p.strategy,
        "n": p.n,
        "target": target,
        "first_qubit": {"theta": r12(p.first_qubit.theta), "phi": r12(p.first_qubit.phi)},
        "steps": steps,
        "phase_fix": [r12(d) for d in p.phase_fix],
        "success": {
            "per_step": [{"phase": r12(ph), "p": r12(pr)} for ph, pr in p.report.per_step],
            "total": r12(p.report.total),
            "baseline": r12(p.report.baseline),
        },
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"

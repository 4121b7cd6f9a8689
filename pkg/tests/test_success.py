import math

import numpy as np
import pytest

from klmprep import ValidationError, franson_baseline, p_cphase, plan_success
from klmprep.search import golden_max, grid_golden_max


def eq12(phase):
    """Scalar re-derivation, kept separate from the vectorized library version."""
    s = abs(math.sin(phase / 2))
    return 1 / (1 + 2 * s + 2 * math.sqrt(2) * math.sin((math.pi - phase) / 4) * math.sqrt(s)) ** 2


def test_p_cphase_examples():
    assert p_cphase(0.0) == 1.0
    assert p_cphase(math.pi) == pytest.approx(1 / 9, abs=1e-15)
    assert p_cphase(math.pi / 2) == pytest.approx(0.09048, abs=1e-5)
    # pi/3 is where the bracket equals exactly 3
    assert p_cphase(math.pi / 3) == pytest.approx(1 / 9, abs=1e-15)


@pytest.mark.parametrize("phase", np.linspace(0, math.pi, 13))
def test_p_cphase_against_scalar_formula(phase):
    assert p_cphase(phase) == pytest.approx(eq12(phase), rel=1e-14)


def test_p_cphase_domain():
    for bad in (-0.01, 3.2, math.nan):
        with pytest.raises(ValidationError):
            p_cphase(bad)


def test_p_cphase_dips_below_pi_value():
    grid = np.linspace(0, math.pi, 10_000)
    vals = np.array([p_cphase(x) for x in grid])
    k = int(np.argmin(vals))
    assert vals[k] < 1 / 9
    assert 0 < k < len(grid) - 1
    assert np.all((vals > 0) & (vals <= 1))
    assert np.max(np.abs(np.diff(vals))) < 0.05  # no jumps


def test_plan_success_examples():
    rep = plan_success([math.pi])
    assert rep.total == pytest.approx(1 / 9) and rep.baseline == pytest.approx(1 / 9)
    rep = plan_success([])
    assert rep.total == 1.0 and rep.baseline == 1.0
    rep = plan_success([math.pi, 0.97027, 0.64350])
    assert rep.total == pytest.approx(0.00197, abs=5e-6)
    assert rep.total == pytest.approx(math.prod(p for _, p in rep.per_step), rel=1e-12)
    with pytest.raises(ValidationError):
        plan_success([1.0, 4.0])


def test_franson_baseline():
    assert franson_baseline(2) == pytest.approx(0.11111, abs=1e-5)
    assert franson_baseline(1) == 1.0
    assert franson_baseline(4) == pytest.approx(0.00137, abs=5e-6)
    with pytest.raises(ValidationError):
        franson_baseline(0)


def test_golden_max_unimodal():
    x, fx = golden_max(lambda t: -(t - 0.3) ** 2, 0, 1)
    assert x == pytest.approx(0.3, abs=1e-7)
    x, _ = golden_max(lambda t: t, 0, 1)
    assert x == 1


def test_grid_golden_handles_dip():
    # p_cphase on [0.4, pi]: dips, so a plain golden search may land on a wrong end
    x, fx = grid_golden_max(p_cphase, 0.4, math.pi, points=512)
    assert x == pytest.approx(0.4) and fx == pytest.approx(p_cphase(0.4))
    x, fx = grid_golden_max(p_cphase, 1.2, math.pi, points=512)
    assert x == pytest.approx(math.pi) and fx == pytest.approx(1 / 9)

import numpy as np
import pytest

from klmprep import make_spec

ACCEPTANCE_LINES: list[str] = []


def random_spec(rng: np.random.Generator, n: int):
    raw = rng.uniform(-1, 1, n + 1) + 1j * rng.uniform(-1, 1, n + 1)
    return make_spec(raw)


def random_specs(seed: int, count: int, n_values=(2, 3, 4, 5, 6)):
    rng = np.random.default_rng(seed)
    return [random_spec(rng, int(rng.choice(n_values))) for _ in range(count)]


@pytest.fixture
def rng():
    return np.random.default_rng(20111)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

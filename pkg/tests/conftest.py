import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wmod import BinaryForm, SuperellipticCurve, discriminant  # noqa: E402
from oracles import REDUCED_SEXTIC, BASE_SEXTIC  # noqa: E402

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def base_form():
    return BinaryForm(BASE_SEXTIC)


@pytest.fixture
def reduced_form():
    return BinaryForm(REDUCED_SEXTIC)


@pytest.fixture
def base_curve(base_form):
    return SuperellipticCurve(2, base_form)


def random_separable_form(rng: random.Random, d: int = 6, bound: int = 9, lead_nonzero: bool = True) -> BinaryForm:
    while True:
        cs = [rng.randint(-bound, bound) for _ in range(d + 1)]
        if lead_nonzero and cs[-1] == 0:
            continue
        if not any(cs):
            continue
        f = BinaryForm(cs)
        if discriminant(f) != 0:
            return f

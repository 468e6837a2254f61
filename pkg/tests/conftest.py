import random

import pytest
from hypothesis import strategies as st

from ternalg.linalg import Matrix
from ternalg.scalars import Cyclo, J

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
cyclos = st.builds(Cyclo, small, small, small, small)


def random_cyclo(rng, lo=-3, hi=3):
    return Cyclo(*(rng.randint(lo, hi) for _ in range(4)))


def random_matrix(rng, n=2):
    while True:
        m = Matrix([[random_cyclo(rng) for _ in range(n)] for _ in range(n)])
        if m.det():
            return m


def random_int_matrix(rng, n=3, lo=-3, hi=3):
    while True:
        m = Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if m.det():
            return m


def random_unimodular(rng):
    """det 1: upper and lower unipotent factors with Gaussian-integer entries."""
    def gi():
        return Cyclo(rng.randint(-2, 2)) + Cyclo(0, 0, 0, rng.randint(-2, 2))
    upper = Matrix([[1, gi()], [0, 1]])
    lower = Matrix([[1, 0], [gi(), 1]])
    scale = Matrix([[J, 0], [0, J * J]])
    return upper @ lower @ (scale if rng.random() < 0.5 else Matrix.identity(2))


@pytest.fixture
def rng():
    return random.Random(12345)


# criterion number -> (name, passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    from test_acceptance import format_line

    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(format_line(k, *ACCEPTANCE[k]))

import random

import pytest
from hypothesis import settings, strategies as st

from lassoknots.braid import BraidWord
from lassoknots.poly import LaurentPolynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

T31 = BraidWord(2, (-1, -1, -1))
F8 = BraidWord(3, (1, -2, 1, -2))
UNKNOT = BraidWord(1, ())


def polys(variable="A", max_terms=5, exp=8, coef=5):
    term = st.tuples(st.integers(-exp, exp), st.integers(-coef, coef))
    return st.lists(term, max_size=max_terms).map(lambda ts: LaurentPolynomial(ts, variable))


def nonzero_polys(variable="A", **kw):
    return polys(variable, **kw).filter(bool)


def random_braid(rng: random.Random, max_strands=4, max_letters=8) -> BraidWord:
    n = rng.randint(1, max_strands)
    if n == 1:
        return BraidWord(1, ())
    c = rng.randint(0, max_letters)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(c))
    return BraidWord(n, letters)


def random_knot_braid(rng: random.Random, max_strands=4, max_letters=8) -> BraidWord:
    while True:
        b = random_braid(rng, max_strands, max_letters)
        if b.is_knot():
            return b


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, _, _ in CRITERIA:
        if key in RESULTS:
            terminalreporter.write_line(RESULTS[key])

import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from secantdeg.xring import SegreIntegralTable

settings.register_profile("default", max_examples=30, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile("default")


def random_fraction(rng: random.Random, bound: int = 40, den: int = 7) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_table(rng: random.Random, n: int) -> SegreIntegralTable:
    entries = {key: random_fraction(rng) for key in SegreIntegralTable.required_keys(n)}
    while entries[(0, 0)] == 0:
        entries[(0, 0)] = random_fraction(rng)
    return SegreIntegralTable(n, entries, name=f"random-n{n}")


def random_corpus(seed: int = 20261014, per_n: int = 25, dims=range(1, 5)):
    rng = random.Random(seed)
    return [random_table(rng, n) for n in dims for _ in range(per_n)]


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def tables(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 4))
    entries = {k: draw(fractions) for k in SegreIntegralTable.required_keys(n)}
    entries[(0, 0)] = draw(fractions.filter(lambda f: f != 0))
    return SegreIntegralTable(n, entries, name="hypothesis")


@pytest.fixture
def rng():
    return random.Random(7)


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {title}")

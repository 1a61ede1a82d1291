import random

import pytest
from hypothesis import strategies as st

from iolex import zmap as zm
from iolex.product import Element
from iolex.sampling import from_data, h_equivalent_partner, random_element, related_pair


def oracle_window(*maps):
    """Half-width beyond which every operand is a pure translation on both sides."""
    ext = max((max(abs(m.lo), abs(m.hi)) for m in maps), default=0)
    shift = max((max(abs(m.d_neg), abs(m.d_pos)) for m in maps), default=0)
    return ext + shift + 10


def pointwise(f, window):
    """Graph of a partial function on [-window, window] as a dict (undefined points omitted)."""
    return {k: f(k) for k in range(-window, window + 1) if f(k) is not None}


def compose_pointwise(a, b, k):
    v = a.eval(k)
    return None if v is None else b.eval(v)


def inverse_pointwise(a, y, window):
    """Preimage of y under a, by search over a window large enough to contain it."""
    for k in range(-window - abs(y), window + abs(y) + 1):
        if a.eval(k) == y:
            return k
    return None


holes = st.frozensets(st.integers(-10, 10), max_size=6)
shifts = st.integers(-5, 5)


@st.composite
def zmaps(draw):
    return from_data(draw(holes), draw(holes), draw(shifts))


@st.composite
def idempotents(draw):
    return zm.partial_identity(draw(holes))


@st.composite
def elements(draw, n):
    return Element(tuple(draw(zmaps()) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_distinct_pair(rng, n):
    """Distinct pairs mixing shift-only changes, sigma-related pairs in either order, and unrelated pairs."""
    roll = rng.random()
    if roll < 0.3:
        a = random_element(rng, n)
        i = rng.randint(1, n)
        coords = list(a.coords)
        coords[i - 1] = h_equivalent_partner(rng, coords[i - 1])
        return a, Element(tuple(coords))
    if roll < 0.7:
        a, b = related_pair(rng, n, range(1, n + 1), strict={rng.randint(1, n)})
        return (a, b) if rng.random() < 0.5 else (b, a)
    a, b = random_element(rng, n), random_element(rng, n)
    return (a, b) if a != b else (a, a * Element((zm.translation(1),) * n))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

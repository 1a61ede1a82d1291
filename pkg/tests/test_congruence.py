import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iolex import zmap as zm
from iolex.congruence import (
    QuotientImage,
    classify_generated,
    composition_midpoint,
    generators,
    pi_sharp_related,
    quotient_lift,
    rho_min_related,
    sigma_I_related,
    sigma_quotient,
    sigma_related,
)
from iolex.errors import DimensionMismatch
from iolex.product import Element, embed, p_identity
from iolex.sampling import random_element, related_pair
from iolex.witness import chi_map, verify_chain

from .conftest import elements, oracle_window


def tails_by_eval(x, w):
    return x.eval(-w) + w, x.eval(w) - w


def sigma_I_oracle(a, b, indices):
    """Equal off ``indices`` (pointwise) and equal tail shifts on ``indices``."""
    w = oracle_window(*a.coords, *b.coords)
    for i, (x, y) in enumerate(zip(a.coords, b.coords), 1):
        if i in indices:
            if tails_by_eval(x, w) != tails_by_eval(y, w):
                return False
        elif any(x.eval(k) != y.eval(k) for k in range(-w, w + 1)):
            return False
    return True


subsets = st.sampled_from([frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})])


def test_sigma_examples():
    a = embed(1, zm.partial_identity({0}), 2)
    assert sigma_related(a, p_identity(2)) is not None
    assert sigma_I_related(a, p_identity(2), {1}) is not None
    assert sigma_I_related(a, p_identity(2), {2}) is None
    t = Element((zm.translation(1),))
    assert sigma_related(t, p_identity(1)) is None


@given(elements(2), elements(2), subsets)
def test_sigma_I_matches_oracle(a, b, indices):
    w = sigma_I_related(a, b, indices)
    assert (w is not None) == sigma_I_oracle(a, b, indices)
    if w is not None:
        assert w.is_idempotent()
        assert a * w == b * w


@settings(max_examples=200)
@given(st.integers(0, 10**9), subsets)
def test_sigma_I_on_related_samples(seed, indices):
    a, b = related_pair(random.Random(seed), 2, indices)
    assert sigma_I_related(a, b, indices) is not None
    assert sigma_I_oracle(a, b, indices)


@given(st.integers(0, 10**9), subsets, subsets)
def test_sigma_I_is_monotone_in_I(seed, first, second):
    a, b = related_pair(random.Random(seed), 2, first)
    if first <= second:
        assert sigma_I_related(a, b, second) is not None


@given(st.integers(0, 10**9), subsets, subsets)
def test_composition_midpoint(seed, first, second):
    a, b = related_pair(random.Random(seed), 2, first | second)
    m = composition_midpoint(a, b, first, second)
    assert m is not None
    assert sigma_I_related(a, m, first) is not None
    assert sigma_I_related(m, b, second) is not None


def test_composition_midpoint_rejects_unrelated():
    a = Element((zm.partial_identity({0}), zm.IDENTITY))
    assert composition_midpoint(a, p_identity(2), {1}, {2}) is not None
    assert composition_midpoint(a, p_identity(2), {2}, set()) is None


@given(st.integers(0, 10**9), subsets)
def test_compatible_with_multiplication(seed, indices):
    rng = random.Random(seed)
    a, b = related_pair(rng, 2, indices)
    c = random_element(rng, 2)
    assert sigma_I_related(c * a, c * b, indices) is not None
    assert sigma_I_related(a * c, b * c, indices) is not None


def test_pi_sharp_examples():
    a = Element((zm.translation(1), chi_map(2)))
    b = Element((zm.translation(3), chi_map(2)))
    assert pi_sharp_related(a, b, {2})
    assert not pi_sharp_related(a, b, {1})
    assert pi_sharp_related(a, b, set())


@given(st.integers(0, 10**9), subsets, subsets)
def test_rho_min_is_sigma_on_complement(seed, sample_on, indices):
    a, b = related_pair(random.Random(seed), 2, sample_on)
    complement = frozenset({1, 2}) - indices
    e = rho_min_related(a, b, indices)
    assert (e is not None) == (sigma_I_related(a, b, complement) is not None)
    if e is not None:
        assert a * e == b * e
        assert pi_sharp_related(e, a.inverse() * a, indices)


def test_quotient_examples():
    a = Element((chi_map(2), zm.translation(-1)))
    assert sigma_quotient(a) == QuotientImage(((0, 2), (-1, -1)))
    # decreasing tails: translation by 3 on the left, by 1 on the right, holes between
    assert quotient_lift(QuotientImage(((3, 1),))) == Element((zm.ZMap(3, 1, -3, (None, None)),))
    # increasing tails: change point at 0
    assert quotient_lift(QuotientImage(((0, 2),))) == Element((zm.ZMap(0, 2, 0, ()),))


@given(elements(2), elements(2))
def test_quotient_is_a_homomorphism(a, b):
    assert sigma_quotient(a * b) == sigma_quotient(a) + sigma_quotient(b)
    assert (sigma_quotient(a) == sigma_quotient(b)) == (sigma_related(a, b) is not None)


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=3))
def test_lift_is_a_section(shifts):
    q = QuotientImage(tuple(shifts))
    assert sigma_quotient(quotient_lift(q)) == q


def test_quotient_image_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        QuotientImage(((0, 0),)) + QuotientImage(((0, 0), (1, 1)))


def test_generators_shape():
    gens = generators({2}, 3)
    assert gens == [(p_identity(3), embed(2, zm.partial_identity({0}), 3))]


def test_classify_generated_examples():
    a = embed(1, zm.partial_identity({0}), 2)
    result = classify_generated([(a, p_identity(2))])
    assert result.indices == frozenset({1})
    assert all(verify_chain(c, frozenset({1})) for c in result.chains)

    t = Element((zm.translation(1), zm.IDENTITY))
    result = classify_generated([(a, p_identity(2)), (t, p_identity(2))])
    assert not result.below_sigma
    assert result.offending == 1

    result = classify_generated([(a, a)])
    assert result.indices == frozenset()
    assert result.chains == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_classify_random_pairs(seed):
    rng = random.Random(seed)
    a, b = related_pair(rng, 2, {1, 2})
    c, d = related_pair(rng, 2, {1})
    result = classify_generated([(a, b), (c, d)])
    expected = frozenset(i for i in (1, 2) if a[i] != b[i] or c[i] != d[i])
    assert result.indices == expected
    for chain in result.chains:
        assert verify_chain(chain, frozenset(i for i in (1, 2) if chain.seed[0][i] != chain.seed[1][i]))


@given(st.integers(0, 10**9), subsets, subsets, subsets)
def test_relational_composition_commutes(seed, sample_on, first, second):
    a, b = related_pair(random.Random(seed), 2, sample_on)
    forward = composition_midpoint(a, b, first, second)
    backward = composition_midpoint(a, b, second, first)
    assert (forward is None) == (backward is None)
    assert (forward is None) == (sigma_I_related(a, b, first | second) is None)

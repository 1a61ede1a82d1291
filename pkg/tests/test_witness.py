import random
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iolex import zmap as zm
from iolex.errors import EqualInputs, HoleMismatch, NotEligible, NotIdempotent
from iolex.product import Element, d_set, embed, p_identity, product, unitize
from iolex.witness import (
    Chain,
    ChainBuilder,
    chi_map,
    lemma1_stages,
    lemma1_witness,
    lemma2_witness,
    prop4_bundle,
    prop4_idempotent,
    psi_closed_form,
    reduction_chain,
    transport_idempotent,
    verify_chain,
)

from .conftest import oracle_window, pointwise, random_distinct_pair


def psi_formula(m):
    """Pointwise formulas for chi kappa chi^-1 with kappa the translation by m."""
    if m > 0:
        return lambda k: None if -m < k <= 0 else k + m
    return lambda k: None if 0 <= k < -m else k + m


def hole(i, n, at=0):
    return embed(i, zm.partial_identity({at}), n)


# -- chi and psi ---------------------------------------------------------------

@pytest.mark.parametrize("m", [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
def test_psi_closed_form_matches_formulas(m):
    psi = psi_closed_form(m)
    chi = chi_map(m)
    built = zm.compose(zm.compose(chi, zm.translation(m)), zm.invert(chi))
    w = oracle_window(psi, chi) + 5
    assert pointwise(psi.eval, w) == pointwise(psi_formula(m), w)
    assert built == psi


def test_chi_map_cases():
    assert chi_map(0) == zm.IDENTITY
    assert [chi_map(-2).eval(k) for k in (-3, -1, 0, 4)] == [-5, -3, 0, 4]
    assert zm.complements(chi_map(-2)) == (frozenset(), frozenset({-2, -1}))


# -- unitization ---------------------------------------------------------------

def test_lemma1_units():
    a = Element((zm.translation(1), zm.IDENTITY))
    b = Element((zm.translation(3), zm.IDENTITY))
    bundle = lemma1_witness(a, b)
    assert bundle.verify()
    assert bundle["varpi"] == Element((zm.translation(2), zm.IDENTITY))
    assert bundle.info["branches"] == {1: "H"}
    assert bundle.info["unitized"] == ["alpha"]


def test_lemma1_restriction_needs_the_other_side():
    a = hole(1, 2)
    b = p_identity(2)
    # any gamma, delta with gamma a delta = I also give gamma b delta = I
    gamma, delta = unitize(a[1])
    assert zm.compose(zm.compose(gamma, b[1]), delta) == zm.IDENTITY
    bundle = lemma1_witness(a, b)
    assert bundle.info["unitized"] == ["beta"]
    assert bundle.verify()
    assert product(bundle["gamma"], b, bundle["delta"]).is_identity()
    assert d_set(p_identity(2), bundle["varpi"]) == frozenset({1})


def test_lemma1_mixed_orientation():
    a = hole(1, 2)
    b = hole(2, 2)
    assert [s.unitized for s in lemma1_stages(a, b)] == ["alpha", "beta"]
    bundle = lemma1_witness(a, b)
    assert bundle.verify()
    varpi = bundle["varpi"]
    assert varpi.is_idempotent()
    assert d_set(p_identity(2), varpi) == frozenset({1, 2})


def test_lemma1_rejects_equal_inputs():
    with pytest.raises(EqualInputs):
        lemma1_witness(p_identity(1), p_identity(1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 3))
def test_lemma1_random(seed, n):
    a, b = random_distinct_pair(random.Random(seed), n)
    bundle = lemma1_witness(a, b)
    assert bundle.verify()
    assert d_set(p_identity(n), bundle["varpi"]) == d_set(a, b)
    for s in lemma1_stages(a, b):
        side = a if s.unitized == "alpha" else b
        assert product(s.gamma, side, s.delta).is_identity()


# -- non-unit coordinates ------------------------------------------------------

@pytest.mark.parametrize("m", [-3, -1, 1, 4])
def test_lemma2_units(m):
    a = Element((zm.IDENTITY, zm.IDENTITY))
    b = Element((zm.translation(m), zm.IDENTITY))
    bundle = lemma2_witness(a, b)
    assert bundle.verify()
    assert bundle.info["formulas"] == {1: m}
    w = oracle_window(bundle["psi"][1]) + 5
    assert pointwise(bundle["psi"][1].eval, w) == pointwise(psi_formula(m), w)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 3))
def test_lemma2_random_coordinates_are_non_units(seed, n):
    a, b = random_distinct_pair(random.Random(seed), n)
    bundle = lemma2_witness(a, b)
    assert bundle.verify()
    psi = bundle["psi"]
    assert d_set(p_identity(n), psi) == d_set(a, b)
    for i in d_set(a, b):
        assert zm.complements(psi[i]) != (frozenset(), frozenset())


# -- idempotents from non-units ------------------------------------------------

def test_prop4_example():
    psi = Element((psi_closed_form(2),))
    eps = prop4_idempotent(psi)
    assert eps == Element((zm.partial_identity({-1, 0, 1, 2}),))
    direct = psi * psi.inverse() * psi.inverse() * psi
    assert eps == direct
    assert prop4_bundle(psi).verify()


def test_prop4_rejects_units():
    with pytest.raises(NotEligible):
        prop4_idempotent(p_identity(2))
    with pytest.raises(NotEligible):
        prop4_idempotent(Element((zm.translation(2), zm.IDENTITY)))


# -- transport and chains ------------------------------------------------------

def test_transport_example():
    source = Element((zm.partial_identity({0, 1}), zm.IDENTITY))
    target = Element((zm.partial_identity({7}), zm.IDENTITY))
    chain = transport_idempotent(source, target)
    assert verify_chain(chain, {1})
    assert chain.conclusion == (p_identity(2), target)


def test_transport_rejects_bad_input():
    e = Element((zm.partial_identity({0}),))
    with pytest.raises(NotIdempotent):
        transport_idempotent(Element((zm.translation(1),)), e)
    with pytest.raises(HoleMismatch):
        transport_idempotent(Element((zm.partial_identity({0}), zm.IDENTITY)),
                             Element((zm.IDENTITY, zm.partial_identity({0}))))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_transport_random(data):
    n = data.draw(st.integers(1, 3))
    ds = data.draw(st.frozensets(st.integers(1, n), min_size=1))
    hole_sets = st.frozensets(st.integers(-10, 10), min_size=1, max_size=4)

    def idem():
        return Element(tuple(zm.partial_identity(data.draw(hole_sets)) if i in ds else zm.IDENTITY
                             for i in range(1, n + 1)))

    chain = transport_idempotent(idem(), idem())
    assert verify_chain(chain, ds)


def test_reduction_chain_mixed():
    a, b = hole(1, 2), hole(2, 2)
    chain = reduction_chain(a, b)
    assert verify_chain(chain, {1, 2})
    assert chain.conclusion == (p_identity(2), Element((zm.partial_identity({0}),) * 2))


def test_reduction_chain_to_requested_target():
    a = Element((zm.translation(2), zm.IDENTITY))
    b = Element((zm.translation(2) * zm.partial_identity({5}), zm.IDENTITY))
    target = Element((zm.partial_identity({-3, 9}), zm.IDENTITY))
    chain = reduction_chain(a, b, target)
    assert verify_chain(chain, {1})
    assert chain.conclusion[1] == target


def test_verify_chain_detects_corruption():
    chain = reduction_chain(hole(1, 1), p_identity(1))
    assert verify_chain(chain)
    step = chain.steps[2]
    x, y = step.pair
    bad = Chain(chain.seed, chain.steps[:2] + (replace(step, pair=(y, x)),) + chain.steps[3:])
    result = verify_chain(bad)
    assert not result
    assert result.step == 3


def test_verify_chain_ambient_and_rules():
    seed = (p_identity(2), hole(1, 2))
    builder = ChainBuilder(seed)
    r = builder.inv(0)
    builder.prod(0, r)
    chain = builder.chain()
    assert verify_chain(chain, {1})
    result = verify_chain(chain, {2})
    assert not result and result.step == 0

    bogus = Chain(seed, (replace(chain.steps[0], rule="nonsense"),))
    assert not verify_chain(bogus)
    dangling = Chain(seed, (replace(chain.steps[0], refs=(5,)),))
    assert not verify_chain(dangling)

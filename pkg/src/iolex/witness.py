"""Constructive witnesses and congruence-closure chains.

Given two distinct related elements ``a`` and ``b`` of some congruence, the
constructions here produce, step by step, pairs that the same congruence must
contain: first ``(I, varpi)`` by unitizing one side, then ``(I, psi)`` with
``psi`` non-H-equivalent to the identity in every differing coordinate, then
``(I, eps)`` for an idempotent ``eps``, and finally ``(I, e)`` for any
idempotent ``e`` with the same d-set.

A :class:`Chain` records these derivations one congruence axiom at a time so
that :func:`verify_chain` can replay them with nothing but multiplication and
inversion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import zmap as zm
from .congruence import sigma_I_related
from .errors import EqualInputs, HoleMismatch, NotEligible, NotIdempotent
from .product import (
    Element,
    d_set,
    embed,
    p_compose,
    p_identity,
    p_invert,
    product,
    unitize,
)
from .zmap import ZMap

RULES = ("mul", "sym", "trans", "inv", "prod")


# -- chains ------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    rule: str
    refs: tuple
    pair: tuple
    left: Optional[Element] = None
    right: Optional[Element] = None
    note: str = field(default="", compare=False)


@dataclass(frozen=True)
class Chain:
    """A seed pair followed by derived pairs.

    Pair 0 is the seed, pair ``k`` is the result of ``steps[k - 1]``.
    """
    seed: tuple
    steps: tuple = ()

    def pair(self, k: int) -> tuple:
        return self.seed if k == 0 else self.steps[k - 1].pair

    @property
    def conclusion(self) -> tuple:
        return self.pair(len(self.steps))

    def __len__(self):
        return len(self.steps)


class ChainBuilder:
    def __init__(self, seed):
        self.seed = tuple(seed)
        self.n = self.seed[0].n
        self.steps = []

    def pair(self, ref: int) -> tuple:
        return self.seed if ref == 0 else self.steps[ref - 1].pair

    def _push(self, step: Step) -> int:
        self.steps.append(step)
        return len(self.steps)

    def mul(self, ref, left=None, right=None, note=""):
        a, b = self.pair(ref)
        u = left if left is not None else p_identity(self.n)
        v = right if right is not None else p_identity(self.n)
        pair = (product(u, a, v), product(u, b, v))
        return self._push(Step("mul", (ref,), pair, u, v, note))

    def sym(self, ref, note=""):
        a, b = self.pair(ref)
        return self._push(Step("sym", (ref,), (b, a), note=note))

    def trans(self, first, second, note=""):
        a, b = self.pair(first)
        b2, c = self.pair(second)
        assert b == b2
        return self._push(Step("trans", (first, second), (a, c), note=note))

    def inv(self, ref, note=""):
        a, b = self.pair(ref)
        return self._push(Step("inv", (ref,), (p_invert(a), p_invert(b)), note=note))

    def prod(self, first, second, note=""):
        a, b = self.pair(first)
        c, d = self.pair(second)
        return self._push(Step("prod", (first, second), (p_compose(a, c), p_compose(b, d)), note=note))

    def chain(self) -> Chain:
        return Chain(self.seed, tuple(self.steps))


@dataclass(frozen=True)
class ChainCheck:
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _replay(step: Step, pairs: list) -> tuple:
    refs = step.refs
    for r in refs:
        if not isinstance(r, int) or not 0 <= r < len(pairs):
            raise ValueError(f"reference {r!r} does not name an earlier pair")
    if step.rule == "mul":
        if len(refs) != 1 or step.left is None or step.right is None:
            raise ValueError("mul needs one reference and both multipliers")
        a, b = pairs[refs[0]]
        u, v = step.left, step.right
        return p_compose(p_compose(u, a), v), p_compose(p_compose(u, b), v)
    if step.rule == "sym":
        a, b = pairs[refs[0]]
        return b, a
    if step.rule == "inv":
        a, b = pairs[refs[0]]
        return p_invert(a), p_invert(b)
    if step.rule == "trans":
        if len(refs) != 2:
            raise ValueError("trans needs two references")
        (a, b), (c, d) = pairs[refs[0]], pairs[refs[1]]
        if b != c:
            raise ValueError("trans: middle elements differ")
        return a, d
    if step.rule == "prod":
        if len(refs) != 2:
            raise ValueError("prod needs two references")
        (a, b), (c, d) = pairs[refs[0]], pairs[refs[1]]
        return p_compose(a, c), p_compose(b, d)
    raise ValueError(f"unknown rule {step.rule!r}")


def verify_chain(chain: Chain, ambient=None) -> ChainCheck:
    """Replay every step of ``chain``.

    Each step must follow from earlier pairs by one congruence axiom (two-sided
    multiplication, symmetry, transitivity, inversion, product of pairs) and
    reproduce its recorded pair exactly.  With ``ambient`` an index set, every
    pair must also be ``sigma_[ambient]``-related.  A failure reports the
    first offending pair index (0 is the seed).
    """
    pairs = [tuple(chain.seed)]
    if ambient is not None:
        ambient = frozenset(ambient)
        if sigma_I_related(*chain.seed, ambient) is None:
            return ChainCheck(False, 0, "seed is outside the ambient congruence")
    for k, step in enumerate(chain.steps, 1):
        try:
            pair = _replay(step, pairs)
        except ValueError as exc:
            return ChainCheck(False, k, str(exc))
        if pair != tuple(step.pair):
            return ChainCheck(False, k, f"{step.rule} does not reproduce the recorded pair")
        if ambient is not None and sigma_I_related(*pair, ambient) is None:
            return ChainCheck(False, k, "pair is outside the ambient congruence")
        pairs.append(pair)
    return ChainCheck(True)


# -- bundles -----------------------------------------------------------------

@dataclass
class WitnessBundle:
    """Named elements plus equations among them.

    ``equations`` holds ``(factors, result)`` with factor names optionally
    suffixed ``^-1``; ``dsets`` holds ``(left, right, indices)`` claims.
    """
    kind: str
    elements: dict = field(default_factory=dict)
    equations: list = field(default_factory=list)
    dsets: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> Element:
        return self.elements[name]

    def add(self, name, value):
        self.elements[name] = value
        return value

    def eq(self, factors, result):
        self.equations.append((tuple(factors), result))

    def _lookup(self, name):
        if name.endswith("^-1"):
            return p_invert(self.elements[name[:-3]])
        return self.elements[name]

    def failures(self) -> list:
        bad = []
        for factors, result in self.equations:
            if product(*(self._lookup(f) for f in factors)) != self._lookup(result):
                bad.append(f"{' '.join(factors)} != {result}")
        for left, right, indices in self.dsets:
            if d_set(self._lookup(left), self._lookup(right)) != frozenset(indices):
                bad.append(f"dset({left}, {right}) != {sorted(indices)}")
        return bad

    def verify(self) -> bool:
        return not self.failures()


# -- single-coordinate pieces ------------------------------------------------

def chi_map(m: int) -> ZMap:
    """Total map fixing one side of 0 and shifting the other by ``m``.

    ``m >= 1``: identity on ``k <= 0`` and ``k -> k + m`` on ``k >= 1``.
    ``m <= -1``: identity on ``k >= 0`` and ``k -> k + m`` on ``k <= -1``.
    """
    if m >= 0:
        return zm.normalize(0, m, 1, [])
    return zm.normalize(m, 0, 0, [])


def psi_closed_form(m: int) -> ZMap:
    """``chi(m) * translation(m) * chi(m)^-1`` written out pointwise."""
    if m == 0:
        raise ValueError("m must be non-zero")
    lo, hi = -abs(m) - 1, abs(m) + 1
    if m > 0:
        win = [None if -m < k <= 0 else k + m for k in range(lo, hi + 1)]
    else:
        win = [None if 0 <= k < -m else k + m for k in range(lo, hi + 1)]
    return zm.normalize(m, m, lo, win)


def _is_h_trivial(x: ZMap) -> bool:
    h_dom, h_ran = zm.complements(x)
    return not h_dom and not h_ran


# -- unitization ---------------------------------------------------------------

@dataclass(frozen=True)
class _Stage:
    unitized: str   # "alpha" or "beta"
    gamma: Element
    delta: Element
    varpi: Element  # gamma * (other side) * delta


def _stage(a: Element, b: Element, unitized: str) -> _Stage:
    side, other = (a, b) if unitized == "alpha" else (b, a)
    gd = [unitize(x) for x in side.coords]
    gamma = Element(tuple(g for g, _ in gd))
    delta = Element(tuple(d for _, d in gd))
    assert product(gamma, side, delta).is_identity()
    return _Stage(unitized, gamma, delta, product(gamma, other, delta))


def lemma1_stages(a: Element, b: Element) -> list:
    """Choose which side(s) to unitize.

    Unitizing ``a`` sends coordinate ``i`` of ``b`` to the identity exactly
    when ``a_i`` is a restriction of ``b_i``.  If no differing coordinate has
    that property one stage on ``a`` suffices; otherwise, if no coordinate
    has ``b_i`` a restriction of ``a_i``, one stage on ``b``.  Pairs with
    restrictions in both directions need both stages.
    """
    diff = d_set(a, b)
    if not diff:
        raise EqualInputs("inputs are equal")
    below_a = any(zm.natural_leq(a[i], b[i]) for i in diff)
    below_b = any(zm.natural_leq(b[i], a[i]) for i in diff)
    if not below_a:
        return [_stage(a, b, "alpha")]
    if not below_b:
        return [_stage(a, b, "beta")]
    return [_stage(a, b, "alpha"), _stage(a, b, "beta")]


def _branches(a: Element, b: Element) -> dict:
    out = {}
    for i in sorted(d_set(a, b)):
        same = zm.complements(a[i]) == zm.complements(b[i])
        out[i] = "H" if same else "nonH"
    return out


def chi_for(kappa: Element) -> Element:
    """``chi`` per coordinate: ``chi_map(m)`` where ``kappa`` translates by ``m != 0``."""
    coords = []
    for c in kappa.coords:
        coords.append(chi_map(c.d_neg) if c.is_unit() and not c.is_identity() else zm.IDENTITY)
    return Element(tuple(coords))


def _chi_conjugate(kappa: Element) -> tuple:
    chi = chi_for(kappa)
    return chi, product(chi, kappa, p_invert(chi))


def lemma1_witness(a: Element, b: Element) -> WitnessBundle:
    """Find ``varpi`` with ``(I, varpi)`` in every congruence containing ``(a, b)``.

    ``d_set(I, varpi) == d_set(a, b)``.  In the single-stage case ``varpi`` is
    ``gamma * b * delta`` with ``gamma * a * delta == I`` (or the same with the
    roles of ``a`` and ``b`` exchanged).  Mixed pairs combine the idempotents
    obtained from both orientations.
    """
    diff = d_set(a, b)
    if not diff:
        raise EqualInputs("inputs are equal")
    n = a.n
    stages = lemma1_stages(a, b)
    bundle = WitnessBundle("lemma1")
    bundle.add("alpha", a)
    bundle.add("beta", b)
    bundle.add("I", p_identity(n))
    bundle.info["branches"] = _branches(a, b)
    bundle.info["unitized"] = [st.unitized for st in stages]

    if len(stages) == 1:
        st = stages[0]
        other = "beta" if st.unitized == "alpha" else "alpha"
        bundle.add("gamma", st.gamma)
        bundle.add("delta", st.delta)
        bundle.add("varpi", st.varpi)
        bundle.eq(("gamma", st.unitized, "delta"), "I")
        bundle.eq(("gamma", other, "delta"), "varpi")
    else:
        parts = []
        for tag, st in zip("AB", stages):
            other = "beta" if st.unitized == "alpha" else "alpha"
            bundle.add(f"gamma_{tag}", st.gamma)
            bundle.add(f"delta_{tag}", st.delta)
            bundle.add(f"varpi_{tag}", st.varpi)
            bundle.eq((f"gamma_{tag}", st.unitized, f"delta_{tag}"), "I")
            bundle.eq((f"gamma_{tag}", other, f"delta_{tag}"), f"varpi_{tag}")
            chi, psi = _chi_conjugate(st.varpi)
            eps = prop4_idempotent(psi)
            bundle.add(f"chi_{tag}", chi)
            bundle.add(f"psi_{tag}", psi)
            bundle.add(f"eps_{tag}", eps)
            bundle.eq((f"chi_{tag}", f"varpi_{tag}", f"chi_{tag}^-1"), f"psi_{tag}")
            bundle.eq((f"psi_{tag}", f"psi_{tag}^-1", f"psi_{tag}^-1", f"psi_{tag}"), f"eps_{tag}")
            parts.append(eps)
        bundle.add("varpi", p_compose(*parts))
        bundle.eq(("eps_A", "eps_B"), "varpi")
    bundle.dsets.append(("I", "varpi", diff))
    return bundle


# -- non-unit coordinates ------------------------------------------------------

def lemma2_witness(a: Element, b: Element) -> WitnessBundle:
    """Find ``psi`` related to ``I`` whose differing coordinates are all non-units.

    ``kappa`` is the ``varpi`` of :func:`lemma1_witness`.  Coordinates where ``kappa`` is a
    translation by ``m`` are conjugated by ``chi_map(m)``, which turns the
    translation into a map with ``|m|`` holes in its domain.
    """
    l1 = lemma1_witness(a, b)
    diff = d_set(a, b)
    kappa = l1["varpi"]
    chi, psi = _chi_conjugate(kappa)

    bundle = WitnessBundle("lemma2", dict(l1.elements), list(l1.equations), list(l1.dsets), dict(l1.info))
    bundle.add("kappa", kappa)
    bundle.add("chi", chi)
    bundle.add("psi", psi)
    bundle.eq(("varpi",), "kappa")
    bundle.eq(("chi", "chi^-1"), "I")
    bundle.eq(("chi", "kappa", "chi^-1"), "psi")
    bundle.dsets.append(("I", "psi", diff))

    formulas = {}
    for i in sorted(diff):
        k = kappa[i]
        if k.is_unit():
            formulas[i] = k.d_neg
            if psi[i] != psi_closed_form(k.d_neg):
                raise AssertionError(f"coordinate {i}: psi does not match its closed form")
        if _is_h_trivial(psi[i]):
            raise AssertionError(f"coordinate {i}: psi is a unit")
    bundle.info["formulas"] = formulas
    return bundle


# -- idempotents from non-units ------------------------------------------------

def prop4_idempotent(psi: Element) -> Element:
    """Non-unit idempotent ``psi psi^-1 psi^-1 psi``, built from hole sets.

    Per coordinate this is the partial identity missing both the domain and
    the range complement of ``psi``.
    """
    diff = d_set(p_identity(psi.n), psi)
    if not diff:
        raise NotEligible("psi is the identity")
    for i in sorted(diff):
        if _is_h_trivial(psi[i]):
            raise NotEligible(f"coordinate {i} of psi is a unit")
    coords = []
    for c in psi.coords:
        h_dom, h_ran = zm.complements(c)
        coords.append(zm.partial_identity(h_dom | h_ran))
    return Element(tuple(coords))


def prop4_bundle(psi: Element) -> WitnessBundle:
    eps = prop4_idempotent(psi)
    bundle = WitnessBundle("prop4")
    bundle.add("I", p_identity(psi.n))
    bundle.add("psi", psi)
    bundle.add("eps", eps)
    bundle.eq(("psi", "psi^-1", "psi^-1", "psi"), "eps")
    bundle.eq(("eps", "eps"), "eps")
    bundle.dsets.append(("I", "eps", d_set(p_identity(psi.n), psi)))
    return bundle


# -- transport between idempotents ---------------------------------------------

def _transport_steps(builder: ChainBuilder, ref: int, target: Element) -> int:
    """Extend ``builder`` from pair ``ref == (I, source)`` to ``(I, target)``."""
    ident, source = builder.pair(ref)
    if source == target:
        return ref
    n = builder.n
    factors = []
    for i in sorted(d_set(ident, source)):
        m = min(zm.dom_holes(source[i]))
        iota = embed(i, zm.partial_identity({m}), n)
        r = builder.mul(ref, left=iota, note=f"enlarge coordinate {i} to the single hole {m}")
        r = builder.sym(r)
        single = builder.trans(ref, r)
        for p in sorted(zm.dom_holes(target[i])):
            if p == m:
                factors.append(single)
                continue
            rho = embed(i, zm.translation(p - m), n)
            factors.append(builder.mul(single, left=p_invert(rho), right=rho,
                                       note=f"move hole {m} to {p} in coordinate {i}"))
    r = factors[0]
    for f in factors[1:]:
        r = builder.prod(r, f)
    assert builder.pair(r) == (ident, target)
    return r


def _check_idempotents(source: Element, target: Element) -> None:
    for name, e in (("source", source), ("target", target)):
        if not e.is_idempotent():
            raise NotIdempotent(f"{name} is not an idempotent")
    ident = p_identity(source.n)
    if d_set(ident, source) != d_set(ident, target):
        raise HoleMismatch("source and target differ from the identity in different coordinates")


def transport_idempotent(source: Element, target: Element) -> Chain:
    """Chain deriving ``(I, target)`` from the seed ``(I, source)``.

    For each differing coordinate the source is enlarged to a single-hole
    idempotent, that hole is moved to every target hole by conjugating with a
    translation, and the results are multiplied together.
    """
    _check_idempotents(source, target)
    builder = ChainBuilder((p_identity(source.n), source))
    _transport_steps(builder, 0, target)
    return builder.chain()


def default_target(indices, n: int) -> Element:
    """Idempotent with one hole at 0 in each coordinate of ``indices``."""
    hole = zm.partial_identity({0})
    return Element(tuple(hole if i in indices else zm.IDENTITY for i in range(1, n + 1)))


def reduction_chain(a: Element, b: Element, target: Optional[Element] = None) -> Chain:
    """Chain from the seed ``(a, b)`` to ``(I, target)``.

    ``target`` defaults to the idempotent with a single hole at 0 in every
    coordinate where ``a`` and ``b`` differ; it must be an idempotent with the
    same d-set as the seed.
    """
    diff = d_set(a, b)
    if not diff:
        raise EqualInputs("inputs are equal")
    n = a.n
    if target is None:
        target = default_target(diff, n)
    if not target.is_idempotent():
        raise NotIdempotent("target is not an idempotent")
    if d_set(p_identity(n), target) != diff:
        raise HoleMismatch("target d-set differs from the seed's")

    builder = ChainBuilder((a, b))
    eps_refs = []
    for st in lemma1_stages(a, b):
        r = builder.mul(0, st.gamma, st.delta, note=f"unitize {st.unitized}")
        if st.unitized == "beta":
            r = builder.sym(r)
        chi = chi_for(builder.pair(r)[1])
        if not chi.is_identity():
            r = builder.mul(r, chi, p_invert(chi), note="conjugate by chi")
        r_inv = builder.inv(r)
        left = builder.prod(r, r_inv)
        right = builder.prod(r_inv, r)
        eps_refs.append(builder.prod(left, right, note="psi psi^-1 psi^-1 psi"))
    r = eps_refs[0]
    for other in eps_refs[1:]:
        r = builder.prod(r, other)
    _transport_steps(builder, r, target)
    chain = builder.chain()
    assert chain.conclusion == (p_identity(n), target)
    return chain

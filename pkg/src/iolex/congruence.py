"""Decision procedures for the congruences below the least group congruence.

For an index set ``I``, ``sigma_[I]`` relates two elements when they agree
exactly off ``I`` and agree off finitely many points on every coordinate of
``I``.  The empty set gives equality, the full set gives the least group
congruence ``sigma``.  Every positive answer comes with a witness idempotent
``e`` satisfying ``a * e == b * e``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import zmap as zm
from .errors import DimensionMismatch
from .product import (
    Element,
    d_set,
    index_set,
    p_compose,
    p_identity,
    project,
    splice,
)


def _full(n: int) -> frozenset:
    return frozenset(range(1, n + 1))


def sigma_I_related(a: Element, b: Element, indices: Iterable[int]) -> Optional[Element]:
    if a.n != b.n:
        raise DimensionMismatch(f"elements have {a.n} and {b.n} coordinates")
    indices = index_set(indices, a.n)
    coords = []
    for i, (x, y) in enumerate(zip(a.coords, b.coords), 1):
        if i in indices:
            e = zm.agree_cofinitely(x, y)
            if e is None:
                return None
            coords.append(e)
        elif x != y:
            return None
        else:
            coords.append(zm.IDENTITY)
    witness = Element(tuple(coords))
    assert p_compose(a, witness) == p_compose(b, witness)
    return witness


def sigma_related(a: Element, b: Element) -> Optional[Element]:
    return sigma_I_related(a, b, _full(a.n))


def pi_sharp_related(a: Element, b: Element, indices: Iterable[int]) -> bool:
    """Kernel of the projection keeping the coordinates in ``indices``."""
    if a.n != b.n:
        raise DimensionMismatch(f"elements have {a.n} and {b.n} coordinates")
    return project(a, indices) == project(b, indices)


def rho_min_related(a: Element, b: Element, indices: Iterable[int]) -> Optional[Element]:
    """Minimum congruence with the same trace as the projection kernel.

    Looks for an idempotent ``e`` with ``a e = b e`` and ``e``, ``a^-1 a``,
    ``b^-1 b`` pairwise related by the projection kernel.  The kernel forces
    ``e_i = (a^-1 a)_i = (b^-1 b)_i`` on ``indices``; off ``indices`` any
    idempotent equalising the two coordinates will do.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"elements have {a.n} and {b.n} coordinates")
    indices = index_set(indices, a.n)
    coords = []
    for i, (x, y) in enumerate(zip(a.coords, b.coords), 1):
        if i in indices:
            trace_x = zm.compose(zm.invert(x), x)
            trace_y = zm.compose(zm.invert(y), y)
            if trace_x != trace_y or zm.compose(x, trace_x) != zm.compose(y, trace_x):
                return None
            coords.append(trace_x)
        else:
            e = zm.agree_cofinitely(x, y)
            if e is None:
                return None
            coords.append(e)
    e = Element(tuple(coords))
    assert p_compose(a, e) == p_compose(b, e)
    ra = p_compose(a.inverse(), a)
    rb = p_compose(b.inverse(), b)
    assert pi_sharp_related(e, ra, indices) and pi_sharp_related(ra, rb, indices)
    return e


def composition_midpoint(a: Element, b: Element, first: Iterable[int], second: Iterable[int]) -> Optional[Element]:
    """Midpoint ``m`` with ``a sigma_[first] m sigma_[second] b``, if ``a sigma_[first | second] b``.

    ``m`` takes ``b``'s coordinates on ``first`` and ``a``'s elsewhere.
    """
    first = index_set(first, a.n)
    second = index_set(second, a.n)
    if sigma_I_related(a, b, first | second) is None:
        return None
    m = splice(a, b, first)
    assert sigma_I_related(a, m, first) is not None
    assert sigma_I_related(m, b, second) is not None
    return m


@dataclass(frozen=True)
class QuotientImage:
    shifts: tuple

    @property
    def n(self) -> int:
        return len(self.shifts)

    def __add__(self, other: "QuotientImage") -> "QuotientImage":
        if self.n != other.n:
            raise DimensionMismatch(f"images have {self.n} and {other.n} coordinates")
        return QuotientImage(tuple((a + c, b + d) for (a, b), (c, d) in zip(self.shifts, other.shifts)))


def sigma_quotient(a: Element) -> QuotientImage:
    """Image in Z^(2n): the tail shifts at minus and plus infinity, per coordinate."""
    return QuotientImage(tuple(zm.tail_shifts(c) for c in a.coords))


def _section(d_neg: int, d_pos: int) -> zm.ZMap:
    if d_pos >= d_neg:
        return zm.normalize(d_neg, d_pos, 0, [])
    # inverse of the change-point map with tails (-d_neg, -d_pos): holes in the domain
    return zm.invert(zm.normalize(-d_neg, -d_pos, 0, []))


def quotient_lift(q: QuotientImage) -> Element:
    return Element(tuple(_section(a, b) for a, b in q.shifts))


@dataclass
class Classification:
    """Result of :func:`classify_generated`.

    ``indices`` is None when some generating pair is not sigma-related; then
    ``offending`` holds the position of the first such pair.
    """
    indices: Optional[frozenset]
    chains: list = field(default_factory=list)
    offending: Optional[int] = None

    @property
    def below_sigma(self) -> bool:
        return self.indices is not None


def classify_generated(pairs) -> Classification:
    """Identify the congruence generated by ``pairs`` when it lies below sigma.

    The generated congruence is ``sigma_[I]`` with ``I`` the union of the
    d-sets.  Containment in ``sigma_[I]`` holds because each pair is
    ``sigma_[I]``-related; the reverse containment is certified for each pair
    by a chain ending in ``(identity, e)`` where ``e`` has a single hole at 0
    in every coordinate of that pair's d-set.  Those idempotents generate
    ``sigma_[d-set]`` (conjugation by translations moves the hole, products
    combine holes).
    """
    from .witness import reduction_chain

    pairs = list(pairs)
    if not pairs:
        raise ValueError("classify_generated needs at least one pair")
    n = pairs[0][0].n
    for a, b in pairs:
        if a.n != n or b.n != n:
            raise DimensionMismatch("all generating pairs must have the same number of coordinates")
    for pos, (a, b) in enumerate(pairs):
        if sigma_related(a, b) is None:
            return Classification(indices=None, offending=pos)

    indices = frozenset()
    chains = []
    for a, b in pairs:
        ds = d_set(a, b)
        indices |= ds
        if ds:
            chains.append(reduction_chain(a, b))
    return Classification(indices=indices, chains=chains)


def generators(indices: Iterable[int], n: int) -> list:
    """Standard generating pairs of ``sigma_[indices]``: a single hole at 0 per coordinate."""
    from .product import embed

    ident = p_identity(n)
    return [(ident, embed(i, zm.partial_identity({0}), n)) for i in sorted(index_set(indices, n))]

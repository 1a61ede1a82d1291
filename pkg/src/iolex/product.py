"""The direct power of ``n`` copies of the single-coordinate monoid.

An :class:`Element` is an ``n``-tuple of canonical :class:`~iolex.zmap.ZMap`.
Coordinates are 1-based everywhere in the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

from . import zmap as zm
from .errors import DimensionMismatch, IndexOutOfRange
from .zmap import ZMap


@dataclass(frozen=True)
class Element:
    coords: tuple

    def __post_init__(self):
        if not self.coords:
            raise DimensionMismatch("an element needs at least one coordinate")

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> ZMap:
        """1-based coordinate access."""
        check_index(i, self.n)
        return self.coords[i - 1]

    def __mul__(self, other: "Element") -> "Element":
        return p_compose(self, other)

    def inverse(self) -> "Element":
        return p_invert(self)

    def is_identity(self) -> bool:
        return all(c.is_identity() for c in self.coords)

    def is_idempotent(self) -> bool:
        return all(c.is_idempotent() for c in self.coords)

    def is_unit(self) -> bool:
        return all(c.is_unit() for c in self.coords)

    def __repr__(self):
        return "Element(" + ", ".join(map(repr, self.coords)) + ")"


def check_index(i: int, n: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRange(f"coordinate index {i!r} outside 1..{n}")


def index_set(indices: Iterable[int], n: int) -> frozenset:
    indices = frozenset(indices)
    for i in indices:
        check_index(i, n)
    return indices


def _same_n(*elements: Element) -> int:
    n = elements[0].n
    for x in elements[1:]:
        if x.n != n:
            raise DimensionMismatch(f"elements have {n} and {x.n} coordinates")
    return n


def element(*coords: ZMap) -> Element:
    return Element(tuple(coords))


def p_identity(n: int) -> Element:
    return Element((zm.IDENTITY,) * n)


def p_compose(a: Element, b: Element) -> Element:
    _same_n(a, b)
    return Element(tuple(zm.compose(x, y) for x, y in zip(a.coords, b.coords)))


def p_invert(a: Element) -> Element:
    return Element(tuple(zm.invert(x) for x in a.coords))


def product(*elements: Element) -> Element:
    return reduce(p_compose, elements)


def embed(i: int, a: ZMap, n: int) -> Element:
    """The element carrying ``a`` in coordinate ``i`` and the identity elsewhere."""
    check_index(i, n)
    coords = [zm.IDENTITY] * n
    coords[i - 1] = a
    return Element(tuple(coords))


def d_set(a: Element, b: Element) -> frozenset:
    """Coordinates (1-based) where ``a`` and ``b`` differ."""
    _same_n(a, b)
    return frozenset(i for i, (x, y) in enumerate(zip(a.coords, b.coords), 1) if x != y)


def project(a: Element, indices: Iterable[int]) -> Element:
    """Keep the coordinates in ``indices`` and replace the rest by the identity.

    The full index set gives the identity homomorphism.
    """
    indices = index_set(indices, a.n)
    return Element(tuple(c if i in indices else zm.IDENTITY
                         for i, c in enumerate(a.coords, 1)))


def splice(a: Element, b: Element, indices: Iterable[int]) -> Element:
    """Take ``b`` on ``indices`` and ``a`` elsewhere."""
    _same_n(a, b)
    indices = index_set(indices, a.n)
    return Element(tuple(y if i in indices else x
                         for i, (x, y) in enumerate(zip(a.coords, b.coords), 1)))


def unitize(a: ZMap) -> tuple:
    """Return ``(gamma, delta)`` with ``gamma * a * delta`` the identity.

    ``gamma`` is the canonical order bijection of Z onto ``dom a``; ``delta``
    is the inverse canonical bijection of ``ran a`` followed by the translation
    that cancels the unit left over in the middle.
    """
    dom_h, ran_h = zm.complements(a)
    gamma = zm.canonical_order_bijection(dom_h)
    delta = zm.invert(zm.canonical_order_bijection(ran_h))
    unit = zm.compose(zm.compose(gamma, a), delta)
    assert unit.is_unit()
    delta = zm.compose(delta, zm.translation(-unit.d_neg))
    return gamma, delta


@dataclass(frozen=True)
class Green:
    R: bool
    L: bool
    H: bool
    D: bool
    mediator: Optional[Element] = None


def green(a: Element, b: Element) -> Green:
    """Green's relations between two elements.

    R is equality of domains and L equality of ranges, coordinatewise.  The
    monoid is bisimple, so D (which coincides with J here) always holds; the
    returned mediator ``m`` satisfies ``a L m R b``.
    """
    _same_n(a, b)
    comp_a = [zm.complements(x) for x in a.coords]
    comp_b = [zm.complements(y) for y in b.coords]
    r = all(ca[0] == cb[0] for ca, cb in zip(comp_a, comp_b))
    l = all(ca[1] == cb[1] for ca, cb in zip(comp_a, comp_b))
    coords = []
    for x, y in zip(a.coords, b.coords):
        gamma_y, _ = unitize(y)
        _, delta_x = unitize(x)
        # Z -> dom y inverted, then Z -> ran x
        coords.append(zm.compose(zm.invert(gamma_y), zm.invert(delta_x)))
    return Green(R=r, L=l, H=r and l, D=True, mediator=Element(tuple(coords)))

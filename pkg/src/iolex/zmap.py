"""Cofinite monotone injective partial selfmaps of the integers.

A map is stored as two tail translations plus a finite exception window:

    k < lo        ->  k + d_neg
    lo <= k <= hi ->  window[k - lo]   (None marks a point outside the domain)
    k > hi        ->  k + d_pos

Every public constructor returns the canonical form, so ``==`` and ``hash``
are equality of partial maps.  Composition is a right action:
``(k)(a * b) == ((k)a)b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import MonotonicityViolation, WindowInconsistent

Hole = None


@dataclass(frozen=True)
class ZMap:
    d_neg: int
    d_pos: int
    lo: int
    window: tuple

    @property
    def hi(self) -> int:
        return self.lo + len(self.window) - 1

    def eval(self, k: int) -> Optional[int]:
        if k < self.lo:
            return k + self.d_neg
        if k > self.lo + len(self.window) - 1:
            return k + self.d_pos
        return self.window[k - self.lo]

    __call__ = eval

    def __mul__(self, other: "ZMap") -> "ZMap":
        return compose(self, other)

    def inverse(self) -> "ZMap":
        return invert(self)

    def is_identity(self) -> bool:
        return self == IDENTITY

    def is_unit(self) -> bool:
        return self.d_neg == self.d_pos and not self.window

    def is_idempotent(self) -> bool:
        if self.d_neg or self.d_pos:
            return False
        return all(v is None or v == self.lo + i for i, v in enumerate(self.window))

    def __repr__(self):
        win = ",".join("_" if v is None else str(v) for v in self.window)
        return f"ZMap(d-={self.d_neg}, d+={self.d_pos}, lo={self.lo}, win=[{win}])"


def normalize(d_neg: int, d_pos: int, lo: int, window: Sequence, hi: Optional[int] = None) -> ZMap:
    """Validate raw window data and return the canonical map it describes."""
    window = list(window)
    if hi is not None:
        if hi < lo - 1:
            raise WindowInconsistent(f"hi={hi} < lo-1={lo - 1}")
        if hi - lo + 1 != len(window):
            raise WindowInconsistent(
                f"window has {len(window)} entries but [lo, hi] = [{lo}, {hi}] needs {hi - lo + 1}")
    hi = lo + len(window) - 1

    prev = lo - 1 + d_neg
    for i, v in enumerate(window):
        if v is None:
            continue
        if not isinstance(v, int):
            raise TypeError(f"window entry {v!r} is neither an int nor a hole")
        if v <= prev:
            raise MonotonicityViolation(f"image {v} of {lo + i} does not exceed preceding image {prev}")
        prev = v
    if hi + 1 + d_pos <= prev:
        raise MonotonicityViolation(
            f"tail image {hi + 1 + d_pos} of {hi + 1} does not exceed preceding image {prev}")

    start, stop = 0, len(window)
    while start < stop and window[start] == lo + start + d_neg:
        start += 1
    while start < stop and window[stop - 1] == lo + stop - 1 + d_pos:
        stop -= 1
    lo += start
    window = window[start:stop]
    if not window and d_neg == d_pos:
        lo = 0
    return ZMap(d_neg, d_pos, lo, tuple(window))


IDENTITY = ZMap(0, 0, 0, ())


def identity() -> ZMap:
    return IDENTITY


def evaluate(a: ZMap, k: int) -> Optional[int]:
    return a.eval(k)


def compose(a: ZMap, b: ZMap) -> ZMap:
    """Right-action product: first ``a``, then ``b``."""
    start = min(a.lo, b.lo - a.d_neg)
    stop = max(a.hi, b.hi - a.d_pos)
    window = []
    for k in range(start, stop + 1):
        v = a.eval(k)
        window.append(None if v is None else b.eval(v))
    return normalize(a.d_neg + b.d_neg, a.d_pos + b.d_pos, start, window)


def invert(a: ZMap) -> ZMap:
    # every window value lies in [lo + d_neg, hi + d_pos] and no tail value does
    lo = a.lo + a.d_neg
    window = [None] * (a.hi + a.d_pos - lo + 1)
    for i, v in enumerate(a.window):
        if v is not None:
            window[v - lo] = a.lo + i
    return normalize(-a.d_neg, -a.d_pos, lo, window)


def translation(m: int) -> ZMap:
    return ZMap(m, m, 0, ())


def partial_identity(holes: Iterable[int]) -> ZMap:
    holes = frozenset(holes)
    if not holes:
        return IDENTITY
    lo, hi = min(holes), max(holes)
    return normalize(0, 0, lo, [None if k in holes else k for k in range(lo, hi + 1)])


def canonical_order_bijection(target_holes: Iterable[int]) -> ZMap:
    """Total monotone bijection from Z onto Z minus ``target_holes``.

    Non-negative arguments run through the non-negative targets in increasing
    order, negative arguments through the negative targets in decreasing order.
    """
    holes = frozenset(target_holes)
    neg = [h for h in holes if h < 0]
    pos = [h for h in holes if h >= 0]
    lo = min(neg, default=0)
    hi = max(pos, default=-1)

    values = {}
    j = 0
    for k in range(0, hi + 1):
        while j in holes:
            j += 1
        values[k] = j
        j += 1
    j = -1
    for k in range(-1, lo - 1, -1):
        while j in holes:
            j -= 1
        values[k] = j
        j -= 1
    window = [values[k] for k in range(lo, hi + 1)]
    return normalize(-len(neg), len(pos), lo, window)


def tail_shifts(a: ZMap) -> tuple:
    return a.d_neg, a.d_pos


def dom_holes(a: ZMap) -> frozenset:
    return frozenset(a.lo + i for i, v in enumerate(a.window) if v is None)


def ran_holes(a: ZMap) -> frozenset:
    values = {v for v in a.window if v is not None}
    return frozenset(y for y in range(a.lo + a.d_neg, a.hi + a.d_pos + 1) if y not in values)


def complements(a: ZMap) -> tuple:
    """Return ``(Z \\ dom a, Z \\ ran a)``."""
    return dom_holes(a), ran_holes(a)


def natural_leq(a: ZMap, b: ZMap) -> bool:
    """Natural partial order: ``a`` is the restriction of ``b`` to ``dom a``."""
    return a == compose(partial_identity(dom_holes(a)), b)


def agree_cofinitely(a: ZMap, b: ZMap) -> Optional[ZMap]:
    """Return an idempotent ``e`` with ``a * e == b * e``, or None if none exists.

    Such an ``e`` exists exactly when the tail shifts coincide.  The witness
    removes every image value at which the two maps disagree.
    """
    if tail_shifts(a) != tail_shifts(b):
        return None
    bad = set()
    for k in range(min(a.lo, b.lo), max(a.hi, b.hi) + 1):
        x, y = a.eval(k), b.eval(k)
        if x != y:
            bad.update(v for v in (x, y) if v is not None)
    e = partial_identity(bad)
    assert compose(a, e) == compose(b, e)
    return e

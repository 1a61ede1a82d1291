"""Seeded random elements for property checks and interval reports.

Window cells are drawn from [-10, 10], translations from [-5, 5], and each
window cell becomes a domain (or range) hole with probability 0.3.
"""

from __future__ import annotations

import random

from . import zmap as zm
from .product import Element

WINDOW = (-10, 10)
SHIFT = 5
HOLE_DENSITY = 0.3


def _holes(rng: random.Random) -> frozenset:
    a, b = sorted(rng.randint(*WINDOW) for _ in range(2))
    return frozenset(k for k in range(a, b + 1) if rng.random() < HOLE_DENSITY)


def from_data(dom_holes, ran_holes, shift: int) -> zm.ZMap:
    """The map ``Z \\ dom_holes -> Z \\ ran_holes`` obtained by relabelling both sides as Z.

    ``shift`` picks one of the order-isomorphisms: it is the translation
    applied between the two relabellings.
    """
    return zm.compose(zm.compose(zm.invert(zm.canonical_order_bijection(dom_holes)),
                                 zm.translation(shift)),
                      zm.canonical_order_bijection(ran_holes))


def random_zmap(rng: random.Random) -> zm.ZMap:
    kind = rng.random()
    if kind < 0.1:
        return zm.IDENTITY
    if kind < 0.2:
        return zm.translation(rng.randint(-SHIFT, SHIFT))
    if kind < 0.3:
        return zm.partial_identity(_holes(rng))
    return from_data(_holes(rng), _holes(rng), rng.randint(-SHIFT, SHIFT))


def random_idempotent_zmap(rng: random.Random) -> zm.ZMap:
    return zm.partial_identity(_holes(rng))


def random_kernel_zmap(rng: random.Random) -> zm.ZMap:
    """A random map with both tail shifts zero."""
    dom_h = _holes(rng)
    ran_h = set(_holes(rng))
    # equal hole counts give d_pos == d_neg; pad or trim the range holes
    while len(ran_h) < len(dom_h):
        ran_h.add(rng.randint(WINDOW[0] - 5, WINDOW[1] + 5))
    while len(ran_h) > len(dom_h):
        ran_h.remove(rng.choice(sorted(ran_h)))
    x = from_data(dom_h, ran_h, 0)
    return zm.compose(x, zm.translation(-x.d_neg))


def sigma_partner(rng: random.Random, a: zm.ZMap) -> zm.ZMap:
    """A random map with the same tail shifts as ``a``."""
    roll = rng.random()
    if roll < 0.25:
        return zm.compose(a, random_idempotent_zmap(rng))
    if roll < 0.5:
        return zm.compose(random_idempotent_zmap(rng), a)
    if roll < 0.75:
        return zm.compose(a, random_kernel_zmap(rng))
    return zm.compose(random_kernel_zmap(rng), a)


def random_element(rng: random.Random, n: int) -> Element:
    return Element(tuple(random_zmap(rng) for _ in range(n)))


def random_idempotent(rng: random.Random, n: int) -> Element:
    return Element(tuple(random_idempotent_zmap(rng) for _ in range(n)))


def related_pair(rng: random.Random, n: int, indices, strict=()) -> tuple:
    """A pair related by ``sigma_[indices]`` that differs in every coordinate of ``strict``.

    Coordinates in ``indices`` but not ``strict`` differ with probability 1/2.
    """
    a = random_element(rng, n)
    coords = []
    for i, x in enumerate(a.coords, 1):
        if i in strict:
            y = sigma_partner(rng, x)
            while y == x:
                y = sigma_partner(rng, x)
        elif i in indices and rng.random() < 0.5:
            y = sigma_partner(rng, x)
        else:
            y = x
        coords.append(y)
    return a, Element(tuple(coords))


def h_equivalent_partner(rng: random.Random, a: zm.ZMap) -> zm.ZMap:
    """A map with the same domain and range as ``a`` but a different shift."""
    dom_h, ran_h = zm.complements(a)
    while True:
        y = from_data(dom_h, ran_h, rng.randint(-SHIFT, SHIFT))
        if y != a:
            return y

"""The Boolean lattice of congruences ``sigma_[I]`` between equality and sigma."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .congruence import classify_generated, generators, sigma_I_related
from .errors import NotACoveringPair
from .product import d_set, index_set
from .sampling import related_pair
from .witness import verify_chain


@dataclass(frozen=True)
class LatticeOps:
    leq: bool
    join: frozenset
    meet: frozenset


def lattice_ops(first, second, n: int) -> LatticeOps:
    """Order, join and meet.  The join is the relational composite of the two congruences."""
    first = index_set(first, n)
    second = index_set(second, n)
    return LatticeOps(first <= second, first | second, first & second)


@dataclass(frozen=True)
class LatticeNode:
    id: frozenset
    covers: tuple


def enumerate_lattice(n: int) -> list:
    """All ``2**n`` nodes, ordered by size then lexicographically, with their upper covers."""
    full = range(1, n + 1)
    nodes = []
    for size in range(n + 1):
        for combo in combinations(full, size):
            ids = frozenset(combo)
            covers = tuple(ids | {j} for j in full if j not in ids)
            nodes.append(LatticeNode(ids, covers))
    return nodes


def covering_pairs(n: int) -> list:
    return [(node.id, cover) for node in enumerate_lattice(n) for cover in node.covers]


@dataclass
class Trial:
    generators: list
    classified: frozenset
    chains_ok: bool


@dataclass
class IntervalReport:
    """Outcome of a randomized search for a congruence strictly between two covers.

    This is evidence, not proof: only finitely generated congruences are sampled.
    """
    lower: frozenset
    upper: frozenset
    trials: list = field(default_factory=list)

    @property
    def collapsed(self) -> int:
        return sum(t.classified == self.upper for t in self.trials)

    @property
    def counterexamples(self) -> list:
        return [t for t in self.trials if t.classified != self.upper]

    @property
    def chains_verified(self) -> int:
        return sum(t.chains_ok for t in self.trials)

    def lines(self) -> list:
        from .literal import serialize, serialize_indices

        out = []
        for k, t in enumerate(self.trials, 1):
            gens = " | ".join(f"{serialize(a)} ~ {serialize(b)}" for a, b in t.generators)
            status = "verified" if t.chains_ok else "FAILED"
            out.append(f"trial {k}: classified={serialize_indices(t.classified)} chains={status} generators: {gens}")
        out.append(
            f"summary: lower={serialize_indices(self.lower)} upper={serialize_indices(self.upper)} "
            f"trials={len(self.trials)} collapsed={self.collapsed} intermediate={len(self.counterexamples)} "
            f"chains_verified={self.chains_verified}")
        return out


def interval_report(lower, upper, samples: int, n: int, seed: int = 0) -> IntervalReport:
    """Add one ``sigma_[upper]``-but-not-``sigma_[lower]`` pair to the generators of ``sigma_[lower]`` and classify."""
    lower = index_set(lower, n)
    upper = index_set(upper, n)
    if not lower < upper or len(upper - lower) != 1:
        raise NotACoveringPair(f"{sorted(lower)} is not covered by {sorted(upper)}")
    (extra,) = upper - lower
    rng = random.Random(seed)
    report = IntervalReport(lower, upper)
    base = generators(lower, n)
    for _ in range(samples):
        a, b = related_pair(rng, n, upper, strict={extra})
        assert sigma_I_related(a, b, upper) is not None
        assert sigma_I_related(a, b, lower) is None
        gens = base + [(a, b)]
        result = classify_generated(gens)
        classified = result.indices if result.below_sigma else None
        ok = result.below_sigma and all(verify_chain(c, d_set(*c.seed)) for c in result.chains)
        report.trials.append(Trial(gens, classified, bool(ok)))
    return report

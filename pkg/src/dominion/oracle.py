"""Brute-force ground truth by size-ascending subset search.

Deliberately unclever: every subset of size k is tested for k = 1, 2, ...
until some size admits a dominating set, and all dominating subsets of
that size are then counted (or listed). Its only virtue is obvious
correctness, which is exactly what the fast paths are validated against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from operator import or_

from .errors import TooLargeError, UnknownVertexError
from .tree import DominationSummary, Label, Tree

DEFAULT_CAP = 24


def is_dominating(tree: Tree, subset) -> bool:
    """True iff the closed neighborhoods of `subset` cover every vertex."""
    covered: set[Label] = set()
    for v in subset:
        covered.add(v)
        covered.update(tree.neighbors(v))  # raises UnknownVertexError for bad labels
    return len(covered) == tree.vertex_count


def _closed_neighborhood_masks(tree: Tree) -> tuple[list[Label], list[int]]:
    """Bit i of each mask stands for the i-th label in sorted order."""
    order = sorted(tree.labels)
    position = {v: i for i, v in enumerate(order)}
    masks = []
    for i, v in enumerate(order):
        mask = 1 << i
        for nb in tree.neighbors(v):
            mask |= 1 << position[nb]
        masks.append(mask)
    return order, masks


def oracle_count(tree: Tree, cap: int = DEFAULT_CAP) -> DominationSummary:
    """Exact (gamma, zeta) by exhaustive search; refuses trees above `cap`."""
    n = tree.vertex_count
    if n > cap:
        raise TooLargeError(f"{n} vertices exceeds the oracle cap of {cap}")
    _, masks = _closed_neighborhood_masks(tree)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        count = 0
        for combo in itertools.combinations(masks, k):
            if reduce(or_, combo) == full:
                count += 1
        if count:
            return DominationSummary(k, count)
    raise AssertionError("unreachable: the full vertex set dominates")


@dataclass(frozen=True)
class WitnessSets:
    """All minimum dominating sets, canonically ordered: each set sorted by
    label, sets sorted lexicographically."""

    gamma: int
    sets: tuple[tuple[Label, ...], ...]

    @property
    def zeta(self) -> int:
        return len(self.sets)


def enumerate_min_sets(tree: Tree, cap: int = DEFAULT_CAP) -> WitnessSets:
    """List every minimum dominating set explicitly (same cap as counting)."""
    n = tree.vertex_count
    if n > cap:
        raise TooLargeError(f"{n} vertices exceeds the oracle cap of {cap}")
    order, masks = _closed_neighborhood_masks(tree)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        found = []
        for indices in itertools.combinations(range(n), k):
            mask = 0
            for i in indices:
                mask |= masks[i]
            if mask == full:
                found.append(tuple(order[i] for i in indices))
        if found:
            for witness in found:  # re-verify before handing sets out
                if not is_dominating(tree, witness):
                    raise AssertionError(f"oracle produced a non-dominating set {witness!r}")
            return WitnessSets(k, tuple(found))
    raise AssertionError("unreachable: the full vertex set dominates")

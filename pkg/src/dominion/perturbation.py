"""Leaf-deletion stability reports for complete binary trees.

For a set X of bottom-level leaves, the report compares (gamma, zeta)
before and after deletion against the envelope 2^(m1) * zeta_before, where
m1 counts the level-(h-1) parents losing exactly one child. The
after-values always come from the dynamic program, never from a formula:
the envelope is a claimed inequality, not an equality, and `bound_holds`
records honestly whether it was satisfied.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .closed_form import binary_summary
from .dp import dp_count
from .errors import InvalidParameterError
from .families import bottom_leaf_index, delete_leaves, level_labels, make_complete_binary
from .rng import SplitMix64


@dataclass(frozen=True)
class LeafDeletionReport:
    """Outcome of deleting the leaf set X from the height-h complete binary
    tree. `envelope` is 2^m1 * zeta_before; `bound_holds` is the recorded
    comparison zeta_after <= envelope."""

    h: int
    deleted: frozenset[str]
    m1: int
    gamma_before: int
    gamma_after: int
    zeta_before: int
    zeta_after: int
    envelope: int
    bound_holds: bool


def m1_of(h: int, deleted) -> int:
    """Number of level-(h-1) parents with exactly one child in `deleted`."""
    if h < 1:
        raise InvalidParameterError("height must be >= 1")
    parents = Counter(bottom_leaf_index(h, label) // 2 for label in set(deleted))
    return sum(1 for hits in parents.values() if hits == 1)


def analyze_deletion(h: int, deleted) -> LeafDeletionReport:
    """Full before/after report for deleting `deleted` (a proper subset of
    the bottom level, possibly empty) from the height-h tree."""
    if h < 2:
        raise InvalidParameterError("leaf-deletion analysis needs h >= 2")
    deleted = frozenset(deleted)
    m1 = m1_of(h, deleted)
    if len(deleted) >= 1 << h:
        raise InvalidParameterError("cannot delete the entire bottom level")
    before = binary_summary(h)
    tree = make_complete_binary(h)
    if deleted:
        tree = delete_leaves(tree, deleted)
    after = dp_count(tree)
    envelope = (1 << m1) * before.zeta
    return LeafDeletionReport(
        h=h,
        deleted=deleted,
        m1=m1,
        gamma_before=before.gamma,
        gamma_after=after.gamma,
        zeta_before=before.zeta,
        zeta_after=after.zeta,
        envelope=envelope,
        bound_holds=after.zeta <= envelope,
    )


def single_leaf_doubling_check(h: int) -> bool:
    """True iff deleting any single bottom-level leaf preserves gamma and
    exactly doubles zeta."""
    if h < 2:
        raise InvalidParameterError("doubling check needs h >= 2")
    before = binary_summary(h)
    for leaf in level_labels(h, h):
        report = analyze_deletion(h, {leaf})
        if report.gamma_after != before.gamma or report.zeta_after != 2 * before.zeta:
            return False
    return True


def random_leaf_subset(h: int, size: int, seed: int) -> frozenset[str]:
    """Seeded uniformly random proper subset of the bottom level, drawn with
    the same generator as `random_tree` for reproducible manifests."""
    if h < 1:
        raise InvalidParameterError("height must be >= 1")
    if not 0 <= size < 1 << h:
        raise InvalidParameterError(
            f"subset size must be in [0, {(1 << h) - 1}] for height {h}"
        )
    rng = SplitMix64(seed)
    return frozenset(rng.sample(level_labels(h, h), size))

"""Closed-form evaluators for the domination number and dominion of each
generated family, in exact integer arithmetic.

Counts routinely exceed 64 bits (the full comb on n hosts has 2^n minimum
dominating sets), so everything here stays in Python ints.
"""

from __future__ import annotations

from .dp import dp_count
from .errors import InvalidParameterError, NoClosedFormError
from .families import FamilySpec, make_path
from .tree import DominationSummary


def fibonacci(t: int) -> int:
    """F_t with F_1 = F_2 = 1, evaluated iteratively in O(t) additions."""
    if t < 1:
        raise InvalidParameterError("Fibonacci index must be >= 1")
    a, b = 1, 1
    for _ in range(t - 1):
        a, b = b, a + b
    return a


def uniform_pendant_summary(n: int, r: int) -> DominationSummary:
    """Paths with r pendants per host: gamma = n; a single pendant leaves a
    free two-way choice per host (zeta = 2^n), two or more force the hosts
    themselves (zeta = 1)."""
    if n < 1 or r < 1:
        raise InvalidParameterError("uniform pendant tree needs n >= 1 and r >= 1")
    return DominationSummary(n, 2**n if r == 1 else 1)


def star_summary(m: int) -> DominationSummary:
    """Stars: gamma = 1; only the two-vertex star has two optima."""
    if m < 1:
        raise InvalidParameterError("star needs m >= 1")
    return DominationSummary(1, 2 if m == 1 else 1)


def interior_pendant_summary(n: int) -> DominationSummary:
    """Interior pendants: gamma = max(1, n - 2); the two boundary hosts are
    forced, leaving 2^(gamma - 2) choices for n >= 4."""
    if n < 2:
        raise InvalidParameterError("interior pendant tree needs n >= 2")
    gamma = max(1, n - 2)
    if n == 2:
        zeta = 2
    elif n == 3:
        zeta = 1
    else:
        zeta = 2 ** (gamma - 2)
    return DominationSummary(gamma, zeta)


def alternating_summary(n: int, parity: str) -> DominationSummary:
    """Alternating combs: coupled per-cluster choices make the count a
    Fibonacci number whose index depends on n's parity and the attachment
    side."""
    if n < 2:
        raise InvalidParameterError("alternating comb needs n >= 2")
    if parity not in ("even", "odd"):
        raise InvalidParameterError(f"parity must be 'even' or 'odd', got {parity!r}")
    k = n // 2
    if parity == "even":
        gamma = k
        zeta = fibonacci(k + 1) if n % 2 == 0 else fibonacci(k)
    else:
        gamma = (n + 1) // 2
        zeta = fibonacci(k + 1) if n % 2 == 0 else fibonacci(k + 3)
    return DominationSummary(gamma, zeta)


def binary_summary(h: int) -> DominationSummary:
    """Complete binary trees: gamma = floor((2^(h+2) + 3) / 7) in exact
    arithmetic; zeta is periodic in h with period 3 (3 when h is a positive
    multiple of 3 at least 3, otherwise 1)."""
    if h < 1:
        raise InvalidParameterError("complete binary tree needs h >= 1")
    gamma = (2 ** (h + 2) + 3) // 7
    zeta = 3 if h >= 3 and h % 3 == 0 else 1
    return DominationSummary(gamma, zeta)


def summary_for(spec: FamilySpec) -> DominationSummary:
    """Dispatch to the closed form matching `spec`.

    Bare paths have no closed-form count, so `path` combines the
    gamma = ceil(n/3) formula with a count computed by the dynamic
    program. Random trees and binary trees with deleted leaves have no
    closed form at all.
    """
    kind = spec.kind
    if kind == "random":
        raise NoClosedFormError("random trees have no closed form")
    if kind == "binary" and spec.deleted_leaves:
        raise NoClosedFormError("perturbed binary trees have no closed form")
    if kind == "uniform":
        return uniform_pendant_summary(spec.n, spec.r)
    if kind == "comb":
        return uniform_pendant_summary(spec.n, 1)
    if kind == "interior":
        return interior_pendant_summary(spec.n)
    if kind == "alt-even":
        return alternating_summary(spec.n, "even")
    if kind == "alt-odd":
        return alternating_summary(spec.n, "odd")
    if kind == "star":
        return star_summary(spec.n)
    if kind == "binary":
        return binary_summary(spec.h)
    assert kind == "path"
    return DominationSummary((spec.n + 2) // 3, dp_count(make_path(spec.n)).zeta)

"""Deterministic generators for the analyzed tree families, plus uniformly
random labeled trees for cross-validation corpora.

Label schemes (fixed so that witness sets are readable by eye):

* paths: ``v1 .. vn``
* pendants: ``l<i>_<j>`` for the j-th pendant of ``v<i>`` (multi-pendant
  families) or ``l<i>`` when each host carries a single pendant
* stars: center ``c`` with leaves ``u1 .. um``
* complete binary trees: heap labels ``b1 .. b(2^(h+1)-1)`` where ``bk``
  has children ``b(2k)`` and ``b(2k+1)``; level of ``bk`` is floor(log2 k)
* random trees: ``n1 .. nN``
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import (
    InvalidParameterError,
    NotALeafError,
    NotALevelLeafError,
    ParseError,
    WouldBeEmptyError,
)
from .rng import SplitMix64
from .tree import Tree

KINDS = ("uniform", "comb", "interior", "alt-even", "alt-odd", "star", "binary", "path", "random")


def make_path(n: int) -> Tree:
    """Path v1 - v2 - ... - vn."""
    if n < 1:
        raise InvalidParameterError("path needs n >= 1")
    labels = [f"v{i}" for i in range(1, n + 1)]
    return Tree(labels, [(f"v{i}", f"v{i + 1}") for i in range(1, n)])


def make_uniform_pendant(n: int, r: int) -> Tree:
    """Path v1..vn with r pendant leaves l<i>_1 .. l<i>_r on every vi."""
    if n < 1 or r < 1:
        raise InvalidParameterError("uniform pendant tree needs n >= 1 and r >= 1")
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n)]
    for i in range(1, n + 1):
        for j in range(1, r + 1):
            leaf = f"l{i}_{j}"
            labels.append(leaf)
            edges.append((f"v{i}", leaf))
    return Tree(labels, edges)


def make_interior_pendant(n: int) -> Tree:
    """Path v1..vn with one pendant l<i> on each interior vertex v2..v(n-1)."""
    if n < 2:
        raise InvalidParameterError("interior pendant tree needs n >= 2")
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n)]
    for i in range(2, n):
        labels.append(f"l{i}")
        edges.append((f"v{i}", f"l{i}"))
    return Tree(labels, edges)


def make_alternating(n: int, parity: str) -> Tree:
    """Path v1..vn with one pendant l<i> on each even-indexed (parity
    ``"even"``) or odd-indexed (parity ``"odd"``) vertex."""
    if n < 2:
        raise InvalidParameterError("alternating comb needs n >= 2")
    if parity not in ("even", "odd"):
        raise InvalidParameterError(f"parity must be 'even' or 'odd', got {parity!r}")
    wanted = 0 if parity == "even" else 1
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"v{i}", f"v{i + 1}") for i in range(1, n)]
    for i in range(1, n + 1):
        if i % 2 == wanted:
            labels.append(f"l{i}")
            edges.append((f"v{i}", f"l{i}"))
    return Tree(labels, edges)


def make_star(m: int) -> Tree:
    """Star with center c and leaves u1..um."""
    if m < 1:
        raise InvalidParameterError("star needs m >= 1")
    labels = ["c"] + [f"u{i}" for i in range(1, m + 1)]
    return Tree(labels, [("c", f"u{i}") for i in range(1, m + 1)])


def make_complete_binary(h: int) -> Tree:
    """Complete binary tree of height h with heap labels b1..b(2^(h+1)-1)."""
    if h < 1:
        raise InvalidParameterError("complete binary tree needs h >= 1")
    size = (1 << (h + 1)) - 1
    labels = [f"b{k}" for k in range(1, size + 1)]
    edges = []
    append = edges.append
    for k in range(1, 1 << h):
        host = labels[k - 1]
        append((host, labels[2 * k - 1]))
        append((host, labels[2 * k]))
    return Tree(labels, edges)


def level_labels(h: int, level: int) -> list[str]:
    """Heap labels at the given level of the height-h complete binary tree."""
    if not 0 <= level <= h:
        raise InvalidParameterError(f"level {level} out of range for height {h}")
    return [f"b{k}" for k in range(1 << level, 1 << (level + 1))]


def bottom_leaf_index(h: int, label: str) -> int:
    """Heap index of a level-h leaf label, rejecting anything else."""
    if isinstance(label, str) and label.startswith("b") and label[1:].isdigit():
        k = int(label[1:])
        if (1 << h) <= k < (1 << (h + 1)):
            return k
    raise NotALevelLeafError(f"{label!r} is not a level-{h} leaf of the height-{h} tree")


def delete_leaves(tree: Tree, victims) -> Tree:
    """Induced subtree on the remaining vertices after deleting the given
    leaves of `tree`. The victims must all be leaves of the original tree
    and must not be the whole vertex set."""
    victims = set(victims)
    for x in victims:
        if tree.degree(x) > 1:
            raise NotALeafError(f"{x!r} has degree {tree.degree(x)}")
    if len(victims) == tree.vertex_count:
        raise WouldBeEmptyError("deleting every vertex leaves no tree")
    keep = [v for v in tree.labels if v not in victims]
    kept_edges = [(u, v) for u, v in tree.edges if u not in victims and v not in victims]
    return Tree(keep, kept_edges)


def random_tree(n: int, seed: int) -> Tree:
    """Uniformly random labeled tree on n1..nN, decoded from a random
    Prüfer sequence drawn with :class:`SplitMix64`. Same (n, seed) always
    yields the same tree."""
    if n < 1:
        raise InvalidParameterError("random tree needs n >= 1")
    labels = [f"n{i}" for i in range(1, n + 1)]
    if n == 1:
        return Tree(labels, [])
    if n == 2:
        return Tree(labels, [("n1", "n2")])
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    heap = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(heap)
    edges = []
    for a in seq:
        leaf = heapq.heappop(heap)
        edges.append((labels[leaf], labels[a]))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(heap, a)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((labels[u], labels[v]))
    return Tree(labels, edges)


@dataclass(frozen=True)
class FamilySpec:
    """Tagged description of a generatable tree family.

    Canonical string form (also the CLI grammar): ``uniform:n=4,r=2``,
    ``comb:n=4``, ``interior:n=6``, ``alt-even:n=6``, ``alt-odd:n=3``,
    ``star:m=5``, ``binary:h=3``, ``binary:h=3,delete=b8+b11``,
    ``path:n=7``, ``random:n=12,seed=42``. Star size m is stored in `n`.
    """

    kind: str
    n: int | None = None
    r: int | None = None
    h: int | None = None
    seed: int | None = None
    deleted_leaves: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameterError(f"unknown family kind {self.kind!r}")
        required = {
            "uniform": ("n", "r"),
            "comb": ("n",),
            "interior": ("n",),
            "alt-even": ("n",),
            "alt-odd": ("n",),
            "star": ("n",),
            "binary": ("h",),
            "path": ("n",),
            "random": ("n", "seed"),
        }[self.kind]
        for name in ("n", "r", "h", "seed"):
            value = getattr(self, name)
            if name in required:
                if value is None:
                    raise InvalidParameterError(f"{self.kind} requires parameter {name}")
            elif value is not None:
                raise InvalidParameterError(f"{self.kind} does not take parameter {name}")
        if self.deleted_leaves and self.kind != "binary":
            raise InvalidParameterError(f"{self.kind} does not take deleted leaves")
        minima = {"interior": 2, "alt-even": 2, "alt-odd": 2}
        if self.n is not None and self.n < minima.get(self.kind, 1):
            raise InvalidParameterError(f"{self.kind} needs n >= {minima.get(self.kind, 1)}")
        if self.r is not None and self.r < 1:
            raise InvalidParameterError("r must be >= 1")
        if self.h is not None and self.h < 1:
            raise InvalidParameterError("h must be >= 1")
        if self.kind == "binary":
            for label in self.deleted_leaves:
                bottom_leaf_index(self.h, label)

    def spec_string(self) -> str:
        """Canonical string form; `parse_family_spec` is its inverse."""
        if self.kind == "uniform":
            body = f"n={self.n},r={self.r}"
        elif self.kind == "star":
            body = f"m={self.n}"
        elif self.kind == "binary":
            body = f"h={self.h}"
            if self.deleted_leaves:
                ordered = sorted(self.deleted_leaves, key=lambda s: int(s[1:]))
                body += ",delete=" + "+".join(ordered)
        elif self.kind == "random":
            body = f"n={self.n},seed={self.seed}"
        else:
            body = f"n={self.n}"
        return f"{self.kind}:{body}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the canonical family grammar into a validated FamilySpec."""
    kind, colon, rest = text.partition(":")
    kind = kind.strip()
    if not colon or kind not in KINDS:
        raise ParseError(f"not a family spec: {text!r}")
    params: dict[str, str] = {}
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key, value = key.strip(), value.strip()
            if not eq or not key or not value:
                raise ParseError(f"malformed parameter {item!r} in {text!r}")
            if key in params:
                raise ParseError(f"duplicate parameter {key!r} in {text!r}")
            params[key] = value
    fields: dict[str, object] = {}
    for key, value in params.items():
        if key == "delete":
            fields["deleted_leaves"] = frozenset(value.split("+"))
            continue
        if key == "m" and kind == "star":
            key = "n"
        if key not in ("n", "r", "h", "seed"):
            raise ParseError(f"unknown parameter {key!r} for {kind!r}")
        if key in fields:
            raise ParseError(f"conflicting parameter {key!r} in {text!r}")
        try:
            fields[key] = int(value)
        except ValueError:
            raise ParseError(f"parameter {key!r} must be an integer, got {value!r}") from None
    if "deleted_leaves" in fields and kind != "binary":
        raise ParseError(f"delete= is only valid for binary, not {kind!r}")
    return FamilySpec(kind=kind, **fields)


def build_tree(spec: FamilySpec) -> Tree:
    """Generate the tree described by `spec`."""
    if spec.kind == "uniform":
        return make_uniform_pendant(spec.n, spec.r)
    if spec.kind == "comb":
        return make_uniform_pendant(spec.n, 1)
    if spec.kind == "interior":
        return make_interior_pendant(spec.n)
    if spec.kind == "alt-even":
        return make_alternating(spec.n, "even")
    if spec.kind == "alt-odd":
        return make_alternating(spec.n, "odd")
    if spec.kind == "star":
        return make_star(spec.n)
    if spec.kind == "path":
        return make_path(spec.n)
    if spec.kind == "random":
        return random_tree(spec.n, spec.seed)
    tree = make_complete_binary(spec.h)
    if spec.deleted_leaves:
        tree = delete_leaves(tree, spec.deleted_leaves)
    return tree

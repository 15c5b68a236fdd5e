"""Merging sets of matches into labeled plane trees.

A match is a rooted two-vertex tree.  A match set of size ``n`` uses each
label of ``1..n+1`` (unmarked) and ``n+2..2n`` (marked) exactly once.
:func:`merge` glues the matches together, one marked label at a time,
until a single plane tree labeled by ``1..n+1`` remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .objects import PlaneTree, enumerate_trees

MAX_N = 5


class MergeError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Match:
    root: int
    leaf: int

    def __post_init__(self):
        if self.root == self.leaf:
            raise ValueError("a match needs two distinct labels")


@dataclass(frozen=True)
class MatchSet:
    n: int
    matches: frozenset[Match]

    def __post_init__(self):
        if self.n < 1 or len(self.matches) != self.n:
            raise ValueError(f"need exactly n={self.n} matches, got {len(self.matches)}")
        labels = sorted(l for m in self.matches for l in (m.root, m.leaf))
        if labels != list(range(1, 2 * self.n + 1)):
            raise ValueError("labels must be 1..2n, each used once")

    def is_marked(self, label: int) -> bool:
        return label > self.n + 1

    def kinds(self) -> tuple[int, int, int]:
        """Counts of (unmarked matches, marked root over unmarked leaf, marked leaf)."""
        plain = rooted = rest = 0
        for m in self.matches:
            if self.is_marked(m.leaf):
                rest += 1
            elif self.is_marked(m.root):
                rooted += 1
            else:
                plain += 1
        return plain, rooted, rest

    def __str__(self):
        def lab(v):
            return f"{v}*" if self.is_marked(v) else str(v)

        return " ".join(f"{lab(m.root)}-{lab(m.leaf)}" for m in sorted(self.matches))


@dataclass(frozen=True)
class LabeledPlaneTree:
    label: int
    children: tuple[LabeledPlaneTree, ...] = ()

    def shape(self) -> PlaneTree:
        return PlaneTree(tuple(c.shape() for c in self.children))

    def labels(self) -> list[int]:
        out = [self.label]
        for c in self.children:
            out.extend(c.labels())
        return out

    def __str__(self):
        inner = "".join(str(c) for c in self.children)
        return f"{self.label}({inner})" if self.children else str(self.label)


def _labels(node) -> Iterator[int]:
    yield node[0]
    for c in node[1]:
        yield from _labels(c)


def _find(node, label):
    if node[0] == label:
        return node
    for c in node[1]:
        hit = _find(c, label)
        if hit is not None:
            return hit
    return None


def _freeze(node) -> LabeledPlaneTree:
    return LabeledPlaneTree(node[0], tuple(_freeze(c) for c in node[1]))


def merge(f: MatchSet) -> LabeledPlaneTree:
    # mutable nodes: [label, children]
    forest = [[m.root, [[m.leaf, []]]] for m in f.matches]
    marked = sorted(v for m in f.matches for v in (m.root, m.leaf) if f.is_marked(v))
    for j in marked:
        clean = [t for t in forest if not any(f.is_marked(v) for v in _labels(t))]
        if not clean:
            raise MergeError(f"no unmarked tree left while merging {f}")
        tree = min(clean, key=lambda t: t[0])
        host = next((t for t in forest if _find(t, j) is not None), None)
        if host is None:
            raise MergeError(f"marked label {j} vanished while merging {f}")
        forest.remove(tree)
        if host[0] == j:
            # horizontal: identify the roots, host's subtrees go to the right
            host[0] = tree[0]
            host[1] = tree[1] + host[1]
        else:
            spot = _find(host, j)
            if spot[1]:
                raise MergeError(f"marked label {j} is an internal vertex")
            spot[0] = tree[0]
            spot[1] = tree[1]
    if len(forest) != 1:
        raise MergeError(f"{len(forest)} trees left after merging {f}")
    return _freeze(forest[0])


def enumerate_match_sets(n: int) -> Iterator[MatchSet]:
    """Every valid match set of size ``n`` exactly once; (2n)!/n! of them."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"match sets are enumerated only for 1 <= n <= {MAX_N}")

    def rec(free: list[int], acc: list[Match]):
        if not free:
            yield MatchSet(n, frozenset(acc))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rest = free[1:idx] + free[idx + 1 :]
            for m in (Match(a, b), Match(b, a)):
                acc.append(m)
                yield from rec(rest, acc)
                acc.pop()

    yield from rec(list(range(1, 2 * n + 1)), [])


def enumerate_labeled_trees(n: int) -> Iterator[LabeledPlaneTree]:
    """All plane trees with ``n`` edges labeled bijectively by 1..n+1."""

    def label(t: PlaneTree, it) -> LabeledPlaneTree:
        v = next(it)
        return LabeledPlaneTree(v, tuple(label(c, it) for c in t.children))

    for shape in enumerate_trees(n):
        for perm in permutations(range(1, n + 2)):
            yield label(shape, iter(perm))

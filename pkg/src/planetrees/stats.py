"""Statistics on plane trees, lattice paths and permutations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .objects import LatticePath, PlaneTree


@dataclass(frozen=True)
class TreeStats:
    edges: int
    leaves: int
    old_leaves: int
    young_leaves: int
    # position of the last old leaf in left-to-right preorder (root = 0)
    critical_leaf_preorder_index: Optional[int]


def tree_stats(t: PlaneTree) -> TreeStats:
    """Leaf statistics; an old leaf is a leaf that is the leftmost child of its parent."""
    old = young = 0
    critical = None
    index = 0
    edges = 0
    # explicit stack: (node, is_leftmost_child)
    stack = [(t, None)]
    while stack:
        node, leftmost = stack.pop()
        if leftmost is not None:
            edges += 1
            if not node.children:
                if leftmost:
                    old += 1
                    critical = index
                else:
                    young += 1
        kids = node.children
        for pos in range(len(kids) - 1, -1, -1):
            stack.append((kids[pos], pos == 0))
        index += 1
    return TreeStats(edges, old + young, old, young, critical)


def old_young(t: PlaneTree) -> tuple[int, int]:
    """``(old, young)`` leaf counts, the hot path of every exhaustive check."""
    old = young = 0
    stack = [t]
    while stack:
        node = stack.pop()
        kids = node.children
        if kids:
            if not kids[0].children:
                old += 1
            for c in kids[1:]:
                if c.children:
                    stack.append(c)
                else:
                    young += 1
            if kids[0].children:
                stack.append(kids[0])
    return old, young


def factor_count(p: LatticePath | str, w: str) -> int:
    """Occurrences of ``w`` as a contiguous factor, overlaps included."""
    s = p if isinstance(p, str) else p.steps
    return sum(1 for i in range(len(s) - len(w) + 1) if s.startswith(w, i))


def peaks_at_even_height(p: LatticePath | str) -> int:
    s = p if isinstance(p, str) else p.steps
    count = 0
    h = 0
    for i, ch in enumerate(s):
        h += 1 if ch == "U" else -1 if ch == "D" else 0
        if ch == "U" and i + 1 < len(s) and s[i + 1] == "D" and h % 2 == 0:
            count += 1
    return count


def drops(p: LatticePath | str) -> int:
    """Maximal runs of at least two D steps in the path with one D appended."""
    s = (p if isinstance(p, str) else p.steps) + "D"
    count = 0
    run = 0
    for ch in s + "#":
        if ch == "D":
            run += 1
        else:
            if run >= 2:
                count += 1
            run = 0
    return count


def triple_falls(p: LatticePath | str) -> int:
    s = (p if isinstance(p, str) else p.steps) + "D"
    return factor_count(s, "DDD")


@dataclass(frozen=True)
class PermStats:
    weak_excedances: int
    consec_weak_exc_pairs: int
    weak_exc_not_followed: int
    consec_deficiency_pairs: int
    last_is_deficiency: bool
    double_descents_prepended: int
    double_ascents_appended: int
    ascending_runs_appended: int
    left_to_right_minima: int


def _double_descents(w) -> int:
    return sum(1 for i in range(len(w) - 2) if w[i] > w[i + 1] > w[i + 2])


def _double_ascents(w) -> int:
    return sum(1 for i in range(len(w) - 2) if w[i] < w[i + 1] < w[i + 2])


def _ascending_runs(w) -> int:
    # a run needs at least two entries, so count ascents that start one
    return sum(
        1 for i in range(len(w) - 1) if w[i] < w[i + 1] and (i == 0 or w[i - 1] > w[i])
    )


def perm_stats(p) -> PermStats:
    w = tuple(p)
    n = len(w)
    weak = [w[i] >= i + 1 for i in range(n)]
    pairs_we = sum(1 for i in range(n - 1) if weak[i] and weak[i + 1])
    not_followed = sum(1 for i in range(n) if weak[i] and (i == n - 1 or not weak[i + 1]))
    pairs_def = sum(1 for i in range(n - 1) if not weak[i] and not weak[i + 1])
    minima = 0
    low = n + 1
    for v in w:
        if v < low:
            minima += 1
            low = v
    return PermStats(
        weak_excedances=sum(weak),
        consec_weak_exc_pairs=pairs_we,
        weak_exc_not_followed=not_followed,
        consec_deficiency_pairs=pairs_def,
        last_is_deficiency=n > 0 and w[-1] < n,
        double_descents_prepended=_double_descents((n + 1,) + w),
        double_ascents_appended=_double_ascents(w + (n + 1,)),
        ascending_runs_appended=_ascending_runs(w + (n + 1,)),
        left_to_right_minima=minima,
    )

"""Bijections between plane trees, lattice paths and pattern-avoiding permutations.

Trees with ``n >= 1`` edges map to

* Dyck paths of semilength n: :func:`pre` (right-to-left preorder walk) and
  :func:`dgr` (left-to-right preorder degree word);
* 2-Motzkin paths of length n - 1: :func:`phi` (``pre``, then UDU -> RU
  contraction, then Callan's reduction) and :func:`psi` (rightmost-branch
  recursion);
* 321- and 132-avoiding permutations of length n, by composing ``pre`` or
  ``dgr`` with the inverse of :func:`krat_uc` or :func:`krat`.

Every map comes with its inverse.  The 0-edge tree is rejected everywhere.
"""

from __future__ import annotations

import re

from .objects import (
    COLORED2,
    CONTRACTED,
    DYCK,
    LatticePath,
    Permutation,
    PlaneTree,
    contains_pattern,
)

LEAF = PlaneTree()


class EmptyTreeError(ValueError):
    def __init__(self):
        super().__init__("empty tree has no path image")


def _nonempty(t: PlaneTree) -> None:
    if not t.children:
        raise EmptyTreeError()


def _kind(p: LatticePath, kind: str) -> str:
    if p.kind != kind:
        raise ValueError(f"expected a {kind} path, got {p.kind}")
    return p.steps


# --------------------------------------------------------------------------
# Trees <-> Dyck paths
# --------------------------------------------------------------------------

def _pre_word(t: PlaneTree) -> str:
    out: list[str] = []
    # None marks the climb back up an edge; children pushed left to right
    # so the rightmost is walked first
    stack: list = []
    for c in t.children:
        stack.append(None)
        stack.append(c)
    while stack:
        node = stack.pop()
        if node is None:
            out.append("D")
            continue
        out.append("U")
        for c in node.children:
            stack.append(None)
            stack.append(c)
    return "".join(out)


def pre(t: PlaneTree) -> LatticePath:
    """Walk the edges in preorder, children right to left: U going down, D coming up."""
    _nonempty(t)
    return LatticePath(DYCK, _pre_word(t))


def _tree_from_word_mirrored(word: str) -> PlaneTree:
    stack: list[list[PlaneTree]] = [[]]
    for ch in word:
        if ch == "U":
            stack.append([])
        else:
            kids = stack.pop()
            kids.reverse()
            stack[-1].append(PlaneTree(tuple(kids)))
    kids = stack[0]
    kids.reverse()
    return PlaneTree(tuple(kids))


def pre_inv(p: LatticePath) -> PlaneTree:
    w = _kind(p, DYCK)
    if not w:
        raise ValueError("pre_inv needs a non-empty Dyck path")
    return _tree_from_word_mirrored(w)


def dgr(t: PlaneTree) -> LatticePath:
    """Left-to-right preorder; r children give U^r D, the last leaf gives nothing."""
    _nonempty(t)
    out: list[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        k = len(node.children)
        out.append("U" * k + "D")
        stack.extend(reversed(node.children))
    # the last node in preorder is a leaf and contributes its D only
    return LatticePath(DYCK, "".join(out)[:-1])


def dgr_inv(p: LatticePath) -> PlaneTree:
    w = _kind(p, DYCK)
    if not w:
        raise ValueError("dgr_inv needs a non-empty Dyck path")
    degrees = [len(run) for run in (w + "D").split("D")[:-1]]
    pos = 0

    def build() -> PlaneTree:
        nonlocal pos
        k = degrees[pos]
        pos += 1
        return PlaneTree(tuple(build() for _ in range(k)))

    tree = build()
    assert pos == len(degrees)
    return tree


# --------------------------------------------------------------------------
# The three steps of phi
# --------------------------------------------------------------------------

_PEAK_BEFORE_UP = re.compile(r"UD(?=U)")


def contract_udu(p: LatticePath) -> LatticePath:
    """Left-to-right rewrite of each UDU into RU (each peak followed by U becomes R)."""
    w = _kind(p, DYCK)
    if len(w) < 2:
        raise ValueError("contract_udu needs a Dyck path of length >= 2")
    return LatticePath(CONTRACTED, _PEAK_BEFORE_UP.sub("R", w))


def expand_udu(p: LatticePath) -> LatticePath:
    return LatticePath(DYCK, _kind(p, CONTRACTED).replace("R", "UD"))


def _callan_reduce_word(w: str) -> str:
    n = len(w)
    marked = [False] * n
    last = n - 1
    for i, ch in enumerate(w):
        if ch == "U":
            marked[i] = i < last and w[i + 1] == "D"
        elif ch == "D":
            marked[i] = i == last or w[i + 1] == "D"
    out = list(w)
    # match each U with the first later D that returns to its starting height
    open_ups: list[int] = []
    for i, ch in enumerate(w):
        if ch == "U":
            open_ups.append(i)
        elif ch == "D":
            u = open_ups.pop()
            if not marked[u] and marked[i]:
                out[u] = "B"
    return "".join(c for c, m in zip(out, marked) if not m)


def callan_reduce(p: LatticePath) -> LatticePath:
    """Mark peak U's, D's followed by D and the final D; unmarked U's whose
    matching D is marked become B; marked steps are deleted.  R steps pass
    through unchanged.
    """
    w = _kind(p, CONTRACTED)
    if not w:
        raise ValueError("callan_reduce needs a non-empty path")
    return LatticePath(COLORED2, _callan_reduce_word(w))


def _callan_expand_word(q: str) -> str:
    # Red steps are set aside; each red block goes back right after the
    # surviving step it followed.
    reds_after = [0] * (len(q) + 1)
    survivors = 0
    for ch in q:
        if ch == "R":
            reds_after[survivors] += 1
        else:
            survivors += 1

    out: list[str] = ["R"] * reds_after[0]
    seen = 0

    def survivor(step: str) -> None:
        nonlocal seen
        out.append(step)
        seen += 1
        out.extend("R" * reds_after[seen])

    # Rebuild the UDU-free skeleton: q without R reads X_1 D X_2 D ... X_p with
    # each X_i over {U, B}.  U-run i is X_i (as U steps) plus a peak U; the
    # D-run closes the peak, then every open B above the U matched by the
    # separating D, then that U (its valley D survives).
    stack: list[str] = []
    for ch in q:
        if ch == "R":
            continue
        if ch in "UB":
            stack.append(ch)
            survivor("U")
        else:
            out.append("U")
            out.append("D")
            while True:
                top = stack.pop()
                if top == "U":
                    break
                out.append("D")
            survivor("D")
    out.append("U")
    out.append("D" * (len(stack) + 1))
    return "".join(out)


def callan_expand(p: LatticePath) -> LatticePath:
    return LatticePath(CONTRACTED, _callan_expand_word(_kind(p, COLORED2)))


def phi(t: PlaneTree) -> LatticePath:
    _nonempty(t)
    contracted = _PEAK_BEFORE_UP.sub("R", _pre_word(t))
    return LatticePath(COLORED2, _callan_reduce_word(contracted))


def phi_inv(p: LatticePath) -> PlaneTree:
    dyck = _callan_expand_word(_kind(p, COLORED2)).replace("R", "UD")
    return _tree_from_word_mirrored(dyck)


# --------------------------------------------------------------------------
# psi
# --------------------------------------------------------------------------

def _psi_word(t: PlaneTree) -> str:
    parts: list[str] = []
    node = t
    while True:
        kids = node.children
        rest = kids[:-1]
        child = kids[-1]
        if child.children:
            # e_i with i < k
            parts.append("U" + _psi_word(PlaneTree(rest)) + "D" if rest else "B")
            node = child
        else:
            if rest:
                parts.append("R" + _psi_word(PlaneTree(rest)))
            return "".join(parts)


def psi(t: PlaneTree) -> LatticePath:
    """Recursive encoding along the rightmost branch."""
    _nonempty(t)
    return LatticePath(COLORED2, _psi_word(t))


def _psi_inv_word(w: str) -> PlaneTree:
    # left part of each branch vertex; None for a bare vertex
    lefts: list[tuple[PlaneTree, ...]] = []
    i = 0
    tail: tuple[PlaneTree, ...] = ()
    while i < len(w):
        ch = w[i]
        if ch == "B":
            lefts.append(())
            i += 1
        elif ch == "U":
            depth = 0
            j = i
            while True:
                depth += 1 if w[j] == "U" else -1 if w[j] == "D" else 0
                if depth == 0:
                    break
                j += 1
            lefts.append(_psi_inv_word(w[i + 1 : j]).children)
            i = j + 1
        elif ch == "R":
            tail = _psi_inv_word(w[i + 1 :]).children
            break
        else:
            raise ValueError(f"unexpected {ch!r} at {i}")
    node = PlaneTree(tail + (LEAF,))
    for left in reversed(lefts):
        node = PlaneTree(left + (node,))
    return node


def psi_inv(p: LatticePath) -> PlaneTree:
    return _psi_inv_word(_kind(p, COLORED2))


def psi_by_labels(t: PlaneTree) -> LatticePath:
    """psi via vertex labels read children-right-to-left, subtrees left-to-right.

    Internal vertices are labelled B (leftmost child) or U, young leaves R,
    old leaves D except the last one in preorder; the root is unlabelled.
    """
    _nonempty(t)
    # identical subtrees may share objects, so labels live on a mirror
    # structure of [label, kids] cells built in preorder
    cells: list[list] = []

    def build(node: PlaneTree, leftmost: bool) -> list:
        if node.children:
            lab = "B" if leftmost else "U"
        else:
            lab = "D" if leftmost else "R"
        cell = [lab, None]
        cells.append(cell)
        cell[1] = [build(c, pos == 0) for pos, c in enumerate(node.children)]
        return cell

    root = ["", [build(c, pos == 0) for pos, c in enumerate(t.children)]]
    for cell in reversed(cells):
        if cell[0] == "D":
            cell[0] = ""
            break

    out: list[str] = []

    def read(cell) -> None:
        kids = cell[1]
        for kid in reversed(kids):
            out.append(kid[0])
        for kid in kids:
            read(kid)

    read(root)
    return LatticePath(COLORED2, "".join(out))


# --------------------------------------------------------------------------
# 2-Motzkin <-> Dyck
# --------------------------------------------------------------------------

_INFLATE = {"U": "UU", "D": "DD", "R": "UD", "B": "DU"}
_DEFLATE = {v: k for k, v in _INFLATE.items()}


def inflate(p: LatticePath) -> LatticePath:
    w = _kind(p, COLORED2)
    return LatticePath(DYCK, "U" + "".join(_INFLATE[c] for c in w) + "D")


def deflate(p: LatticePath) -> LatticePath:
    w = _kind(p, DYCK)
    if not w:
        raise ValueError("deflate needs semilength >= 1")
    body = w[1:-1]
    return LatticePath(COLORED2, "".join(_DEFLATE[body[i : i + 2]] for i in range(0, len(body), 2)))


# --------------------------------------------------------------------------
# Krattenthaler-type maps
# --------------------------------------------------------------------------

def _runs(w: str) -> list[tuple[int, int]]:
    """Dyck word as [(ups, downs), ...] for U^a1 D^b1 U^a2 D^b2 ..."""
    out = []
    for m in re.finditer(r"(U+)(D+)", w):
        out.append((len(m.group(1)), len(m.group(2))))
    return out


def _check_avoids(p, pattern: str) -> tuple[int, ...]:
    w = tuple(p)
    if not w:
        raise ValueError("permutation must be non-empty")
    if contains_pattern(w, pattern):
        raise ValueError(f"{w} contains {pattern}")
    return w


def krat_uc(p) -> LatticePath:
    """321-avoider to Dyck path through its weak excedances."""
    w = _check_avoids(p, "321")
    n = len(w)
    pos = [i + 1 for i in range(n) if w[i] >= i + 1]
    out = ["U" * w[pos[0] - 1]]
    for a, b in zip(pos, pos[1:]):
        out.append("D" * (b - a) + "U" * (w[b - 1] - w[a - 1]))
    out.append("D" * (n + 1 - pos[-1]))
    return LatticePath(DYCK, "".join(out))


def krat_uc_inv(p: LatticePath) -> Permutation:
    runs = _runs(_kind(p, DYCK))
    n = sum(a for a, _ in runs)
    word = [0] * n
    i, v = 1, 0
    for a, b in runs:
        v += a
        word[i - 1] = v
        i += b
    assert i == n + 1
    rest = iter(sorted(set(range(1, n + 1)) - set(word)))
    word = [x if x else next(rest) for x in word]
    perm = Permutation(tuple(word))
    assert krat_uc(perm).steps == p.steps, "fill did not reproduce the path"
    return perm


def krat(p) -> LatticePath:
    """132-avoider to Dyck path through its left-to-right minima."""
    w = _check_avoids(p, "132")
    n = len(w)
    pos = []
    low = n + 1
    for i, v in enumerate(w):
        if v < low:
            pos.append(i + 1)
            low = v
    out = ["U" * (n + 1 - w[pos[0] - 1])]
    for a, b in zip(pos, pos[1:]):
        out.append("D" * (b - a) + "U" * (w[a - 1] - w[b - 1]))
    out.append("D" * (n + 1 - pos[-1]))
    return LatticePath(DYCK, "".join(out))


def krat_inv(p: LatticePath) -> Permutation:
    runs = _runs(_kind(p, DYCK))
    n = sum(a for a, _ in runs)
    word = [0] * n
    i, v = 1, n + 1
    for a, b in runs:
        v -= a
        word[i - 1] = v
        i += b
    assert i == n + 1
    unused = sorted(set(range(1, n + 1)) - set(word))
    low = n + 1
    for k in range(n):
        if word[k]:
            low = word[k]
            continue
        # smallest unused value above the current minimum
        for idx, u in enumerate(unused):
            if u > low:
                word[k] = unused.pop(idx)
                break
        else:
            raise ValueError(f"{p.steps} admits no 132-avoiding filling")
    perm = Permutation(tuple(word))
    assert krat(perm).steps == p.steps, "fill did not reproduce the path"
    return perm


def alpha(t: PlaneTree) -> Permutation:
    return krat_uc_inv(pre(t))


def alpha_inv(p) -> PlaneTree:
    return pre_inv(krat_uc(p))


def beta(t: PlaneTree) -> Permutation:
    return krat_inv(pre(t))


def beta_inv(p) -> PlaneTree:
    return pre_inv(krat(p))


def gamma(t: PlaneTree) -> Permutation:
    return krat_uc_inv(dgr(t))


def gamma_inv(p) -> PlaneTree:
    return dgr_inv(krat_uc(p))


def delta(t: PlaneTree) -> Permutation:
    return krat_inv(dgr(t))


def delta_inv(p) -> PlaneTree:
    return dgr_inv(krat(p))

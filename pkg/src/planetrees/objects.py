"""Plane trees, lattice paths and permutations: types, text encodings, enumerators.

Encodings
---------
* A plane tree is a balanced parenthesis word: a node is ``(`` followed by
  the encodings of its children, left to right, followed by ``)``.  The
  single-node tree is ``()``.
* A lattice path is the bare word of its step letters (the empty path is
  the empty string).
* A permutation is its one-line word, comma separated: ``3,4,1,2``.

All enumerators yield objects in lexicographic order of the encoding
(permutations: numeric lexicographic order of the word).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Iterator


class ParseError(ValueError):
    """Malformed text encoding; ``index`` locates the problem."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} at index {index}")
        self.index = index


class PathError(ParseError):
    pass


class InvalidLetterError(PathError):
    pass


class NegativeHeightError(PathError):
    pass


class NonzeroEndError(PathError):
    pass


class ForbiddenFactorError(PathError):
    pass


# --------------------------------------------------------------------------
# Plane trees
# --------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PlaneTree:
    children: tuple[PlaneTree, ...] = ()

    @property
    def edges(self) -> int:
        return sum(c.edges + 1 for c in self.children)

    @property
    def nodes(self) -> int:
        return self.edges + 1

    def mirror(self) -> PlaneTree:
        return PlaneTree(tuple(c.mirror() for c in reversed(self.children)))

    def __str__(self) -> str:
        return render_tree(self)


LEAF = PlaneTree()


def parse_tree(text: str) -> PlaneTree:
    stack: list[list[PlaneTree]] = []
    result = None
    for idx, ch in enumerate(text):
        if result is not None:
            raise ParseError("trailing characters after tree", idx)
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ParseError("unbalanced ')'", idx)
            node = PlaneTree(tuple(stack.pop()))
            if stack:
                stack[-1].append(node)
            else:
                result = node
        else:
            raise ParseError(f"unexpected character {ch!r}", idx)
    if result is None:
        raise ParseError("unterminated tree" if stack else "empty input", len(text))
    return result


def render_tree(t: PlaneTree) -> str:
    out: list[str] = []

    def walk(node: PlaneTree) -> None:
        out.append("(")
        for c in node.children:
            walk(c)
        out.append(")")

    walk(t)
    return "".join(out)


# --------------------------------------------------------------------------
# Lattice paths
# --------------------------------------------------------------------------

DYCK = "dyck"
MOTZKIN = "motzkin"
CONTRACTED = "contracted"
COLORED2 = "colored2"
COLORED3 = "colored3"

ALPHABETS = {
    DYCK: "DU",
    MOTZKIN: "DHU",
    CONTRACTED: "DRU",
    COLORED2: "BDRU",
    COLORED3: "BDGRU",
}

# no U D R* U (UDU once red steps are skipped), no R D, no trailing R
_CONTRACTED_PEAK_THEN_UP = re.compile(r"UDR*U")


@dataclass(frozen=True, slots=True)
class LatticePath:
    kind: str
    steps: str

    def __post_init__(self) -> None:
        check_path(self.steps, self.kind)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def count(self, letter: str) -> int:
        return self.steps.count(letter)

    @property
    def semilength(self) -> int:
        return self.steps.count("U")


def check_path(steps: str, kind: str) -> None:
    """Raise a :class:`PathError` subclass if ``steps`` is not a valid path of ``kind``."""
    try:
        alphabet = ALPHABETS[kind]
    except KeyError:
        raise ValueError(f"unknown path kind {kind!r}") from None
    height = 0
    for idx, ch in enumerate(steps):
        if ch not in alphabet:
            raise InvalidLetterError(f"letter {ch!r} not allowed in {kind} path", idx)
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
            if height < 0:
                # reported as the length of the offending prefix
                raise NegativeHeightError("prefix height negative", idx + 1)
    if height != 0:
        raise NonzeroEndError(f"path ends at height {height}", len(steps))
    if kind == CONTRACTED:
        m = _CONTRACTED_PEAK_THEN_UP.search(steps)
        if m:
            raise ForbiddenFactorError("peak followed by an up step (UDU)", m.start())
        pos = steps.find("RD")
        if pos >= 0:
            raise ForbiddenFactorError("factor RD", pos)
        if steps.endswith("R"):
            raise ForbiddenFactorError("trailing R", len(steps) - 1)


def parse_path(text: str, kind: str) -> LatticePath:
    return LatticePath(kind, text)


def render_path(p: LatticePath) -> str:
    return p.steps


# --------------------------------------------------------------------------
# Permutations
# --------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.word)}: {self.word}")

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __str__(self) -> str:
        return render_perm(self)


def parse_perm(text: str) -> Permutation:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body.strip():
        return Permutation(())
    word = []
    for idx, part in enumerate(body.split(",")):
        try:
            word.append(int(part))
        except ValueError:
            raise ParseError(f"bad entry {part.strip()!r}", idx) from None
    return Permutation(tuple(word))


def render_perm(p: Permutation) -> str:
    return ",".join(map(str, p.word))


def contains_pattern(p, pattern: str | int) -> bool:
    """True iff ``p`` contains ``pattern`` (``"321"`` or ``"132"``) as a subsequence."""
    w = tuple(p)
    pattern = str(pattern)
    n = len(w)
    if n < 3:
        return False
    if pattern == "321":
        # middle element with something larger before and smaller after
        prefix_max = w[0]
        suffix_min = [0] * n
        suffix_min[-1] = w[-1]
        for i in range(n - 2, -1, -1):
            suffix_min[i] = min(w[i], suffix_min[i + 1])
        for j in range(1, n - 1):
            if prefix_max > w[j] > suffix_min[j + 1]:
                return True
            prefix_max = max(prefix_max, w[j])
        return False
    if pattern == "132":
        prefix_min = w[0]
        for j in range(1, n - 1):
            if prefix_min < w[j]:
                for k in range(j + 1, n):
                    if prefix_min < w[k] < w[j]:
                        return True
            prefix_min = min(prefix_min, w[j])
        return False
    raise ValueError(f"unsupported pattern {pattern!r}")


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------

def _balanced_words(n: int) -> Iterator[str]:
    """Balanced words with n pairs, in lexicographic order ('(' < ')')."""
    buf: list[str] = []

    def rec(opened: int, closed: int):
        if closed == n:
            yield "".join(buf)
            return
        if opened < n:
            buf.append("(")
            yield from rec(opened + 1, closed)
            buf.pop()
        if closed < opened:
            buf.append(")")
            yield from rec(opened, closed + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_trees(n: int) -> Iterator[PlaneTree]:
    """Trees with ``n`` edges in lexicographic order of their encodings.

    Walks the same backtracking as :func:`_balanced_words` but assembles the
    nodes as each ``)`` is placed, so no parsing is needed.
    """
    # stack[d] holds the finished children of the open node at depth d
    stack: list[list[PlaneTree]] = [[]]

    def rec(opened: int, closed: int):
        if closed == n:
            yield PlaneTree(tuple(stack[0]))
            return
        if opened < n:
            stack.append([])
            yield from rec(opened + 1, closed)
            stack.pop()
        if closed < opened:
            kids = stack.pop()
            parent = stack[-1]
            parent.append(PlaneTree(tuple(kids)))
            yield from rec(opened, closed + 1)
            parent.pop()
            stack.append(kids)

    yield from rec(0, 0)


def _paths(length: int, letters: str) -> Iterator[str]:
    """Non-negative paths ending at 0 over sorted ``letters``."""
    buf: list[str] = []

    def rec(pos: int, height: int):
        if pos == length:
            if height == 0:
                yield "".join(buf)
            return
        remaining = length - pos
        for c in letters:
            if c == "U":
                if height + 1 > remaining - 1:
                    continue
                h = height + 1
            elif c == "D":
                if height == 0:
                    continue
                h = height - 1
            else:
                if height > remaining - 1:
                    continue
                h = height
            buf.append(c)
            yield from rec(pos + 1, h)
            buf.pop()

    yield from rec(0, 0)


def _avoiders(n: int, pattern: str) -> Iterator[Permutation]:
    word: list[int] = []
    used = [False] * (n + 2)

    def completes(v: int) -> bool:
        k = len(word)
        for j in range(1, k):
            b = word[j]
            for i in range(j):
                a = word[i]
                if pattern == "321" and a > b > v:
                    return True
                if pattern == "132" and a < v < b:
                    return True
        return False

    def rec():
        if len(word) == n:
            yield Permutation(tuple(word))
            return
        for v in range(1, n + 1):
            if used[v] or completes(v):
                continue
            used[v] = True
            word.append(v)
            yield from rec()
            word.pop()
            used[v] = False

    yield from rec()


def enumerate_perms(n: int) -> Iterator[Permutation]:
    for w in _permutations(range(1, n + 1)):
        yield Permutation(w)


KINDS = ("tree", "dyck", "motzkin", "colored2", "colored3", "av321", "av132")


def enumerate_objects(kind: str, n: int):
    """Every object of ``kind`` and size ``n`` exactly once, in canonical order.

    Sizes: trees by edges, Dyck paths by semilength, colored/plain Motzkin
    paths by length, permutations by length.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if kind == "tree":
        return enumerate_trees(n)
    if kind == "dyck":
        return (LatticePath(DYCK, w) for w in _paths(2 * n, ALPHABETS[DYCK]))
    if kind in (MOTZKIN, COLORED2, COLORED3):
        return (LatticePath(kind, w) for w in _paths(n, ALPHABETS[kind]))
    if kind == "av321":
        return _avoiders(n, "321")
    if kind == "av132":
        return _avoiders(n, "132")
    raise ValueError(f"unknown object kind {kind!r}")

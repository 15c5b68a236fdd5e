"""Coker's two Narayana/Catalan identities and their refinements by old/young leaves.

Each identity is available as a pair of exact closed-form sides, and the
refined ones also as weighted sums over enumerated trees and colored
Motzkin paths so the two routes can be compared.

The refined left-hand sides sum ``(1/n) C(n,i) C(n-i,j) C(n-i-j,i-1)``
(the number of trees with i old and j young leaves) against a monomial.
``variant="printed"`` swaps the middle factor for ``C(n-1,j)``; that form
is not integral in general and is kept only for reporting the mismatch.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .counting import binom, catalan, narayana
from .objects import COLORED2, COLORED3, PlaneTree, enumerate_objects, enumerate_trees
from .poly import ONE, X, Y, Z, MultiPoly, ZERO

TREE_CAP = 12
PATH_CAP = 12

CORRECTED = "corrected"
PRINTED = "printed"


class CapExceeded(ValueError):
    pass


def coker1_sides(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = sum(narayana(n, k) * 4 ** (n - k) for k in range(1, n + 1))
    rhs = sum(
        catalan(k) * binom(n - 1, 2 * k) * 4**k * 5 ** (n - 2 * k - 1)
        for k in range((n - 1) // 2 + 1)
    )
    return lhs, rhs


def coker2_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    if n < 1:
        raise ValueError("n must be >= 1")
    one_x = ONE + X
    lhs = ZERO
    for k in range(1, n + 1):
        lhs = lhs + narayana(n, k) * X ** (2 * k) * one_x ** (2 * n - 2 * k)
    rhs = ZERO
    for k in range(n):
        rhs = rhs + catalan(k + 1) * binom(n - 1, k) * X**k * one_x**k
    return lhs, X**2 * rhs


def _refined_coeff(n: int, i: int, j: int, variant: str):
    if variant == CORRECTED:
        num = binom(n, i) * binom(n - i, j) * binom(n - i - j, i - 1)
    elif variant == PRINTED:
        num = binom(n, i) * binom(n - 1, j) * binom(n - i - j, i - 1)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    c = Fraction(num, n)
    return c.numerator if c.denominator == 1 else c


def _refined_terms(n: int, variant: str):
    for i in range(1, n + 1):
        for j in range(0, n - 2 * i + 2):
            c = _refined_coeff(n, i, j, variant)
            if c:
                yield i, j, c


def cok1ref_sides(n: int, variant: str = CORRECTED) -> tuple[MultiPoly, MultiPoly]:
    """Sides of the (old, young) refinement of the first identity, in x and y."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = MultiPoly(
        {(0, 0, i - 1, j, 0): c for i, j, c in _refined_terms(n, variant)}
    )
    one_y = ONE + Y
    rhs = ZERO
    for k in range((n - 1) // 2 + 1):
        rhs = rhs + catalan(k) * binom(n - 1, 2 * k) * X**k * one_y ** (n - 2 * k - 1)
    return lhs, rhs


def cok2ref_sides(n: int, variant: str = CORRECTED) -> tuple[MultiPoly, MultiPoly]:
    """Sides of the refinement of the second identity, in x, y and z."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = MultiPoly(
        {
            (0, 0, 2 * (i - 1), j, n - 2 * i - j + 1): c
            for i, j, c in _refined_terms(n, variant)
        }
    )
    green = Y + Z - 2 * X
    rhs = ZERO
    for k in range(n):
        rhs = rhs + catalan(k + 1) * binom(n - 1, k) * X**k * green ** (n - 1 - k)
    return lhs, rhs


def cok1_from_refined(n: int) -> tuple[int, int]:
    """Both sides of the refined first identity at x = y = 4.

    By Narayana symmetry these equal the two sides of the first identity.
    """
    lhs, rhs = cok1ref_sides(n)
    return lhs.evaluate(x=4, y=4), rhs.evaluate(x=4, y=4)


def cok2_from_refined(n: int) -> tuple[MultiPoly, MultiPoly]:
    """Refined second identity under x -> x(1+x), y -> x^2, z -> (1+x)^2.

    Both sides come out as the second identity's sides divided by x^2; the
    factor is put back so the result compares directly with
    :func:`coker2_sides`.
    """
    lhs, rhs = cok2ref_sides(n)
    sub = dict(x=X * (ONE + X), y=X**2, z=(ONE + X) ** 2)
    return X**2 * lhs.subs(**sub), X**2 * rhs.subs(**sub)


# --------------------------------------------------------------------------
# Weighted enumeration
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightScheme:
    """Vertex weights on plane trees.

    ``A``: non-critical old leaves x, young leaves y, everything else 1.
    ``B``: non-critical old leaves and their parents x, young leaves y,
    the critical leaf and its parent 1, every other vertex z.

    The critical leaf is the last old leaf in left-to-right preorder.
    """

    name: str

    def __post_init__(self):
        if self.name not in ("A", "B"):
            raise ValueError(f"unknown weight scheme {self.name!r}")

    def exponents(self, t: PlaneTree) -> tuple[int, int, int]:
        """``(x, y, z)`` exponents of the weight of ``t``."""
        # preorder list of (parent index, is_leaf, is_leftmost)
        verts: list[tuple[int, bool, bool]] = []
        stack = [(t, -1, False)]
        while stack:
            node, parent, leftmost = stack.pop()
            me = len(verts)
            verts.append((parent, not node.children, leftmost))
            kids = node.children
            for pos in range(len(kids) - 1, -1, -1):
                stack.append((kids[pos], me, pos == 0))
        old = [v for v, (p, leaf, lm) in enumerate(verts) if p >= 0 and leaf and lm]
        young = sum(1 for p, leaf, lm in verts if p >= 0 and leaf and not lm)
        if not old:
            # the single-vertex tree carries weight 1
            return (0, 0, 0)
        critical = old[-1]
        if self.name == "A":
            return (len(old) - 1, young, 0)
        role = [None] * len(verts)
        role[critical] = "1"
        role[verts[critical][0]] = "1"
        for leaf in old[:-1]:
            parent = verts[leaf][0]
            assert role[parent] is None, "two old leaves share a parent"
            role[leaf] = role[parent] = "x"
        for v, (p, leaf, lm) in enumerate(verts):
            if role[v] is None:
                role[v] = "y" if (p >= 0 and leaf and not lm) else "z"
        c = Counter(role)
        return (c["x"], c["y"], c["z"])

    def weight(self, t: PlaneTree) -> MultiPoly:
        a, b, c = self.exponents(t)
        return MultiPoly.monomial(1, x=a, y=b, z=c)


SCHEME_A = WeightScheme("A")
SCHEME_B = WeightScheme("B")


def _histogram_to_poly(hist: Counter) -> MultiPoly:
    return MultiPoly({(0, 0) + exp: c for exp, c in hist.items()})


def weighted_tree_sum(n: int, scheme: WeightScheme, cap: int = TREE_CAP) -> MultiPoly:
    """Sum of the scheme's weights over all trees with ``n`` edges."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"refusing to enumerate trees with {n} > {cap} edges")
    return _histogram_to_poly(Counter(scheme.exponents(t) for t in enumerate_trees(n)))


def weighted_path_sum(length: int, colors: int, weights: dict, cap: int = PATH_CAP) -> MultiPoly:
    """Sum over all ``colors``-colored Motzkin paths of the product of step weights."""
    kind = {2: COLORED2, 3: COLORED3}.get(colors)
    if kind is None:
        raise ValueError("colors must be 2 or 3")
    if length < 0:
        raise ValueError("length must be >= 0")
    if length > cap:
        raise CapExceeded(f"refusing to enumerate paths of length {length} > {cap}")
    letters = "BDRU" if colors == 2 else "BDGRU"
    missing = set(letters) - set(weights)
    if missing:
        raise ValueError(f"no weight for {sorted(missing)}")
    hist = Counter(
        tuple(p.steps.count(c) for c in letters) for p in enumerate_objects(kind, length)
    )
    total = ZERO
    for counts, mult in hist.items():
        term = MultiPoly.const(mult)
        for c, k in zip(letters, counts):
            if k:
                term = term * MultiPoly._coerce(weights[c]) ** k
        total = total + term
    return total


def weights_scheme_a() -> dict:
    return {"U": X, "D": ONE, "R": Y, "B": ONE}


def weights_two_colored() -> dict:
    return {"U": X, "D": X, "R": Y, "B": Z}


def weights_three_colored() -> dict:
    return {"U": X, "D": X, "R": X, "B": X, "G": Y + Z - 2 * X}

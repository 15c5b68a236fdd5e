"""Exact counts of plane trees by old and young leaves, and the generating function.

``G(t, s, z) = sum over plane trees of t^old * s^young * z^edges`` satisfies

    G = 1 + z (G - 1 + t) / (1 - z (G - 1 + s))

which :func:`gf_series` iterates in the ring of truncated power series, and
has the closed form evaluated by :func:`gf_closed_eval`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .poly import ONE, S, T, ZERO


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"{num}/{den} is not an integer"
    return q


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan(n) needs n >= 0")
    return _exact_div(math.comb(2 * n, n), n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 0:
        raise ValueError("motzkin(n) needs n >= 0")
    return sum(binom(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def narayana(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"narayana(n, k) needs 1 <= k <= n, got n={n}, k={k}")
    return _exact_div(binom(n, k) * binom(n, k - 1), n)


def count_old_young(n: int, i: int, j: int) -> int:
    """Plane trees with ``n`` edges, ``i`` old leaves and ``j`` young leaves."""
    if n < 1:
        raise ValueError("count_old_young needs n >= 1")
    return _exact_div(binom(n, i) * binom(n - i, j) * binom(n - i - j, i - 1), n)


def count_old(n: int, k: int) -> int:
    """Plane trees with ``n`` edges and ``k`` old leaves."""
    if n < 1 or k < 1:
        raise ValueError("count_old needs n >= 1 and k >= 1")
    e = n - 2 * k + 1
    if e < 0:
        return 0
    return _exact_div(2**e * binom(n - 1, 2 * k - 2) * binom(2 * k - 2, k - 1), k)


def count_young(n: int, k: int) -> int:
    """Plane trees with ``n`` edges and ``k`` young leaves."""
    if n < 1 or k < 0:
        raise ValueError("count_young needs n >= 1 and k >= 0")
    if k > n - 1:
        return 0
    return binom(n - 1, k) * motzkin(n - k - 1)


def joint_distribution(n: int) -> dict[tuple[int, int], int]:
    """Nonzero ``(old, young) -> count`` from the closed form."""
    out = {}
    for i in range(n + 1):
        for j in range(n + 1):
            c = count_old_young(n, i, j)
            if c:
                out[(i, j)] = c
    return out


# --------------------------------------------------------------------------
# Truncated power series in z
# --------------------------------------------------------------------------

def _series_mul(a, b, order, zero):
    out = [zero] * (order + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _geometric(c, order, zero, one):
    """1 / (1 - c) for a series c with zero constant term."""
    inv = [zero] * (order + 1)
    inv[0] = one
    for m in range(1, order + 1):
        acc = zero
        for k in range(1, m + 1):
            if c[k]:
                acc = acc + c[k] * inv[m - k]
        inv[m] = acc
    return inv


def gf_series(N: int, t=None, s=None) -> list:
    """Coefficients ``[z^0], ..., [z^N]`` of G(t, s, z).

    With ``t`` and ``s`` left as ``None`` the coefficients are
    :class:`MultiPoly` values in t and s; passing numbers (ints or
    Fractions) evaluates the same iteration in that ring.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if t is None and s is None:
        zero, one, tv, sv = ZERO, ONE, T, S
    else:
        zero, one = 0, 1
        tv = Fraction(1) if t is None else t
        sv = Fraction(1) if s is None else s

    def step(g):
        # z (G - 1 + t) / (1 - z (G - 1 + s)), truncated at z^N
        a = [g[0] - one + tv] + list(g[1:])
        b = [g[0] - one + sv] + list(g[1:])
        za = [zero] + a[:N]
        zb = [zero] + b[:N]
        q = _series_mul(za, _geometric(zb, N, zero, one), N, zero)
        q[0] = q[0] + one
        return q

    g = [one] + [zero] * N
    for _ in range(N + 1):
        nxt = step(g)
        if nxt == g:
            break
        g = nxt
    else:
        assert step(g) == g, "series iteration did not stabilise"
    return g


def gf_series_eval(coeffs, z) -> float:
    total = 0
    for c in reversed(coeffs):
        total = total * z + c
    return total


def gf_closed_eval(t: float, s: float, z: float) -> float:
    """Closed form of G(t, s, z), evaluated in floating point."""
    if z == 0:
        return 1.0
    radicand = 1 - 2 * (1 + s) * z + (1 - 4 * t + 2 * s + s * s) * z * z
    if radicand < 0:
        raise ValueError(f"negative radicand {radicand} at t={t}, s={s}, z={z}")
    return (1 + z - s * z - math.sqrt(radicand)) / (2 * z)

"""Batch verification suites behind ``planetrees verify``.

Every suite walks n = 1..n_max and appends one PASS / FAIL / INFO line per
case to a :class:`RunReport`.  Output is deterministic; wall time is kept
on the report but never rendered into it.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field

from . import bijections as bj
from .counting import (
    catalan,
    count_old,
    count_old_young,
    count_young,
    gf_closed_eval,
    gf_series,
    gf_series_eval,
    joint_distribution,
)
from .identities import (
    CORRECTED,
    PRINTED,
    SCHEME_A,
    SCHEME_B,
    cok1_from_refined,
    cok1ref_sides,
    cok2_from_refined,
    cok2ref_sides,
    coker1_sides,
    coker2_sides,
    weighted_path_sum,
    weighted_tree_sum,
    weights_scheme_a,
    weights_three_colored,
    weights_two_colored,
)
from .matches import enumerate_labeled_trees, enumerate_match_sets, merge
from .objects import COLORED2, contains_pattern, enumerate_objects, enumerate_trees
from .stats import factor_count, old_young, peaks_at_even_height, perm_stats

PASS, FAIL, INFO = "PASS", "FAIL", "INFO"

# largest n_max each suite accepts without --no-cap
CAPS = {
    "roundtrip": 12,
    "stats": 12,
    "equidist": 12,
    "gf": 12,
    "cok1": 60,
    "cok2": 60,
    "cok1ref": 40,
    "cok2ref": 40,
    "matches": 5,
}
SUITES = tuple(CAPS)

# oracle sizes inside the closed-form suites
TREE_ORACLE_MAX = 10
THREE_COLOR_ORACLE_MAX = 9
COK1_SPECIALISE_MAX = 15
COK2_SPECIALISE_MAX = 12
GF_DEGREE = 30
GF_POINTS = [(t, s, z) for t, s in ((1, 1), (2, 1), (1, 2), (2, 3)) for z in (0.02, 0.05, 0.1)]
GF_TOL = 1e-9


@dataclass
class Case:
    n: int
    status: str
    detail: str


@dataclass
class RunReport:
    suite: str
    cases: list[Case] = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, n: int, ok: bool, detail: str, info: bool = False) -> None:
        status = PASS if ok else (INFO if info else FAIL)
        self.cases.append(Case(n, status, detail))

    def counts(self) -> dict[str, int]:
        c = Counter(case.status for case in self.cases)
        return {k: c.get(k, 0) for k in (PASS, FAIL, INFO)}

    @property
    def ok(self) -> bool:
        return self.counts()[FAIL] == 0

    def render(self) -> str:
        lines = [f"{self.suite} n={c.n} {c.status} {c.detail}" for c in self.cases]
        k = self.counts()
        lines.append(f"{self.suite}: {k[PASS]} PASS, {k[FAIL]} FAIL, {k[INFO]} INFO")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# Suites
# --------------------------------------------------------------------------

def _roundtrip(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        problems = []
        phis, psis = set(), set()
        count = 0
        for t in enumerate_trees(n):
            count += 1
            a, b = bj.phi(t), bj.psi(t)
            phis.add(a.steps)
            psis.add(b.steps)
            if len(a) != n - 1 or len(b) != n - 1:
                problems.append(f"length {t}")
            if bj.phi_inv(a) != t:
                problems.append(f"phi {t}")
            if bj.psi_inv(b) != t:
                problems.append(f"psi {t}")
            if bj.psi_by_labels(t) != b:
                problems.append(f"labels {t}")
            d = bj.pre(t)
            if bj.pre_inv(d) != t or bj.dgr_inv(bj.dgr(t)) != t:
                problems.append(f"dyck {t}")
            c = bj.contract_udu(d)
            if bj.expand_udu(c) != d or bj.callan_expand(bj.callan_reduce(c)) != c:
                problems.append(f"contract/callan {t}")
            if bj.deflate(bj.inflate(a)) != a:
                problems.append(f"inflate {t}")
            if problems:
                break
        for q in enumerate_objects(COLORED2, n - 1):
            if bj.callan_reduce(bj.callan_expand(q)) != q or bj.phi(bj.phi_inv(q)) != q:
                problems.append(f"2-motzkin {q.steps}")
                break
        cn = catalan(n)
        ok = not problems and count == len(phis) == len(psis) == cn
        detail = f"trees={count} phi_images={len(phis)} psi_images={len(psis)} C_n={cn}"
        rep.add(n, ok, detail + ("" if ok else f" first_problem={problems[:1]}"))


def _stats(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        hist = Counter()
        phi_psi_ok = alpha_ok = beta_ok = gamma_ok = delta_ok = udu = 0
        for t in enumerate_trees(n):
            o, y = old_young(t)
            hist[(o, y)] += 1
            a, b = bj.phi(t).steps, bj.psi(t).steps
            if o == 1 + a.count("U") == 1 + b.count("U") and y == a.count("R") == b.count("R"):
                phi_psi_ok += 1
            if factor_count(bj.pre(t), "UDU") == y:
                udu += 1
            pa, pb, pg, pd = bj.alpha(t), bj.beta(t), bj.gamma(t), bj.delta(t)
            sa, sb, sg, sd = perm_stats(pa), perm_stats(pb), perm_stats(pg), perm_stats(pd)
            if not contains_pattern(pa, "321") and (sa.consec_weak_exc_pairs, sa.weak_exc_not_followed) == (y, o):
                alpha_ok += 1
            if not contains_pattern(pb, "132") and (sb.double_descents_prepended, sb.ascending_runs_appended) == (y, o):
                beta_ok += 1
            young_g = sg.consec_deficiency_pairs + int(sg.last_is_deficiency)
            if not contains_pattern(pg, "321") and (young_g, sg.weak_exc_not_followed) == (y, o):
                gamma_ok += 1
            if not contains_pattern(pd, "132") and (sd.double_ascents_appended, sd.ascending_runs_appended) == (y, o):
                delta_ok += 1
        cn = catalan(n)
        joint_ok = dict(hist) == joint_distribution(n)
        marg_ok = all(
            sum(v for (i, _), v in hist.items() if i == k) == count_old(n, k) for k in range(1, n + 1)
        ) and all(
            sum(v for (_, j), v in hist.items() if j == k) == count_young(n, k) for k in range(0, n)
        )
        ok = joint_ok and marg_ok and phi_psi_ok == alpha_ok == beta_ok == gamma_ok == delta_ok == udu == cn
        rep.add(
            n,
            ok,
            f"joint={'ok' if joint_ok else 'BAD'} marginals={'ok' if marg_ok else 'BAD'} "
            f"phi_psi={phi_psi_ok}/{cn} udu={udu}/{cn} alpha={alpha_ok} beta={beta_ok} "
            f"gamma={gamma_ok} delta={delta_ok}",
        )


def _equidist(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        young = Counter()
        via_phi = 0
        for t in enumerate_trees(n):
            _, y = old_young(t)
            young[y] += 1
            if peaks_at_even_height(bj.inflate(bj.phi(t))) == y:
                via_phi += 1
        even = Counter()
        dud = Counter()
        for p in enumerate_objects("dyck", n):
            even[peaks_at_even_height(p)] += 1
            dud[factor_count(p, "DUD")] += 1
        closed = Counter({k: count_young(n, k) for k in range(n) if count_young(n, k)})
        ok = young == even == dud == closed and via_phi == catalan(n)
        rep.add(n, ok, f"young={sorted(young.items())} even_peaks={'=' if even == young else sorted(even.items())} "
                       f"dud={'=' if dud == young else sorted(dud.items())} inflate_phi={via_phi}/{catalan(n)}")


def _gf(rep: RunReport, n_max: int, variant: str) -> None:
    series = gf_series(n_max)
    rep.add(0, series[0] == 1, f"[z^0]={series[0]}")
    for n in range(1, n_max + 1):
        hist = Counter(old_young(t) for t in enumerate_trees(n))
        coeff = series[n]
        ok = all(coeff.coeff(t=i, s=j) == c for (i, j), c in hist.items()) and len(coeff.terms) == len(hist)
        rep.add(n, ok, f"[z^{n}] terms={len(coeff.terms)} enumerated_profiles={len(hist)}")
    for t, s, z in GF_POINTS:
        coeffs = gf_series(GF_DEGREE, t=t, s=s)
        approx = float(gf_series_eval(coeffs, z))
        exact = gf_closed_eval(t, s, z)
        err = abs(approx - exact)
        rep.add(GF_DEGREE, err <= GF_TOL, f"closed form t={t} s={s} z={z} err={err:.3e}")


def _cok1(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        lhs, rhs = coker1_sides(n)
        rep.add(n, lhs == rhs, f"lhs={lhs} rhs={rhs}")


def _cok2(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        lhs, rhs = coker2_sides(n)
        rep.add(n, lhs == rhs, f"degree={lhs.degree('x')} terms={len(lhs.terms)}")


def _cok1ref(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        lhs, rhs = cok1ref_sides(n, variant)
        if variant == PRINTED:
            note = "" if lhs == rhs else f" mismatch integral={lhs.is_integral()}"
            rep.add(n, lhs == rhs, "printed binomial" + note, info=True)
            continue
        checks = [f"closed={'ok' if lhs == rhs else 'BAD'}"]
        ok = lhs == rhs
        if n <= TREE_ORACLE_MAX:
            trees = weighted_tree_sum(n, SCHEME_A)
            paths = weighted_path_sum(n - 1, 2, weights_scheme_a())
            ok &= trees == lhs and paths == rhs
            checks.append(f"trees={'ok' if trees == lhs else 'BAD'} paths={'ok' if paths == rhs else 'BAD'}")
        if n <= COK1_SPECIALISE_MAX:
            special = cok1_from_refined(n) == coker1_sides(n)
            ok &= special
            checks.append(f"x=y=4={'ok' if special else 'BAD'}")
        rep.add(n, ok, " ".join(checks))


def _cok2ref(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        lhs, rhs = cok2ref_sides(n, variant)
        if variant == PRINTED:
            note = "" if lhs == rhs else f" mismatch integral={lhs.is_integral()}"
            rep.add(n, lhs == rhs, "printed binomial" + note, info=True)
            continue
        checks = [f"closed={'ok' if lhs == rhs else 'BAD'}"]
        ok = lhs == rhs
        if n <= TREE_ORACLE_MAX:
            trees = weighted_tree_sum(n, SCHEME_B)
            paths = weighted_path_sum(n - 1, 2, weights_two_colored())
            ok &= trees == lhs and paths == lhs
            checks.append(f"trees={'ok' if trees == lhs else 'BAD'} paths={'ok' if paths == lhs else 'BAD'}")
        if n <= THREE_COLOR_ORACLE_MAX:
            three = weighted_path_sum(n - 1, 3, weights_three_colored())
            ok &= three == rhs
            checks.append(f"3-colored={'ok' if three == rhs else 'BAD'}")
        if n <= COK2_SPECIALISE_MAX:
            special = cok2_from_refined(n) == coker2_sides(n)
            ok &= special
            checks.append(f"specialised={'ok' if special else 'BAD'}")
        rep.add(n, ok, " ".join(checks))


def _matches(rep: RunReport, n_max: int, variant: str) -> None:
    for n in range(1, n_max + 1):
        images = {}
        transfer = True
        for f in enumerate_match_sets(n):
            g = merge(f)
            images[g] = f
            plain, rooted, _ = f.kinds()
            if old_young(g.shape()) != (plain, rooted):
                transfer = False
        universe = set(enumerate_labeled_trees(n))
        expected = math.factorial(2 * n) // math.factorial(n)
        bijective = len(images) == expected == len(universe) and set(images) == universe
        hist = Counter(old_young(g.shape()) for g in images)
        counted = all(
            hist[(i, j)] == math.factorial(n + 1) * count_old_young(n, i, j)
            for i in range(n + 1)
            for j in range(n + 1)
        )
        rep.add(n, bijective and transfer and counted,
                f"inputs={expected} distinct_images={len(images)} labeled_trees={len(universe)} "
                f"transfer={'ok' if transfer else 'BAD'} labeled_count={'ok' if counted else 'BAD'}")


_RUNNERS = {
    "roundtrip": _roundtrip,
    "stats": _stats,
    "equidist": _equidist,
    "gf": _gf,
    "cok1": _cok1,
    "cok2": _cok2,
    "cok1ref": _cok1ref,
    "cok2ref": _cok2ref,
    "matches": _matches,
}


class CapError(ValueError):
    pass


def run_suite(suite: str, n_max: int, variant: str = CORRECTED, cap: bool = True) -> RunReport:
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if cap and n_max > CAPS[suite]:
        raise CapError(f"suite {suite} is capped at n-max {CAPS[suite]} (use --no-cap to override)")
    if variant not in (CORRECTED, PRINTED):
        raise ValueError(f"unknown variant {variant!r}")
    rep = RunReport(suite)
    start = time.perf_counter()
    _RUNNERS[suite](rep, n_max, variant)
    rep.wall_time = time.perf_counter() - start
    return rep

from collections import Counter

import pytest
from hypothesis import given, strategies as st

from planetrees import bijections as bj
from planetrees.counting import catalan
from planetrees.objects import (
    COLORED2,
    CONTRACTED,
    DYCK,
    LatticePath,
    Permutation,
    contains_pattern,
    enumerate_objects,
    parse_tree,
    render_tree,
)
from planetrees.stats import old_young, peaks_at_even_height, perm_stats

from . import oracles

FIG_PRE = "UUUDUDDDUDUUUUDDDDUUDUDUDD"
FIG_CONTRACTED = "UURUDDDRUUUUDDDDURRUDD"
FIG_PHI = "UBRDRUBBDBRR"
FIG_ALPHA = (3, 4, 1, 2, 5, 9, 6, 7, 8, 11, 12, 13, 10)
FIG_BETA = (11, 10, 12, 13, 9, 5, 6, 7, 8, 3, 2, 1, 4)


def dyck(w):
    return LatticePath(DYCK, w)


def two(w):
    return LatticePath(COLORED2, w)


# --------------------------------------------------------------------------
# pre / dgr
# --------------------------------------------------------------------------

def test_pre_examples(figure_tree):
    assert bj.pre(parse_tree("((()))")).steps == "UUDD"
    assert bj.pre(parse_tree("(()())")).steps == "UDUD"
    assert bj.pre(figure_tree).steps == FIG_PRE
    # expanding the contracted path of this tree reproduces its Dyck path
    assert FIG_CONTRACTED.replace("R", "UD") == FIG_PRE


def test_pre_rejects_empty_tree():
    with pytest.raises(bj.EmptyTreeError, match="empty tree has no path image"):
        bj.pre(parse_tree("()"))


@pytest.mark.parametrize("n", range(1, 10))
def test_pre_matches_recursive_oracle(n, trees):
    for t in trees(n):
        assert bj.pre(t).steps == oracles.pre_word(t)
        assert bj.pre_inv(bj.pre(t)) == t


def test_dgr_examples(figure_tree):
    assert bj.dgr(figure_tree).steps == "UUUUDUUUDDDDUDUDUDDDUDUUDD"
    assert bj.dgr(parse_tree("((()))")).steps == "UDUD"
    assert bj.dgr(parse_tree("(()())")).steps == "UUDD"


@pytest.mark.parametrize("n", range(1, 11))
def test_dgr_round_trip(n, trees):
    images = set()
    for t in trees(n):
        p = bj.dgr(t)
        assert bj.dgr_inv(p) == t
        images.add(p.steps)
    assert len(images) == catalan(n)


# --------------------------------------------------------------------------
# the steps of phi
# --------------------------------------------------------------------------

def test_contract_examples():
    assert bj.contract_udu(dyck(FIG_PRE)).steps == FIG_CONTRACTED
    assert bj.contract_udu(dyck("UUDD")).steps == "UUDD"
    assert bj.contract_udu(dyck("UDUD")).steps == "RUD"


@pytest.mark.parametrize("n", range(1, 11))
def test_contract_round_trip_and_invariants(n):
    for p in enumerate_objects("dyck", n):
        c = bj.contract_udu(p)
        assert c.kind == CONTRACTED  # construction re-validates the factor rules
        assert c.steps == oracles.contract(p.steps)
        assert "UDU" not in c.steps and "RD" not in c.steps and not c.steps.endswith("R")
        assert bj.expand_udu(c) == p


def test_callan_examples():
    assert bj.callan_reduce(LatticePath(CONTRACTED, FIG_CONTRACTED)).steps == FIG_PHI
    assert bj.callan_reduce(LatticePath(CONTRACTED, "UUDD")).steps == "B"
    assert bj.callan_reduce(LatticePath(CONTRACTED, "RUD")).steps == "R"


@pytest.mark.parametrize("n", range(1, 11))
def test_callan_reduce_matches_height_oracle(n):
    for p in enumerate_objects("dyck", n):
        c = bj.contract_udu(p).steps
        assert bj.callan_reduce(LatticePath(CONTRACTED, c)).steps == oracles.callan_reduce(c)


@pytest.mark.parametrize("n", range(1, 13))
def test_callan_is_two_sided_inverse(n):
    for p in enumerate_objects("dyck", n):
        c = bj.contract_udu(p)
        q = bj.callan_reduce(c)
        assert len(q) == n - 1
        assert bj.callan_expand(q) == c
    for q in enumerate_objects(COLORED2, n - 1):
        assert bj.callan_reduce(bj.callan_expand(q)) == q


def test_callan_reduce_rejects_bad_input():
    with pytest.raises(ValueError):
        bj.callan_reduce(dyck("UD"))


# --------------------------------------------------------------------------
# phi and psi
# --------------------------------------------------------------------------

def test_phi_examples(figure_tree):
    assert bj.phi(figure_tree).steps == FIG_PHI
    assert bj.phi(parse_tree("((()))")).steps == "B"
    assert bj.phi(parse_tree("(()())")).steps == "R"
    assert bj.phi_inv(two(FIG_PHI)) == figure_tree


def test_psi_examples():
    assert bj.psi(parse_tree("((()))")).steps == "B"
    assert bj.psi(parse_tree("(()())")).steps == "R"
    assert bj.psi(parse_tree("(()()())")).steps == "RR"
    assert bj.psi(parse_tree("(())")).steps == ""


@pytest.mark.parametrize("fn", [bj.phi, bj.psi])
def test_three_edge_images(fn, trees):
    assert sorted(fn(t).steps for t in trees(3)) == ["BB", "BR", "RB", "RR", "UD"]


@pytest.mark.parametrize("fn, inv", [(bj.phi, bj.phi_inv), (bj.psi, bj.psi_inv)])
@pytest.mark.parametrize("n", range(1, 11))
def test_bijective_with_leaf_statistics(fn, inv, n, trees):
    images = set()
    for t in trees(n):
        q = fn(t)
        assert len(q) == n - 1
        assert inv(q) == t
        old, young = oracles.old_young(t)
        assert old == 1 + q.count("U")
        assert young == q.count("R")
        images.add(q.steps)
    assert len(images) == catalan(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_psi_label_description_agrees(n, trees):
    for t in trees(n):
        assert bj.psi_by_labels(t) == bj.psi(t)


def test_psi_by_labels_examples():
    assert bj.psi_by_labels(parse_tree("(()())")).steps == "R"
    assert bj.psi_by_labels(parse_tree("((()))")).steps == "B"


@pytest.mark.parametrize("fn", [bj.phi, bj.psi, bj.psi_by_labels, bj.dgr, bj.alpha])
def test_maps_reject_empty_tree(fn):
    with pytest.raises(bj.EmptyTreeError):
        fn(parse_tree("()"))


# --------------------------------------------------------------------------
# inflate / deflate
# --------------------------------------------------------------------------

def test_inflate_examples():
    assert bj.inflate(two("")).steps == "UD"
    assert bj.inflate(two("R")).steps == "UUDD"
    assert bj.deflate(dyck("UUDD")).steps == "R"
    with pytest.raises(ValueError):
        bj.deflate(dyck(""))


@pytest.mark.parametrize("n", range(1, 11))
def test_inflate_phi_sends_young_leaves_to_even_peaks(n, trees):
    images = set()
    for t in trees(n):
        p = bj.inflate(bj.phi(t))
        assert peaks_at_even_height(p) == old_young(t)[1]
        assert bj.deflate(p) == bj.phi(t)
        images.add(p.steps)
    assert len(images) == catalan(n)


# --------------------------------------------------------------------------
# Krattenthaler-type maps
# --------------------------------------------------------------------------

def test_krat_uc_examples():
    assert bj.krat_uc(FIG_ALPHA).steps == FIG_PRE
    assert bj.krat_uc((1, 2)).steps == "UDUD"
    assert bj.krat_uc((2, 1)).steps == "UUDD"
    for n in range(1, 8):
        assert bj.krat_uc(tuple(range(1, n + 1))).steps == "UD" * n


def test_krat_examples():
    assert bj.krat(FIG_BETA).steps == FIG_PRE
    assert bj.krat((1,)).steps == "UD"
    for n in range(1, 8):
        assert bj.krat(tuple(range(n, 0, -1))).steps == "U" + "DU" * (n - 1) + "D"


def test_krat_rejects_pattern():
    with pytest.raises(ValueError):
        bj.krat_uc((3, 2, 1))
    with pytest.raises(ValueError):
        bj.krat((1, 3, 2))


@pytest.mark.parametrize(
    "pattern, fwd, inv", [("321", bj.krat_uc, bj.krat_uc_inv), ("132", bj.krat, bj.krat_inv)]
)
@pytest.mark.parametrize("n", range(1, 9))
def test_krat_bijective(pattern, fwd, inv, n):
    images = set()
    for w in oracles.avoiders(n, pattern):
        p = fwd(w)
        assert p.semilength == n
        assert inv(p) == Permutation(w)
        images.add(p.steps)
    assert images == {p.steps for p in enumerate_objects("dyck", n)}


# --------------------------------------------------------------------------
# composite maps
# --------------------------------------------------------------------------

def test_alpha_beta_figure(figure_tree):
    assert bj.alpha(figure_tree).word == FIG_ALPHA
    assert bj.beta(figure_tree).word == FIG_BETA


def test_gamma_small():
    assert bj.gamma(parse_tree("((()))")).word == (1, 2)
    assert bj.gamma(parse_tree("(()())")).word == (2, 1)


def _young_gamma(s):
    return s.consec_deficiency_pairs + int(s.last_is_deficiency)


CONTRACTS = [
    (bj.alpha, bj.alpha_inv, "321", lambda s: (s.consec_weak_exc_pairs, s.weak_exc_not_followed)),
    (bj.beta, bj.beta_inv, "132", lambda s: (s.double_descents_prepended, s.ascending_runs_appended)),
    (bj.gamma, bj.gamma_inv, "321", lambda s: (_young_gamma(s), s.weak_exc_not_followed)),
    (bj.delta, bj.delta_inv, "132", lambda s: (s.double_ascents_appended, s.ascending_runs_appended)),
]


@pytest.mark.parametrize("fn, inv, pattern, young_old", CONTRACTS, ids=["alpha", "beta", "gamma", "delta"])
@pytest.mark.parametrize("n", range(1, 9))
def test_composite_statistic_contracts(fn, inv, pattern, young_old, n, trees):
    seen = Counter()
    for t in trees(n):
        p = fn(t)
        assert not oracles.contains(p.word, pattern)
        old, young = oracles.old_young(t)
        assert young_old(perm_stats(p)) == (young, old)
        assert inv(p) == t
        seen[p.word] += 1
    assert len(seen) == catalan(n)


@given(st.integers(1, 12).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_krat_round_trip_random(w):
    if not contains_pattern(w, "321"):
        assert bj.krat_uc_inv(bj.krat_uc(w)).word == tuple(w)
    if not contains_pattern(w, "132"):
        assert bj.krat_inv(bj.krat(w)).word == tuple(w)


def test_text_round_trip_via_inverse(trees):
    for t in trees(6):
        assert render_tree(bj.phi_inv(bj.phi(t))) == render_tree(t)

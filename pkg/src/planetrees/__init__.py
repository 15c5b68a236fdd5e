"""Plane trees counted by old and young leaves, with bijections to 2-Motzkin
paths and pattern-avoiding permutations, and exact identity checks."""

from .bijections import (
    alpha,
    beta,
    callan_expand,
    callan_reduce,
    contract_udu,
    deflate,
    delta,
    dgr,
    dgr_inv,
    expand_udu,
    gamma,
    inflate,
    krat,
    krat_inv,
    krat_uc,
    krat_uc_inv,
    phi,
    phi_inv,
    pre,
    pre_inv,
    psi,
    psi_by_labels,
    psi_inv,
)
from .counting import (
    catalan,
    count_old,
    count_old_young,
    count_young,
    gf_closed_eval,
    gf_series,
    motzkin,
    narayana,
)
from .objects import (
    LatticePath,
    ParseError,
    Permutation,
    PlaneTree,
    contains_pattern,
    enumerate_objects,
    parse_path,
    parse_perm,
    parse_tree,
    render_path,
    render_perm,
    render_tree,
)
from .poly import MultiPoly
from .stats import perm_stats, tree_stats

__version__ = "0.1.0"

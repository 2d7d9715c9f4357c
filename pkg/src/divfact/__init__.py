"""Exact-arithmetic toolkit for weighted line bundle degrees on moduli of
pointed rational curves: factorization rules, F-curve degree vectors,
cyclic-cover numerics, and symbolic tableau invariants."""

from .bundles import (
    BundleFamily,
    DegreeVector,
    MainTheoremReport,
    check_git_factorization,
    deg4_cb,
    deg4_cyc,
    deg4_git,
    degree_vector,
    fcurve_degree,
    verify_main_theorem,
)
from .covers import (
    CoverSpec,
    DegenerationData,
    DisconnectedCoverWarning,
    degenerate,
    genus,
    hodge_rank_split,
)
from .invariants import (
    MuDecomposition,
    PointConfiguration,
    RestrictionNotSemistandardError,
    RestrictionReport,
    Stability,
    Tableau,
    attach_block_matrix,
    attach_configuration,
    enumerate_tableaux,
    evaluate_tableau,
    is_semistable,
    mu_decompose,
    tableau_polynomial,
    verify_restriction_theorem,
)
from .polynomials import Poly, determinant
from .strata import (
    BoundaryCut,
    SetPartition4,
    enumerate_boundary_cuts,
    enumerate_fcurves,
    induce_four_weights,
)
from .weights import (
    Linearization,
    RangeConditionError,
    WeightVector,
    in_hypersimplex,
    phi_rule,
    psi_rule,
    split_linearization,
)

__all__ = [
    "BoundaryCut",
    "BundleFamily",
    "CoverSpec",
    "DegenerationData",
    "DegreeVector",
    "DisconnectedCoverWarning",
    "Linearization",
    "MainTheoremReport",
    "MuDecomposition",
    "Poly",
    "PointConfiguration",
    "RangeConditionError",
    "RestrictionNotSemistandardError",
    "RestrictionReport",
    "SetPartition4",
    "Stability",
    "Tableau",
    "WeightVector",
    "attach_block_matrix",
    "attach_configuration",
    "check_git_factorization",
    "deg4_cb",
    "deg4_cyc",
    "deg4_git",
    "degenerate",
    "degree_vector",
    "determinant",
    "enumerate_boundary_cuts",
    "enumerate_fcurves",
    "enumerate_tableaux",
    "evaluate_tableau",
    "fcurve_degree",
    "genus",
    "hodge_rank_split",
    "in_hypersimplex",
    "induce_four_weights",
    "is_semistable",
    "mu_decompose",
    "phi_rule",
    "psi_rule",
    "split_linearization",
    "tableau_polynomial",
    "verify_main_theorem",
    "verify_restriction_theorem",
]

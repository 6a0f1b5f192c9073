"""Exact-arithmetic toolkit for nilpotent and solvable Lie algebras.

Computes derivation algebras, diagonal pre-Einstein derivations, Ricci
operators of metric Lie algebras, nilsoliton certificates and standardness
verdicts, and constructs two-step, free nilpotent, and graph-attached
families, all over the exact field of rational combinations of square roots.
"""

from .scalar import Scalar, ScalarError, parse_scalar, sc, sqrt
from .lie import (
    LieAlgebra,
    LieAlgebraError,
    JacobiError,
    Subspace,
    build_algebra,
    jacobi_check,
    central_series,
    derived_and_center,
    direct_sum,
    change_basis,
)
from .derivations import (
    DerivationBasis,
    PreEinsteinResult,
    WeightDecomposition,
    Verdict,
    coboundary,
    derivation_basis,
    trace_form,
    pre_einstein_diagonal,
    verify_pre_einstein,
    ad_weight_decomposition,
    certify_standardness,
)
from .curvature import (
    MetricLieAlgebra,
    RicciData,
    SolvableGeometry,
    NilsolitonCertificate,
    xi_form,
    ricci_nilpotent,
    ricci_solvable,
    solvable_geometry,
    nilsoliton_check,
    rank_one_extension,
    einstein_check,
    standardness_check,
    derivation_bracket_identity,
)
from .constructions import (
    TwoStepPresentation,
    twostep_from_matrices,
    canonical_derivation,
    opq_membership,
    opq_certificate_2_2n,
    dual_twostep,
    nonsingularity_check,
    radon_hurwitz,
    build_dminus1,
    free_nilpotent,
    HallBasis,
    graph_algebra_gnn0,
    graph_two_step,
    catalog,
    catalog_names,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

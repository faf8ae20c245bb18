"""Exact arithmetic for Gaussian binomial polynomials, the weighted
tilings, lattice paths, and boxed partitions they enumerate, and
mechanical verification of the classical identities relating them."""

from .combinat import (
    BoxedPartition,
    LatticePath,
    Stratification,
    Stratum,
    Tiling,
    conjugate,
    enumerate_box_partitions,
    enumerate_tilings,
    partitions_generating_polynomial,
    path_to_partition,
    path_to_tiling,
    stratify_last_domino,
    stratify_last_square,
    stratify_median_domino,
    stratify_median_square,
    subspace_count,
    tiling_to_path,
    tilings_generating_polynomial,
    weight_exponent,
)
from .errors import DivisionByZero, DomainError, InexactDivision, NegativeIndex
from .identities import (
    Failure,
    IdentityId,
    IdentityReport,
    sweep,
    verify_cor1,
    verify_cor2_corrected,
    verify_cor2_printed,
    verify_guoyang1,
    verify_guoyang2,
    verify_sun1,
    verify_sun2,
    verify_thm1,
    verify_thm2,
    verify_thm3,
    verify_thm4,
)
from .poly import ONE, Polynomial, Q, ZERO, exact_div, monomial
from .qbinom import (
    QBinomTable,
    check_absorption,
    check_symmetry,
    gauss,
    gauss_product,
    gauss_qfactorial,
    gauss_recur1,
    gauss_recur2,
    q_factorial,
    q_integer,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Polynomial",
    "ZERO",
    "ONE",
    "Q",
    "monomial",
    "exact_div",
    "DomainError",
    "NegativeIndex",
    "DivisionByZero",
    "InexactDivision",
    "q_integer",
    "q_factorial",
    "gauss_product",
    "gauss_qfactorial",
    "gauss_recur1",
    "gauss_recur2",
    "QBinomTable",
    "gauss",
    "check_symmetry",
    "check_absorption",
    "Tiling",
    "LatticePath",
    "BoxedPartition",
    "Stratum",
    "Stratification",
    "enumerate_tilings",
    "weight_exponent",
    "tilings_generating_polynomial",
    "path_to_tiling",
    "tiling_to_path",
    "path_to_partition",
    "enumerate_box_partitions",
    "partitions_generating_polynomial",
    "conjugate",
    "stratify_last_square",
    "stratify_last_domino",
    "stratify_median_domino",
    "stratify_median_square",
    "subspace_count",
    "IdentityId",
    "IdentityReport",
    "Failure",
    "sweep",
    "verify_thm1",
    "verify_thm2",
    "verify_thm3",
    "verify_thm4",
    "verify_cor1",
    "verify_cor2_printed",
    "verify_cor2_corrected",
    "verify_guoyang1",
    "verify_guoyang2",
    "verify_sun1",
    "verify_sun2",
]

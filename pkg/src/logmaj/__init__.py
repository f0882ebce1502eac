"""logmaj: a numerical laboratory for log-majorization and norm inequalities
on positive semi-definite matrices.

The package couples a catalog of majorization/norm relations (theorems,
refuting examples, and open conjectures) with spectral machinery to check
them: every proved relation is verified with quantified margins on random
instances, refuting examples are reproduced, and open conjectures are
stress-tested by counterexample search.
"""

from .catalog import CATALOG, InequalityDefinition
from .checks import SubCheck, Tolerances
from .errors import (
    BadK,
    BadSpec,
    DimMismatch,
    DomainViolation,
    EmptyDomain,
    InvalidP,
    LengthMismatch,
    LogmajError,
    NonConvergedLimit,
    NonConvergence,
    ReproductionMismatch,
    SingularMatrix,
    UnknownId,
    UnsupportedShape,
    WrongStatus,
)
from .linalg import (
    EigenDecomposition,
    adjoint,
    det,
    eig_hermitian,
    eigenvalue_moduli,
    eigenvalues_of_product,
    hadamard,
    hermitian_part,
    matrix_from_json,
    matrix_power,
    matrix_to_json,
    singular_values,
    word_eigenvalues,
)
from .majorization import (
    MajorizationVerdict,
    log_majorizes,
    reverse_log_majorizes,
    weak_log_majorizes,
)
from .means import generalized_mean, geometric_mean, mean_limit, natural_natural
from .norms import fan_dominates, ky_fan, schatten
from .randgen import GenSpec, perturb, random_matrix, stream
from .registry import (
    CheckOutcome,
    SuiteSummary,
    catalog_json,
    evaluate,
    expand_ids,
    lookup,
    run_suite,
    sample_params,
)
from .search import SearchReport, search, verify_instance

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CheckOutcome",
    "EigenDecomposition",
    "GenSpec",
    "InequalityDefinition",
    "MajorizationVerdict",
    "SearchReport",
    "SubCheck",
    "SuiteSummary",
    "Tolerances",
    "adjoint",
    "catalog_json",
    "det",
    "eig_hermitian",
    "eigenvalue_moduli",
    "eigenvalues_of_product",
    "evaluate",
    "expand_ids",
    "fan_dominates",
    "generalized_mean",
    "geometric_mean",
    "hadamard",
    "hermitian_part",
    "ky_fan",
    "log_majorizes",
    "lookup",
    "matrix_from_json",
    "matrix_power",
    "matrix_to_json",
    "mean_limit",
    "natural_natural",
    "perturb",
    "random_matrix",
    "reverse_log_majorizes",
    "run_suite",
    "sample_params",
    "schatten",
    "search",
    "singular_values",
    "stream",
    "verify_instance",
    "weak_log_majorizes",
    "word_eigenvalues",
    # errors
    "LogmajError",
    "NonConvergence",
    "SingularMatrix",
    "UnsupportedShape",
    "NonConvergedLimit",
    "LengthMismatch",
    "DimMismatch",
    "InvalidP",
    "BadK",
    "BadSpec",
    "UnknownId",
    "EmptyDomain",
    "DomainViolation",
    "WrongStatus",
    "ReproductionMismatch",
]

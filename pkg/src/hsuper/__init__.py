"""Exact arithmetic for 3-dimensional Heisenberg Hom-Lie superalgebras.

Structure-constant algebras over Q(i), their twisted cochain complexes and
degree 1/2 cohomology, infinitesimal deformations with integrability checks,
and normalization onto the classified Heisenberg families.
"""

from .algebra import (
    HeisenbergCertificate,
    HomLieSuperalgebra,
    InvariantError,
    apply_base_change,
    center,
    check_hom_jacobi,
    check_multiplicative,
    check_skew,
    derived_ideal,
    is_heisenberg,
    is_lie_superalgebra,
    new_algebra,
    verify_isomorphism,
)
from .catalogs import (
    FAMILY_PARAMS,
    HEISENBERG_FAMILIES,
    CatalogId,
    ConstraintError,
    catalog,
)
from .cohomology import (
    Cochain,
    CochainComplex,
    CohomologyReport,
    coboundary_matrix,
    cochain_space,
    cohomology,
    delta_value,
)
from .deformations import (
    DeformationError,
    DeformationSpec,
    NormalFormResult,
    circle,
    deform,
    deformation_classes,
    equivalent_via,
    is_integrable,
    is_two_cocycle,
    normalize_heisenberg,
)
from .linalg import Matrix, Subspace, Vector, invert, kernel_basis, rank, rref, solve
from .scalars import (
    I,
    ONE,
    ZERO,
    Scalar,
    ScalarParseError,
    as_scalar,
    format_scalar,
    parse_scalar,
    scalar,
    sqrt_scalar,
)
from .classification import CaseReport, case_ids, verify_all_cases, verify_classification_case

__all__ = [
    "CatalogId",
    "Cochain",
    "CochainComplex",
    "CohomologyReport",
    "ConstraintError",
    "DeformationError",
    "DeformationSpec",
    "FAMILY_PARAMS",
    "HEISENBERG_FAMILIES",
    "HeisenbergCertificate",
    "HomLieSuperalgebra",
    "I",
    "InvariantError",
    "Matrix",
    "NormalFormResult",
    "ONE",
    "Scalar",
    "ScalarParseError",
    "Subspace",
    "CaseReport",
    "Vector",
    "ZERO",
    "apply_base_change",
    "as_scalar",
    "case_ids",
    "catalog",
    "center",
    "check_hom_jacobi",
    "check_multiplicative",
    "check_skew",
    "circle",
    "coboundary_matrix",
    "cochain_space",
    "cohomology",
    "deform",
    "deformation_classes",
    "delta_value",
    "derived_ideal",
    "equivalent_via",
    "format_scalar",
    "invert",
    "is_heisenberg",
    "is_integrable",
    "is_lie_superalgebra",
    "is_two_cocycle",
    "kernel_basis",
    "new_algebra",
    "normalize_heisenberg",
    "parse_scalar",
    "rank",
    "rref",
    "scalar",
    "solve",
    "sqrt_scalar",
    "verify_all_cases",
    "verify_isomorphism",
    "verify_classification_case",
]

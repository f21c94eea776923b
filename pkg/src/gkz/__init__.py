"""Toric hypergeometric systems: configurations, symmetries, integrals.

The package is organized around integer point configurations.  configs
validates them and rewrites them into block standard form, symmetry
enumerates the finite matrix/permutation group fixing a configuration,
transforms turns group elements into parameter maps between solutions,
evaluate computes the dehomogenized integrals and classical series, and
verify turns claimed identities into fitted-constant residual reports.
"""

from .configs import (
    CatalogEntry,
    ClassicalModel,
    PointConfiguration,
    StandardForm,
    catalog,
    compute_xi,
    facet_normals,
    is_nonresonant,
    is_saturated_up_to,
    saturation_gaps,
    standard_form,
    to_standard_form,
    validate_configuration,
)
from .errors import (
    BranchAmbiguityWarning,
    ConfigMismatch,
    DegenerateCone,
    DimensionMismatch,
    FitUnstable,
    GkzError,
    IoError,
    LatticeNotSpanned,
    LeavesConfiguration,
    NoSuchBlockStructure,
    NotConverged,
    NotFullRank,
    NotNegativeInteger,
    NoXi,
    OutOfDomain,
    ParseError,
    PoleInC,
    PoleInGamma,
    SingularOnCycle,
    TooLarge,
    UnknownName,
    UnsupportedParameters,
    UsageError,
)
from .evaluate import (
    AxisCycle,
    EvaluationResult,
    QuadratureSettings,
    appell_f4,
    classical_solution,
    derivative_integral,
    euler_integral,
    gauss_2f1,
    homogenization_constant,
    lauricella_fc,
    negative_axis,
    positive_axis,
    real_line,
    unit_circle,
    unit_interval,
)
from .symmetry import (
    PolytopeSymmetry,
    SymmetryGroup,
    compose,
    find_symmetries,
    identity_symmetry,
    inverse,
    recheck,
    verify_symmetry,
)
from .transforms import (
    BinomialIdentity,
    BinomialTerm,
    ElementaryAutomorphism,
    LinearTransformation,
    apply,
    binomial_expansion_identity,
    elementary_pullback,
    induced_transformation,
    inverse_transformation,
    monomial_torus_map,
)
from .verify import (
    F4Report,
    IdentityReport,
    SampleGrid,
    f4_nonexistence_report,
    kernel_basis,
    toric_moves,
    verify_binomial_identity,
    verify_linear_transformation,
    verify_pde,
    verify_pfaff,
    verify_quadric_multivaluedness,
)

__version__ = "0.1.0"

__all__ = [
    "AxisCycle",
    "BinomialIdentity",
    "BinomialTerm",
    "BranchAmbiguityWarning",
    "CatalogEntry",
    "ClassicalModel",
    "ConfigMismatch",
    "DegenerateCone",
    "DimensionMismatch",
    "ElementaryAutomorphism",
    "EvaluationResult",
    "F4Report",
    "FitUnstable",
    "GkzError",
    "IdentityReport",
    "IoError",
    "LatticeNotSpanned",
    "LeavesConfiguration",
    "LinearTransformation",
    "NoSuchBlockStructure",
    "NotConverged",
    "NotFullRank",
    "NotNegativeInteger",
    "NoXi",
    "OutOfDomain",
    "ParseError",
    "PointConfiguration",
    "PoleInC",
    "PoleInGamma",
    "PolytopeSymmetry",
    "QuadratureSettings",
    "SampleGrid",
    "SingularOnCycle",
    "StandardForm",
    "SymmetryGroup",
    "TooLarge",
    "UnknownName",
    "UnsupportedParameters",
    "UsageError",
    "appell_f4",
    "apply",
    "binomial_expansion_identity",
    "catalog",
    "classical_solution",
    "compose",
    "compute_xi",
    "derivative_integral",
    "elementary_pullback",
    "euler_integral",
    "f4_nonexistence_report",
    "facet_normals",
    "find_symmetries",
    "gauss_2f1",
    "homogenization_constant",
    "identity_symmetry",
    "induced_transformation",
    "inverse",
    "inverse_transformation",
    "is_nonresonant",
    "is_saturated_up_to",
    "kernel_basis",
    "monomial_torus_map",
    "lauricella_fc",
    "negative_axis",
    "positive_axis",
    "real_line",
    "recheck",
    "saturation_gaps",
    "standard_form",
    "to_standard_form",
    "toric_moves",
    "unit_circle",
    "unit_interval",
    "validate_configuration",
    "verify_binomial_identity",
    "verify_linear_transformation",
    "verify_pde",
    "verify_pfaff",
    "verify_quadric_multivaluedness",
    "verify_symmetry",
]

"""Exact duality-shift arithmetic for graded complete intersections and
their rings of invariants: Hilbert series, Gorenstein shifts,
local-cohomology bookkeeping, Molien series, Solomon supplements, and
descended shifts."""

from .series import (
    HilbertSeries,
    LaurentPolynomial,
    NotMonomialRatio,
    ratio_as_signed_monomial,
)
from .graded_ring import (
    GradedModuleSeries,
    NotGorensteinSeries,
    RegularSequenceWarning,
    RingPresentation,
    brute_force_hilbert,
    dual_series,
    gorenstein_shift_formula,
    gorenstein_shift_stanley,
    hilbert_series,
    krull_dimension,
    polynomial_presentation,
)
from .duality import (
    CechHomotopy,
    DualityReport,
    LocalCohomology,
    Splitting,
    ZeroDimensional,
    anderson_dual_homotopy,
    cech_homotopy,
    duality_report,
    gamma_homotopy,
    local_cohomology_series,
)
from .invariants import (
    GradedGroupRep,
    LengthMismatch,
    MolienReport,
    MonomialBoundExceeded,
    NoBuiltinCharacterTable,
    NonIntegralMultiplicity,
    NotPolynomial,
    OrderCapExceeded,
    RationalCharacterTable,
    SolomonVerification,
    builtin_character_table,
    character_table,
    conjugacy_classes,
    decompose,
    extract_polynomial_degrees,
    generate_group,
    invariant_basis,
    molien_series,
    solomon_supplement,
    sym_power_character,
    verify_solomon,
)
from .descent import (
    BlockMismatch,
    DescentReport,
    NotPolynomialBase,
    NotPolynomialInvariants,
    cross_check_invariant_shift,
    descent_report,
)

__all__ = [
    "HilbertSeries",
    "LaurentPolynomial",
    "NotMonomialRatio",
    "ratio_as_signed_monomial",
    "GradedModuleSeries",
    "NotGorensteinSeries",
    "RegularSequenceWarning",
    "RingPresentation",
    "brute_force_hilbert",
    "dual_series",
    "gorenstein_shift_formula",
    "gorenstein_shift_stanley",
    "hilbert_series",
    "krull_dimension",
    "polynomial_presentation",
    "CechHomotopy",
    "DualityReport",
    "LocalCohomology",
    "Splitting",
    "ZeroDimensional",
    "anderson_dual_homotopy",
    "cech_homotopy",
    "duality_report",
    "gamma_homotopy",
    "local_cohomology_series",
    "GradedGroupRep",
    "LengthMismatch",
    "MolienReport",
    "MonomialBoundExceeded",
    "NoBuiltinCharacterTable",
    "NonIntegralMultiplicity",
    "NotPolynomial",
    "OrderCapExceeded",
    "RationalCharacterTable",
    "SolomonVerification",
    "builtin_character_table",
    "character_table",
    "conjugacy_classes",
    "decompose",
    "extract_polynomial_degrees",
    "generate_group",
    "invariant_basis",
    "molien_series",
    "solomon_supplement",
    "sym_power_character",
    "verify_solomon",
    "BlockMismatch",
    "DescentReport",
    "NotPolynomialBase",
    "NotPolynomialInvariants",
    "cross_check_invariant_shift",
    "descent_report",
]

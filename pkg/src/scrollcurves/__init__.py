"""Exact arithmetic for numerical semigroups, rational monomial curves,
their canonical models, and the rational normal scrolls those models live on."""

from .catalog import (
    AuditReport,
    CatalogRow,
    FlagRecord,
    audit_fixture,
    build_catalog,
    format_exponents,
    render,
    row_for_curve,
)
from .chow import (
    Ambient,
    DivisorClass,
    Finding,
    RankTwoBundleClass,
    bundle_chi_dual,
    canonical_class,
    chow_degree,
    chow_element,
    chow_mul,
    euler_characteristic,
    genus_on_cone,
    genus_on_surface,
    h0_class,
    pa_from_bundle,
    surface_scroll_report,
    threefold_bundle_report,
)
from .curves import (
    CurveAnalysis,
    MonomialCurve,
    analyze,
    canonical_exponents,
    canonical_section_exponents,
    equal_up_to_reversal,
    gonality,
    gonality_pencil,
    isomorphic_via_canonical,
    make_curve,
    normalize_values,
    representative_curve,
    sheaf_degree_h0,
    verify_dualizing_candidate,
)
from .errors import (
    BoundExceeded,
    EmptyGenerators,
    GcdNotOne,
    GenusZero,
    NonIntegralGenus,
    NotAValidKappaStar,
    NotIncreasing,
    NotTopDimensional,
    NotUnibranchSingle,
    PathsDisagree,
    ScrollCurvesError,
    UnknownFixture,
    UnsupportedDimension,
    ZeroExponent,
)
from .fixtures import FixtureRow, fixture, fixture_names
from .scrolls import (
    ScrollStructure,
    ScrollType,
    min_scroll_dimension,
    minor_check,
    run_decomposition,
    scroll_structures,
)
from .semigroups import (
    DEFAULT_GENUS_BOUND,
    KappaSets,
    NumericalSemigroup,
    ValueSet,
    enumerate_genus,
    eta_local,
    is_symmetric,
    kappa_sets,
    make_semigroup,
    mu_local,
    recover_from_kappa_star,
    semigroup_from_gaps,
)

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "AuditReport",
    "BoundExceeded",
    "CatalogRow",
    "CurveAnalysis",
    "DEFAULT_GENUS_BOUND",
    "DivisorClass",
    "EmptyGenerators",
    "Finding",
    "FixtureRow",
    "FlagRecord",
    "GcdNotOne",
    "GenusZero",
    "KappaSets",
    "MonomialCurve",
    "NonIntegralGenus",
    "NotAValidKappaStar",
    "NotIncreasing",
    "NotTopDimensional",
    "NotUnibranchSingle",
    "NumericalSemigroup",
    "PathsDisagree",
    "RankTwoBundleClass",
    "ScrollCurvesError",
    "ScrollStructure",
    "ScrollType",
    "UnknownFixture",
    "UnsupportedDimension",
    "ValueSet",
    "ZeroExponent",
    "analyze",
    "audit_fixture",
    "build_catalog",
    "bundle_chi_dual",
    "canonical_class",
    "canonical_exponents",
    "canonical_section_exponents",
    "chow_degree",
    "chow_element",
    "chow_mul",
    "enumerate_genus",
    "equal_up_to_reversal",
    "eta_local",
    "euler_characteristic",
    "fixture",
    "fixture_names",
    "format_exponents",
    "genus_on_cone",
    "genus_on_surface",
    "gonality",
    "gonality_pencil",
    "h0_class",
    "is_symmetric",
    "isomorphic_via_canonical",
    "kappa_sets",
    "make_curve",
    "make_semigroup",
    "min_scroll_dimension",
    "minor_check",
    "mu_local",
    "normalize_values",
    "pa_from_bundle",
    "recover_from_kappa_star",
    "render",
    "representative_curve",
    "row_for_curve",
    "run_decomposition",
    "scroll_structures",
    "semigroup_from_gaps",
    "sheaf_degree_h0",
    "surface_scroll_report",
    "threefold_bundle_report",
    "verify_dualizing_candidate",
]

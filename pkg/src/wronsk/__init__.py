"""Exact Wronskians of polynomial, Laurent and rational families over Q."""

from .characterization import (
    characterize_laurent,
    characterize_poly,
    is_constant_by_degree,
    synthesize_laurent,
    synthesize_poly,
)
from .errors import WronskError
from .geometry import (
    Curve,
    Hyperplane,
    hodograph,
    hyperplane_containment,
    invariant_numerator,
    is_affine_rnc,
    reparametrize_shift,
    vanishing_invariant_report,
)
from .laurent import LaurentPoly, Rational
from .parser import ParseError, parse_curve, parse_laurent, parse_rational
from .rational import (
    RationalFunction,
    check_n2_impossibility,
    family_pole_profile,
    normalize_pole_to_origin,
    partial_fractions,
    wronskian_rational,
)
from .reduction import monomial_basis, reduce_both, reduce_distinct_max, reduce_distinct_min
from .search import SearchConfig, SearchReport, conjecture_search
from .wronskian import (
    WronskianClass,
    WronskianTag,
    classify,
    monomial_wronskian,
    predicted_degree_max,
    predicted_degree_min,
    superfactorial,
    vandermonde,
    wronskian,
)

__version__ = "0.1.0"

__all__ = [
    "Curve", "Hyperplane", "LaurentPoly", "ParseError", "Rational", "RationalFunction",
    "SearchConfig", "SearchReport", "WronskError", "WronskianClass", "WronskianTag",
    "characterize_laurent", "characterize_poly", "check_n2_impossibility", "classify",
    "conjecture_search", "family_pole_profile", "hodograph", "hyperplane_containment",
    "invariant_numerator", "is_affine_rnc", "is_constant_by_degree", "monomial_basis",
    "monomial_wronskian", "normalize_pole_to_origin", "parse_curve", "parse_laurent",
    "parse_rational", "partial_fractions", "predicted_degree_max", "predicted_degree_min",
    "reduce_both", "reduce_distinct_max", "reduce_distinct_min", "reparametrize_shift",
    "superfactorial", "synthesize_laurent", "synthesize_poly", "vandermonde",
    "vanishing_invariant_report", "wronskian", "wronskian_rational",
]

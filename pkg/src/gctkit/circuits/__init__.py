"""Arithmetic circuits and the constructions relating them to determinants and permanents."""

from .circuit import (
    CLASSES,
    Circuit,
    CircuitBuilder,
    Gate,
    classify,
    dumps,
    evaluate,
    from_json,
    gate_polys,
    is_formula,
    is_separate,
    is_skew,
    is_weakly_skew,
    loads,
    to_json,
)
from .constructions import (
    coefficient_extract,
    determinant_polynomial,
    homogenize,
    permanent_polynomial,
    projection_determinant,
    ryser_permanent,
    symbolic_determinant,
    universality_projection,
    verify_projection,
    weakly_skew_to_skew,
)
from .poly import EPS, Poly, SeriesConstant, matrix_variable, series_coefficients

__all__ = [
    "CLASSES", "Circuit", "CircuitBuilder", "Gate", "classify", "dumps", "evaluate",
    "from_json", "gate_polys", "is_formula", "is_separate", "is_skew", "is_weakly_skew",
    "loads", "to_json", "coefficient_extract", "determinant_polynomial", "homogenize",
    "permanent_polynomial", "projection_determinant", "ryser_permanent",
    "symbolic_determinant", "universality_projection", "verify_projection",
    "weakly_skew_to_skew", "EPS", "Poly", "SeriesConstant", "matrix_variable",
    "series_coefficients",
]

"""Linear and cyclic codes over Z2^r x (Z2+uZ2)^s.

Exact arithmetic and exhaustive enumeration for desk-scale codes: standard
forms and types, duals, Gray images, weight enumerators, one-weight
classification, cyclic constructions and classical bounds.
"""

from .bounds import BoundsReport, bounds_report, optimality_lookup, plotkin, sphere_packing
from .code import (
    CodeType,
    EnumeratedCode,
    GeneratorMatrix,
    StandardForm,
    WeightEnumerator,
    dual,
    gray_image_params,
    is_separable,
    macwilliams_transform,
    min_distance,
    parity_check,
    span,
    standard_form,
    type_from_ranks,
    weight_enumerator,
)
from .cyclic import (
    CyclicGenerators,
    build_one_weight_cyclic,
    cyclic_span,
    cyclic_type,
    search_one_weight,
    spanning_set,
    validate_generators,
)
from .errors import (
    CapExceeded,
    CodeTooLarge,
    NonIntegerResult,
    NotOneWeight,
    NotShiftClosed,
    ValidationFailed,
    Z2Z2uError,
    ZeroCode,
    ZeroColumn,
)
from .matrixio import format_matrix, parse_matrix, parse_rows, read_matrix
from .oneweight import OneWeightReport, classify, is_one_weight, replicate
from .poly import BinaryPolynomial, divisors_of_xn_minus_1, factor_xn_minus_1, parse_poly, poly_gcd
from .ring import ONE, U, W, ZERO, RingElement
from .vector import MixedVector, cyclic_shift, gray_map, inner_product, parse_vector

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "bounds_report",
    "optimality_lookup",
    "plotkin",
    "sphere_packing",
    "CodeType",
    "EnumeratedCode",
    "GeneratorMatrix",
    "StandardForm",
    "WeightEnumerator",
    "dual",
    "gray_image_params",
    "is_separable",
    "macwilliams_transform",
    "min_distance",
    "parity_check",
    "span",
    "standard_form",
    "type_from_ranks",
    "weight_enumerator",
    "CyclicGenerators",
    "build_one_weight_cyclic",
    "cyclic_span",
    "cyclic_type",
    "search_one_weight",
    "spanning_set",
    "validate_generators",
    "CapExceeded",
    "CodeTooLarge",
    "NonIntegerResult",
    "NotOneWeight",
    "NotShiftClosed",
    "ValidationFailed",
    "Z2Z2uError",
    "ZeroCode",
    "ZeroColumn",
    "format_matrix",
    "parse_matrix",
    "parse_rows",
    "read_matrix",
    "OneWeightReport",
    "classify",
    "is_one_weight",
    "replicate",
    "BinaryPolynomial",
    "divisors_of_xn_minus_1",
    "factor_xn_minus_1",
    "parse_poly",
    "poly_gcd",
    "ONE",
    "U",
    "W",
    "ZERO",
    "RingElement",
    "MixedVector",
    "cyclic_shift",
    "gray_map",
    "inner_product",
    "parse_vector",
]

"""Hulls, LCD tests and weight-enumerator invariants of linear codes over GF(q)."""

from lcdhull.code import (
    HullReport,
    LinearCode,
    MonomialTransform,
    apply_monomial,
    code_make,
    dual,
    hermitian_dual,
    hull,
    is_hermitian_lcd,
    is_lcd,
    min_distance,
    star_scale,
    structured_generator,
    systematic_form,
)
from lcdhull.enumerators import (
    binary_hull_invariant,
    ext_weight_enumerator,
    ext_weight_enumerator_oracle,
    reduced_ext_enumerator,
    spectrum_mod3,
    ternary_hull_invariant,
    tutte,
    tutte_from_ext,
    weight_enumerator,
)
from lcdhull.gf import FieldElement, FieldSpec, field_arith, field_make, field_of_order, is_irreducible
from lcdhull.lcdize import LcdizeResult, hlcdize, lcdize
from lcdhull.matfq import MatrixFq, det, mat_mul, nullspace, rank, rref, transpose
from lcdhull.poly import EisensteinInt, MultiPoly

__all__ = [
    "EisensteinInt", "FieldElement", "FieldSpec", "HullReport", "LcdizeResult", "LinearCode",
    "MatrixFq", "MonomialTransform", "MultiPoly", "apply_monomial", "binary_hull_invariant",
    "code_make", "det", "dual", "ext_weight_enumerator", "ext_weight_enumerator_oracle",
    "field_arith", "field_make", "field_of_order", "hermitian_dual", "hlcdize", "hull",
    "is_hermitian_lcd", "is_irreducible", "is_lcd", "lcdize", "mat_mul", "min_distance",
    "nullspace", "rank", "reduced_ext_enumerator", "rref", "spectrum_mod3", "star_scale",
    "structured_generator", "systematic_form", "ternary_hull_invariant", "transpose", "tutte",
    "tutte_from_ext", "weight_enumerator",
]

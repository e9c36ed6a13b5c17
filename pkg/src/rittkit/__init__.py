"""Distinct-degree polynomial collisions over finite fields.

Finite field and polynomial arithmetic, Dickson polynomials, tame
decomposition, the two normal forms of collisions g o h = g* o h*, and
exhaustive censuses checked against closed-form counts.
"""

from .census import CensusReport, census, frobenius_counts, image_size
from .counting import (
    CountQuery,
    CountResult,
    applicable_bounds,
    count_formula,
    decom_lower_bound,
    ffcharb_lower_bound,
    linear_closure_count,
)
from .decompose import Collision, Decomposition, find_collision, frobenius_decompose, tame_decompose
from .dickson import dickson
from .errors import CapExceeded, RecompositionError
from .field import GF, FieldElement, field_of_order, make_field
from .poly import LinearPair, Poly, compose, normalize_monic_original, second_normalize, shift
from .ritt import (
    FirstCaseForm,
    RittForm,
    SecondCaseForm,
    Unclassified,
    build_first_case,
    build_second_case,
    classify,
    extract_first_case,
    extract_second_case,
    reduce_vanishing,
    root_form_test,
    second_case_to_first,
    tornheim_split,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldElement",
    "make_field",
    "field_of_order",
    "Poly",
    "LinearPair",
    "compose",
    "shift",
    "second_normalize",
    "normalize_monic_original",
    "dickson",
    "Decomposition",
    "Collision",
    "tame_decompose",
    "find_collision",
    "frobenius_decompose",
    "FirstCaseForm",
    "SecondCaseForm",
    "RittForm",
    "Unclassified",
    "build_first_case",
    "build_second_case",
    "extract_first_case",
    "extract_second_case",
    "classify",
    "second_case_to_first",
    "root_form_test",
    "reduce_vanishing",
    "tornheim_split",
    "CountQuery",
    "CountResult",
    "count_formula",
    "applicable_bounds",
    "linear_closure_count",
    "decom_lower_bound",
    "ffcharb_lower_bound",
    "census",
    "CensusReport",
    "frobenius_counts",
    "image_size",
    "CapExceeded",
    "RecompositionError",
]

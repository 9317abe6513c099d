"""Exact computation of length functions of non-associative algebras.

The package computes, for an algebra given by a structure-constant table
and a finite set S of elements, the span filtration L_0 <= L_1 <= ... of
words in S, the characteristic sequence of dimension jumps, and the least k
with L_k equal to the whole algebra.  It ships the extremal example
families, verifiers for the addition-chain / power / Fibonacci bounds that
such sequences obey, and brute-force oracles (full bracketed-word
enumeration, and exhaustive l(A) over prime fields).

All arithmetic is exact: rationals or GF(p).
"""

from .algebra import Algebra, check_lc_basis, coerce_genset, validate_unital
from .bounds import (
    BoundCheck,
    BoundReport,
    ChainCheck,
    check_addition_chain,
    check_fibonacci_bound,
    check_power_bound,
    fibonacci,
    is_wellformed_sequence,
    verify_sequence,
)
from .echelon import EchelonSubspace, echelon_insert, subspace_contains
from .errors import (
    AlgLengthError,
    BadScalar,
    BudgetExceeded,
    DivisionByZero,
    DuplicateProduct,
    EmptyGeneratingSet,
    FieldMismatch,
    KOutOfRange,
    NoGeneratingSet,
    NonUnital,
    NotGenerating,
    NotLocallyComplex,
    ParseError,
    PrimeFieldNotAllowed,
    PrimeFieldRequired,
    RangeError,
    ShapeError,
    UnknownBasisName,
    WellformednessError,
)
from .families import FAMILY_NAMES, make_example
from .fields import GF, QQ, Field, PrimeField, RationalField, field_from_descriptor
from .fileformat import parse_algebra, parse_gens, serialize_algebra
from .length import (
    CharSeq,
    LayerState,
    LengthReport,
    STOP_CAP,
    STOP_FULL_DIM,
    STOP_LC_WINDOW,
    STOP_WINDOW,
    characteristic_sequence,
    charseq_from_dims,
    compute_length,
    default_cap,
    is_generating,
    layer_step,
)
from .oracle import (
    BruteForceResult,
    bracketed_word_count,
    brute_force_algebra_length,
    catalan,
    enumerate_words_spans,
    gaussian_binomial,
    iter_word_values,
    subspace_count,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgLengthError",
    "BadScalar",
    "BoundCheck",
    "BoundReport",
    "BruteForceResult",
    "BudgetExceeded",
    "ChainCheck",
    "CharSeq",
    "DivisionByZero",
    "DuplicateProduct",
    "EchelonSubspace",
    "EmptyGeneratingSet",
    "FAMILY_NAMES",
    "Field",
    "FieldMismatch",
    "GF",
    "KOutOfRange",
    "LayerState",
    "LengthReport",
    "NoGeneratingSet",
    "NonUnital",
    "NotGenerating",
    "NotLocallyComplex",
    "ParseError",
    "PrimeField",
    "PrimeFieldNotAllowed",
    "PrimeFieldRequired",
    "QQ",
    "RangeError",
    "RationalField",
    "STOP_CAP",
    "STOP_FULL_DIM",
    "STOP_LC_WINDOW",
    "STOP_WINDOW",
    "ShapeError",
    "UnknownBasisName",
    "WellformednessError",
    "bracketed_word_count",
    "brute_force_algebra_length",
    "catalan",
    "characteristic_sequence",
    "charseq_from_dims",
    "check_addition_chain",
    "check_fibonacci_bound",
    "check_lc_basis",
    "check_power_bound",
    "coerce_genset",
    "compute_length",
    "default_cap",
    "echelon_insert",
    "enumerate_words_spans",
    "fibonacci",
    "field_from_descriptor",
    "gaussian_binomial",
    "is_generating",
    "is_wellformed_sequence",
    "iter_word_values",
    "layer_step",
    "make_example",
    "parse_algebra",
    "parse_gens",
    "serialize_algebra",
    "subspace_contains",
    "subspace_count",
    "validate_unital",
    "verify_sequence",
]

"""Weighted moduli points, minimal models and minimal twists of superelliptic curves."""
from .arith import INF, DomainError, PrimeFactorization, factorize, is_prime, valuation
from .forms import BinaryForm, Gl2Transform, content_and_primitive, discriminant, transform
from .invariants import IGUSA_WEIGHTS, InvariantSystem, igusa_point, moduli_point, system_for
from .laska import LaskaReduction, WeierstrassEquation, c_invariants, laska_reduce, u_candidates
from .parser import ParseError, parse_form
from .reduction import (
    ReductionReport,
    SuperellipticCurve,
    is_minimal,
    minimal_model,
    minimal_twist,
    minimize_discriminant,
    reduction_exponents,
    scalar_twist,
    weighted_tuple_valuation,
)
from .weighted import (
    Height,
    PrimeExponentMap,
    WeightedPoint,
    WeightSystem,
    abs_wgcd,
    normalize,
    star,
    weighted_height,
    wgcd,
)

__all__ = [
    "INF",
    "DomainError",
    "PrimeFactorization",
    "factorize",
    "is_prime",
    "valuation",
    "BinaryForm",
    "Gl2Transform",
    "content_and_primitive",
    "discriminant",
    "transform",
    "IGUSA_WEIGHTS",
    "InvariantSystem",
    "igusa_point",
    "moduli_point",
    "system_for",
    "LaskaReduction",
    "WeierstrassEquation",
    "c_invariants",
    "laska_reduce",
    "u_candidates",
    "ParseError",
    "parse_form",
    "ReductionReport",
    "SuperellipticCurve",
    "is_minimal",
    "minimal_model",
    "minimal_twist",
    "minimize_discriminant",
    "reduction_exponents",
    "scalar_twist",
    "weighted_tuple_valuation",
    "Height",
    "PrimeExponentMap",
    "WeightedPoint",
    "WeightSystem",
    "abs_wgcd",
    "normalize",
    "star",
    "weighted_height",
    "wgcd",
]

__version__ = "0.1.0"

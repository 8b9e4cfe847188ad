"""Exact verification of q-Wolstenholme congruences.

Cyclotomic polynomials, arithmetic functions and quotient-ring arithmetic
over the rationals, plus checkers for the associated identities.
"""

__version__ = "0.1.0"

from .arith import (
    bernoulli_at_one,
    divisors,
    euler_phi,
    jordan_totient,
    mobius,
    ramanujan_closed,
    stirling_first,
)
from .cyclotomic import QuotientContext, ResidueClass, cyclotomic, q_integer, residue_inv, wolstenholme_modulus
from .errors import (
    BothZero,
    DivisionByZeroPolynomial,
    EmptyRange,
    InternalError,
    InvalidArgument,
    NotInvertible,
    ParseError,
)
from .polynomial import Polynomial, poly_derivative, poly_divrem, poly_eval, poly_gcd, poly_mul

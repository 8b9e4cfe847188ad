"""Exact checkers for the q-Wolstenholme identities and their ingredients.

Each ``*_check`` returns a :class:`CongruenceVerdict` whose witness is the
fully reduced difference of the two sides; the verdict holds exactly when
the witness is zero.  Congruences over a root of unity are evaluated in the
quotient ring Q[q]/(Phi_n), so no complex or floating-point arithmetic is
involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Union

from .arith import (
    bernoulli_at_one,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    jordan_totient,
    mobius,
    ramanujan_closed,
    stirling_first,
)
from .cyclotomic import (
    QuotientContext,
    ResidueClass,
    cyclotomic,
    q_integer,
    residue_inv,
    wolstenholme_modulus,
)
from .errors import InternalError, InvalidArgument
from .polynomial import ONE, Q, ZERO, Polynomial, poly_divrem, poly_gcd

Parameter = Union[int, tuple]


class Claim(str, Enum):
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    SHI_PAN = "shi-pan"
    LEMMA_LOGDERIV = "lemma-logderiv"
    LEMMA_LN_IDENTITY = "lemma-ln-identity"
    DERIVATIVE_FACTS = "derivative-facts"
    RAMANUJAN = "ramanujan"
    CLASSICAL = "classical"
    CYCLOTOMIC_SANITY = "cyclotomic-sanity"


@dataclass(frozen=True)
class CongruenceVerdict:
    """Outcome of one claim check.

    ``modulus`` is the zero polynomial for plain identities (congruence
    modulo 0 is equality).
    """

    claim: str
    parameter: Parameter
    holds: bool
    residue_witness: Polynomial
    modulus: Polynomial = ZERO
    notes: str = ""

    def __post_init__(self):
        if self.holds != self.residue_witness.is_zero():
            raise InternalError(
                f"{self.claim}({self.parameter}): holds={self.holds} but witness {self.residue_witness}"
            )

    @classmethod
    def failure(cls, claim: str, parameter: Parameter, notes: str) -> CongruenceVerdict:
        """A failed verdict for a case that could not be evaluated."""
        return cls(str(claim), parameter, False, ONE, ZERO, notes)

    def to_dict(self) -> dict:
        param = list(self.parameter) if isinstance(self.parameter, tuple) else self.parameter
        return {
            "claim": self.claim,
            "parameter": param,
            "holds": self.holds,
            "modulus": self.modulus.to_strings(),
            "residue_witness": self.residue_witness.to_strings(),
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CongruenceVerdict:
        param = d["parameter"]
        if isinstance(param, list):
            param = tuple(param)
        return cls(
            claim=d["claim"],
            parameter=param,
            holds=d["holds"],
            residue_witness=Polynomial.from_strings(d["residue_witness"]),
            modulus=Polynomial.from_strings(d["modulus"]),
            notes=d.get("notes", ""),
        )


def _verdict(claim: Claim, parameter, witness: Polynomial, modulus=ZERO, notes="") -> CongruenceVerdict:
    return CongruenceVerdict(claim.value, parameter, witness.is_zero(), witness, modulus, notes)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidArgument(msg)


def _units(n: int):
    return [k for k in range(1, n + 1) if gcd(n, k) == 1]


# -- definition-level congruence -------------------------------------------


def rational_congruence(num: Polynomial, den: Polynomial, modulus: Polynomial) -> tuple:
    """Decide ``num/den == 0 (mod modulus)`` straight from the definition.

    The fraction is brought to lowest terms; it is congruent to zero iff the
    modulus divides the numerator and the denominator is coprime to the
    modulus.  Returns ``(holds, witness, coprime)`` where ``witness`` is the
    image of the fraction in Q[q]/(modulus) (``None`` if not coprime).
    """
    if den.is_zero():
        raise InvalidArgument("zero denominator")
    g = poly_gcd(num, den) if not num.is_zero() else den.monic()
    num = poly_divrem(num, g)[0]
    den = poly_divrem(den, g)[0]
    if not poly_gcd(den, modulus).is_constant():
        return False, None, False
    divisible = poly_divrem(num, modulus)[1].is_zero()
    ctx = QuotientContext(modulus)
    witness = (ctx.reduce(num) * residue_inv(ctx.reduce(den))).representative
    if divisible != witness.is_zero():
        raise InternalError("divisibility and quotient-ring image disagree")
    return divisible, witness, True


def _sum_over_common_denominator(terms) -> tuple:
    """Sum fractions ``(num_k, den_k)`` over the product of denominators."""
    den = ONE
    for _, d in terms:
        den = den * d
    num = ZERO
    for n_k, d_k in terms:
        cofactor, rem = poly_divrem(den, d_k)
        if not rem.is_zero():
            raise InternalError("denominator product not divisible by a factor")
        num = num + n_k * cofactor
    return num, den


# -- sum over primitive roots of z/(1-z)^2 ----------------------------------


def theorem1_residue(n: int) -> ResidueClass:
    """Image of sum_{(n,k)=1} q^k / (1 - q^k)^2 in Q[q]/(Phi_n)."""
    _require(isinstance(n, int) and n >= 2, f"n must be >= 2, got {n!r}")
    ctx = QuotientContext(cyclotomic(n))
    total = ctx.zero
    one = ctx.one
    for k in _units(n):
        z = ctx.power_of_q(k)
        w = one - z
        total = total + z * residue_inv(w * w)
    return total


def theorem1_value(n: int):
    """The (constant) value of that sum, or ``None`` if nonconstant."""
    return theorem1_residue(n).constant_value()


def theorem1_check(n: int) -> CongruenceVerdict:
    residue = theorem1_residue(n)
    expected = Fraction(-jordan_totient(2, n), 12)
    witness = (residue - expected).representative
    value = residue.constant_value()
    notes = f"value={value}" if value is not None else "value nonconstant"
    return _verdict(Claim.THEOREM1, n, witness, residue.ctx.modulus, notes)


def theorem1_oracle(n: int) -> tuple:
    """Definition-level check of the root-of-unity sum over one common denominator."""
    _require(n >= 2, f"n must be >= 2, got {n!r}")
    terms = []
    for k in _units(n):
        qk = Polynomial.monomial(k)
        terms.append((qk, (ONE - qk) ** 2))
    num, den = _sum_over_common_denominator(terms)
    num = num + Fraction(jordan_totient(2, n), 12) * den
    return rational_congruence(num, den, cyclotomic(n))


# -- harmonic q-sum modulo [n] Phi_n -----------------------------------------


def theorem2_rhs(n: int) -> Polynomial:
    """(1-q) phi(n)/2 + (1-q)(1-q^n) J_2(n)/24."""
    one_minus_q = ONE - Q
    return one_minus_q * Fraction(euler_phi(n), 2) + one_minus_q * (
        ONE - Polynomial.monomial(n)
    ) * Fraction(jordan_totient(2, n), 24)


def harmonic_residue(n: int, ctx: QuotientContext = None) -> ResidueClass:
    """sum_{(n,k)=1, k<=n} 1/[k] folded term by term in Q[q]/(M).

    ``M`` defaults to [n] Phi_n(q).
    """
    _require(isinstance(n, int) and n >= 2, f"n must be >= 2, got {n!r}")
    if ctx is None:
        ctx = QuotientContext(wolstenholme_modulus(n))
    total = ctx.zero
    for k in _units(n):
        total = total + residue_inv(ctx.reduce(q_integer(k)))
    return total


def theorem2_check(n: int, check_square: bool = True) -> CongruenceVerdict:
    """Harmonic q-sum congruence modulo [n] Phi_n.

    With ``check_square`` the notes also record whether the congruence holds
    modulo the stronger [n]^2 (informational only).
    """
    modulus = wolstenholme_modulus(n)
    ctx = QuotientContext(modulus)
    rhs = theorem2_rhs(n)
    witness = (harmonic_residue(n, ctx) - ctx.reduce(rhs)).representative
    notes = ""
    if check_square:
        square = q_integer(n) ** 2
        if square == modulus:
            strong = witness.is_zero()
        else:
            sctx = QuotientContext(square)
            strong = (harmonic_residue(n, sctx) - sctx.reduce(rhs)).is_zero()
        notes = f"mod [n]^2: {'holds' if strong else 'fails'}"
    return _verdict(Claim.THEOREM2, n, witness, modulus, notes)


def theorem2_oracle(n: int, rhs: Polynomial = None) -> tuple:
    """Definition-level check of the harmonic congruence: one fraction, then the definition.

    ``rhs`` replaces the right side (used to compare nonzero witnesses).
    """
    _require(n >= 2, f"n must be >= 2, got {n!r}")
    if rhs is None:
        rhs = theorem2_rhs(n)
    terms = [(ONE, q_integer(k)) for k in _units(n)]
    num, den = _sum_over_common_denominator(terms)
    num = num - rhs * den
    return rational_congruence(num, den, wolstenholme_modulus(n))


# -- prime-modulus congruence mod [p]^2 and its sign variant ----------------


def shi_pan_rhs(p: int, printed: bool) -> Polynomial:
    """Right side modulo [p]^2: first term (p-1)(q-1)/2 if ``printed`` else (p-1)(1-q)/2."""
    first = (Q - ONE) if printed else (ONE - Q)
    tail = (ONE - Q) * (ONE - Polynomial.monomial(p)) * Fraction(p * p - 1, 24)
    return first * Fraction(p - 1, 2) + tail


def shi_pan_variants(p: int) -> dict:
    """Reduced residues of LHS - RHS modulo [p]^2 for both first-term signs."""
    _require(isinstance(p, int) and p >= 5 and is_prime(p), f"p must be a prime >= 5, got {p!r}")
    ctx = QuotientContext(q_integer(p) ** 2)
    lhs = ctx.zero
    for k in range(1, p):
        lhs = lhs + residue_inv(ctx.reduce(q_integer(k)))
    return {
        "printed": (lhs - ctx.reduce(shi_pan_rhs(p, True))).representative,
        "variant": (lhs - ctx.reduce(shi_pan_rhs(p, False))).representative,
        "modulus": ctx.modulus,
    }


def shi_pan_probe(p: int) -> CongruenceVerdict:
    """Check both sign variants; the verdict follows the (1-q) variant.

    Notes record the outcome of each variant.
    """
    v = shi_pan_variants(p)
    printed_ok = v["printed"].is_zero()
    variant_ok = v["variant"].is_zero()
    notes = (
        f"printed (p-1)(q-1)/2: {'holds' if printed_ok else 'fails'}; "
        f"variant (p-1)(1-q)/2: {'holds' if variant_ok else 'fails'}"
    )
    witness = v["variant"]
    if printed_ok and variant_ok:
        # the variants differ by (p-1)(q-1), which [p]^2 cannot divide
        raise InternalError(f"both sign variants hold at p={p}")
    return _verdict(Claim.SHI_PAN, p, witness, v["modulus"], notes)


# -- Ramanujan sums ------------------------------------------------------------


def ramanujan_residue(j: int, n: int) -> ResidueClass:
    """sum_{(n,k)=1} zeta^(kj) as a class in Q[q]/(Phi_n)."""
    _require(isinstance(j, int) and j >= 1, f"j must be >= 1, got {j!r}")
    _require(isinstance(n, int) and n >= 2, f"n must be >= 2, got {n!r}")
    ctx = QuotientContext(cyclotomic(n))
    total = ctx.zero
    for k in _units(n):
        total = total + ctx.power_of_q(k * j % n)
    return total


def ramanujan_oracle_check(j: int, n: int) -> CongruenceVerdict:
    residue = ramanujan_residue(j, n)
    closed = ramanujan_closed(j, n)
    witness = (residue - closed).representative
    return _verdict(Claim.RAMANUJAN, (j, n), witness, residue.ctx.modulus, f"closed={closed}")


# -- logarithmic derivatives of Phi_n at 1 ------------------------------------


def log_deriv_at_one(n: int, k: int) -> Fraction:
    """k-th derivative of ln Phi_n(z) at z = 1.

    Writing the k-th derivative as N_k / Phi^k: N_1 = Phi' and
    N_{k+1} = N_k' Phi - k N_k Phi'.
    """
    _require(isinstance(n, int) and n >= 2, f"n must be >= 2, got {n!r}")
    _require(isinstance(k, int) and k >= 1, f"k must be >= 1, got {k!r}")
    phi = cyclotomic(n)
    dphi = phi.derivative()
    num = dphi
    for i in range(1, k):
        num = num.derivative() * phi - i * num * dphi
    return num(1) / phi(1) ** k


def lemma_logderiv_rhs(n: int, k: int) -> Fraction:
    """sum_{j=1}^{k} B_j(1) s(k, j) / j * J_j(n)."""
    return sum(
        (bernoulli_at_one(j) * stirling_first(k, j) / j * jordan_totient(j, n) for j in range(1, k + 1)),
        Fraction(0),
    )


def lemma_b1_check(n: int, k: int) -> CongruenceVerdict:
    lhs = log_deriv_at_one(n, k)
    rhs = lemma_logderiv_rhs(n, k)
    return _verdict(Claim.LEMMA_LOGDERIV, (n, k), Polynomial.constant(lhs - rhs), notes=f"value={lhs}")


# -- the polynomial L_n ---------------------------------------------------------


@dataclass(frozen=True)
class LnPolynomial:
    """L_n(z) = sum_{k=1}^{n} mu(n/(n,k)) / phi(n/(n,k)) z^(k-1)."""

    n: int
    poly: Polynomial = field(repr=False)

    def __post_init__(self):
        if self.poly.degree != self.n - 1:
            raise InternalError(f"deg L_{self.n} != {self.n - 1}")


def build_Ln(n: int) -> LnPolynomial:
    _require(isinstance(n, int) and n >= 2, f"n must be >= 2, got {n!r}")
    coeffs = []
    for k in range(1, n + 1):
        m = n // gcd(n, k)
        coeffs.append(Fraction(mobius(m), euler_phi(m)))
    return LnPolynomial(n, Polynomial(coeffs))


def lemma_b2_check(n: int) -> CongruenceVerdict:
    """phi(n) Phi_n(z) L_n(z) == (z^n - 1) Phi_n'(z) as polynomials."""
    L = build_Ln(n).poly
    phi = cyclotomic(n)
    lhs = euler_phi(n) * phi * L
    rhs = (Polynomial.monomial(n) - ONE) * phi.derivative()
    return _verdict(Claim.LEMMA_LN_IDENTITY, n, lhs - rhs)


def derivative_facts(n: int) -> tuple:
    """(L_n(1), L_n'(1), L_n''(1))."""
    L = build_Ln(n).poly
    d1 = L.derivative()
    return L(1), d1(1), d1.derivative()(1)


def derivative_facts_expected(n: int) -> tuple:
    return (
        Fraction(0),
        Fraction(n, 2),
        Fraction(n * (n - 3), 2) + Fraction(n * jordan_totient(2, n), 6 * euler_phi(n)),
    )


def derivative_facts_check(n: int) -> CongruenceVerdict:
    """Witness coefficients are the three differences, in derivative order."""
    _require(isinstance(n, int) and n >= 2, f"n must be >= 2, got {n!r}")
    got = derivative_facts(n)
    want = derivative_facts_expected(n)
    witness = Polynomial([g - w for g, w in zip(got, want)])
    notes = "L(1)={}; L'(1)={}; L''(1)={}".format(*got)
    return _verdict(Claim.DERIVATIVE_FACTS, n, witness, notes=notes)


# -- classical Wolstenholme -----------------------------------------------------


def harmonic_number(m: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


def classical_wolstenholme_check(p: int) -> CongruenceVerdict:
    """Numerator of H_{p-1} modulo p^2; holds only for primes p >= 5.

    For parameters that are not primes >= 5 the witness is the numerator
    residue, or p itself when that residue happens to vanish.
    """
    _require(isinstance(p, int) and p >= 2, f"p must be >= 2, got {p!r}")
    h = harmonic_number(p - 1)
    residue = h.numerator % (p * p)
    eligible = p >= 5 and is_prime(p)
    notes = f"H_{p - 1} = {h}"
    if not eligible:
        notes += "; not a prime >= 5"
        if residue == 0:
            residue = p
    return _verdict(Claim.CLASSICAL, p, Polynomial.constant(residue), Polynomial.constant(p * p), notes)


# -- cyclotomic sanity ----------------------------------------------------------


def cyclotomic_value_at_one(n: int) -> int:
    """p if n is a power of the prime p, else 1 (n >= 2)."""
    f = factorize(n)
    return f[0][0] if len(f) == 1 else 1


def cyclotomic_sanity_check(n: int) -> CongruenceVerdict:
    """Product over divisors, degree, integrality and the value at 1.

    Witness: constant term is Phi_n(1) minus its expected value (n >= 2),
    q^1 the degree excess over phi(n), q^2 a nonintegrality flag, and from
    q^3 upward the difference prod_{d|n} Phi_d - (q^n - 1).
    """
    _require(isinstance(n, int) and n >= 1, f"n must be >= 1, got {n!r}")
    phi_n = cyclotomic(n)
    prod = ONE
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    diff = prod - (Polynomial.monomial(n) - ONE)
    value_gap = phi_n(1) - cyclotomic_value_at_one(n) if n >= 2 else Fraction(0)
    deg_gap = phi_n.degree - euler_phi(n)
    nonintegral = 0 if phi_n.is_integral() else 1
    witness = Polynomial([value_gap, deg_gap, nonintegral]) + diff * Polynomial.monomial(3)
    return _verdict(Claim.CYCLOTOMIC_SANITY, n, witness, notes=f"Phi_{n}(1)={phi_n(1)}")

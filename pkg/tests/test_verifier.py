from fractions import Fraction

import pytest

from qwol.cyclotomic import QuotientContext, cyclotomic, q_integer, wolstenholme_modulus
from qwol.errors import InternalError, InvalidArgument
from qwol.polynomial import ONE, Q, Polynomial
from qwol.verifier import (
    CongruenceVerdict,
    build_Ln,
    classical_wolstenholme_check,
    cyclotomic_sanity_check,
    derivative_facts,
    derivative_facts_check,
    harmonic_residue,
    lemma_b1_check,
    lemma_b2_check,
    lemma_logderiv_rhs,
    log_deriv_at_one,
    ramanujan_oracle_check,
    rational_congruence,
    shi_pan_probe,
    shi_pan_rhs,
    shi_pan_variants,
    theorem1_check,
    theorem1_oracle,
    theorem1_value,
    theorem2_check,
    theorem2_oracle,
    theorem2_rhs,
)

P = Polynomial


def test_theorem1_examples():
    assert theorem1_value(2) == Fraction(-1, 4)
    assert theorem1_value(5) == -2
    assert theorem1_value(6) == -2
    for n in (2, 5, 6):
        assert theorem1_check(n).holds


def test_theorem1_n6_against_definition_oracle():
    holds, witness, coprime = theorem1_oracle(6)
    assert holds and coprime and witness.is_zero()


def test_theorem1_oracle_small_range():
    for n in range(2, 21):
        assert theorem1_oracle(n)[0], n


def test_theorem1_rejects_small_n():
    with pytest.raises(InvalidArgument):
        theorem1_check(1)


def test_harmonic_residue_examples():
    assert harmonic_residue(2) == QuotientContext(wolstenholme_modulus(2)).one
    ctx = QuotientContext(wolstenholme_modulus(4))
    # k = 2 is filtered out by the coprimality condition
    from qwol.cyclotomic import residue_inv

    expected = residue_inv(ctx.reduce(q_integer(1))) + residue_inv(ctx.reduce(q_integer(3)))
    assert harmonic_residue(4, ctx) == expected
    ctx3 = QuotientContext(q_integer(3) ** 2)
    assert harmonic_residue(3, ctx3) == ctx3.reduce(theorem2_rhs(3))


def test_theorem2_n2_by_hand():
    diff = ONE - theorem2_rhs(2)
    # vanishes to order 2 at q = -1
    assert diff(-1) == 0 and diff.derivative()(-1) == 0
    assert theorem2_check(2).holds


@pytest.mark.parametrize("n", [2, 5, 6])
def test_theorem2_examples(n):
    v = theorem2_check(n)
    assert v.holds and v.modulus == wolstenholme_modulus(n)
    assert theorem2_oracle(n)[0]


def test_theorem2_oracle_agrees_on_nonzero_witnesses():
    for n in range(2, 16):
        rhs = theorem2_rhs(n) + Q**2 - Fraction(1, 3)
        ctx = QuotientContext(wolstenholme_modulus(n))
        fold = (harmonic_residue(n, ctx) - ctx.reduce(rhs)).representative
        holds, witness, coprime = theorem2_oracle(n, rhs)
        assert coprime and not holds
        assert witness == fold and not fold.is_zero()


def test_theorem2_square_modulus_notes():
    assert theorem2_check(5).notes == "mod [n]^2: holds"
    assert theorem2_check(4).notes == "mod [n]^2: fails"


def test_rational_congruence_definition():
    m = Q**2 + 1
    assert rational_congruence(m * (Q + 3), Q + 5, m)[0]
    holds, witness, coprime = rational_congruence(ONE, Q**2 + 1, m)
    assert not holds and not coprime and witness is None
    # common factors cancel before the coprimality test
    assert rational_congruence(m * (Q**2 + 1), Q**2 + 1, m)[0] is True
    assert rational_congruence(m * m, m, m)[0]


def test_shi_pan_examples():
    for p in (5, 7):
        v = shi_pan_probe(p)
        assert v.holds
        assert "printed (p-1)(q-1)/2: fails" in v.notes
        assert "variant (p-1)(1-q)/2: holds" in v.notes
    with pytest.raises(InvalidArgument):
        shi_pan_probe(3)
    with pytest.raises(InvalidArgument):
        shi_pan_probe(9)


def test_shi_pan_variant_is_theorem2_rhs():
    for p in (5, 7, 11, 13):
        assert shi_pan_rhs(p, printed=False) == theorem2_rhs(p)
        assert q_integer(p) ** 2 == wolstenholme_modulus(p)
        variants = shi_pan_variants(p)
        assert variants["variant"].is_zero() and not variants["printed"].is_zero()


def test_ramanujan_examples():
    v = ramanujan_oracle_check(2, 4)
    assert v.holds and v.notes == "closed=-2"
    assert ramanujan_oracle_check(6, 6).notes == "closed=2"
    assert ramanujan_oracle_check(1, 6).notes == "closed=1"


def test_log_deriv_examples():
    assert log_deriv_at_one(4, 1) == 1
    assert log_deriv_at_one(2, 2) == Fraction(-1, 4)
    assert log_deriv_at_one(3, 1) == 1
    with pytest.raises(InvalidArgument):
        log_deriv_at_one(1, 1)
    with pytest.raises(InvalidArgument):
        log_deriv_at_one(3, 0)


def test_log_deriv_against_direct_differentiation():
    # d^k/dz^k ln(1+z) = (-1)^(k-1) (k-1)! / (1+z)^k
    from math import factorial

    for k in range(1, 7):
        assert log_deriv_at_one(2, k) == Fraction((-1) ** (k - 1) * factorial(k - 1), 2**k)


def test_lemma_b1_examples():
    assert lemma_logderiv_rhs(2, 2) == Fraction(-1, 4)
    for n, k in ((2, 2), (4, 1), (6, 3)):
        assert lemma_b1_check(n, k).holds


def test_build_Ln_examples():
    assert build_Ln(2).poly == Q - 1
    assert build_Ln(3).poly == Q**2 - Q / 2 - Fraction(1, 2)
    for n in range(2, 40):
        L = build_Ln(n)
        assert L.poly.degree == n - 1 and L.poly(1) == 0
    with pytest.raises(InvalidArgument):
        build_Ln(1)


def test_lemma_b2_examples():
    assert (1 + Q) * (Q - 1) == Q**2 - 1
    lhs = 2 * (1 + Q + Q**2) * build_Ln(3).poly
    assert lhs == (Q**3 - 1) * (1 + 2 * Q)
    for n in (2, 3, 12):
        assert lemma_b2_check(n).holds


def test_derivative_facts_examples():
    assert derivative_facts(2)[1] == 1
    assert derivative_facts(3) == (0, Fraction(3, 2), 2)
    assert derivative_facts_check(10).holds


def test_classical_examples():
    v5 = classical_wolstenholme_check(5)
    assert v5.holds and "25/12" in v5.notes
    assert classical_wolstenholme_check(7).holds
    v3 = classical_wolstenholme_check(3)
    assert not v3.holds and v3.residue_witness == P([3])
    assert not classical_wolstenholme_check(4).holds


def test_cyclotomic_sanity():
    for n in (1, 2, 12, 97, 360):
        assert cyclotomic_sanity_check(n).holds


def test_verdict_invariant_enforced():
    with pytest.raises(InternalError):
        CongruenceVerdict("theorem1", 3, True, P([1]))
    with pytest.raises(InternalError):
        CongruenceVerdict("theorem1", 3, False, P())


def test_verdict_dict_round_trip():
    v = theorem2_check(6)
    assert CongruenceVerdict.from_dict(v.to_dict()) == v
    w = lemma_b1_check(4, 3)
    assert CongruenceVerdict.from_dict(w.to_dict()) == w

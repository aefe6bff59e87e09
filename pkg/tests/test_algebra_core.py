"""Exact ring arithmetic, normal ordering, parsing, and algebra properties."""

import random
from fractions import Fraction

import pytest

from darboux3.algebra import (
    Coefficient,
    GaussRat,
    OperatorExpr,
    ParseError,
    Poly,
    d_poly,
    divide_by_d,
    parse,
    weighted_adjoint,
)


def test_gauss_rational_arithmetic():
    a = GaussRat(Fraction(1, 2), 1)
    b = GaussRat(0, -2)
    assert a + b == GaussRat(Fraction(1, 2), -1)
    assert a * b == GaussRat(2, -1)  # (1/2 + i)(-2i) = -i + 2
    assert (a / a) == GaussRat(1)
    assert a.conjugate() == GaussRat(Fraction(1, 2), -1)
    assert not GaussRat(0, 0)
    with pytest.raises(ZeroDivisionError):
        a / GaussRat(0)


def test_divide_by_d_exact_and_refused():
    nq = 2
    d = d_poly(nq)
    s = Poly.variable(nq, 0, 2) + Poly.variable(nq, 1)  # q1^2 + q2
    assert divide_by_d(d * s) == s
    assert divide_by_d(d * d * s) == d * s
    assert divide_by_d(s) is None
    assert divide_by_d(Poly.constant(nq, 3)) is None
    assert divide_by_d(Poly.zero(nq)).is_zero()


def test_coefficient_canonical_form():
    nq = 2
    d = d_poly(nq)
    # D^2*q1 / D^3 reduces to q1/D
    c = Coefficient(d * d * Poly.variable(nq, 0), 3)
    assert c.dpow == 1
    assert c.num == Poly.variable(nq, 0)
    # zero is unique
    z = Coefficient(Poly.zero(nq), 5)
    assert z.dpow == 0 and z.is_zero()
    # sums recombine: q1/D + lambda*q1*q^2/D = q1 * D / D = q1
    lam_q2 = d - Poly.constant(nq, 1)
    total = Coefficient(Poly.variable(nq, 0), 1) + Coefficient(lam_q2 * Poly.variable(nq, 0), 1)
    assert total.dpow == 0
    assert total.num == Poly.variable(nq, 0)


def test_canonical_commutation_relation():
    assert parse("q1*p1 - p1*q1", 2) == parse("i*hbar", 2)
    assert parse("q1*p2 - p2*q1", 2).is_zero()
    assert parse("p1*q1", 2) == parse("q1*p1 - i*hbar", 2)


def test_momentum_past_d_inverse():
    # p1 * D^-1 = D^-1 p1 + 2 i hbar lambda q1 D^-2 (hand differentiation)
    lhs = parse("p1 * D^-1", 2)
    rhs = parse("(1/D)*p1 + 2*i*hbar*lambda*q1/(D^2)", 2)
    assert lhs == rhs


def test_identity_and_scalars():
    x = parse("(1/(2*D))*(p1^2+p2^2)", 2)
    assert x * OperatorExpr.identity(2) == x
    assert OperatorExpr.identity(2) * x == x
    assert (x - x).is_zero()
    assert x + OperatorExpr.zero(2) == x


def test_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        parse("q1 +* p1", 2)
    with pytest.raises(ParseError):
        parse("q3", 2)  # index out of range
    with pytest.raises(ParseError):
        parse("1/(q1)", 2)  # division by a non-scalar
    with pytest.raises(ParseError):
        parse("1/(D+q1)", 2)
    with pytest.raises(ParseError):
        parse("p1^(-1)", 2)  # momentum is not invertible
    with pytest.raises(ParseError):
        parse("q1 @ p1", 2)
    err = None
    try:
        parse("q1 * (p1", 2)
    except ParseError as exc:
        err = exc
    assert err is not None and err.pos >= 0


def test_parse_division_by_d_powers_and_scalars():
    assert parse("D^2/D^2", 2) == OperatorExpr.identity(2)
    assert parse("(3/4)*D/D", 2) == parse("3/4", 2)
    assert parse("1/(2*D^2)", 2) == parse("(1/2) * D^-2", 2)
    assert parse("D^(-2)*D^2", 2) == OperatorExpr.identity(2)


def _random_expression(rng, depth=0):
    atoms = ["q1", "q2", "p1", "p2", "lambda", "omega", "hbar", "D", "i", "2", "3"]
    if depth > 2 or rng.random() < 0.35:
        return rng.choice(atoms)
    op = rng.choice(["+", "-", "*", "*"])
    return f"({_random_expression(rng, depth + 1)} {op} {_random_expression(rng, depth + 1)})"


def test_parse_multiplicativity_randomized():
    # parse(a)*parse(b) == parse("(a)*(b)") for random expression pairs
    rng = random.Random(20240817)
    for _ in range(40):
        a = _random_expression(rng)
        b = _random_expression(rng)
        assert parse(a, 2) * parse(b, 2) == parse(f"({a})*({b})", 2)


def _random_operator(rng, nq=2):
    out = OperatorExpr.zero(nq)
    for _ in range(rng.randint(1, 3)):
        text = _random_expression(rng)
        out = out + parse(text, nq)
    return out


def test_jacobi_identity_randomized():
    rng = random.Random(99)
    for _ in range(12):
        a, b, c = (_random_operator(rng) for _ in range(3))
        jac = (
            a.commutator(b).commutator(c)
            + b.commutator(c).commutator(a)
            + c.commutator(a).commutator(b)
        )
        assert jac.is_zero()


def test_conjugation_is_homomorphism_and_invertible():
    rng = random.Random(7)
    a = Fraction(3, 4)
    for _ in range(8):
        x = _random_operator(rng)
        y = _random_operator(rng)
        lhs = (x * y).conjugate_by_d_power(a)
        rhs = x.conjugate_by_d_power(a) * y.conjugate_by_d_power(a)
        assert lhs == rhs
        assert x.conjugate_by_d_power(a).conjugate_by_d_power(-a) == x
    assert parse("q1*p2", 2).conjugate_by_d_power(0) == parse("q1*p2", 2)


def test_adjoint_is_involutive_and_antimultiplicative():
    rng = random.Random(13)
    for _ in range(8):
        x = _random_operator(rng)
        y = _random_operator(rng)
        assert x.adjoint().adjoint() == x
        assert (x * y).adjoint() == y.adjoint() * x.adjoint()


def test_weighted_adjoint_reduces_to_plain_adjoint():
    x = parse("q1*p1^2 + i*lambda*p2", 2)
    assert weighted_adjoint(x, 0) == x.adjoint()


def test_substitute_lambda_zero():
    x = parse("(1/(2*D))*(p1^2+p2^2) + (omega^2/(2*D))*(q1^2+q2^2)", 2)
    flat = x.substitute_lambda_zero()
    assert flat == parse("(1/2)*(p1^2+p2^2) + (omega^2/2)*(q1^2+q2^2)", 2)


def test_printing_roundtrip_is_stable():
    x = parse("(1/(2*D))*p1^2 - (i*hbar*lambda*q1/(D^2))*p1", 2)
    assert parse(str(x), 2) == x

from __future__ import annotations

from fractions import Fraction

import pytest

from hfg.errors import BlockMismatchError, DomainError, ParseError
from hfg.polycore import (
    PLANE,
    Polynomial,
    VariableBlock,
    format_rational,
    hadamard_transform,
    irrelevant_power,
    monomials_of_degree,
    parse_rational,
    variables,
)

X0, X1, X2 = variables(PLANE)


def test_rational_round_trip():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(5)) == "5"
    with pytest.raises(ParseError):
        parse_rational("not a number")


def test_zero_polynomial_has_no_terms():
    z = Polynomial.zero(PLANE)
    assert z.is_zero
    assert not z.terms
    assert (X0 - X0).is_zero


def test_no_zero_coefficients_survive_arithmetic():
    p = X0 + X1
    q = X0 - X1
    s = p + q  # 2*x0
    assert list(s.terms.values()) == [Fraction(2)]
    assert (p * q).terms == (X0 * X0 - X1 * X1).terms


def test_string_round_trip():
    p = Polynomial.from_string(PLANE, "x0^2 - 1/2*x1*x2")
    assert p.to_string() == "x0^2 - 1/2*x1*x2"
    assert Polynomial.from_string(PLANE, p.to_string()) == p
    with pytest.raises(ParseError):
        Polynomial.from_string(PLANE, "x9 + 1")


def test_json_terms_round_trip():
    p = X0 * X0 - Fraction(1, 2) * X1 * X2
    data = p.to_json_terms()
    assert data == [["1", [2, 0, 0]], ["-1/2", [0, 1, 1]]]
    assert Polynomial.from_json_terms(PLANE, data) == p


def test_homogeneity_and_degree():
    assert (X0 * X1 - X2 * X2).is_homogeneous()
    assert not (X0 + X1 * X2).is_homogeneous()
    assert (X0 * X1 * X2).total_degree() == 3
    assert Polynomial.zero(PLANE).total_degree() == -1


def test_evaluation():
    p = X0 * X0 + X1 - X2
    assert p.evaluate((Fraction(2), Fraction(1), Fraction(3))) == Fraction(2)


def test_block_mismatch_rejected():
    other = VariableBlock(("y0", "y1"))
    q = Polynomial.from_string(other, "y0 + y1")
    with pytest.raises(BlockMismatchError):
        (X0 + X1) + q


def test_power_operator():
    p = X0 - X1
    assert p ** 1 == p
    assert p ** 2 == p * p
    assert (p ** 3).coefficient((2, 1, 0)) == Fraction(-3)


def test_hadamard_transform_rescales_coefficients():
    f = X0 + X1 + X2
    g = hadamard_transform(f, (Fraction(1), Fraction(2), Fraction(4)))
    assert g == X0 + Fraction(1, 2) * X1 + Fraction(1, 4) * X2


def test_hadamard_transform_identity_point():
    f = X0 * X0 - 3 * X1 * X2
    assert hadamard_transform(f, (Fraction(1), Fraction(1), Fraction(1))) == f


def test_hadamard_transform_round_trip():
    f = 2 * X0 * X0 - X1 * X2 + Fraction(1, 3) * X2 * X2
    coords = (Fraction(1), Fraction(-2), Fraction(3, 5))
    g = hadamard_transform(f, coords)
    assert g.scale_variables(coords) == f
    assert set(g.terms) == set(f.terms)


def test_hadamard_transform_rejects_zero_coordinate():
    with pytest.raises(DomainError):
        hadamard_transform(X0 + X1, (Fraction(1), Fraction(0), Fraction(1)))


def test_irrelevant_power_monomial_counts():
    assert {g.to_string() for g in irrelevant_power(1).generators} == {"x0", "x1", "x2"}
    assert len(irrelevant_power(2).generators) == 6
    assert len(irrelevant_power(3).generators) == 10
    with pytest.raises(DomainError):
        irrelevant_power(0)


def test_monomials_of_degree():
    quadrics = list(monomials_of_degree(PLANE, 2))
    assert len(quadrics) == 6
    assert all(sum(e) == 2 for e in quadrics)
    assert list(monomials_of_degree(PLANE, -1)) == []

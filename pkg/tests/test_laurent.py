from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gl11.laurent import (
    LaurentPoly,
    NotDivisible,
    exact_div,
    parse,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
)

q = LaurentPoly.q()

polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-5, 5), max_size=5
).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())

SAMPLE_POINTS = [Fraction(2), Fraction(3), Fraction(-1, 2), Fraction(5, 3)]


def schoolbook(a: LaurentPoly, b: LaurentPoly) -> dict[int, int]:
    # independent product: coefficient lists over a common offset
    if a.is_zero() or b.is_zero():
        return {}
    lo = a.min_degree() + b.min_degree()
    da = [a.coeff(e) for e in range(a.min_degree(), a.max_degree() + 1)]
    db = [b.coeff(e) for e in range(b.min_degree(), b.max_degree() + 1)]
    out = [0] * (len(da) + len(db) - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            out[i + j] += x * y
    return {lo + k: c for k, c in enumerate(out) if c}


def test_canonical_string():
    assert str(q**-2 + 1 + q**2) == "q^-2 + 1 + q^2"
    assert str(LaurentPoly.ZERO) == "0"
    assert str(-q) == "-q"
    assert str(3 * q**-1 - 2) == "3q^-1 - 2"


def test_parse_accepts_variants():
    assert parse("2*q^3 - q^(-1) + 4") == 2 * q**3 - q**-1 + 4
    assert parse("-q") == -q
    assert parse("0") == LaurentPoly.ZERO
    with pytest.raises(ValueError):
        parse("q^")
    with pytest.raises(ValueError):
        parse("")
    with pytest.raises(ValueError):
        parse("q q")


@given(polys)
def test_string_round_trip(p):
    assert parse(str(p)) == p


@given(polys, polys)
def test_product_matches_schoolbook(a, b):
    assert (a * b).terms == schoolbook(a, b)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.ZERO


@given(polys, polys)
def test_evaluation_is_a_homomorphism(a, b):
    for x in SAMPLE_POINTS:
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


@given(polys, nonzero_polys)
def test_exact_division_inverts_multiplication(a, b):
    assert exact_div(a * b, b) == a
    assert (a * b) // b == a


def test_inexact_division_raises():
    with pytest.raises(NotDivisible):
        exact_div(q + 1, q + 2)
    with pytest.raises(NotDivisible):
        exact_div(LaurentPoly.const(3), LaurentPoly.const(2))
    with pytest.raises(ZeroDivisionError):
        exact_div(q, LaurentPoly.ZERO)


def test_negative_powers_of_units():
    assert q**-3 * q**3 == LaurentPoly.ONE
    assert (-q) ** -1 == -(q**-1)
    with pytest.raises(NotDivisible):
        (q + 1) ** -1


@pytest.mark.parametrize("n", range(-4, 8))
def test_quantum_integer_closed_form(n):
    for x in SAMPLE_POINTS:
        if x * x == 1:
            continue
        expected = (x**n - x**-n) / (x - 1 / x)
        assert quantum_integer(n).evaluate(x) == expected


def test_quantum_integer_values():
    assert quantum_integer(0) == 0
    assert quantum_integer(1) == 1
    assert quantum_integer(2) == q + q**-1
    assert quantum_integer(-3) == -quantum_integer(3)
    assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)


def test_quantum_binomial_values():
    assert str(quantum_binomial(4, 2)) == "q^-4 + q^-2 + 2 + q^2 + q^4"
    assert quantum_binomial(5, 0) == 1
    assert quantum_binomial(2, 3) == 0
    assert quantum_binomial(-1, 1) == -1
    with pytest.raises(ValueError):
        quantum_binomial(3, -1)


@pytest.mark.parametrize("a", range(-3, 8))
@pytest.mark.parametrize("t", range(1, 5))
def test_quantum_pascal_rule(a, t):
    # [a, t] = q^-t [a-1, t] + q^(a-t) [a-1, t-1]
    lhs = quantum_binomial(a, t)
    rhs = q**-t * quantum_binomial(a - 1, t) + q ** (a - t) * quantum_binomial(a - 1, t - 1)
    assert lhs == rhs


@pytest.mark.parametrize("t", range(6))
def test_binomial_with_top_minus_one(t):
    assert quantum_binomial(-1, t) == (-1) ** t


@given(polys)
def test_bar_is_an_involution(p):
    assert p.bar().bar() == p
    assert (p * q).bar() == p.bar() * q**-1


def test_is_unit_and_degrees():
    assert (-(q**4)).is_unit()
    assert not (2 * q).is_unit()
    assert (q**-2 + q**3).min_degree() == -2
    assert (q**-2 + q**3).max_degree() == 3
    with pytest.raises(ValueError):
        LaurentPoly.ZERO.max_degree()
    assert (q + 1).substitute_power(2) == q**2 + 1


def test_add_and_mul_examples():
    from gl11.laurent import add, mul

    assert add(q, -q) == 0
    assert str(add(q + q**-1, LaurentPoly.ONE)) == "q^-1 + 1 + q"
    two = quantum_integer(2)
    assert mul(two, two) == add(quantum_integer(3), quantum_integer(1))
    assert str(mul(two, two)) == "q^-2 + 2 + q^2"
    assert mul(q, q**-1) == 1
    assert mul(q - q**-1, two) == q**2 - q**-2


def test_exact_div_examples():
    assert exact_div(q**2 - q**-2, q - q**-1) == q + q**-1
    assert exact_div(q**2 + 2 + q**-2, q + q**-1) == q + q**-1
    with pytest.raises(NotDivisible):
        exact_div(LaurentPoly.ONE, q + q**-1)


@pytest.mark.parametrize("a", range(-5, 6))
@pytest.mark.parametrize("b", range(-5, 6))
def test_quantum_integer_three_term_identity(a, b):
    qi = quantum_integer
    assert qi(a) * qi(b + 1) - qi(b) * qi(a + 1) - qi(a - b) == 0


@pytest.mark.parametrize("n", range(21))
def test_quantum_integer_is_odd(n):
    assert quantum_integer(-n) == -quantum_integer(n)


@pytest.mark.parametrize("a", range(-6, 7))
@pytest.mark.parametrize("t", range(0, 7))
def test_binomial_pascal_mirror_and_classical_limit(a, t):
    from math import factorial

    lhs = quantum_binomial(a, t)
    if t >= 1:
        rhs = q**t * quantum_binomial(a - 1, t) + q ** (t - a) * quantum_binomial(a - 1, t - 1)
        assert lhs == rhs
    falling = 1
    for j in range(t):
        falling *= a - j
    assert lhs.evaluate(1) == falling // factorial(t)

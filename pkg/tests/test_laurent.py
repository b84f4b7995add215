import pytest
from hypothesis import given, strategies as st

from braidwalks.laurent import LaurentPolynomial

laurents = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=6
).map(LaurentPolynomial)


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({0: 1, 3: 0, -2: 5})
    assert p.terms == {0: 1, -2: 5}


def test_basic_arithmetic():
    p = LaurentPolynomial({1: 2, -1: 1})
    q = LaurentPolynomial({1: -2, 0: 3})
    assert (p + q).terms == {-1: 1, 0: 3}
    assert (p - p).is_zero()
    assert (p * q).terms == {2: -4, 1: 6, 0: -2, -1: 3}
    assert p * 0 == LaurentPolynomial.zero()


def test_degree_valuation_coefficient():
    p = LaurentPolynomial({-2: 1, 3: -4})
    assert p.degree() == 3
    assert p.valuation() == -2
    assert p.coefficient(3) == -4
    assert p.coefficient(0) == 0
    with pytest.raises(ValueError):
        LaurentPolynomial.zero().degree()


def test_pow():
    q = LaurentPolynomial.term(1)
    assert (q ** 3).terms == {3: 1}
    one_minus_q = LaurentPolynomial.one() - q
    assert (one_minus_q ** 2).terms == {0: 1, 1: -2, 2: 1}
    with pytest.raises(ValueError):
        q ** -1


def test_shifted():
    p = LaurentPolynomial({0: 1, 2: -1})
    assert p.shifted(-3).terms == {-3: 1, -1: -1}
    assert p.shifted(1, -2).terms == {1: -2, 3: 2}


def test_exact_div():
    one = LaurentPolynomial.one()
    q = LaurentPolynomial.term(1)
    num = one - q ** 2
    den = one - q
    assert num.exact_div(den) == one + q
    with pytest.raises(ValueError):
        (one - q ** 2 + q ** 5).exact_div(den)
    with pytest.raises(ZeroDivisionError):
        one.exact_div(LaurentPolynomial.zero())


def test_str_ascending():
    p = LaurentPolynomial({2: 1, -2: 1, -1: -1, 0: 1, 1: -1})
    assert str(p) == "q^-2 - q^-1 + 1 - q + q^2"
    assert str(LaurentPolynomial.zero()) == "0"
    assert str(LaurentPolynomial({3: -2})) == "-2q^3"
    assert str(LaurentPolynomial({1: 1})) == "q"


def test_json_round_trip():
    p = LaurentPolynomial({-4: 3, 0: -1, 7: 2})
    assert LaurentPolynomial.from_json(p.to_json()) == p


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(laurents, laurents)
def test_division_inverts_multiplication(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a

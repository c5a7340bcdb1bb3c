import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import laurent_polys
from hecke_starnet.errors import InexactDivision, InputError
from hecke_starnet.laurent import ONE, ZERO, LaurentPoly, classify, half_power


def test_rendering(q):
    assert str((1 + q) ** 2) == "1 + 2*q + q^2"
    assert str(half_power(-5)) == "q^(-5/2)"
    assert str(half_power(1) - half_power(-1)) == "-q^(-1/2) + q^(1/2)"
    assert str(ZERO) == "0"
    assert str(LaurentPoly.const(-3)) == "-3"
    assert str(q + 3 * q**2 + 3 * q**3 + q**4) == "q + 3*q^2 + 3*q^3 + q^4"


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({0: 1, 2: 0, 4: -1}) + LaurentPoly({4: 1})
    assert p.terms == {0: 1}
    assert LaurentPoly([(1, 2), (1, -2)]).is_zero()


def test_integer_interplay(q):
    assert q + 1 == 1 + q
    assert 2 - q == -(q - 2)
    assert (q * 0).is_zero()
    assert ONE == 1


def test_negative_powers_only_for_unit_monomials(q):
    assert q ** -2 == half_power(-4)
    with pytest.raises(ValueError):
        (1 + q) ** -1


def test_exact_division(q):
    num = (1 + q) * (q**2 - 3 * half_power(1))
    assert num.exact_div(1 + q) == q**2 - 3 * half_power(1)
    with pytest.raises(InexactDivision):
        (1 + q**2).exact_div(1 + q)
    with pytest.raises(InexactDivision):
        LaurentPoly.const(3).exact_div(LaurentPoly.const(2))
    with pytest.raises(ZeroDivisionError):
        q.exact_div(ZERO)


@given(laurent_polys(), laurent_polys())
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(laurent_polys())
def test_text_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a


@given(laurent_polys())
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(laurent_polys(), st.integers(-5, 5))
def test_shift_is_monomial_product(a, k):
    assert a.shift(k) == a * half_power(k)


def test_parse_forms(q):
    assert LaurentPoly.parse("1+q") == 1 + q
    assert LaurentPoly.parse("2q^2 - q^-1") == 2 * q**2 - half_power(-2)
    assert LaurentPoly.parse("q^(3/2)") == half_power(3)
    for bad in ["", "1+", "q^(1/3)", "x", "q2"]:
        with pytest.raises(InputError):
            LaurentPoly.parse(bad)


def test_classify(q):
    assert classify(q + 3 * q**2) == (True, 4)
    assert classify(q - 1) == (False, 0)
    assert classify(half_power(1)) == (False, 1)
    assert classify(half_power(-2)) == (False, 1)
    assert classify(ZERO) == (True, 0)

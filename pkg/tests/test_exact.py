from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from laurentcm.errors import DivisionByZero, EvaluationPole, NonInvertible, UnitMismatch, Unsupported
from laurentcm.exact import (ImagQuadratic, OMEGA, PI, Poly, QSeries, RatFunc, SQRT2, SQRT3, ScaledScalar,
                             T, Taylor, TruncSeries, ZERO_DEGREE, ratfunc_normalize, scalar_mul,
                             series_exp, series_invert, sqrt_rational)
from strategies import polys, ratfuncs, rationals, trunc_series


# ScaledScalar

def test_sqrt3_squared_is_three():
    assert scalar_mul(SQRT3, SQRT3) == 3


def test_unit_exponents_add():
    a = ScaledScalar.of(-2, pi=1, omega=6)
    assert scalar_mul(a, ScaledScalar.of(1, pi=-1)) == ScaledScalar.of(-2, omega=6)


def test_inverse_units_cancel():
    assert scalar_mul(ScaledScalar.of(Fraction(1, 9), pi=-2), ScaledScalar.of(9, pi=2)) == 1


def test_sqrt6_squared():
    assert (SQRT2 * SQRT3) ** 2 == 6


def test_mixed_units_rejected():
    with pytest.raises(UnitMismatch):
        PI + OMEGA
    with pytest.raises(UnitMismatch):
        ScaledScalar.of(1, pi=1) - 1


def test_zero_ignores_units():
    z = ScaledScalar.zero()
    assert z == ScaledScalar({}, 3, 7)
    assert z + PI == PI
    assert (PI - PI) == 0


def test_inverse_of_field_element():
    x = ScaledScalar({(0, 0): 1, (1, 0): 1, (0, 1): 2, (1, 1): -1}, 2, -3)
    assert x * x.inverse() == 1
    assert x / x == 1


def test_sqrt_rational():
    assert sqrt_rational(Fraction(3, 4)) == ScaledScalar.of(Fraction(1, 2), e3=1)
    assert sqrt_rational(Fraction(1, 6)) == ScaledScalar.of(Fraction(1, 6), e2=1, e3=1)
    assert sqrt_rational(0) == 0
    with pytest.raises(Unsupported):
        sqrt_rational(5)


def test_scalar_json_round_trip():
    x = ScaledScalar({(0, 1): Fraction(-8, 3)}, Fraction(1, 2), 4)
    assert ScaledScalar.from_json(x.to_json()) == x
    assert x.to_json()["terms"] == [{"rho": [-8, 3], "e2": 0, "e3": 1}]


def test_scalar_numeric():
    x = ScaledScalar.of(2, e3=1, pi=1, omega=2)
    assert x.numeric(0.5) == pytest.approx(2 * 3 ** 0.5 * 3.141592653589793 * 0.25)


@st.composite
def field_elements(draw):
    keys = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return ScaledScalar({k: draw(rationals) for k in keys}, draw(st.integers(-2, 2)), draw(st.integers(-2, 2)))


@given(field_elements(), field_elements(), field_elements())
def test_scalar_mul_associative_and_commutative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


# Poly / RatFunc

def test_zero_polynomial_degree():
    assert Poly().degree == ZERO_DEGREE
    assert Poly((0, 0)).is_zero()


def test_ratfunc_normalize_cancels():
    assert ratfunc_normalize(T ** 2 - 1, T - 1) == RatFunc(T + 1)


def test_ratfunc_zero():
    r = ratfunc_normalize(Poly(), T ** 3)
    assert r.num.is_zero() and r.den == Poly((1,))


def test_ratfunc_already_reduced():
    r = ratfunc_normalize(T ** 2 * 11, (T ** 3 - 1) * 9)
    assert r.num == T ** 2 * Fraction(11, 9)
    assert r.den == T ** 3 - 1


def test_ratfunc_zero_denominator():
    with pytest.raises(DivisionByZero):
        ratfunc_normalize(T, Poly())


def test_ratfunc_pole_evaluation():
    with pytest.raises(EvaluationPole):
        RatFunc(1, T - 1)(1)


@given(polys(), polys(), polys())
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_ratfunc_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(ratfuncs(), ratfuncs(), rationals)
def test_ratfunc_agrees_with_evaluation(f, g, t0):
    assume(f.den(t0) != 0 and g.den(t0) != 0)
    assert (f + g)(t0) == f(t0) + g(t0)
    assert (f - g)(t0) == f(t0) - g(t0)
    assert (f * g)(t0) == f(t0) * g(t0)
    if g(t0) != 0:
        assert (f / g)(t0) == f(t0) / g(t0)


@given(ratfuncs())
def test_ratfunc_is_reduced(r):
    from laurentcm.exact import poly_gcd
    assert poly_gcd(r.num, r.den).degree <= 0 or r.num.is_zero()
    assert r.den.lead() == 1


def test_poly_divmod():
    q, r = (T ** 3 + 2).divmod(T - 1)
    assert q * (T - 1) + r == T ** 3 + 2
    assert r == 3


# TruncSeries

def test_geometric_inverse():
    s = series_invert(TruncSeries(0, [1, 1], 3))
    assert s.items() == [(0, 1), (1, -1), (2, 1)] and s.trunc == 3


def test_shifted_geometric_inverse():
    s = series_invert(TruncSeries(1, [1, 1], 4))
    assert s.lowest == -1 and s.trunc == 2
    assert [s[n] for n in range(-1, 2)] == [1, -1, 1]


def test_example_p0_inverse_lead():
    p0 = RatFunc(T ** 2 * 27, (T ** 3 - 1) * 4)
    inv = series_invert(TruncSeries(0, [p0, RatFunc(T)], 3))
    assert inv[0] == RatFunc((T ** 3 - 1) * 4, T ** 2 * 27)
    assert inv[0] * p0 == 1


def test_zero_lead_not_invertible():
    with pytest.raises(NonInvertible):
        series_invert(TruncSeries(0, [], 3))


@given(trunc_series(invertible=True))
def test_double_inverse(s):
    back = series_invert(series_invert(s))
    assert back == s


@given(trunc_series(invertible=True))
def test_inverse_product_is_one(s):
    prod = s * series_invert(s)
    assert all(prod[n] == (1 if n == 0 else 0) for n in range(prod.lowest, prod.trunc))


@given(trunc_series(), trunc_series(), trunc_series())
def test_series_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_truncation_is_pessimistic():
    a = TruncSeries(-1, [1, 2, 3], 2)
    b = TruncSeries(2, [1], 5)
    assert (a * b).trunc == min(2 + 2, 5 - 1)
    assert (a + b).trunc == 2


def test_series_exp():
    e = series_exp(TruncSeries(1, [1], 5))
    assert [e[n] for n in range(5)] == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]


# Taylor ring

@given(ratfuncs(), ratfuncs(), rationals)
def test_taylor_matches_ratfunc(f, g, t0):
    assume(f.den(t0) != 0 and g.den(t0) != 0)
    tf, tg = Taylor.of(f, t0, 6), Taylor.of(g, t0, 6)
    assert (tf * tg)(t0) == (f * g)(t0)
    assert (tf + tg).deriv()(t0) == (f + g).deriv()(t0)
    assert tf.deriv().deriv()(t0) == f.deriv().deriv()(t0)


def test_taylor_inverse_of_zero_value():
    with pytest.raises(EvaluationPole):
        Taylor.of(T, 0, 4).inverse()


# QSeries

def test_qseries_fractional_product():
    a = QSeries(3, {(None, -1): 1}, 1)
    b = QSeries(2, {(None, 1): 1}, 2)
    p = a * b
    assert p.den == 6 and p.terms == {(None, 1): 1} and p.weight == 3


def test_qseries_no_stored_zeros():
    a = QSeries(1, {(None, 1): 1, (None, 2): 0})
    assert (None, 2) not in a.terms
    assert not (a - a).terms


def test_qseries_vector_labels():
    a = QSeries(1, {("x", 0): 2}, labels={"x", "y"})
    b = QSeries(1, {("y", 1): 3}, labels={"y"})
    s = a + b
    assert s.labels == {"x", "y"} and s.coefficient(1, "y") == 3


def test_imag_quadratic_arithmetic():
    w = ImagQuadratic(Fraction(-1, 2), Fraction(1, 2), 3)
    assert w ** 3 == 1
    assert (w * w.conj()).norm() == 1

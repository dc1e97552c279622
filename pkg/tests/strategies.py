"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from laurentcm.exact import Poly, RatFunc, TruncSeries

small_int = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
half_integers = st.builds(lambda n: Fraction(n, 2), st.integers(-9, 9))


@st.composite
def polys(draw, max_degree=3):
    return Poly(draw(st.lists(rationals, max_size=max_degree + 1)))


@st.composite
def nonzero_polys(draw, max_degree=3):
    p = draw(polys(max_degree))
    return p if not p.is_zero() else Poly((draw(st.integers(1, 5)),))


@st.composite
def ratfuncs(draw):
    return RatFunc(draw(polys(2)), draw(nonzero_polys(2)))


@st.composite
def trunc_series(draw, invertible=False):
    lo = draw(st.integers(-2, 2))
    coeffs = draw(st.lists(rationals, min_size=1, max_size=5))
    if invertible and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    trunc = lo + len(coeffs) + draw(st.integers(0, 2))
    return TruncSeries(lo, coeffs, trunc)

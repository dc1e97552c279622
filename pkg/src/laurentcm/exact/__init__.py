from .scalar import ScaledScalar, SQRT2, SQRT3, PI, SQRT_PI, OMEGA, sqrt_rational
from .poly import Poly, RatFunc, ratfunc_normalize, as_ratfunc, poly_gcd, T, ZERO_DEGREE
from .series import TruncSeries, series_invert, series_exp
from .qseries import QSeries
from .imagquad import ImagQuadratic
from .taylor import Taylor


def scalar_mul(a, b):
    """Product of two ScaledScalars (exponents add, radicals reduce)."""
    return ScaledScalar.coerce(a) * ScaledScalar.coerce(b)


__all__ = [
    "ScaledScalar", "SQRT2", "SQRT3", "PI", "SQRT_PI", "OMEGA", "sqrt_rational",
    "Poly", "RatFunc", "ratfunc_normalize", "as_ratfunc", "poly_gcd", "T", "ZERO_DEGREE",
    "TruncSeries", "series_invert", "series_exp", "QSeries", "ImagQuadratic", "Taylor", "scalar_mul",
]

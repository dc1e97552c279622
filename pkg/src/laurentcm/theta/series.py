"""Theta series by lattice enumeration."""
from fractions import Fraction
from math import isqrt

from ..errors import ArgumentError, Unsupported
from ..exact import ImagQuadratic, QSeries, ScaledScalar, sqrt_rational


def unary_theta(D, l, order, modulus=None):
    """sum_b phi_{b mod 2D} (b sqrt(pi/D))^l q^{b^2/(4D)}, known up to q^order.

    ``modulus`` (a divisor of 2D, e.g. 2) coarsens the coset labels.
    """
    if l not in (0, 1):
        raise Unsupported("only l = 0, 1 are holomorphic")
    if D <= 0:
        raise ArgumentError("D must be positive")
    modulus = 2 * D if modulus is None else modulus
    if (2 * D) % modulus:
        raise ArgumentError("label modulus must divide 2D")
    den = 4 * D
    cov = den * order
    bound = isqrt(cov) + 1
    unit = sqrt_rational(Fraction(1, D)) * ScaledScalar.of(1, pi=Fraction(1, 2)) if l else None
    terms = {}
    for b in range(-bound, bound + 1):
        n = b * b
        if n > cov:
            continue
        c = 1 if l == 0 else unit * b
        key = (b % modulus, n)
        terms[key] = terms[key] + c if key in terms else c
    return QSeries(den, terms, Fraction(2 * l + 1, 2), cov, set(range(modulus)))


def binary_theta_cm(D, k, mu, order):
    """theta_mu^{(k)} = sum over lambda in sqrt(-D) O + mu of lambda^k q^{Nm(lambda)/D}.

    O = Z[(-1 + sqrt(-D))/2] with D = 3 mod 4.  Coefficients are exact
    ImagQuadratic numbers re + im sqrt(-D); exponents have denominator D.
    """
    if D % 4 != 3:
        raise Unsupported("the built-in order model needs D = 3 mod 4")
    if k < 0:
        raise ArgumentError("k must be non-negative")
    mu %= D
    cov = D * order
    # lambda = (mu - D y/2) + (x - y/2) sqrt(-D); 4 Nm = (2mu - Dy)^2 + D(2x - y)^2
    ybound = (2 * isqrt(4 * D * order) + 2 * D) // D + 2
    xbound = isqrt(4 * order) + ybound + 2
    terms = {}
    for y in range(-ybound, ybound + 1):
        for x in range(-xbound, xbound + 1):
            u, v = 2 * mu - D * y, 2 * x - y
            norm4 = u * u + D * v * v
            if norm4 > 4 * cov:
                continue
            if norm4 % 4:
                raise ArgumentError("norm is not in (1/D)Z")
            lam = ImagQuadratic(Fraction(u, 2), Fraction(v, 2), D)
            key = (None, norm4 // 4)
            val = lam ** k
            terms[key] = terms[key] + val if key in terms else val
    return QSeries(D, terms, k + 1, cov, {None})

"""Formal operators on q-series: Serre tower, Rankin-Cohen, Jacobi, Hermite, constant terms."""
from fractions import Fraction
from math import factorial

from ..errors import ArgumentError, InsufficientCoverage
from ..exact import Poly, QSeries


def binom(m, n):
    """Generalized binomial m(m-1)...(m-n+1)/n! for rational m and integer n >= 0."""
    if n < 0:
        return Fraction(0)
    m = Fraction(m)
    out = Fraction(1)
    for i in range(n):
        out *= m - i
    return out / factorial(n)


def _weight(f, name):
    if f.weight is None:
        raise ArgumentError(f"{name} carries no weight")
    return f.weight


def serre_tower(f: QSeries, phi: QSeries, Phi: QSeries, depth: int):
    """Serre derivatives of orders 0..depth.

    Uses theta^{[m+1]} = theta theta^{[m]} + m(m+k-1) Phi theta^{[m-1]}, with
    Phi = q phi' - phi^2 (equal to -E4/144 for phi = E2/12).
    """
    if depth < 0:
        raise ArgumentError("depth must be non-negative")
    k = _weight(f, "f")
    out = [f]
    for m in range(depth):
        cur = out[-1]
        km = k + 2 * m
        nxt = cur.qderiv() - phi * cur * km
        if m > 0:
            nxt = nxt + Phi * out[-2] * (m * (m + k - 1))
        nxt.weight = k + 2 * (m + 1)
        out.append(nxt)
    return out


def rankin_cohen(f: QSeries, g: QSeries, r: int) -> QSeries:
    """[f, g]_r with q d/dq derivatives; half-integral weights are allowed."""
    if r < 0:
        raise ArgumentError("r must be non-negative")
    k1, k2 = _weight(f, "f"), _weight(g, "g")
    total = None
    for s in range(r + 1):
        c = (-1) ** s * binom(k1 + r - 1, s) * binom(k2 + r - 1, r - s)
        if c == 0:
            continue
        term = (f.qderiv(r - s) * g.qderiv(s)) * c
        total = term if total is None else total + term
    if total is None:
        total = (f * g) * 0
    total.weight = k1 + k2 + 2 * r
    return total


def jacobi_poly(r: int, alpha, beta) -> Poly:
    """P_r^{(alpha, beta)} as a polynomial in x."""
    if r < 0:
        raise ArgumentError("r must be non-negative")
    xp = Poly((Fraction(1, 2), Fraction(1, 2)))
    xm = Poly((Fraction(-1, 2), Fraction(1, 2)))
    out = Poly()
    for s in range(r + 1):
        out = out + (xp ** (r - s)) * (xm ** s) * (binom(r + alpha, r - s) * binom(r + beta, s))
    return out


def jacobi_polynomial(r: int, alpha, beta, x):
    """Exact value of P_r^{(alpha, beta)}(x)."""
    if r < 0:
        raise ArgumentError("r must be non-negative")
    x = Fraction(x) if isinstance(x, (int, Fraction)) else x
    xp, xm = (x + 1) / 2, (x - 1) / 2
    total = 0
    for s in range(r + 1):
        total = total + binom(r + alpha, r - s) * binom(r + beta, s) * xp ** (r - s) * xm ** s
    return total


def hermite_poly(l: int) -> Poly:
    """Physicists' Hermite polynomial, built as (2x - d/dx)^l applied to 1."""
    if l < 0:
        raise ArgumentError("l must be non-negative")
    p = Poly.const(1)
    two_x = Poly((0, 2))
    for _ in range(l):
        p = two_x * p - p.deriv()
    return p


def hermite(l: int, xi):
    p = hermite_poly(l)
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * xi + c
    return acc


def ct_pairing(f: QSeries, g: QSeries, label_map=None):
    """Constant term of <f, g> with <phi_mu, phi_nu> = delta.

    ``label_map`` sends labels of g to labels of f (None drops a component).
    Raises InsufficientCoverage if some contributing coefficient lies beyond
    what either operand certifies.
    """
    if label_map is not None:
        g = g.map_labels(label_map)
    a, b = f._common(g)
    ca, cb = a.coverage, b.coverage
    shared = (a.labels & b.labels) or ({None} if a.is_scalar() or b.is_scalar() else set())
    if ca is not None and cb is not None and ca + cb < 0 and shared:
        raise InsufficientCoverage(
            "coverage of the two operands cannot certify the constant term",
            missing=(None, Fraction(ca + 1, a.den)))

    swapped = b.is_scalar() and not a.is_scalar()
    if swapped:
        a, b, ca, cb = b, a, cb, ca
    total = 0
    for (lab, n), c in b.terms.items():
        if ca is not None and -n > ca:
            raise InsufficientCoverage(
                f"f is needed at exponent {Fraction(-n, a.den)} beyond its coverage",
                missing=(lab, Fraction(-n, a.den)))
        if a.is_scalar() and not b.is_scalar():
            d = a.terms.get((None, -n), 0)
        else:
            d = a.terms.get((lab, -n), 0)
        if d != 0:
            total = total + (c * d if swapped else d * c)
    for (lab, n), c in a.terms.items():
        if cb is not None and -n > cb:
            if b.is_scalar() or lab in b.labels or lab is None:
                raise InsufficientCoverage(
                    f"g is needed at exponent {Fraction(-n, b.den)} beyond its coverage",
                    missing=(lab, Fraction(-n, b.den)))
    return total

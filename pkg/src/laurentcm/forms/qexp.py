"""Exact q-expansions of the classical level-one forms."""
from fractions import Fraction
from functools import lru_cache

from ..errors import ArgumentError, NonInvertible
from ..exact import QSeries
from .expr import FormExpr, atoms, evaluate


@lru_cache(maxsize=None)
def _sigma(power, n_max):
    s = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d ** power
        for m in range(d, n_max + 1, d):
            s[m] += dp
    return tuple(s)


def eisenstein(k, order):
    """Normalized E_k (k = 2, 4, 6, ...) up to q^order."""
    bern = _bernoulli(k)
    c = Fraction(-2 * k) / bern
    sig = _sigma(k - 1, order)
    coeffs = [Fraction(1)] + [c * sig[n] for n in range(1, order + 1)]
    return QSeries.scalar(coeffs, weight=k, coverage=order)


@lru_cache(maxsize=None)
def _bernoulli(n):
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        binom = 1
        for j in range(m):
            acc += binom * b[j]
            binom = binom * (m + 1 - j) // (j + 1)
        b.append(-acc / (m + 1))
    return b[n]


def eta(order):
    """Dedekind eta with exponents in (1/24)Z, known up to q^order."""
    cov = 24 * order
    terms = {}
    k = 0
    while True:
        found = False
        for kk in ({k, -k} if k else {0}):
            e = 1 + 12 * kk * (3 * kk - 1)
            if e <= cov:
                terms[(None, e)] = (-1) ** (kk % 2)
                found = True
        if not found and k > 0:
            break
        k += 1
    return QSeries(24, terms, Fraction(1, 2), cov, {None})


def delta(order):
    """Discriminant via the product q * prod (1 - q^n)^24."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, order + 1):
        for _ in range(24):
            for m in range(order, n - 1, -1):
                coeffs[m] -= coeffs[m - n]
    return QSeries(1, {(None, i + 1): c for i, c in enumerate(coeffs[:order])}, 12, order, {None})


def atom_series(name, order):
    if name == "E2":
        return eisenstein(2, order)
    if name == "E4":
        return eisenstein(4, order)
    if name == "E6":
        return eisenstein(6, order)
    if name == "Delta":
        return delta(order)
    if name == "eta":
        return eta(order)
    if name == "j":
        e4 = eisenstein(4, order + 1)
        d = delta(order + 1)
        out = e4 ** 3 / d
        out.weight = Fraction(0)
        return out.truncate(order)
    raise ArgumentError(f"unknown atom {name}")


def q_expansion(form: FormExpr, order: int) -> QSeries:
    """Exact expansion up to q^order; the working precision grows until that is certified."""
    if order < 1:
        raise ArgumentError("order must be at least 1")
    den = 24 if "eta" in atoms(form) else 1
    need = order * den
    work = order + 2
    for _ in range(12):
        cache = {}

        def leaf(name):
            if name not in cache:
                cache[name] = atom_series(name, work)
            return cache[name]

        res = evaluate(form, leaf)
        if not isinstance(res, QSeries):
            res = QSeries.monomial(0, Fraction(res), weight=0)
        if res.den != den:
            res = res.rescale(den) if den % res.den == 0 else res
        if res.coverage is None or res.coverage >= need:
            res = res.truncate(need)
            res.weight = Fraction(form.weight)
            return res
        work += (need - res.coverage) // res.den + 2
    raise NonInvertible("working precision did not stabilize")


def phi_and_Phi(order):
    """phi = E2/12 and Phi = q phi' - phi^2 = -E4/144, both to q^order."""
    phi = eisenstein(2, order) * Fraction(1, 12)
    phi.weight = Fraction(2)
    Phi = phi.qderiv() - phi * phi
    Phi.weight = Fraction(4)
    return phi, Phi

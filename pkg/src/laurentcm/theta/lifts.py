"""Closed-form Laurent coefficients and Fourier expansions of theta lifts."""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from ..errors import ArgumentError, InsufficientCoverage, Unsupported, WeightBookkeeping
from ..exact import QSeries, ScaledScalar, sqrt_rational
from ..forms.operators import binom, ct_pairing, rankin_cohen
from .series import unary_theta
from .tables import CoefficientTable

BS, BZ = "BS", "BZ"


def _two_pow_half(e):
    """2^(e/2) exactly."""
    out = ScaledScalar.of(Fraction(2) ** (e // 2))
    return out * ScaledScalar.of(1, e2=1) if e % 2 else out


def _split_m(m):
    if m < 0:
        raise ArgumentError("m must be non-negative")
    return m // 2, m % 2


def _nonzero_binom(top, r):
    b = binom(top, r)
    if b == 0:
        raise WeightBookkeeping(f"binomial ({top} choose {r}) vanishes; the formula is undefined here")
    return b


def _homogeneous_jacobi(r, alpha, beta, u, v):
    """(u - v)^r P_r^{(alpha, beta)}((u + v)/(u - v)), finite also when u = v."""
    return sum(binom(r + alpha, r - j) * binom(r + beta, j) * Fraction(u) ** (r - j) * Fraction(v) ** j
               for j in range(r + 1))


def _as_table(x, role="weakly_holomorphic_input"):
    return x if isinstance(x, CoefficientTable) else CoefficientTable(x, role)


def _check_maass_weight(qs, k, m):
    if qs.weight is not None and qs.weight != 1 - k - m:
        raise WeightBookkeeping(
            f"the Laurent coefficient a_{m} needs a weight {1 - k - m} table, got weight {qs.weight}")


def bs_laurent_level1(f, maass, D, k, m):
    """a_m of the Borcherds-Shimura lift at (-1 + sqrt(-D))/2 by the explicit (n, b) sum.

    ``f`` holds c_f(N) at exponent N (den 1, scalar); ``maass`` holds
    c_mu(n/D) at numerator n under labels mu mod D, with its unit.
    """
    f, maass = _as_table(f), _as_table(maass, "maass_holomorphic_part")
    r, l = _split_m(m)
    fq, mq = f.qseries, maass.qseries
    _check_maass_weight(mq, k, m)
    if fq.den != 1 or not fq.is_scalar():
        raise ArgumentError("f must be a scalar table with integral exponents")
    if mq.den != D:
        raise ArgumentError(f"maass table must have denominator D = {D}")
    inv2 = pow(2, -1, D)
    kappa = (-_two_pow_half(3 * k + 4 * m) * ScaledScalar.of(1, pi=m)
             * Fraction(1, D ** (k + m) * factorial(m)) / _nonzero_binom(-k - m + r, r))
    fcov, mcov = fq.coverage, mq.coverage
    flow, mlow = fq.lowest(), mq.lowest()
    if flow is None or mlow is None:
        return ScaledScalar.zero()

    def f_coeff(N):
        if fcov is not None and N > fcov:
            raise InsufficientCoverage(f"c_f({N}) lies beyond the coverage of f", missing=("f", N))
        return fq.terms.get((None, N), 0)

    def m_coeff(mu, n):
        if mcov is not None and n > mcov:
            raise InsufficientCoverage(
                f"maass coefficient at {Fraction(n, D)} for coset {mu} lies beyond coverage",
                missing=(mu, Fraction(n, D)))
        return mq.terms.get((mu, n), 0)

    pairs = set()
    # every nonzero maass entry meets f at N = (-b^2 - 4n)/D >= flow
    for (mu, n), c in mq.terms.items():
        bmax = isqrt(max(-4 * n - D * flow, 0))
        for b in range(-bmax, bmax + 1):
            if (-b * inv2 - mu) % D == 0 and (-b * b - 4 * n) % D == 0:
                pairs.add((n, b))
    # every nonzero f entry meets the maass table at n = (-D N - b^2)/4 >= mlow
    for (_, N), c in fq.terms.items():
        bmax = isqrt(max(-D * N - 4 * mlow, 0))
        for b in range(-bmax, bmax + 1):
            if (-D * N - b * b) % 4 == 0:
                pairs.add(((-D * N - b * b) // 4, b))
    total = Fraction(0)
    for n, b in sorted(pairs):
        mu = (-b * inv2) % D
        cm = m_coeff(mu, n)
        if cm == 0:
            continue
        cf = f_coeff((-b * b - 4 * n) // D)
        if cf == 0:
            continue
        total += Fraction(cm) * cf * b ** l * _homogeneous_jacobi(r, Fraction(2 * l - 1, 2), -k - m, 4 * n, -b * b)
    if total == 0:
        return ScaledScalar.zero()
    return kappa * maass.unit * total


@dataclass
class LiftInputs:
    """Vector-valued data for the general constant-term formula."""
    f: QSeries
    maass: QSeries
    theta_p: QSeries
    label_map: object
    y_U: ScaledScalar


def level1_inputs(f, maass, D, k, m, mode=BS):
    """Embed Kohnen-plus data and a level-one maass table into the general setting.

    f becomes vector valued over h in Z/2 with exponents N/4; the maass
    table is scaled by 2^{3(k+m)/2}/D^{k+m}; Theta_P carries labels b mod 2D,
    and (mu, b) pairs with f's label b mod 2 exactly when mu = -b/2 mod D.
    """
    if D % 2 == 0:
        raise Unsupported("the level-one embedding needs odd D")
    f, maass = _as_table(f), _as_table(maass, "maass_holomorphic_part")
    r, l = _split_m(m)
    _check_maass_weight(maass.qseries, k, m)
    fq = f.qseries
    terms = {}
    for (_, N), c in fq.terms.items():
        if N % 4 not in (0, 1):
            raise ArgumentError(f"c_f({N}) violates the plus-space condition")
        terms[(N % 4, N)] = c
    cov = None if fq.coverage is None else 4 * fq.coverage + 3
    fv = QSeries(4, terms, fq.weight, cov, {0, 1})
    scale = _two_pow_half(3 * (k + m)) * Fraction(1, D ** (k + m)) * maass.unit
    mv = maass.qseries.scale(scale)
    mv.weight = Fraction(1 - k - m)
    pl = l if mode == BS else 1 - l
    theta_order = _theta_order(fv, mv, D)
    tp = unary_theta(D, pl, theta_order)
    inv2 = pow(2, -1, D)

    def label_map(lab):
        mu, b = lab
        return b % 2 if (mu + b * inv2) % D == 0 else None

    y_U = sqrt_rational(Fraction(D, 4))
    return LiftInputs(fv, mv, tp, label_map, y_U)


def _theta_order(fv, mv, D):
    """Largest theta exponent that can meet f and the maass table in a constant term."""
    lo_f = fv.lowest()
    lo_m = mv.lowest()
    if lo_f is None or lo_m is None:
        return 1
    need = -(Fraction(lo_f, fv.den) + Fraction(lo_m, mv.den))
    return max(int(need) + 2, 1)


def ct_laurent_general(f, maass_plus, theta_p, k, m, y_U, mode=BS, label_map=None):
    """a_m from the constant term of <f, [Theta~, Theta_P]_r> (BS) or its BZ analogue."""
    r, l = _split_m(m)
    fq = f.qseries if isinstance(f, CoefficientTable) else f
    mq = maass_plus.scaled() if isinstance(maass_plus, CoefficientTable) else maass_plus
    _check_maass_weight(mq, k, m)
    mq = QSeries(mq.den, mq.terms, Fraction(1 - k - m), mq.coverage, mq.labels)
    y_U = ScaledScalar.coerce(y_U)
    if mode == BS:
        tp = theta_p
        if l:
            tp = tp.scale(ScaledScalar.of(Fraction(1, 2), pi=Fraction(-1, 2)))
        tp = QSeries(tp.den, tp.terms, Fraction(2 * l + 1, 2), tp.coverage, tp.labels)
        bracket = rankin_cohen(mq, tp, r)
        pref = (ScaledScalar.of(4, pi=1) * ScaledScalar.of(1, e2=1) * y_U) ** m
        pref = pref * Fraction((-1) ** (r + 1), factorial(m)) / _nonzero_binom(-k - m + r, r)
    elif mode == BZ:
        rp = k + l - 1 + r
        tp = QSeries(theta_p.den, theta_p.terms, Fraction(2 * (1 - l) + 1, 2), theta_p.coverage, theta_p.labels)
        bracket = rankin_cohen(mq, tp, rp)
        pref = (ScaledScalar.of(2, pi=Fraction(1, 2)) * ScaledScalar.of(1, e2=1) * y_U) ** m
        pref = pref * ScaledScalar.of(Fraction((-1) ** (rp + 1) * 4 ** rp, factorial(m)), pi=rp)
        pref = pref / _nonzero_binom(k + l - 2 - rp, rp)
    else:
        raise ArgumentError(f"unknown mode {mode!r}")
    ct = ct_pairing(fq, bracket, label_map)
    if ct == 0:
        return ScaledScalar.zero()
    return pref * ct


def ct_laurent_level1(f, maass, D, k, m, mode=BS):
    inp = level1_inputs(f, maass, D, k, m, mode)
    return ct_laurent_general(inp.f, inp.maass, inp.theta_p, k, m, inp.y_U, mode, inp.label_map)


def _cf(f, N):
    fq = f.qseries
    if fq.coverage is not None and N > fq.coverage:
        raise InsufficientCoverage(f"c_f({N}) lies beyond the coverage of f", missing=("f", N))
    return fq.terms.get((None, N), 0)


def bs_lift_q_expansion(f, k, order):
    """-(-2)^{1+k/2} sum_n (sum_{d|n} (n/d)^{k-1} c_f(d^2)) q^n up to q^order."""
    f = _as_table(f)
    if k % 2:
        raise Unsupported("k must be even")
    if _cf(f, 0) != 0:
        raise Unsupported("c_f(0) must vanish")
    pref = -(-2) ** (1 + k // 2)
    coeffs = {}
    for n in range(1, order + 1):
        s = sum(Fraction(n // d) ** (k - 1) * _cf(f, d * d) for d in range(1, n + 1) if n % d == 0)
        coeffs[(None, n)] = pref * s
    return QSeries(1, coeffs, 2 * k, order, {None})


@dataclass
class BZExpansion:
    """prefactor * i^{i_power} * (C + series), C being an undetermined constant term."""
    prefactor: ScaledScalar
    i_power: int
    series: QSeries
    constant_symbol: str = "C"


def bz_lift_q_expansion(f, k, order):
    """2^{1+k/2} pi^{k-1/2} i^{1-k} (C + sum_n (sum_{d|n} d^k c_f(d^2)) n^{k-1} q^n)."""
    f = _as_table(f)
    if k < 1:
        raise ArgumentError("k must be at least 1")
    pref = _two_pow_half(2 + k) * ScaledScalar.of(1, pi=Fraction(2 * k - 1, 2))
    coeffs = {}
    for n in range(1, order + 1):
        s = sum(Fraction(d) ** k * _cf(f, d * d) for d in range(1, n + 1) if n % d == 0)
        coeffs[(None, n)] = s * Fraction(n) ** (k - 1)
    return BZExpansion(pref, (1 - k) % 4, QSeries(1, coeffs, 2 * k, order, {None}))


def leading_singular_coeff(c, m_neg, k, y_U, mode=BS):
    """The w^{-k} coefficient contributed by c * phi_{f,m} at a singular CM point."""
    if k < 1:
        raise ArgumentError("k must be at least 1")
    m_neg = Fraction(m_neg)
    if m_neg >= 0:
        raise ArgumentError("m_neg must be negative")
    c = Fraction(c)
    if c == 0:
        return ScaledScalar.zero()
    y = ScaledScalar.coerce(y_U)
    gamma = factorial(k - 1)
    if mode == BS:
        base = ScaledScalar.of(4, pi=1) * sqrt_rational(2 * abs(m_neg))
        out = base ** (-k) * (2 * gamma)
    elif mode == BZ:
        out = sqrt_rational(abs(m_neg)) ** (k - 1) * ScaledScalar.of(gamma, pi=Fraction(-1, 2))
        out = out / _two_pow_half(k)
    else:
        raise ArgumentError(f"unknown mode {mode!r}")
    return out * c * y ** (-k)

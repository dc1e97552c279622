"""The three recursion schemes and the differential operator L_k."""
from fractions import Fraction

from ..errors import ArgumentError, EvaluationPole, InsufficientCoverage, PoleOrderMismatch, SourceMismatch
from ..exact import Poly, RatFunc, Taylor, TruncSeries


def _rf(x):
    return x if isinstance(x, Taylor) else RatFunc.coerce(x)


def _d(p):
    return p.deriv()


def rvz_sequence(spec, k, p0, count):
    """p_0 .. p_{count-1} of (m+1)p_{m+1} = a1 p_m' + a2(m,k) p_m + a3(m-1,k) p_{m-1}.

    Polynomial input stays polynomial; RatFunc input is carried as RatFunc.
    """
    if count < 1:
        raise ArgumentError("count must be at least 1")
    p0 = p0 if isinstance(p0, (Poly, RatFunc, Taylor)) else Poly.coerce(p0)
    out = [p0]
    prev = p0 * 0
    for m in range(count - 1):
        cur = out[-1]
        nxt = spec.a1 * _d(cur) + spec.a2(m, k) * cur + spec.a3(m - 1, k) * prev
        out.append(nxt * Fraction(1, m + 1))
        prev = cur
    return out


def intro_delta_sequence(count):
    """p_0 = 1, p_1 = 0, p_{m+1} = -2mt p_m + 6(t^2-1) p_m' - m(m+11) p_{m-1}."""
    if count < 2:
        raise ArgumentError("count must be at least 2")
    seq = [[1], [0]]
    for m in range(1, count - 1):
        p, q = seq[m], seq[m - 1]
        n = len(p) + 1
        new = [0] * n
        for i, c in enumerate(p):
            if c:
                new[i + 1] += -2 * m * c       # -2mt p
                if i:
                    new[i + 1] += 6 * i * c    # 6 t^2 p'
                    new[i - 1] -= 6 * i * c    # -6 p'
        for i, c in enumerate(q):
            new[i] -= m * (m + 11) * c
        while len(new) > 1 and new[-1] == 0:
            new.pop()
        seq.append(new)
    return [Poly(tuple(s)) for s in seq[:count]]


def apply_L(spec, k, series):
    """L_k = a1 d/dt + (a31 X^2 + a21 X - 1) d/dX + (a32 X + a22) k on a TruncSeries in X."""
    if series.is_zero():
        return TruncSeries(series.trunc - 1, [], series.trunc - 1)
    lo, hi = series.lowest, series.trunc - 1
    out = {}
    for m in range(lo - 1, hi):
        c = lambda n: series[n] if lo <= n < series.trunc else 0  # noqa: E731
        cm, cm1, cp1 = c(m), c(m - 1), c(m + 1)
        val = 0
        if cm != 0:
            val = val + spec.a1 * _d(cm) + spec.a2(m, k) * cm
        if cm1 != 0:
            val = val + spec.a3(m - 1, k) * cm1
        if cp1 != 0:
            val = val - cp1 * (m + 1)
        out[m] = val
    return TruncSeries.from_dict({m: v for m, v in out.items() if not _zero(v)}, hi)


def _zero(v):
    return v == 0


def nonlinear_recursion(spec, k, N, qm_init, A, B, count, C=0):
    """q_{-N} .. q_{count-N-1} from L_k Q = Q^2 (B X^{N-1} + A X^N + C X^{N+1}).

    With the plain normalization (C = 0, B = N p_N, q_{-N} = 1/p_N) the
    leading factor m+1+2B q_{-N} equals m+1+2N.
    """
    if N < 1:
        raise ArgumentError("pole order N must be at least 1")
    if count < 1:
        raise ArgumentError("count must be at least 1")
    A, B, C = _rf(A), _rf(B), _rf(C)
    q = {-N - 1: _rf(0), -N: _rf(qm_init[0]), 1 - N: _rf(qm_init[1])}
    lead = 2 * B * q[-N]
    for m in range(1 - N, count - N - 1):
        rhs = spec.a1 * q[m].deriv() + spec.a2(m, k) * q[m] + spec.a3(m - 1, k) * q[m - 1]
        if not B.is_zero():
            s = sum((q[j] * q[m + 1 - N - j] for j in range(1 - N, m + 1)), _rf(0))
            rhs = rhs - B * s
        if not A.is_zero():
            s = sum((q[j] * q[m - N - j] for j in range(-N, m + 1)), _rf(0))
            rhs = rhs - A * s
        if not C.is_zero():
            s = sum((q[j] * q[m - 1 - N - j] for j in range(-N, m)), _rf(0))
            rhs = rhs - C * s
        q[m + 1] = rhs / (lead + (m + 1))
    return [q[m] for m in range(-N, count - N)]


def nonlinear_sources(spec, k, N, p_inv, normalization="plain"):
    """Initial data and the polynomials A, B, C from the p-sequence of 1/g (weight -k).

    ``normalization='constant'`` replaces the leading coefficient p_N by its
    value c = p_N(t0), which keeps q_{-N} constant.
    Returns ((q_{-N}, q_{1-N}), A, B, C).
    """
    if len(p_inv) < N + 2:
        raise InsufficientCoverage("need p_0 .. p_{N+1} of 1/g", missing=N + 1)
    pN, pN1 = _rf(p_inv[N]), _rf(p_inv[N + 1])
    if normalization == "plain":
        if pN.is_zero():
            raise PoleOrderMismatch(f"p_{N} of 1/g vanishes identically")
        init = (1 / pN, -pN1 / (pN * pN))
        A = spec.a3(N - 1, -k) * _rf(p_inv[N - 1])
        B = pN * N
        C = _rf(0)
    elif normalization == "constant":
        c = pN(spec.point.t0)
        if c == 0:
            raise PoleOrderMismatch(f"p_{N}(t0) vanishes, so the pole order exceeds {N}")
        init = (_rf(1 / Fraction(c)) + pN * 0, -pN1 / (c * c))
        A = pN1 * (N + 1) - spec.a2(N, -k) * c
        B = _rf(c * N)
        C = spec.a3(N, -k) * (pN - c)
    else:
        raise ArgumentError(f"unknown normalization {normalization!r}")
    stmt_A, stmt_B = statement_coefficients(spec, k, N, init)
    if stmt_A != A or stmt_B != B:
        raise SourceMismatch(
            f"A, B from the leading q's ({stmt_A}, {stmt_B}) disagree with the p-sequence ({A}, {B})")
    return init, A, B, C


def statement_coefficients(spec, k, N, init):
    """A = ((N+1)(-q_{1-N}) + a1 q' - a2(N,-k) q) / q^2 and B = N/q with q = q_{-N}."""
    q, q1 = _rf(init[0]), _rf(init[1])
    A = (-(q1 * (N + 1)) + spec.a1 * q.deriv() - spec.a2(N, -k) * q) / (q * q)
    B = _rf(N) / q
    return A, B


def linear_recursion(spec, k, N, q_init, h_coeffs, count):
    """q_{-N} .. q_{count-N-1} of the linear recursion driven by dlog h.

    (m+1+N) q_{m+1} = a1 q_m' + a2(m,k) q_m + a3(m-1,k) q_{m-1}
                      - N sum_{j=-N}^{m} q_j c_{m-j},
    c_n = h_n - a21 h_{n-1} - a31 h_{n-2}, h_coeffs = (h_{-1}, h_0, h_1, ...).
    """
    if N < 0:
        raise ArgumentError("N must be non-negative")
    if count < 1:
        raise ArgumentError("count must be at least 1")
    h = [Fraction(x) for x in h_coeffs]
    if N and len(h) < count:
        raise InsufficientCoverage(
            f"{count} q-terms need h_-1 .. h_{count - 2} ({count} values), got {len(h)}",
            missing=len(h) - 1)

    def hh(n):
        return h[n + 1] if n >= -1 else 0

    cache = {}

    def c(n):
        if n not in cache:
            cache[n] = Poly.const(hh(n)) - spec.a21 * hh(n - 1) - spec.a31 * hh(n - 2)
        return cache[n]

    q = {-N - 1: _rf(0), -N: _rf(q_init)}
    for m in range(-N, count - N - 1):
        rhs = spec.a1 * q[m].deriv() + spec.a2(m, k) * q[m] + spec.a3(m - 1, k) * q[m - 1]
        if N:
            s = _rf(0)
            for j in range(-N, m + 1):
                if not q[j].is_zero():
                    s = s + q[j] * c(m - j)
            rhs = rhs - s * N
        q[m + 1] = rhs * Fraction(1, m + 1 + N)
    return [q[m] for m in range(-N, count - N)]


def dlog_h_coefficients(spec, dlog_h, count):
    """(h_{-1}, h_0, h_1, ...) at t0 for a weight-2 expression with a simple pole.

    The values are the weight-2 normalized Laurent coefficients, computed
    through the non-linear recursion applied to 1/dlog_h.
    """
    from ..forms.expr import Const, Div, FormExpr
    from ..forms.parser import parse_form_expr
    from .initial import p0_of

    if count < 1:
        raise ArgumentError("count must be at least 1")
    expr = parse_form_expr(dlog_h) if isinstance(dlog_h, str) else dlog_h
    if not isinstance(expr, FormExpr) or expr.weight != 2:
        raise ArgumentError("dlog h must be a weight-2 expression")
    t0 = spec.point.t0
    try:
        p0 = Taylor.of(p0_of(Div(Const(Fraction(1)), expr), spec), t0, 2 * count + 6)
    except EvaluationPole as exc:
        raise PoleOrderMismatch("dlog h vanishes at the point instead of having a pole") from exc
    p_inv = rvz_sequence(spec, -2, p0, count + 2)
    if p_inv[0](t0) != 0:
        raise PoleOrderMismatch("dlog h has no pole at the point")
    try:
        init, A, B, C = nonlinear_sources(spec, 2, 1, p_inv, "plain")
    except PoleOrderMismatch as exc:
        raise PoleOrderMismatch(f"dlog h does not have a simple pole: {exc}") from exc
    if p_inv[1](t0) == 0:
        raise PoleOrderMismatch("dlog h has a pole of order greater than one")
    qs = nonlinear_recursion(spec, 2, 1, init, A, B, count, C)
    vals = [q(t0) for q in qs]
    if vals[0] != 1:
        raise PoleOrderMismatch(f"residue normalization fails: h_-1 = {vals[0]}")
    return vals


def h_series(h_coeffs, h_tilde1, trunc):
    """H(X) = h~1 X exp(sum_{n>=0} h_n X^{n+1}/(n+1)), known below X^trunc."""
    from ..exact import series_exp

    h = [Fraction(x) for x in h_coeffs]
    n = trunc - 1
    if len(h) < n:
        raise InsufficientCoverage(f"H below X^{trunc} needs {n} h-values", missing=len(h) - 1)
    integ = {i + 1: h[i + 1] / (i + 1) for i in range(n - 1)}
    e = series_exp(TruncSeries.from_dict(integ, n))
    return e.shift(1) * Fraction(h_tilde1)

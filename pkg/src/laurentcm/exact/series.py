"""Truncated Laurent series in a formal variable X over an exact ring."""
from fractions import Fraction

from ..errors import NonInvertible, ArgumentError


def _is_zero(c):
    return c == 0


class TruncSeries:
    """sum_{n >= lowest} c_n X^n, with every exponent >= trunc unknown.

    Coefficients may be Fractions, Polys, RatFuncs or ScaledScalars; the
    additive identity is the int 0.
    """

    __slots__ = ("lowest", "coeffs", "trunc")

    def __init__(self, lowest, coeffs, trunc):
        coeffs = list(coeffs)[: max(trunc - lowest, 0)]
        while coeffs and _is_zero(coeffs[0]):
            coeffs.pop(0)
            lowest += 1
        if not coeffs:
            lowest = trunc
        self.lowest = lowest
        self.coeffs = coeffs
        self.trunc = trunc

    @classmethod
    def from_dict(cls, d, trunc):
        if not d:
            return cls(trunc, [], trunc)
        lo = min(d)
        return cls(lo, [d.get(n, 0) for n in range(lo, trunc)], trunc)

    def __getitem__(self, n):
        if n >= self.trunc:
            raise IndexError(f"coefficient X^{n} is beyond the truncation order {self.trunc}")
        i = n - self.lowest
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def items(self):
        return [(self.lowest + i, c) for i, c in enumerate(self.coeffs)]

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries(0, [other], 10 ** 9)
        trunc = min(self.trunc, other.trunc)
        lo = min(self.lowest, other.lowest)
        return TruncSeries(lo, [self[n] + other[n] for n in range(lo, trunc)], trunc)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.lowest, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.lowest, [c * other for c in self.coeffs], self.trunc)
        trunc = min(self.trunc + other.lowest, other.trunc + self.lowest)
        lo = self.lowest + other.lowest
        out = [0] * max(trunc - lo, 0)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= len(out):
                    break
                out[k] = out[k] + a * b
        return TruncSeries(lo, out, trunc)

    def __rmul__(self, other):
        return TruncSeries(self.lowest, [other * c for c in self.coeffs], self.trunc)

    def shift(self, k):
        return TruncSeries(self.lowest + k, self.coeffs, self.trunc + k)

    def map(self, fn):
        return TruncSeries(self.lowest, [fn(c) for c in self.coeffs], self.trunc)

    def __pow__(self, n):
        if n < 0:
            return series_invert(self) ** (-n)
        out = TruncSeries(0, [1], 10 ** 9)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        lo = min(self.lowest, other.lowest)
        return all(self[n] == other[n] for n in range(lo, trunc))

    def __repr__(self):
        body = " + ".join(f"({c})*X^{n}" for n, c in self.items() if not _is_zero(c))
        return f"TruncSeries({body or 0} + O(X^{self.trunc}))"


def series_invert(s):
    """1/s; if s is known below X^T with lowest exponent a, 1/s is known below X^(T-2a)."""
    if not s.coeffs or _is_zero(s.coeffs[0]):
        raise NonInvertible("series has no invertible leading coefficient")
    a = s.lowest
    n = s.trunc - a
    lead = s.coeffs[0]
    try:
        inv_lead = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
    except ZeroDivisionError as exc:
        raise NonInvertible(str(exc)) from exc
    out = [inv_lead]
    for k in range(1, n):
        acc = 0
        for j in range(1, min(k, len(s.coeffs) - 1) + 1):
            acc = acc + s.coeffs[j] * out[k - j]
        out.append(-acc * inv_lead)
    return TruncSeries(-a, out, n - a)


def series_exp(s):
    """exp of a power series with zero constant term (rational coefficients)."""
    if s.coeffs and s.lowest < 1:
        raise ArgumentError("exp needs a series without constant term")
    n = s.trunc
    out = [Fraction(1)] + [Fraction(0)] * (n - 1)
    # E' = s' E
    ds = [k * s[k] for k in range(1, n)]
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            acc += ds[j - 1] * out[k - j]
        out[k] = acc / k
    return TruncSeries(0, out, n)

"""Truncated Taylor expansions in u = t - t0, a fast stand-in for RatFunc near t0."""
from fractions import Fraction

from ..errors import EvaluationPole, InsufficientCoverage
from .poly import Poly, RatFunc


class Taylor:
    """sum_{i < prec} c_i (t - center)^i with every higher coefficient unknown."""

    __slots__ = ("center", "coeffs", "prec")

    def __init__(self, center, coeffs, prec):
        self.center = Fraction(center)
        self.prec = max(int(prec), 0)
        c = [Fraction(x) for x in list(coeffs)[: self.prec]]
        self.coeffs = c + [Fraction(0)] * (self.prec - len(c))

    @classmethod
    def of(cls, x, center, prec):
        """Expand an int, Fraction, Poly or RatFunc around ``center``."""
        if isinstance(x, Taylor):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(center, [x], prec)
        if isinstance(x, Poly):
            return cls(center, _shift(x, Fraction(center)), prec)
        if isinstance(x, RatFunc):
            return cls.of(x.num, center, prec) / cls.of(x.den, center, prec)
        raise TypeError(f"cannot expand {type(x).__name__}")

    def _lift(self, x):
        if isinstance(x, Taylor):
            return x
        return Taylor.of(x, self.center, self.prec)

    def is_zero(self):
        return not any(self.coeffs)

    def __call__(self, t):
        if Fraction(t) != self.center:
            raise ValueError("a Taylor expansion can only be evaluated at its center")
        if self.prec == 0:
            raise InsufficientCoverage("no Taylor coefficients left", missing=0)
        return self.coeffs[0]

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        p = min(self.prec, o.prec)
        return Taylor(self.center, [self.coeffs[i] + o.coeffs[i] for i in range(p)], p)

    __radd__ = __add__

    def __neg__(self):
        return Taylor(self.center, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        try:
            return self + (-self._lift(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Taylor(self.center, [c * other for c in self.coeffs], self.prec)
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        p = min(self.prec, o.prec)
        out = [Fraction(0)] * p
        for i in range(p):
            a = self.coeffs[i]
            if a:
                for j in range(p - i):
                    b = o.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return Taylor(self.center, out, p)

    __rmul__ = __mul__

    def inverse(self):
        if self.prec == 0:
            raise InsufficientCoverage("no Taylor coefficients left", missing=0)
        lead = self.coeffs[0]
        if lead == 0:
            raise EvaluationPole(f"division by a function vanishing at t = {self.center}")
        out = [1 / lead]
        for k in range(1, self.prec):
            acc = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1) if self.coeffs[j]), Fraction(0))
            out.append(-acc / lead)
        return Taylor(self.center, out, self.prec)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        try:
            return self * self._lift(other).inverse()
        except TypeError:
            return NotImplemented

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Taylor(self.center, [1], self.prec)
        for _ in range(n):
            out = out * self
        return out

    def deriv(self):
        return Taylor(self.center, [i * self.coeffs[i] for i in range(1, self.prec)], self.prec - 1)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        p = min(self.prec, o.prec)
        return self.coeffs[:p] == o.coeffs[:p]

    __hash__ = None

    def __repr__(self):
        return f"Taylor(center={self.center}, coeffs={self.coeffs[:6]}, prec={self.prec})"


def _shift(p, c):
    """Coefficients of p(c + u) in u (Horner)."""
    out = []
    for a in reversed(p.coeffs):
        # out = out * (u + c) + a
        new = [Fraction(0)] * (len(out) + 1)
        for i, b in enumerate(out):
            new[i + 1] += b
            new[i] += b * c
        new[0] += a
        out = new
    return out

"""Dense univariate polynomials and reduced rational functions over Q."""
from fractions import Fraction

from ..errors import DivisionByZero, EvaluationPole

ZERO_DEGREE = -1   # sentinel degree of the zero polynomial


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Polynomial in t with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @staticmethod
    def coerce(x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly((x,))
        raise TypeError

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            return self + (-Poly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero constant")
            return Poly([c / other for c in self.coeffs])
        return RatFunc(self, 1) / other

    def __rtruediv__(self, other):
        return RatFunc(other, 1) / RatFunc(self, 1)

    def divmod(self, other):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead()
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quo[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quo), Poly(rem[:dq] if dq > 0 else [])

    def monic(self):
        return self / self.lead() if self.coeffs else self

    def deriv(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return other == self
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self, var="t"):
        if not self.coeffs:
            return "0"
        out = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = str(a)
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


def poly_gcd(a, b):
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Poly.coerce(num), Poly.coerce(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divmod(g)[0], den.divmod(g)[0]
        lead = den.lead()
        self.num, self.den = num / lead, den / lead

    @classmethod
    def t(cls):
        return cls(Poly.t())

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFunc):
            return x
        return RatFunc(Poly.coerce(x))

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    def as_poly(self):
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        try:
            return self + (-RatFunc.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(0)
            r = object.__new__(RatFunc)
            r.num, r.den = self.num * other, self.den
            return r
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("rational function division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(1) / (self ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def deriv(self):
        return RatFunc(self.num.deriv() * self.den - self.num * self.den.deriv(), self.den * self.den)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise EvaluationPole(f"{self} has a pole at t = {x}")
        return self.num(x) / d

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"


def ratfunc_normalize(num, den):
    return RatFunc(num, den)


def as_ratfunc(x):
    return RatFunc.coerce(x)


T = Poly.t()

"""Exact elements a + b*sqrt(-d) of an imaginary quadratic field."""
from fractions import Fraction


class ImagQuadratic:
    __slots__ = ("re", "im", "d")

    def __init__(self, re, im=0, d=1):
        self.re = Fraction(re)
        self.im = Fraction(im)
        self.d = d

    def _coerce(self, x):
        if isinstance(x, ImagQuadratic):
            if x.d != self.d:
                raise TypeError("different fields")
            return x
        if isinstance(x, (int, Fraction)):
            return ImagQuadratic(x, 0, self.d)
        raise TypeError

    def __add__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return ImagQuadratic(self.re + o.re, self.im + o.im, self.d)

    __radd__ = __add__

    def __neg__(self):
        return ImagQuadratic(-self.re, -self.im, self.d)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return ImagQuadratic(self.re * o.re - self.d * self.im * o.im,
                             self.re * o.im + self.im * o.re, self.d)

    __rmul__ = __mul__

    def conj(self):
        return ImagQuadratic(self.re, -self.im, self.d)

    def norm(self):
        return self.re ** 2 + self.d * self.im ** 2

    def __truediv__(self, o):
        o = self._coerce(o)
        n = o.norm()
        p = self * o.conj()
        return ImagQuadratic(p.re / n, p.im / n, self.d)

    def __rtruediv__(self, o):
        return self._coerce(o) / self

    def __pow__(self, k):
        out = ImagQuadratic(1, 0, self.d)
        for _ in range(k):
            out = out * self
        return out

    def is_real(self):
        return self.im == 0

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.im == 0 and self.re == o
        if isinstance(o, ImagQuadratic):
            return (self.re, self.im) == (o.re, o.im) and (self.d == o.d or self.im == 0)
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im, self.d))

    def __complex__(self):
        return complex(float(self.re), float(self.im) * self.d ** 0.5)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re} + {self.im}*sqrt(-{self.d}))"

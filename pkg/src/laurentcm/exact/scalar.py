"""Exact scalars of the form (element of Q(sqrt2, sqrt3)) * pi^a * Omega^b."""
from fractions import Fraction
import math

from ..errors import UnitMismatch, NonInvertible, Unsupported

_BASIS = ((0, 0), (1, 0), (0, 1), (1, 1))


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _basis_mul(u, v):
    e2 = u[0] ^ v[0]
    e3 = u[1] ^ v[1]
    factor = (2 if u[0] and v[0] else 1) * (3 if u[1] and v[1] else 1)
    return (e2, e3), factor


class ScaledScalar:
    """rho * pi^pi_exp * Omega^omega_exp with rho in Q(sqrt2, sqrt3).

    ``terms`` maps (e2, e3) in {0,1}^2 to rational coefficients of
    sqrt2^e2 * sqrt3^e3.  The pi exponent may be a half integer (theta
    series carry sqrt(pi)); the Omega exponent is an integer.
    """

    __slots__ = ("terms", "pi_exp", "omega_exp")

    def __init__(self, terms=None, pi_exp=0, omega_exp=0):
        clean = {}
        for key, val in (terms or {}).items():
            val = _frac(val)
            if val:
                clean[tuple(key)] = val
        self.terms = clean
        self.pi_exp = _frac(pi_exp)
        self.omega_exp = int(omega_exp)

    # constructors
    @classmethod
    def of(cls, rho=1, e2=0, e3=0, pi=0, omega=0):
        return cls({(e2, e3): rho}, pi, omega)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.of(1)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, ScaledScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.of(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ScaledScalar")

    # predicates
    def is_zero(self):
        return not self.terms

    def is_rational(self):
        return set(self.terms) <= {(0, 0)} and self.pi_exp == 0 and self.omega_exp == 0

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms.get((0, 0), Fraction(0))

    def unit(self):
        return (self.pi_exp, self.omega_exp)

    # arithmetic
    def _check_units(self, other):
        if self.is_zero():
            return other.unit()
        if other.is_zero():
            return self.unit()
        if self.unit() != other.unit():
            raise UnitMismatch(
                f"cannot add pi^{self.pi_exp}*Omega^{self.omega_exp} "
                f"and pi^{other.pi_exp}*Omega^{other.omega_exp}")
        return self.unit()

    def __add__(self, other):
        try:
            other = ScaledScalar.coerce(other)
        except TypeError:
            return NotImplemented
        pi, om = self._check_units(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return ScaledScalar(terms, pi, om)

    __radd__ = __add__

    def __neg__(self):
        return ScaledScalar({k: -v for k, v in self.terms.items()}, self.pi_exp, self.omega_exp)

    def __sub__(self, other):
        try:
            other = ScaledScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = ScaledScalar.coerce(other)
        except TypeError:
            return NotImplemented
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                key, f = _basis_mul(u, v)
                terms[key] = terms.get(key, 0) + a * b * f
        return ScaledScalar(terms, self.pi_exp + other.pi_exp, self.omega_exp + other.omega_exp)

    __rmul__ = __mul__

    def _conj(self, which):
        idx = 0 if which == 2 else 1
        return ScaledScalar({k: (-v if k[idx] else v) for k, v in self.terms.items()},
                            self.pi_exp, self.omega_exp)

    def inverse(self):
        if self.is_zero():
            raise NonInvertible("inverse of zero scalar")
        field = ScaledScalar(self.terms)
        c2 = field._conj(2)
        y = field * c2              # lies in Q(sqrt3)
        c3 = y._conj(3)
        norm = (y * c3).terms.get((0, 0), Fraction(0))
        inv = c2 * c3 * ScaledScalar.of(1 / norm)
        return ScaledScalar(inv.terms, -self.pi_exp, -self.omega_exp)

    def __truediv__(self, other):
        try:
            other = ScaledScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ScaledScalar.coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        out = ScaledScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ScaledScalar.of(other)
        if not isinstance(other, ScaledScalar):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.terms == other.terms and self.unit() == other.unit()

    def __hash__(self):
        if self.is_zero():
            return hash(0)
        return hash((frozenset(self.terms.items()), self.pi_exp, self.omega_exp))

    def __bool__(self):
        return not self.is_zero()

    # numerics and I/O
    def field_value(self):
        r2, r3 = math.sqrt(2), math.sqrt(3)
        return sum(float(v) * r2 ** k[0] * r3 ** k[1] for k, v in self.terms.items())

    def numeric(self, omega=1.0):
        if self.is_zero():
            return 0.0
        return self.field_value() * math.pi ** float(self.pi_exp) * omega ** self.omega_exp

    def to_json(self):
        pi = self.pi_exp
        pi_out = int(pi) if pi.denominator == 1 else [pi.numerator, pi.denominator]
        return {
            "terms": [{"rho": [v.numerator, v.denominator], "e2": k[0], "e3": k[1]}
                      for k, v in sorted(self.terms.items())],
            "pi": pi_out,
            "omega": self.omega_exp,
        }

    @classmethod
    def from_json(cls, obj):
        pi = obj.get("pi", 0)
        pi = Fraction(*pi) if isinstance(pi, list) else Fraction(pi)
        if "terms" in obj:
            terms = {(t.get("e2", 0), t.get("e3", 0)): Fraction(*t["rho"]) for t in obj["terms"]}
        else:
            terms = {(obj.get("e2", 0), obj.get("e3", 0)): Fraction(*obj.get("rho", [1, 1]))}
        return cls(terms, pi, obj.get("omega", 0))

    def __repr__(self):
        return f"ScaledScalar({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        names = {(0, 0): "", (1, 0): "sqrt2", (0, 1): "sqrt3", (1, 1): "sqrt6"}
        parts = []
        for k, v in sorted(self.terms.items()):
            if names[k]:
                parts.append(names[k] if v == 1 else f"{v}*{names[k]}")
            else:
                parts.append(str(v))
        field = parts[0] if len(parts) == 1 else "(" + " + ".join(parts) + ")"
        units = []
        if self.pi_exp:
            units.append("pi" if self.pi_exp == 1 else f"pi^{self.pi_exp}")
        if self.omega_exp:
            units.append("Omega" if self.omega_exp == 1 else f"Omega^{self.omega_exp}")
        return "*".join([field] + units)


SQRT2 = ScaledScalar.of(1, e2=1)
SQRT3 = ScaledScalar.of(1, e3=1)
PI = ScaledScalar.of(1, pi=1)
SQRT_PI = ScaledScalar.of(1, pi=Fraction(1, 2))
OMEGA = ScaledScalar.of(1, omega=1)


def _squarefree_split(n):
    """n = s * f^2 with s squarefree; returns (s, f)."""
    s, f, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            f *= p
        if n % p == 0:
            n //= p
            s *= p
        p += 1
    return s * n, f


def sqrt_rational(q):
    """Exact square root of a non-negative rational inside Q(sqrt2, sqrt3)."""
    q = _frac(q)
    if q < 0:
        raise Unsupported("square root of a negative rational")
    if q == 0:
        return ScaledScalar.zero()
    # sqrt(a/b) = sqrt(a*b)/b
    s, f = _squarefree_split(q.numerator * q.denominator)
    key = {1: (0, 0), 2: (1, 0), 3: (0, 1), 6: (1, 1)}.get(s)
    if key is None:
        raise Unsupported(f"sqrt({q}) is not in Q(sqrt2, sqrt3)")
    return ScaledScalar({key: Fraction(f, q.denominator)})

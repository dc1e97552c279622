"""Fourier series with exponents in (1/den)Z, optionally vector valued."""
from fractions import Fraction
from math import gcd

from ..errors import InsufficientCoverage, NonInvertible, ArgumentError


def _lcm(a, b):
    return a * b // gcd(a, b)


class QSeries:
    """sum over (label, n) of c * q^(n/den) * phi_label.

    ``coverage`` is the largest exponent numerator up to which every
    coefficient is known (None means the series is exact).  Scalar series
    use the single label None.
    """

    __slots__ = ("den", "terms", "weight", "coverage", "labels")

    def __init__(self, den=1, terms=None, weight=None, coverage=None, labels=None):
        self.den = int(den)
        self.coverage = coverage
        self.weight = None if weight is None else Fraction(weight)
        clean = {}
        for (lab, n), c in (terms or {}).items():
            if coverage is not None and n > coverage:
                continue
            if c != 0:
                clean[(lab, int(n))] = c
        self.terms = clean
        if labels is None:
            labels = {lab for lab, _ in clean} or {None}
        self.labels = frozenset(labels)

    # construction helpers
    @classmethod
    def scalar(cls, coeffs, den=1, weight=None, coverage=None, start=0):
        """From a dense list of coefficients for exponents start, start+1, ... (numerators)."""
        terms = {(None, start + i): c for i, c in enumerate(coeffs)}
        if coverage is None:
            coverage = start + len(coeffs) - 1
        return cls(den, terms, weight, coverage, {None})

    @classmethod
    def monomial(cls, n, coeff=1, den=1, label=None, weight=None):
        return cls(den, {(label, n): coeff}, weight, None, {label})

    def is_scalar(self):
        return self.labels == frozenset({None})

    def lowest(self):
        return min((n for _, n in self.terms), default=None)

    def exponent(self, n):
        return Fraction(n, self.den)

    def coefficient(self, n, label=None):
        if self.coverage is not None and n > self.coverage:
            raise InsufficientCoverage(
                f"exponent {Fraction(n, self.den)} beyond coverage {Fraction(self.coverage, self.den)}",
                missing=(label, Fraction(n, self.den)))
        return self.terms.get((label, n), 0)

    def coeff_at(self, exponent, label=None):
        """Coefficient at a rational exponent (0 if it is not on the lattice)."""
        e = Fraction(exponent) * self.den
        if e.denominator != 1:
            return 0
        return self.coefficient(int(e), label)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], repr(kv[0][0])))

    def cover_exponent(self):
        return None if self.coverage is None else Fraction(self.coverage, self.den)

    # denominators
    def rescale(self, den):
        if den % self.den:
            raise ArgumentError(f"cannot rescale denominator {self.den} to {den}")
        f = den // self.den
        cov = None if self.coverage is None else self.coverage * f + (f - 1)
        return QSeries(den, {(lab, n * f): c for (lab, n), c in self.terms.items()},
                       self.weight, cov, self.labels)

    def _common(self, other):
        d = _lcm(self.den, other.den)
        return self.rescale(d), other.rescale(d)

    @staticmethod
    def _min_cov(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, QSeries):
            if other == 0:
                return self
            other = QSeries(self.den, {(lab, 0): other for lab in self.labels}, self.weight, None, self.labels)
        a, b = self._common(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            terms[k] = terms.get(k, 0) + c
        w = a.weight if a.weight is not None else b.weight
        return QSeries(a.den, terms, w, self._min_cov(a.coverage, b.coverage), a.labels | b.labels)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.den, {k: -c for k, c in self.terms.items()}, self.weight, self.coverage, self.labels)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return QSeries(self.den, {k: c * v for k, v in self.terms.items()}, self.weight, self.coverage, self.labels)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries(self.den, {k: v * other for k, v in self.terms.items()},
                           self.weight, self.coverage, self.labels)
        a, b = self._common(other)
        la, lb = a.lowest(), b.lowest()
        if la is None or lb is None:
            cov = self._min_cov(a.coverage, b.coverage)
            if a.coverage is not None and b.coverage is not None:
                cov = a.coverage + b.coverage
            return QSeries(a.den, {}, _addw(a.weight, b.weight), cov, _mul_labels(a, b))
        cov = None
        if a.coverage is not None:
            cov = a.coverage + lb
        if b.coverage is not None:
            cov = self._min_cov(cov, b.coverage + la)
        scalar_a, scalar_b = a.is_scalar(), b.is_scalar()
        terms = {}
        for (x, n), c in a.terms.items():
            for (y, m), d in b.terms.items():
                e = n + m
                if cov is not None and e > cov:
                    continue
                if scalar_a:
                    lab = y
                elif scalar_b:
                    lab = x
                else:
                    lab = (x, y)
                terms[(lab, e)] = terms.get((lab, e), 0) + c * d
        return QSeries(a.den, terms, _addw(a.weight, b.weight), cov, _mul_labels(a, b))

    def __rmul__(self, other):
        return QSeries(self.den, {k: other * v for k, v in self.terms.items()},
                       self.weight, self.coverage, self.labels)

    def truncate(self, coverage):
        cov = coverage if self.coverage is None else min(coverage, self.coverage)
        return QSeries(self.den, self.terms, self.weight, cov, self.labels)

    def qderiv(self, times=1):
        """(q d/dq)^times; raises the weight by 2*times (as in Rankin-Cohen bookkeeping)."""
        terms = {}
        for (lab, n), c in self.terms.items():
            f = Fraction(n, self.den) ** times
            if f:
                terms[(lab, n)] = f * c
        w = None if self.weight is None else self.weight + 2 * times
        return QSeries(self.den, terms, w, self.coverage, self.labels)

    def inverse(self):
        if not self.is_scalar():
            raise ArgumentError("only scalar series can be inverted")
        lo = self.lowest()
        if lo is None:
            raise NonInvertible("zero series")
        if self.coverage is None:
            raise ArgumentError("inverting an exact series needs an explicit coverage; call truncate first")
        lead = self.terms[(None, lo)]
        inv_lead = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
        n = self.coverage - lo + 1      # number of known coefficients
        s = [self.terms.get((None, lo + i), 0) for i in range(n)]
        out = [inv_lead]
        for k in range(1, n):
            acc = 0
            for j in range(1, k + 1):
                if s[j] != 0:
                    acc = acc + s[j] * out[k - j]
            out.append(-acc * inv_lead)
        w = None if self.weight is None else -self.weight
        return QSeries(self.den, {(None, -lo + i): c for i, c in enumerate(out)}, w,
                       self.coverage - 2 * lo, {None})

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other) if isinstance(other, int) else 1 / other)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = QSeries.monomial(0, 1, self.den, weight=0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def map_labels(self, fn):
        terms = {}
        for (lab, n), c in self.terms.items():
            new = fn(lab)
            if new is None:
                continue
            terms[(new, n)] = terms.get((new, n), 0) + c
        return QSeries(self.den, terms, self.weight, self.coverage, {fn(l) for l in self.labels} - {None} or None)

    def component(self, label):
        return QSeries(self.den, {(None, n): c for (lab, n), c in self.terms.items() if lab == label},
                       self.weight, self.coverage, {None})

    def equal_up_to(self, other, coverage_num):
        a, b = self._common(other)
        f = a.den // self.den
        bound = coverage_num * f
        keys = {k for k in a.terms if k[1] <= bound} | {k for k in b.terms if k[1] <= bound}
        return all(a.terms.get(k, 0) == b.terms.get(k, 0) for k in keys)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._common(other)
        return a.terms == b.terms and a.coverage == b.coverage

    def __repr__(self):
        parts = []
        for (lab, n), c in self.items()[:12]:
            tag = "" if lab is None else f"*phi{lab}"
            parts.append(f"({c})q^{Fraction(n, self.den)}{tag}")
        tail = "" if self.coverage is None else f" + O(q^>{Fraction(self.coverage, self.den)})"
        return "QSeries(" + (" + ".join(parts) or "0") + tail + ")"


def _addw(a, b):
    return None if a is None or b is None else a + b


def _mul_labels(a, b):
    if a.is_scalar():
        return b.labels
    if b.is_scalar():
        return a.labels
    return {(x, y) for x in a.labels for y in b.labels}

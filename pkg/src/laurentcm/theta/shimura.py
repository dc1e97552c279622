"""The discriminant form (Z/6)^2 x Z/2 and its isotypic bases."""
from fractions import Fraction

from ..errors import ArgumentError, Unsupported
from ..exact import ImagQuadratic, QSeries
from ..recursion.points import load_json
from .fqm import FiniteGroupAction, FiniteQuadraticModule


def _crt6(r2, r3):
    return (3 * r2 + 4 * r3) % 6


def _matvec(M, v, mod):
    return [sum(M[i][j] * v[j] for j in range(len(v))) % mod for i in range(len(M))]


class ShimuraData:
    def __init__(self, path="shimura_fqm.json"):
        raw = load_json(path)
        self.raw = raw
        self.A = FiniteQuadraticModule.diagonal(raw["A"]["orders"], [Fraction(x) for x in raw["A"]["diag"]])
        self.C = FiniteQuadraticModule.diagonal(raw["C"]["orders"], [Fraction(x) for x in raw["C"]["diag"]])
        self.characters = raw["characters"]
        self.w3 = {tuple(int(t) for t in k.split(",")): v for k, v in raw["w3"].items()}

    def _action(self, which, spec):
        meta = self.raw[which]
        c2, c3 = meta["p2"], meta["p3"]

        def fn(x):
            x = list(x)
            v2 = [x[i] % 2 for i in c2]
            v3 = [x[i] % 3 for i in c3 if i < 2]
            if "p2" in spec:
                v2 = _matvec(spec["p2"], v2, 2)
            if "p3" in spec:
                v3 = _matvec(spec["p3"], v3, 3)
            out = list(x)
            for pos, i in enumerate(c2):
                if i < 2:
                    out[i] = _crt6(v2[pos], v3[c3.index(i)])
                else:
                    out[i] = v2[pos]
            return tuple(out)

        return fn

    def generators(self, which="A"):
        return {name: self._action(which, spec) for name, spec in self.raw[f"generators_{which}"].items()}

    def group(self, which="A", character="chi0"):
        mod = self.A if which == "A" else self.C
        chars = self.characters[character] if isinstance(character, str) else character
        return FiniteGroupAction(mod, self.generators(which), chars)

    def w(self, a, c):
        return self.w3.get((a % 3, c % 3), 0)

    def e(self, i):
        """Basis vector e_i of C[A]^{chi1}."""
        return {x: self.w(x[0], x[1]) for x in self.A.elements()
                if x[0] % 2 + x[1] % 2 + x[2] == i and self.w(x[0], x[1])}

    def e_prime(self, m):
        """Basis vector e'_m of C[C]^{chi1}."""
        return {x: self.w(x[0], x[1]) for x in self.C.elements()
                if x[0] % 2 + x[1] % 2 == m and self.w(x[0], x[1])}


def pairing(u, v):
    return sum((c * v.get(x, 0) for x, c in u.items()), 0)


def vector_series(parts, den, weight=None, coverage=None, labels=None):
    """QSeries from [(exponent numerator, coefficient, vector)] triples."""
    terms = {}
    for n, c, vec in parts:
        for x, a in vec.items():
            terms[(x, n)] = terms.get((x, n), 0) + c * a
    return QSeries(den, terms, weight, coverage, labels)


def theta_N(k, order):
    """(sqrt6 i)^k sum_nu phi_nu sum (a + c i)^k q^{3(a^2+c^2)} over N' = (1/6)Z alpha + (1/6)Z gamma.

    Labels are (A mod 6, C mod 6) for a = A/6, c = C/6; exponents have denominator 12.
    Only even k is supported (the prefactor is then rational).
    """
    if k % 2:
        raise Unsupported("odd k needs sqrt6 * i in the prefactor")
    if k < 0:
        raise ArgumentError("k must be non-negative")
    pref = Fraction((-6) ** (k // 2), 6 ** k)
    cov = 12 * order
    bound = int((cov ** 0.5)) + 1
    terms = {}
    for A in range(-bound, bound + 1):
        for C in range(-bound, bound + 1):
            n = A * A + C * C
            if n > cov:
                continue
            val = ImagQuadratic(A, C, 1) ** k * pref
            key = ((A % 6, C % 6), n)
            terms[key] = terms[key] + val if key in terms else val
    labels = {(a, c) for a in range(6) for c in range(6)}
    return QSeries(12, terms, k + 1, cov, labels)

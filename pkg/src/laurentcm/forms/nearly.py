"""Nearly holomorphic q-series and the iterated raising operator."""
from math import pi

from ..errors import ArgumentError
from ..exact import QSeries, ScaledScalar

_MINUS_4PI = ScaledScalar.of(-4, pi=1)


class NearlyHolomorphic:
    """sum_j y^{-j} f_j(q) of a fixed integral weight."""

    def __init__(self, parts, weight):
        self.parts = list(parts)
        while len(self.parts) > 1 and not self.parts[-1].terms:
            self.parts.pop()
        self.weight = weight

    @classmethod
    def holomorphic(cls, f, weight=None):
        w = f.weight if weight is None else weight
        if w is None:
            raise ArgumentError("weight required")
        return cls([f], int(w))

    def is_holomorphic(self):
        return all(not p.terms for p in self.parts[1:])

    def raise_once(self):
        k = self.weight
        out = [None] * (len(self.parts) + 1)
        for j, f in enumerate(self.parts):
            d = f.qderiv()
            d = QSeries(d.den, {key: _MINUS_4PI * c for key, c in d.terms.items()},
                        k + 2, d.coverage, d.labels)
            out[j] = d if out[j] is None else out[j] + d
            if k - j:
                lower = f * (k - j)
                out[j + 1] = lower if out[j + 1] is None else out[j + 1] + lower
        out = [QSeries(p.den, p.terms, k + 2, p.coverage, p.labels) if p is not None
               else QSeries(self.parts[0].den, {}, k + 2, self.parts[0].coverage)
               for p in out]
        return NearlyHolomorphic(out, k + 2)

    def evaluate(self, z, omega=1.0):
        from ..numeric.evaluate import eval_qseries
        y = complex(z).imag
        return sum(eval_qseries(p, z, omega) * y ** (-j) for j, p in enumerate(self.parts))

    def __repr__(self):
        return f"NearlyHolomorphic(weight={self.weight}, parts={self.parts!r})"


def raise_iterated(f: NearlyHolomorphic, m: int) -> NearlyHolomorphic:
    """R_{k+2m-2} ... R_k f, with R_k = 2i d/dz + k/y acting termwise."""
    if m < 0:
        raise ArgumentError("m must be non-negative")
    for _ in range(m):
        f = f.raise_once()
    return f


def raising_via_serre_check(f, z0, m, q_terms=80):
    """Both sides of R^m f(z0) = (-4 pi)^m theta^{[m]} f(z0) for phi = E2/12.

    The identity needs phi*(z0) = 0, which holds for the points i and zeta.
    """
    from ..numeric.points import point_z
    from .operators import serre_tower
    from .qexp import phi_and_Phi, q_expansion

    z = point_z(z0)
    fq = q_expansion(f, q_terms)
    lhs = raise_iterated(NearlyHolomorphic.holomorphic(fq), m).evaluate(z)
    phi, Phi = phi_and_Phi(q_terms)
    from ..numeric.evaluate import eval_qseries
    rhs = (-4 * pi) ** m * eval_qseries(serre_tower(fq, phi, Phi, m)[m], z)
    return lhs, rhs

"""Floating-point evaluation of exact q-series and form expressions."""
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import PrecisionLoss
from ..exact import ImagQuadratic, ScaledScalar


@dataclass(frozen=True)
class NumericConfig:
    q_terms: int = 300
    contour_radius: float = 0.1
    contour_nodes: int = 256
    tolerance: float = 1e-8

    def __post_init__(self):
        n = self.contour_nodes
        if n < 64 or n & (n - 1):
            raise ValueError("contour_nodes must be a power of two >= 64")
        if not 0 < self.contour_radius < 1:
            raise ValueError("contour_radius must lie in (0, 1)")


def to_complex(c, omega=1.0):
    if isinstance(c, ScaledScalar):
        return complex(c.numeric(omega))
    if isinstance(c, ImagQuadratic):
        return complex(c)
    if isinstance(c, Fraction):
        return float(c)
    return complex(c)


def eval_qseries(qs, z, omega=1.0):
    """Evaluate a scalar QSeries at z in the upper half-plane."""
    z = complex(z)
    if z.imag <= 0:
        raise PrecisionLoss("point is not in the upper half-plane")
    total = 0j
    for (_, n), c in qs.terms.items():
        total += to_complex(c, omega) * cmath.exp(2j * math.pi * z * n / qs.den)
    return total


def qseries_arrays(qs):
    """(exponents, coefficients) as numpy arrays for vectorized evaluation."""
    items = sorted(qs.terms.items(), key=lambda kv: kv[0][1])
    ex = np.array([n / qs.den for (_, n), _ in items], dtype=float)
    co = np.array([to_complex(c) for _, c in items], dtype=complex)
    return ex, co


def eval_form(form, z, cfg=None):
    """Value of a FormExpr at z from truncated expansions of its atoms."""
    from ..forms.expr import evaluate
    from ..forms.qexp import atom_series

    cfg = cfg or NumericConfig()
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0.1):
        raise PrecisionLoss("Im(z) must exceed 0.1 for the truncated q-expansion")
    cache = {}

    def leaf(name):
        if name not in cache:
            ex, co = qseries_arrays(atom_series(name, cfg.q_terms))
            q = np.exp(2j * np.pi * np.multiply.outer(z, ex))
            cache[name] = q @ co
        return cache[name]

    out = evaluate(form, leaf, const=float)
    return complex(out) if np.ndim(out) == 0 else out

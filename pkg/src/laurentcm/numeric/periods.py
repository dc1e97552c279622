"""Chowla-Selberg periods."""
import math

from ..errors import Unsupported

# D -> (number of units w, class number h)
_BUILTIN = {3: (6, 1), 4: (4, 1)}


def kronecker_neg(D, j):
    """chi_{-D}(j) for the built-in discriminants."""
    if D == 4:
        return (0, 1, 0, -1)[j % 4]
    if D == 3:
        return (0, 1, -1)[j % 3]
    raise Unsupported(f"no character table for D = {D}")


def chowla_selberg(D):
    """Omega_{-D} = (2 pi D)^{-1/2} (prod_j Gamma(j/D)^{chi(j)})^{w/(4h)}."""
    if D not in _BUILTIN:
        raise Unsupported(f"Chowla-Selberg period only built in for D in {sorted(_BUILTIN)}")
    w, h = _BUILTIN[D]
    log_prod = sum(kronecker_neg(D, j) * math.lgamma(j / D) for j in range(1, D))
    return math.exp(log_prod * w / (4 * h)) / math.sqrt(2 * math.pi * D)

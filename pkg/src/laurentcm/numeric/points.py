"""Numeric locations of the built-in CM points."""
import math

from ..errors import ArgumentError

_POINTS = {
    "I": 1j,
    "ZETA": complex(-0.5, math.sqrt(3) / 2),
}


def point_z(z0):
    """Accept a point id string, an object with an ``id`` attribute, or a complex number."""
    if isinstance(z0, (complex, float, int)):
        return complex(z0)
    key = getattr(z0, "id", z0)
    key = str(key).upper()
    if key not in _POINTS:
        raise ArgumentError(f"unknown point {z0!r}")
    return _POINTS[key]

"""Laurent coefficients in the disc coordinate w by trapezoidal contour integration."""
import numpy as np

from ..errors import ArgumentError, ContourUnreliable
from ..forms.parser import parse_form_expr
from .evaluate import NumericConfig, eval_form
from .points import point_z

MAX_NODES = 1 << 14


def _trapezoid(form, k, z0, ms, radius, nodes, cfg):
    theta = 2 * np.pi * np.arange(nodes) / nodes
    w = radius * np.exp(1j * theta)
    z = (z0 - w * np.conj(z0)) / (1 - w)
    vals = np.asarray(eval_form(form, z, cfg)) * (1 - w) ** (-k)
    # a_m = mean(f(w) w^{-m}) over the circle
    out = {m: complex(np.mean(vals * w ** (-m))) for m in ms}
    return out, float(np.max(np.abs(vals)))


def _converged(form, k, z0, ms, radius, cfg):
    """Double the node count until two successive estimates agree."""
    nodes = cfg.contour_nodes
    prev, peak = _trapezoid(form, k, z0, ms, radius, nodes, cfg)
    while nodes < MAX_NODES:
        nodes *= 2
        cur, peak = _trapezoid(form, k, z0, ms, radius, nodes, cfg)
        if all(_close(prev[m], cur[m], _floor(peak, radius, m), cfg.tolerance) for m in ms):
            return cur, peak
        prev = cur
    raise ContourUnreliable(f"trapezoid rule did not settle with {MAX_NODES} nodes")


def _floor(peak, radius, m):
    # rounding noise in a_m is about eps * max|f| / r^m
    return 1e3 * np.finfo(float).eps * peak / radius ** m


def _close(a, b, floor, tol):
    return abs(a - b) <= tol * max(abs(a), abs(b)) + floor


def contour_laurent(form, k, z0, m_range, cfg=None, check_radius=True):
    """{m: a_m} with (1 - w)^{-k} f(z) = sum a_m w^m near z0.

    z = (z0 - w conj(z0)) / (1 - w).  The estimate at the configured radius
    is compared with the one at half the radius; a mismatch raises
    ContourUnreliable.
    """
    cfg = cfg or NumericConfig()
    if isinstance(form, str):
        form = parse_form_expr(form)
    z0 = point_z(z0)
    ms = list(m_range)
    if not ms:
        raise ArgumentError("empty m range")
    r = cfg.contour_radius
    main, peak = _converged(form, k, z0, ms, r, cfg)
    if check_radius:
        half, peak2 = _converged(form, k, z0, ms, r / 2, cfg)
        for m in ms:
            floor = max(_floor(peak, r, m), _floor(peak2, r / 2, m))
            if not _close(main[m], half[m], floor, cfg.tolerance * 100):
                raise ContourUnreliable(
                    f"coefficient of w^{m} depends on the radius: {main[m]} vs {half[m]}")
    return main

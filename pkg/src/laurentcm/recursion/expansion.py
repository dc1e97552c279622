"""Laurent expansions at CM points with exact unit normalization."""
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ArgumentError, PoleOrderMismatch, Unsupported, WeightBookkeeping
from ..exact import Poly, RatFunc, ScaledScalar, Taylor
from ..forms.expr import Const, Div, FormExpr
from ..forms.parser import parse_form_expr
from .engine import linear_recursion, nonlinear_recursion, nonlinear_sources, rvz_sequence
from .initial import p0_of


@dataclass
class LaurentExpansion:
    weight: int
    pole_order: int
    point: object
    coeffs: dict
    symbolic_coeffs: dict = field(default=None)
    values: dict = field(default=None)      # q_m(t0), before the unit fold
    form: object = field(default=None, compare=False)

    def to_json(self):
        out = {
            "point": self.point.name,
            "weight": self.weight,
            "pole_order": self.pole_order,
            "coeffs": {str(m): c.to_json() for m, c in sorted(self.coeffs.items())},
        }
        if self.form is not None:
            out["form"] = str(self.form)
        if self.values is not None:
            out["q_at_t0"] = {str(m): str(v) for m, v in sorted(self.values.items())}
        if self.symbolic_coeffs is not None:
            out["symbolic"] = {str(m): str(v) for m, v in sorted(self.symbolic_coeffs.items())}
        return out


def unit_factor(spec, k, m):
    """Omega_rec^{k+2m} (-4 pi y0)^m, written in powers of Omega_{-D}."""
    e = k + 2 * m
    if e % 2:
        raise Unsupported("odd total weight needs a square root of the period relation")
    omega = spec.point.omega_rec_sq ** (e // 2) * ScaledScalar.of(1, omega=e)
    return omega * (ScaledScalar.of(-4, pi=1) * spec.point.y0) ** m


def assemble_expansion(spec, k, N, qs, keep_symbolic=False):
    """coeffs[m] = q_m(t0) Omega_rec^{k+2m} (-4 pi y0)^m for m = -N, -N+1, ..."""
    t0 = spec.point.t0
    coeffs, values, symbolic = {}, {}, {}
    for i, q in enumerate(qs):
        m = i - N
        v = q(t0)
        values[m] = v
        coeffs[m] = unit_factor(spec, k, m) * v if v != 0 else ScaledScalar.zero()
        if keep_symbolic and not isinstance(q, Taylor):
            symbolic[m] = q
    return LaurentExpansion(k, N, spec.point, coeffs, symbolic if keep_symbolic else None, values)


def _as_expr(form):
    return parse_form_expr(form) if isinstance(form, str) else form


def _prep(x, spec, prec, symbolic):
    return x if symbolic else Taylor.of(x, spec.point.t0, prec)


def expand(spec, form, k=None, N=0, terms=6, method="rec2", normalization="plain", symbolic=False):
    """Laurent expansion of ``form`` at the spec's point via one of the recursions.

    method: 'rvz' (holomorphic, N = 0), 'rec2' (non-linear) or 'rec1'
    (linear, driven by the point's dlog h cache).
    """
    g = _as_expr(form)
    if not isinstance(g, FormExpr):
        raise ArgumentError("form must be an expression")
    if k is None:
        k = g.weight
    if Fraction(k) != g.weight:
        raise WeightBookkeeping(f"declared weight {k} differs from the expression weight {g.weight}")
    k = int(k)
    if terms < 1:
        raise ArgumentError("terms must be positive")
    t0 = spec.point.t0
    prec = 2 * (terms + N) + 8
    if method == "rvz":
        if N != 0:
            raise ArgumentError("the rvz method only handles holomorphic forms (N = 0)")
        qs = rvz_sequence(spec, k, _prep(p0_of(g, spec), spec, prec, symbolic), terms)
    elif method == "rec2":
        if N < 1:
            raise ArgumentError("rec2 needs a pole order N >= 1")
        inv = p0_of(Div(Const(Fraction(1)), g), spec)
        p_inv = rvz_sequence(spec, -k, _prep(inv, spec, prec, symbolic), N + 2)
        for m in range(N):
            if p_inv[m](t0) != 0:
                raise PoleOrderMismatch(f"the pole order at the point is {m}, not {N}")
        if p_inv[N](t0) == 0:
            raise PoleOrderMismatch(f"the pole order at the point exceeds {N}")
        init, A, B, C = nonlinear_sources(spec, k, N, p_inv, normalization)
        qs = nonlinear_recursion(spec, k, N, init, A, B, terms, C)
    elif method == "rec1":
        h = spec.point.h_coeffs
        if not spec.point.h_tilde1:
            raise ArgumentError("point fixture has no h data")
        p0 = p0_of(g, spec) * RatFunc(Poly.t() ** N)
        q_init = _prep(p0 * spec.point.h_tilde1 ** (-N), spec, prec, symbolic)
        if q_init(t0) == 0:
            raise PoleOrderMismatch(f"the pole order at the point is below {N}")
        qs = linear_recursion(spec, k, N, q_init, h, terms)
    else:
        raise ArgumentError(f"unknown method {method!r}")
    out = assemble_expansion(spec, k, N, qs, keep_symbolic=symbolic)
    out.form = g
    return out

"""Compare exact Laurent expansions with contour coefficients."""
from dataclasses import dataclass, field

from ..errors import ArgumentError
from .contour import contour_laurent
from .evaluate import NumericConfig
from .periods import chowla_selberg
from .points import point_z


@dataclass
class ValidationReport:
    point: str
    tolerance: float
    rows: list = field(default_factory=list)    # (m, exact, numeric, rel_err)

    @property
    def failures(self):
        return [m for m, _, _, err, ok in self.rows if not ok]

    @property
    def max_rel_err(self):
        return max((err for _, _, _, err, _ in self.rows), default=0.0)

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "point": self.point,
            "tolerance": self.tolerance,
            "max_rel_err": self.max_rel_err,
            "failures": self.failures,
            "rows": [{"m": m, "exact": [e.real, e.imag], "numeric": [n.real, n.imag], "rel_err": err}
                     for m, e, n, err, _ in self.rows],
        }


def numeric_value(c, D):
    """Float value of a ScaledScalar with Omega = Omega_{-D}."""
    return complex(c.numeric(chowla_selberg(D)))


def cross_validate(expansion, cfg=None, form=None, tolerance=1e-6):
    """Per-m relative errors between an exact expansion and contour coefficients.

    A coefficient counts as zero-consistent when both sides are below
    ``tolerance`` times the largest coefficient magnitude scaled to the radius.
    """
    cfg = cfg or NumericConfig()
    form = form if form is not None else expansion.form
    if form is None:
        raise ArgumentError("cross_validate needs the form the expansion came from")
    pt = expansion.point
    ms = sorted(expansion.coeffs)
    num = contour_laurent(form, expansion.weight, point_z(pt), ms, cfg)
    exact = {m: numeric_value(expansion.coeffs[m], pt.D) for m in ms}
    r = cfg.contour_radius
    scale = max(abs(exact[m]) * r ** m for m in ms) or 1.0
    report = ValidationReport(pt.name, tolerance)
    for m in ms:
        e, n = exact[m], num[m]
        denom = max(abs(e), abs(n))
        floor = tolerance * scale / r ** m
        if denom <= floor:
            err = 0.0 if abs(e - n) <= floor else float("inf")
        else:
            err = abs(e - n) / denom
        report.rows.append((m, e, n, err, err <= tolerance))
    return report

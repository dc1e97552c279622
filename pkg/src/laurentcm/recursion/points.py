"""CM points, recursion coefficient tables and their JSON fixtures."""
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from ..errors import ArgumentError
from ..exact import Poly, ScaledScalar


def fixture_path(name):
    """Resolve a fixture file, honouring the LAURENT_FIXTURES directory override."""
    base = os.environ.get("LAURENT_FIXTURES")
    if base:
        cand = os.path.join(base, name)
        if os.path.exists(cand):
            return cand
    if os.path.exists(name):
        return name
    return str(resources.files("laurentcm").joinpath("fixtures", os.path.basename(name)))


def load_json(name):
    with open(fixture_path(name), encoding="utf-8") as fh:
        return json.load(fh)


def _poly(v):
    return Poly(tuple(Fraction(c) for c in v))


@dataclass(frozen=True)
class CMPointId:
    id: str
    D: int
    y0: ScaledScalar
    t0: Fraction
    omega_relation: dict
    omega_rec_sq: ScaledScalar        # square of the recursion period in units of Omega_{-D}^2
    substitution: dict = field(default_factory=dict, compare=False)
    t_coordinate: str = ""
    h_tilde1: Fraction = Fraction(0)
    dlog_h: str = ""
    h_coeffs: tuple = ()

    @property
    def name(self):
        return self.id.lower()


@dataclass(frozen=True)
class RecursionSpec:
    a1: Poly
    a21: Poly
    a22: Poly
    a31: Poly
    a32: Poly
    point: CMPointId

    def a2(self, x, y):
        return self.a21 * Fraction(x) + self.a22 * Fraction(y)

    def a3(self, x, y):
        return self.a31 * Fraction(x) + self.a32 * Fraction(y)


def spec_from_json(obj):
    for key in ("id", "D", "y0", "t0", "omega_relation", "omega_rec_sq", "a1", "a21", "a22", "a31", "a32"):
        if key not in obj:
            raise ArgumentError(f"point fixture lacks field {key!r}")
    rel = dict(obj["omega_relation"])
    rel["value"] = ScaledScalar.from_json(rel["value"])
    point = CMPointId(
        id=obj["id"],
        D=int(obj["D"]),
        y0=ScaledScalar.from_json(obj["y0"]),
        t0=Fraction(obj["t0"]),
        omega_relation=rel,
        omega_rec_sq=ScaledScalar.from_json(obj["omega_rec_sq"]),
        substitution={k: _poly(v) for k, v in obj.get("substitution", {}).items()},
        t_coordinate=obj.get("t_coordinate", ""),
        h_tilde1=Fraction(obj.get("h_tilde1", 0)),
        dlog_h=obj.get("dlog_h", ""),
        h_coeffs=tuple(Fraction(c) for c in obj.get("h_coeffs", ())),
    )
    return RecursionSpec(*(_poly(obj[k]) for k in ("a1", "a21", "a22", "a31", "a32")), point)


_BUILTIN = {"i": "point_i.json", "zeta": "point_zeta.json"}


def load_spec(point="zeta", path=None):
    """Built-in spec for 'i' or 'zeta', or a user spec from ``path``."""
    if path is not None:
        return spec_from_json(load_json(path))
    key = getattr(point, "id", point).lower()
    if key not in _BUILTIN:
        raise ArgumentError(f"no built-in recursion table for point {point!r}; supply a spec file")
    return spec_from_json(load_json(_BUILTIN[key]))

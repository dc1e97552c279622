"""Coefficient tables: q-series data with a global unit and certified coverage."""
import json
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ArgumentError
from ..exact import QSeries, ScaledScalar
from ..recursion.points import fixture_path

ROLES = ("weakly_holomorphic_input", "maass_holomorphic_part", "theta")


def parse_label(s):
    if s in ("", "null", None):
        return None
    if "," in s:
        return tuple(int(t) for t in s.split(","))
    return int(s)


def format_label(lab):
    if lab is None:
        return ""
    if isinstance(lab, tuple):
        return ",".join(str(x) for x in lab)
    return str(lab)


@dataclass
class CoefficientTable:
    qseries: QSeries            # rational coefficients
    role: str = "weakly_holomorphic_input"
    unit: ScaledScalar = None
    name: str = ""

    def __post_init__(self):
        if self.role not in ROLES:
            raise ArgumentError(f"unknown table role {self.role!r}")
        if self.unit is None:
            self.unit = ScaledScalar.one()

    @property
    def den(self):
        return self.qseries.den

    @property
    def coverage(self):
        return self.qseries.coverage

    def coefficient(self, n, label=None):
        """Rational coefficient (without the unit) at exponent n/den."""
        return self.qseries.coefficient(n, label)

    def scaled(self):
        """The series with the unit folded into every coefficient."""
        u = self.unit
        terms = {k: u * c for k, c in self.qseries.terms.items()}
        return QSeries(self.den, terms, self.qseries.weight, self.coverage, self.qseries.labels)

    def to_json(self):
        cosets = {}
        for (lab, n), c in self.qseries.items():
            c = Fraction(c)
            cosets.setdefault(format_label(lab), []).append([n, [c.numerator, c.denominator]])
        out = {"den": self.den, "role": self.role, "unit": self.unit.to_json(),
               "cosets": cosets, "coverage": self.coverage}
        if self.qseries.weight is not None:
            w = self.qseries.weight
            out["weight"] = [w.numerator, w.denominator]
        out["labels"] = sorted(format_label(x) for x in self.qseries.labels)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, obj):
        den = int(obj["den"])
        terms = {}
        for lab, entries in obj["cosets"].items():
            key = parse_label(lab)
            for n, c in entries:
                terms[(key, int(n))] = Fraction(*c) if isinstance(c, list) else Fraction(c)
        labels = obj.get("labels")
        labels = {parse_label(x) for x in labels} if labels else None
        w = obj.get("weight")
        w = Fraction(*w) if isinstance(w, list) else (None if w is None else Fraction(w))
        qs = QSeries(den, terms, w, obj.get("coverage"), labels)
        unit = ScaledScalar.from_json(obj["unit"]) if "unit" in obj else None
        return cls(qs, obj.get("role", "weakly_holomorphic_input"), unit, obj.get("name", ""))

    @classmethod
    def load(cls, name):
        with open(fixture_path(name), encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def dumps(self):
        """Deterministic JSON text with one coset per line."""
        obj = self.to_json()
        cosets = obj.pop("cosets")
        lines = [f"  {json.dumps(k)}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(obj.items())]
        body = ",\n".join(f"    {json.dumps(lab)}: {json.dumps(cosets[lab])}" for lab in sorted(cosets))
        lines.append('  "cosets": {\n' + body + "\n  }")
        return "{\n" + ",\n".join(lines) + "\n}\n"

    def dump(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

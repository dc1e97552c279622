"""Abstract syntax for level-one modular form expressions."""
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import WeightError

ATOM_WEIGHTS = {
    "E2": Fraction(2),
    "E4": Fraction(4),
    "E6": Fraction(6),
    "Delta": Fraction(12),
    "eta": Fraction(1, 2),
    "j": Fraction(0),
}


class FormExpr:
    """Base node; every node carries its (possibly half-integral) weight."""

    weight: Fraction

    def __add__(self, other):
        return Add(self, _lift(other))

    def __sub__(self, other):
        return Sub(self, _lift(other))

    def __mul__(self, other):
        return Mul(self, _lift(other))

    def __rmul__(self, other):
        return Mul(_lift(other), self)

    def __truediv__(self, other):
        return Div(self, _lift(other))

    def __pow__(self, n):
        return Pow(self, n)

    def __neg__(self):
        return Neg(self)


def _lift(x):
    return x if isinstance(x, FormExpr) else Const(Fraction(x))


@dataclass(frozen=True)
class Atom(FormExpr):
    name: str
    weight: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        if self.name not in ATOM_WEIGHTS:
            raise ValueError(f"unknown atom {self.name!r}")
        object.__setattr__(self, "weight", ATOM_WEIGHTS[self.name])

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const(FormExpr):
    value: Fraction
    weight: Fraction = field(init=False, compare=False, default=Fraction(0))

    def __str__(self):
        v = self.value
        return str(v) if v.denominator == 1 else f"({v.numerator}/{v.denominator})"


@dataclass(frozen=True)
class Neg(FormExpr):
    arg: FormExpr
    weight: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weight", self.arg.weight)

    def __str__(self):
        return f"-({self.arg})"


@dataclass(frozen=True)
class _Binary(FormExpr):
    left: FormExpr
    right: FormExpr
    weight: Fraction = field(init=False, compare=False)
    symbol = "?"

    def __post_init__(self):
        object.__setattr__(self, "weight", self._infer())

    def __str__(self):
        return f"({self.left} {self.symbol} {self.right})"


class Add(_Binary):
    symbol = "+"

    def _infer(self):
        if self.left.weight != self.right.weight:
            raise WeightError(self.left.weight, self.right.weight)
        return self.left.weight


class Sub(Add):
    symbol = "-"


class Mul(_Binary):
    symbol = "*"

    def _infer(self):
        return self.left.weight + self.right.weight


class Div(_Binary):
    symbol = "/"

    def _infer(self):
        return self.left.weight - self.right.weight


@dataclass(frozen=True)
class Pow(FormExpr):
    base: FormExpr
    exponent: int
    weight: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weight", self.base.weight * self.exponent)

    def __str__(self):
        return f"({self.base})^{self.exponent}"


E2, E4, E6 = Atom("E2"), Atom("E4"), Atom("E6")
DELTA, ETA, J = Atom("Delta"), Atom("eta"), Atom("j")


def atoms(expr):
    if isinstance(expr, Atom):
        return {expr.name}
    if isinstance(expr, Const):
        return set()
    if isinstance(expr, Neg):
        return atoms(expr.arg)
    if isinstance(expr, Pow):
        return atoms(expr.base)
    return atoms(expr.left) | atoms(expr.right)


def evaluate(expr, leaf, const=lambda c: c):
    """Fold an expression tree given a map for atoms (and constants)."""
    if isinstance(expr, Atom):
        return leaf(expr.name)
    if isinstance(expr, Const):
        return const(expr.value)
    if isinstance(expr, Neg):
        return -evaluate(expr.arg, leaf, const)
    if isinstance(expr, Pow):
        return evaluate(expr.base, leaf, const) ** expr.exponent
    a = evaluate(expr.left, leaf, const)
    b = evaluate(expr.right, leaf, const)
    if isinstance(expr, Sub):
        return a - b
    if isinstance(expr, Add):
        return a + b
    if isinstance(expr, Mul):
        return a * b
    return a / b

"""Initial data p_0(t) for a level-one expression at a CM point."""
from fractions import Fraction

from ..errors import ExpressionNotLevelOne
from ..exact import RatFunc
from ..forms.expr import Add, Atom, Const, Div, Mul, Neg, Pow, Sub


def p0_of(expr, spec):
    """g / s^k written in the point's t-coordinate.

    E4 and E6 are replaced by the point's substitution polynomials, so Delta
    and j follow from E4^3 - E6^2 = 1728 Delta.  E2 and fractional eta powers
    are rejected.
    """
    sub = spec.point.substitution
    e4, e6 = RatFunc.coerce(sub["E4"]), RatFunc.coerce(sub["E6"])
    delta = (e4 ** 3 - e6 ** 2) * Fraction(1, 1728)

    def atom(name):
        if name == "E4":
            return e4
        if name == "E6":
            return e6
        if name == "Delta":
            return delta
        if name == "j":
            return e4 ** 3 / delta
        raise ExpressionNotLevelOne(f"{name} is not a level-one modular form")

    def go(e):
        if isinstance(e, Atom):
            return atom(e.name)
        if isinstance(e, Const):
            return RatFunc.coerce(e.value)
        if isinstance(e, Neg):
            return -go(e.arg)
        if isinstance(e, Pow):
            if isinstance(e.base, Atom) and e.base.name == "eta":
                if e.exponent % 24:
                    raise ExpressionNotLevelOne("eta enters only through powers divisible by 24")
                return delta ** (e.exponent // 24)
            return go(e.base) ** e.exponent
        a, b = go(e.left), go(e.right)
        if isinstance(e, Sub):
            return a - b
        if isinstance(e, Add):
            return a + b
        if isinstance(e, Mul):
            return a * b
        if isinstance(e, Div):
            return a / b
        raise ExpressionNotLevelOne(f"unsupported node {e!r}")

    return go(expr)

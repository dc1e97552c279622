"""Recursive-descent parser for form expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := (atom | '(' expr ')' | integer) ('^' signed_integer)?
"""
from fractions import Fraction

from ..errors import FormSyntaxError
from .expr import ATOM_WEIGHTS, Add, Atom, Const, Div, Mul, Neg, Pow, Sub


class _Parser:
    def __init__(self, src):
        self.src = src
        self.pos = 0

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def error(self, msg):
        raise FormSyntaxError(f"{msg} at offset {self.pos}", self.pos)

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-") and self.peek():
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek() in ("*", "/") and self.peek():
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.unary()
            if op == "*":
                node = Mul(node, rhs)
            elif isinstance(node, Const) and isinstance(rhs, Const):
                if rhs.value == 0:
                    self.error("division by the constant 0")
                node = Const(node.value / rhs.value)
            else:
                node = Div(node, rhs)
        return node

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            inner = self.unary()
            return Const(-inner.value) if isinstance(inner, Const) else Neg(inner)
        return self.factor()

    def factor(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        elif c.isdigit():
            node = Const(Fraction(self.integer()))
        elif c.isalpha():
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isalnum():
                self.pos += 1
            name = self.src[start:self.pos]
            if name not in ATOM_WEIGHTS:
                self.pos = start
                self.error(f"unknown atom {name!r}")
            node = Atom(name)
        elif not c:
            self.error("unexpected end of input")
        else:
            self.error(f"unexpected character {c!r}")
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            n = sign * self.integer()
            node = Const(node.value ** n) if isinstance(node, Const) else Pow(node, n)
        return node

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.src[start:self.pos])


def parse_form_expr(src: str):
    """Parse ``src`` into a FormExpr; weight mismatches raise WeightError."""
    p = _Parser(src)
    node = p.expr()
    if p.peek():
        p.error("trailing input")
    return node

"""Finite quadratic modules, isometry groups and isotypic projections."""
from collections import deque
from fractions import Fraction
from itertools import product

from ..errors import ArgumentError, InvalidAction


class FiniteQuadraticModule:
    """prod Z/n_i with Q(x) = sum_{i<=j} M[i][j] x_i x_j mod 1.

    Only the upper triangle of ``form`` is read, so a diagonal form is
    given by its diagonal.
    """

    def __init__(self, orders, form):
        self.orders = tuple(int(n) for n in orders)
        r = len(self.orders)
        self.form = [[Fraction(form[i][j]) if j >= i else Fraction(0) for j in range(r)] for i in range(r)]
        self._elements = [tuple(x) for x in product(*(range(n) for n in self.orders))]
        for x in self._elements:
            for i, n in enumerate(self.orders):
                y = list(x)
                y[i] += n
                if (self._raw(y) - self._raw(x)).denominator != 1:
                    raise ArgumentError("quadratic form is not well defined on the quotient")

    @classmethod
    def diagonal(cls, orders, diag):
        r = len(orders)
        return cls(orders, [[diag[i] if i == j else 0 for j in range(r)] for i in range(r)])

    def _raw(self, x):
        r = len(self.orders)
        return sum((self.form[i][j] * x[i] * x[j] for i in range(r) for j in range(i, r)), Fraction(0))

    def elements(self):
        return list(self._elements)

    def __len__(self):
        return len(self._elements)

    def reduce(self, x):
        return tuple(int(v) % n for v, n in zip(x, self.orders))

    def Q(self, x):
        return self._raw(self.reduce(x)) % 1

    def B(self, x, y):
        s = self.reduce(tuple(a + b for a, b in zip(x, y)))
        return (self.Q(s) - self.Q(x) - self.Q(y)) % 1

    def is_isometry(self, fn):
        images = [self.reduce(fn(x)) for x in self._elements]
        if len(set(images)) != len(images):
            return False
        return all(self.Q(x) == self.Q(y) for x, y in zip(self._elements, images))


class FiniteGroupAction:
    """Group generated by isometries, with a character attached to each element."""

    def __init__(self, module, generators, character=None):
        """``generators`` maps names to functions on elements; ``character`` maps names to +-1."""
        self.module = module
        elems = module.elements()
        index = {x: i for i, x in enumerate(elems)}
        gens = []
        for name, fn in generators.items():
            if not module.is_isometry(fn):
                raise InvalidAction(f"generator {name} is not an isometry of the quadratic module")
            perm = tuple(index[module.reduce(fn(x))] for x in elems)
            chi = 1 if character is None else character.get(name, 1)
            gens.append((perm, chi))
        ident = tuple(range(len(elems)))
        seen = {ident: 1}
        queue = deque([ident])
        while queue:
            g = queue.popleft()
            for perm, chi in gens:
                h = tuple(perm[i] for i in g)          # perm after g
                val = seen[g] * chi
                if h in seen:
                    if seen[h] != val:
                        raise InvalidAction("character is not well defined on the generated group")
                    continue
                seen[h] = val
                queue.append(h)
        self.elements = elems
        self.group = seen

    def order(self):
        return len(self.group)

    def project(self, vec):
        """Pi(phi) = |G|^{-1} sum_h chi(h)^{-1} h.phi for phi given as {element: coeff}."""
        out = {}
        scale = Fraction(1, len(self.group))
        idx = {x: i for i, x in enumerate(self.elements)}
        for perm, chi in self.group.items():
            for x, c in vec.items():
                y = self.elements[perm[idx[self.module.reduce(x)]]]
                out[y] = out.get(y, 0) + c * chi * scale
        return {k: v for k, v in out.items() if v != 0}


def isotypic_project(v, module, generators, character=None):
    """Projection of a coset vector (or a vector-valued QSeries) to the character's isotypic part."""
    from ..exact import QSeries

    act = FiniteGroupAction(module, generators, character)
    if isinstance(v, QSeries):
        by_exp = {}
        for (lab, n), c in v.terms.items():
            by_exp.setdefault(n, {})[lab] = c
        terms = {}
        for n, vec in by_exp.items():
            for lab, c in act.project(vec).items():
                terms[(lab, n)] = c
        return QSeries(v.den, terms, v.weight, v.coverage, set(module.elements()))
    return act.project(v)

from .expr import FormExpr, Atom, Const, Neg, Add, Sub, Mul, Div, Pow, E2, E4, E6, DELTA, ETA, J, atoms, evaluate
from .qexp import q_expansion, eisenstein, eta, delta, atom_series, phi_and_Phi
from .operators import (binom, serre_tower, rankin_cohen, jacobi_poly, jacobi_polynomial,
                        hermite, hermite_poly, ct_pairing)
from .nearly import NearlyHolomorphic, raise_iterated, raising_via_serre_check

__all__ = [
    "FormExpr", "Atom", "Const", "Neg", "Add", "Sub", "Mul", "Div", "Pow",
    "E2", "E4", "E6", "DELTA", "ETA", "J", "atoms", "evaluate",
    "q_expansion", "eisenstein", "eta", "delta", "atom_series", "phi_and_Phi",
    "binom", "serre_tower", "rankin_cohen", "jacobi_poly", "jacobi_polynomial",
    "hermite", "hermite_poly", "ct_pairing",
    "NearlyHolomorphic", "raise_iterated", "raising_via_serre_check",
    "parse_form_expr",
]
from .parser import parse_form_expr

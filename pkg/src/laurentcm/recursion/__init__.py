from .points import CMPointId, RecursionSpec, load_spec, spec_from_json, fixture_path, load_json
from .engine import (rvz_sequence, intro_delta_sequence, apply_L, nonlinear_recursion, nonlinear_sources,
                     statement_coefficients, linear_recursion, dlog_h_coefficients, h_series)
from .initial import p0_of
from .expansion import LaurentExpansion, assemble_expansion, unit_factor, expand

__all__ = [
    "CMPointId", "RecursionSpec", "load_spec", "spec_from_json", "fixture_path", "load_json",
    "rvz_sequence", "intro_delta_sequence", "apply_L", "nonlinear_recursion", "nonlinear_sources",
    "statement_coefficients", "linear_recursion", "dlog_h_coefficients", "h_series",
    "p0_of", "LaurentExpansion", "assemble_expansion", "unit_factor", "expand",
]

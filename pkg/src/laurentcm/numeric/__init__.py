from .evaluate import NumericConfig, eval_form, eval_qseries, to_complex
from .points import point_z
from .contour import contour_laurent
from .periods import chowla_selberg, kronecker_neg
from .validate import ValidationReport, cross_validate, numeric_value

__all__ = [
    "NumericConfig", "eval_form", "eval_qseries", "to_complex", "point_z", "contour_laurent",
    "chowla_selberg", "kronecker_neg", "ValidationReport", "cross_validate", "numeric_value",
]

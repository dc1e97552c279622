from .fqm import FiniteQuadraticModule, FiniteGroupAction, isotypic_project
from .shimura import ShimuraData, pairing, vector_series, theta_N
from .tables import CoefficientTable, parse_label, format_label
from .series import unary_theta, binary_theta_cm
from .lifts import (BS, BZ, bs_laurent_level1, level1_inputs, ct_laurent_general, ct_laurent_level1,
                    bs_lift_q_expansion, bz_lift_q_expansion, BZExpansion, leading_singular_coeff, LiftInputs)

__all__ = [
    "FiniteQuadraticModule", "FiniteGroupAction", "isotypic_project",
    "ShimuraData", "pairing", "vector_series", "theta_N",
    "CoefficientTable", "parse_label", "format_label", "unary_theta", "binary_theta_cm",
    "BS", "BZ", "bs_laurent_level1", "level1_inputs", "ct_laurent_general", "ct_laurent_level1",
    "bs_lift_q_expansion", "bz_lift_q_expansion", "BZExpansion", "leading_singular_coeff", "LiftInputs",
]

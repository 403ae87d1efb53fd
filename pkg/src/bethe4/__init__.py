"""Exact nested Bethe vectors for evaluation modules of the Yangian Y(gl4).

Four independent engine routes produce the same coefficient map for the
weight function B_xi(t) v in the fixed PBW basis of the gl4 Verma module:
the RTT definition (`weight_function_direct`) and three stacked closed
formulas (`weight_function_presym`, `weight_function_main`,
`weight_function_main2`). Every supporting identity ships as an executable
check; run them all with ``bethe4 verify`` or the pytest suite.
"""

from .comb import (weight_function_main, weight_function_main2,
                   weight_function_presym)
from .exact import PoleError, Rational, rat
from .gl2 import EvalModuleContext
from .params import ParamPoint, sample_point
from .rtt import weight_function_direct
from .verma import HighestWeight, ModuleVector, unit_vector

__all__ = [
    "EvalModuleContext",
    "HighestWeight",
    "ModuleVector",
    "ParamPoint",
    "PoleError",
    "Rational",
    "rat",
    "sample_point",
    "unit_vector",
    "weight_function_direct",
    "weight_function_main",
    "weight_function_main2",
    "weight_function_presym",
]

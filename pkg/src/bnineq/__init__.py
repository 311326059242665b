"""Operator-based Lp polynomial inequalities on the unit circle: library and harness."""

from .poly import Polynomial, from_roots, min_modulus, max_modulus, roots, zero_location
from .operator import BnOperator, GammaOperator, PhiParams, phi_n
from .norms import NormValue, binomial_norm, lp_norm, one_plus_z_norm
from .sampling import DominatedPair, InequalityInstance
from .verify import SlackReport

__all__ = [
    "Polynomial", "from_roots", "min_modulus", "max_modulus", "roots", "zero_location",
    "BnOperator", "GammaOperator", "PhiParams", "phi_n",
    "NormValue", "binomial_norm", "lp_norm", "one_plus_z_norm",
    "DominatedPair", "InequalityInstance", "SlackReport",
]

"""
Exact evaluation of Hecke algebra characters at products of Kazhdan-Lusztig
reversal elements, through star networks, path tableaux and quantum matrices.
"""

from .errors import HeckeStarnetError, InputError
from .evalchar import EvalRequest, eval_epsilon, eval_epsilon_kl, eval_theta
from .hecke import HeckeElt, LinearFunctional, induced_sign_char, product_of_reversals
from .laurent import LaurentPoly, half_power
from .perm import Interval, Partition, Perm
from .starnet import PathFamily, StarNetwork, covering_families, defect_expansion, parse_intervals

__all__ = [
    "EvalRequest",
    "HeckeElt",
    "HeckeStarnetError",
    "InputError",
    "Interval",
    "LaurentPoly",
    "LinearFunctional",
    "Partition",
    "PathFamily",
    "Perm",
    "StarNetwork",
    "covering_families",
    "defect_expansion",
    "eval_epsilon",
    "eval_epsilon_kl",
    "eval_theta",
    "half_power",
    "induced_sign_char",
    "parse_intervals",
    "product_of_reversals",
]

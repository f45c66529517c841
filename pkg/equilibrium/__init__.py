"""
equilibrium — 纯策略 NE、强均衡，以及 Z(G) / NE(G) 的分类比较
"""

from .nash import DeviationWitness, enumerate_nash, is_nash
from .strong import DEFAULT_STRONG_MAX_PLAYERS, enumerate_strong, is_strong_equilibrium
from .report import Classification, SolutionReport, classify, compare

__all__ = [
    "DeviationWitness", "enumerate_nash", "is_nash",
    "DEFAULT_STRONG_MAX_PLAYERS", "enumerate_strong", "is_strong_equilibrium",
    "Classification", "SolutionReport", "classify", "compare",
]

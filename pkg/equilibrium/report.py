"""
Z(G) 与 NE(G) 的比较报告
"""

from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, FrozenSet, Optional

from core.model import CanonicalProfile, CongestionGame, GameForm, profile_label
from dynamics.greedy import greedy_enumerate
from utils.logger import get_logger

from .nash import enumerate_nash
from .strong import DEFAULT_STRONG_MAX_PLAYERS, enumerate_strong

logger = get_logger("equilibrium.report")


class Classification(str, Enum):
    EQUAL = "EQUAL"
    GREEDY_STRICT_SUBSET = "GREEDY_STRICT_SUBSET"
    NASH_STRICT_SUBSET = "NASH_STRICT_SUBSET"
    OVERLAP = "OVERLAP"
    DISJOINT = "DISJOINT"


def classify(greedy: AbstractSet[CanonicalProfile], nash: AbstractSet[CanonicalProfile]) -> Classification:
    if greedy == nash:
        return Classification.EQUAL
    if greedy < nash:
        return Classification.GREEDY_STRICT_SUBSET
    if nash < greedy:
        return Classification.NASH_STRICT_SUBSET
    if greedy & nash:
        return Classification.OVERLAP
    return Classification.DISJOINT


@dataclass(frozen=True)
class SolutionReport:
    greedy: FrozenSet[CanonicalProfile]
    nash: FrozenSet[CanonicalProfile]
    strong: Optional[FrozenSet[CanonicalProfile]]
    classification: Classification

    def __post_init__(self):
        if classify(self.greedy, self.nash) is not self.classification:
            raise ValueError("classification does not match the greedy and nash sets")

    @property
    def greedy_only(self) -> FrozenSet[CanonicalProfile]:
        return self.greedy - self.nash

    @property
    def nash_only(self) -> FrozenSet[CanonicalProfile]:
        return self.nash - self.greedy

    @property
    def common(self) -> FrozenSet[CanonicalProfile]:
        return self.greedy & self.nash

    def to_dict(self, form: GameForm) -> dict:
        def labels(profiles):
            return [profile_label(form, p) for p in sorted(profiles)]

        out = {
            "classification": self.classification.value,
            "greedy": labels(self.greedy),
            "nash": labels(self.nash),
            "greedy_only": labels(self.greedy_only),
            "nash_only": labels(self.nash_only),
        }
        if self.strong is not None:
            out["strong"] = labels(self.strong)
        return out


def compare(game: CongestionGame, include_strong: bool = False,
            strong_max_players: int = DEFAULT_STRONG_MAX_PLAYERS) -> SolutionReport:
    greedy = frozenset(greedy_enumerate(game))
    nash = frozenset(enumerate_nash(game))
    strong = frozenset(enumerate_strong(game, strong_max_players)) if include_strong else None
    report = SolutionReport(greedy, nash, strong, classify(greedy, nash))
    logger.debug("compare: |Z|=%d |NE|=%d -> %s", len(greedy), len(nash), report.classification.value)
    return report

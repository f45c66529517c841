"""
纯策略 Nash 均衡 — 检查与穷举

穷举只扫多重集（combinations_with_replacement），每个出现的策略只检查一个代表玩家。
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence, Set, Tuple

from core.model import CanonicalProfile, CongestionGame, GameForm, validate_profile
from core.payoffs import background_without, strategy_value
from utils.logger import get_logger

logger = get_logger("equilibrium.nash")


@dataclass(frozen=True)
class DeviationWitness:
    """
    单人或联盟偏离；每个成员的 gain 都严格为正
    """

    players: Tuple[int, ...]
    from_strategies: Tuple[int, ...]
    to_strategies: Tuple[int, ...]
    gains: Tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.players)
        if not n or not (len(self.from_strategies) == len(self.to_strategies) == len(self.gains) == n):
            raise ValueError("deviation witness fields must have equal, nonzero length")
        if any(g <= 0 for g in self.gains):
            raise ValueError("every coalition member must strictly gain")

    @property
    def is_unilateral(self) -> bool:
        return len(self.players) == 1

    def describe(self, form: GameForm) -> dict:
        return {
            "players": list(self.players),
            "from": [form.strategy_label(s) for s in self.from_strategies],
            "to": [form.strategy_label(s) for s in self.to_strategies],
            "gains": [str(g) for g in self.gains],
        }


def _first_deviation(game: CongestionGame, profile: Sequence[int], player: int) -> Optional[DeviationWitness]:
    background = background_without(game, profile, player)
    current = strategy_value(game, profile[player], background)
    for t in range(game.form.n_strategies):
        if t == profile[player]:
            continue
        gain = strategy_value(game, t, background) - current
        if gain > 0:
            return DeviationWitness((player,), (profile[player],), (t,), (gain,))
    return None


def is_nash(game: CongestionGame, profile: Sequence[int]) -> Optional[DeviationWitness]:
    """
    Returns:
        None 表示 NE；否则按 (player, strategy) 字典序第一个严格改进的单人偏离
    """
    profile = validate_profile(game, profile)
    for player in range(game.players):
        witness = _first_deviation(game, profile, player)
        if witness is not None:
            return witness
    return None


def enumerate_nash(game: CongestionGame) -> Set[CanonicalProfile]:
    """NE(G) 的全部 canonical profile"""
    found: Set[CanonicalProfile] = set()
    checked = 0
    for profile in combinations_with_replacement(range(game.form.n_strategies), game.players):
        checked += 1
        stable = True
        for player, s in enumerate(profile):
            if player > 0 and profile[player - 1] == s:
                continue
            if _first_deviation(game, profile, player) is not None:
                stable = False
                break
        if stable:
            found.add(profile)
    logger.debug("nash enumeration: %d of %d multisets stable", len(found), checked)
    return found

"""
强均衡 — 不存在能让全体成员严格获益的联盟联合偏离

联盟按 (规模, 字典序) 扫描，联合重分配按 itertools.product 顺序；
代价 2^N · |Σ|^N，所以 N 有上限。
"""

from itertools import combinations, product
from typing import Optional, Sequence, Set

from core.errors import PreconditionError
from core.model import CanonicalProfile, CongestionGame, validate_profile
from core.payoffs import utilities

from .nash import DeviationWitness, enumerate_nash, is_nash

DEFAULT_STRONG_MAX_PLAYERS = 12


def _guard(game: CongestionGame, max_players: int):
    if game.players > max_players:
        raise PreconditionError(
            f"strong-equilibrium sweep is limited to {max_players} players, game has {game.players}"
        )


def _coalition_deviation(game: CongestionGame, profile: Sequence[int],
                         before: Sequence) -> Optional[DeviationWitness]:
    n_strategies = game.form.n_strategies
    for size in range(1, game.players + 1):
        for coalition in combinations(range(game.players), size):
            current = tuple(profile[i] for i in coalition)
            for assignment in product(range(n_strategies), repeat=size):
                if assignment == current:
                    continue
                moved = list(profile)
                for i, t in zip(coalition, assignment):
                    moved[i] = t
                after = utilities(game, moved)
                gains = tuple(after[i] - before[i] for i in coalition)
                if all(g > 0 for g in gains):
                    return DeviationWitness(coalition, current, assignment, gains)
    return None


def is_strong_equilibrium(game: CongestionGame, profile: Sequence[int],
                          max_players: int = DEFAULT_STRONG_MAX_PLAYERS) -> Optional[DeviationWitness]:
    """
    Returns:
        None 表示强均衡；否则第一个联盟偏离

    Raises:
        PreconditionError: N 超过 max_players
    """
    profile = validate_profile(game, profile)
    _guard(game, max_players)
    unilateral = is_nash(game, profile)
    if unilateral is not None:
        return unilateral
    return _coalition_deviation(game, profile, utilities(game, profile))


def enumerate_strong(game: CongestionGame,
                     max_players: int = DEFAULT_STRONG_MAX_PLAYERS) -> Set[CanonicalProfile]:
    """强均衡 ⊆ NE，只需在 enumerate_nash 的结果里筛"""
    _guard(game, max_players)
    return {
        p for p in enumerate_nash(game)
        if _coalition_deviation(game, p, utilities(game, p)) is None
    }

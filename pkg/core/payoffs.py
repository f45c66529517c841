"""
拥塞、效用、势函数与 best response

全部精确有理数运算，比较无容差。
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidProfileError, PreconditionError
from .model import (
    CanonicalProfile,
    CongestionGame,
    CongestionVector,
    GameForm,
    mask_indices,
    validate_profile,
)


def congestion_vector(game: CongestionGame, profile: Sequence[int]) -> CongestionVector:
    """c(s)_r = 使用资源 r 的玩家数"""
    profile = validate_profile(game, profile)
    return _congestion(game, profile)


def _congestion(game: CongestionGame, profile: Sequence[int]) -> CongestionVector:
    counts = [0] * game.form.n_resources
    for s in profile:
        for r in mask_indices(game.form.strategies[s].mask):
            counts[r] += 1
    return tuple(counts)


def utility(game: CongestionGame, profile: Sequence[int], player: int) -> Fraction:
    """U^i(s) = Σ_{r ∈ s^i} P_r(c(s)_r)"""
    profile = validate_profile(game, profile)
    if not 0 <= player < game.players:
        raise InvalidProfileError(f"invalid player index {player}")
    counts = _congestion(game, profile)
    return _utility_at(game, profile[player], counts)


def _utility_at(game: CongestionGame, strategy: int, counts: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for r in mask_indices(game.form.strategies[strategy].mask):
        total += game.payoff(r, counts[r])
    return total


def utilities(game: CongestionGame, profile: Sequence[int]) -> Tuple[Fraction, ...]:
    profile = validate_profile(game, profile)
    counts = _congestion(game, profile)
    return tuple(_utility_at(game, s, counts) for s in profile)


def strategy_value(game: CongestionGame, strategy: int, background: Sequence[int]) -> Fraction:
    """Σ_{r ∈ t} P_r(background_r + 1)：在既有拥塞上再加入一人时 t 的收益"""
    total = Fraction(0)
    for r in mask_indices(game.form.strategies[strategy].mask):
        total += game.payoff(r, background[r] + 1)
    return total


def background_without(game: CongestionGame, profile: Sequence[int], player: int) -> CongestionVector:
    """除 player 外其他玩家形成的拥塞"""
    counts = list(_congestion(game, profile))
    for r in mask_indices(game.form.strategies[profile[player]].mask):
        counts[r] -= 1
    return tuple(counts)


def deviation_utility(game: CongestionGame, profile: Sequence[int],
                      player: int, strategy: int) -> Fraction:
    """U^i(s^{-i}, t)"""
    return strategy_value(game, strategy, background_without(game, profile, player))


def is_monotone(game: CongestionGame) -> bool:
    """每个资源 P_r(1) > P_r(2) > ... > P_r(N)"""
    n = game.players
    for row in game.payoffs:
        for k in range(n - 1):
            if not row[k] > row[k + 1]:
                return False
    return True


def is_single_signed(game: CongestionGame) -> bool:
    values = [v for row in game.payoffs for v in row[:game.players]]
    return all(v > 0 for v in values) or all(v < 0 for v in values)


def is_subset_free(form: GameForm) -> Optional[Tuple[int, int]]:
    """
    Returns:
        None 表示 subset-free；否则返回一对 (s, t)，s ⊂ t
    """
    strategies = form.strategies
    for i, s in enumerate(strategies):
        for j, t in enumerate(strategies):
            if i != j and s.issubset(t):
                return (i, j)
    return None


def reduce_to_subset_free(game: CongestionGame) -> CongestionGame:
    """
    删除被占优的策略

    正 payoff：s ⊂ t 时 s 被 t 占优 → 只保留极大元
    负 payoff：s ⊂ t 时 t 被 s 占优 → 只保留极小元
    极大元/极小元本身构成反链，一遍即为不动点。
    """
    if not is_monotone(game):
        raise PreconditionError("reduction requires a monotone game")
    if not is_single_signed(game):
        raise PreconditionError("reduction requires single-signed payoffs")

    positive = game.payoffs[0][0] > 0
    strategies = game.form.strategies
    kept = []
    for s in strategies:
        if positive:
            dominated = any(s.is_proper_subset(t) for t in strategies)
        else:
            dominated = any(t.is_proper_subset(s) for t in strategies)
        if not dominated:
            kept.append(s)
    return game.with_form(game.form.with_strategies(kept))


def rosenthal_potential(game: CongestionGame, profile: Sequence[int]) -> Fraction:
    """Φ(s) = Σ_r Σ_{k=1}^{c(s)_r} P_r(k)"""
    counts = congestion_vector(game, profile)
    total = Fraction(0)
    for r, c in enumerate(counts):
        for k in range(1, c + 1):
            total += game.payoff(r, k)
    return total


def best_response_set(game: CongestionGame, background: Sequence[int]) -> Tuple[int, ...]:
    """
    在 background 拥塞下收益最大的全部策略（升序，非空）

    background 每个分量必须 ≤ N-1（否则 P_r(c+1) 无定义）
    """
    if len(background) != game.form.n_resources:
        raise PreconditionError("background length does not match the resource count")
    if any(c < 0 or c > game.players - 1 for c in background):
        raise PreconditionError("background congestion must lie in [0, N-1]")
    best: Optional[Fraction] = None
    winners: List[int] = []
    for t in range(game.form.n_strategies):
        value = strategy_value(game, t, background)
        if best is None or value > best:
            best = value
            winners = [t]
        elif value == best:
            winners.append(t)
    return tuple(winners)


def canonicalize(profile: Sequence[int]) -> CanonicalProfile:
    return tuple(sorted(profile))


def utility_matrix(game: CongestionGame) -> List[List[Tuple[Fraction, Fraction]]]:
    """两人博弈的 bimatrix：matrix[row][col] = (行玩家效用, 列玩家效用)"""
    if game.players != 2:
        raise PreconditionError("the utility matrix is defined for 2-player games")
    n = game.form.n_strategies
    return [[utilities(game, (a, b)) for b in range(n)] for a in range(n)]


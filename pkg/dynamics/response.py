"""
Best-response / better-response 动态

每一步选一个当前没有在打 best response 的玩家，让他改策略：
    best-response 模式  → 移到 best response
    better-response 模式 → 移到某个严格改进的策略
到达 NE 或步数用完即停。单调博弈上每步 Rosenthal 势严格增加，一定终止。
"""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.errors import PreconditionError
from core.model import CongestionGame, StrategyProfile, validate_profile
from core.payoffs import background_without, best_response_set, rosenthal_potential, strategy_value
from utils.logger import get_logger

logger = get_logger("dynamics.response")


class ResponseMode(str, Enum):
    BEST = "br"
    BETTER = "better"


class MoverPolicy(str, Enum):
    LOWEST_INDEX = "lowest-index"
    HIGHEST_GAIN = "highest-gain"
    RANDOM = "random"


@dataclass(frozen=True)
class DynamicsStep:
    player: int
    from_strategy: int
    to_strategy: int
    utility_before: Fraction
    utility_after: Fraction

    @property
    def gain(self) -> Fraction:
        return self.utility_after - self.utility_before


@dataclass(frozen=True)
class DynamicsTrace:
    """
    potential_path[0] = Φ(start)，之后每步一个值，长度 = len(steps) + 1
    """

    start: StrategyProfile
    steps: Tuple[DynamicsStep, ...]
    terminal: StrategyProfile
    converged: bool
    potential_path: Tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def within_bound(self, bound: int) -> bool:
        """收敛且步数不超过 bound"""
        return self.converged and len(self.steps) <= bound


def default_max_steps(game: CongestionGame) -> int:
    return game.players * game.form.n_strategies * 10


def _unhappy(game: CongestionGame, profile: Sequence[int]):
    """(player, 当前效用, best response 集合, best 值)，只含能严格改进的玩家"""
    out = []
    for i, s in enumerate(profile):
        background = background_without(game, profile, i)
        current = strategy_value(game, s, background)
        best = best_response_set(game, background)
        best_value = strategy_value(game, best[0], background)
        if best_value > current:
            out.append((i, current, best, best_value, background))
    return out


def response_dynamics(game: CongestionGame, start: Sequence[int],
                      mode: ResponseMode = ResponseMode.BEST,
                      policy: MoverPolicy = MoverPolicy.LOWEST_INDEX,
                      max_steps: Optional[int] = None,
                      seed: int = 0) -> DynamicsTrace:
    """
    Args:
        max_steps: None → N·|Σ|·10
        seed:      只在 RANDOM 策略下使用

    Raises:
        InvalidProfileError: start 非法
        PreconditionError:   max_steps < 0
    """
    profile: List[int] = list(validate_profile(game, start))
    mode = ResponseMode(mode)
    policy = MoverPolicy(policy)
    if max_steps is None:
        max_steps = default_max_steps(game)
    if max_steps < 0:
        raise PreconditionError("max_steps must be >= 0")
    rng = random.Random(seed)

    steps: List[DynamicsStep] = []
    potentials = [rosenthal_potential(game, profile)]
    converged = False
    while True:
        unhappy = _unhappy(game, profile)
        if not unhappy:
            converged = True
            break
        if len(steps) >= max_steps:
            break

        if policy is MoverPolicy.LOWEST_INDEX:
            entry = unhappy[0]
        elif policy is MoverPolicy.HIGHEST_GAIN:
            entry = max(unhappy, key=lambda e: (e[3] - e[1], -e[0]))
        else:
            entry = rng.choice(unhappy)
        player, current, best, best_value, background = entry

        if mode is ResponseMode.BEST:
            target = rng.choice(best) if policy is MoverPolicy.RANDOM else best[0]
            after = best_value
        else:
            improving = [
                t for t in range(game.form.n_strategies)
                if strategy_value(game, t, background) > current
            ]
            if policy is MoverPolicy.LOWEST_INDEX:
                target = improving[0]
            elif policy is MoverPolicy.HIGHEST_GAIN:
                target = best[0]
            else:
                target = rng.choice(improving)
            after = strategy_value(game, target, background)

        steps.append(DynamicsStep(player, profile[player], target, current, after))
        logger.debug("step %d: player %d %s -> %s (%s -> %s)", len(steps), player,
                     game.form.strategy_label(profile[player]),
                     game.form.strategy_label(target), current, after)
        profile[player] = target
        potentials.append(rosenthal_potential(game, profile))

    return DynamicsTrace(
        start=tuple(start),
        steps=tuple(steps),
        terminal=tuple(profile),
        converged=converged,
        potential_path=tuple(potentials),
    )

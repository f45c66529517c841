"""
Greedy 顺序到达 — 玩家按到达顺序依次对前面所有人的选择做 best response，选定后不再改变

对称博弈里 "谁先到" 不影响结果的多重集，所以枚举 Z(G) 时只搜索
"第 k 个到达者选了哪个策略" 这条序列，再把叶子规范化成 CanonicalProfile。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple

from core.errors import InvalidTieError
from core.model import CanonicalProfile, CongestionGame, StrategyProfile, mask_indices, validate_profile
from core.payoffs import best_response_set, canonicalize
from utils.logger import get_logger

logger = get_logger("dynamics.greedy")


@dataclass(frozen=True)
class ArrivalOrder:
    """permutation[k] = 第 k 个到达的玩家"""

    permutation: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise InvalidTieError(f"arrival order {list(self.permutation)} is not a permutation")

    @classmethod
    def identity(cls, players: int) -> "ArrivalOrder":
        return cls(tuple(range(players)))

    @classmethod
    def from_one_based(cls, numbers: Sequence[int]) -> "ArrivalOrder":
        """命令行写法 1,2,3 → 下标 0,1,2"""
        return cls(tuple(n - 1 for n in numbers))

    def __len__(self) -> int:
        return len(self.permutation)


class TiePolicy(str, Enum):
    LOWEST_INDEX = "lowest-index"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class TieBreak:
    """
    平局规则

    LOWEST_INDEX: best response 集合里下标最小的策略
    EXPLICIT:     choices[k] = 第 k 个到达者选的策略，必须属于当时的 best response 集合
    """

    policy: TiePolicy = TiePolicy.LOWEST_INDEX
    choices: Tuple[int, ...] = field(default=())

    @classmethod
    def lowest(cls) -> "TieBreak":
        return cls()

    @classmethod
    def explicit(cls, choices: Sequence[int]) -> "TieBreak":
        return cls(TiePolicy.EXPLICIT, tuple(choices))

    def pick(self, position: int, candidates: Tuple[int, ...]) -> int:
        if self.policy is TiePolicy.LOWEST_INDEX:
            return candidates[0]
        if position >= len(self.choices):
            raise InvalidTieError(f"no explicit tie choice for arrival position {position + 1}")
        choice = self.choices[position]
        if choice not in candidates:
            raise InvalidTieError(
                f"arrival position {position + 1} chose strategy {choice}, "
                f"best responses are {list(candidates)}"
            )
        return choice


def _add(background: List[int], game: CongestionGame, strategy: int):
    for r in mask_indices(game.form.strategies[strategy].mask):
        background[r] += 1


def greedy_run(game: CongestionGame, order: Optional[ArrivalOrder] = None,
               tie: Optional[TieBreak] = None) -> StrategyProfile:
    """
    按 order 依次到达，每人对已到达者形成的拥塞选 best response

    Raises:
        InvalidTieError: order 长度不等于 N，或显式平局选择不在 best response 集合内
    """
    order = order or ArrivalOrder.identity(game.players)
    tie = tie or TieBreak.lowest()
    if len(order) != game.players:
        raise InvalidTieError(f"arrival order has {len(order)} players, game has {game.players}")
    if tie.policy is TiePolicy.EXPLICIT and len(tie.choices) != game.players:
        raise InvalidTieError(f"{len(tie.choices)} explicit tie choices for {game.players} players")

    background = [0] * game.form.n_resources
    profile = [0] * game.players
    for position, player in enumerate(order.permutation):
        candidates = best_response_set(game, background)
        choice = tie.pick(position, candidates)
        logger.debug("arrival %d: player %d picks %s from %s",
                     position + 1, player, game.form.strategy_label(choice), list(candidates))
        profile[player] = choice
        _add(background, game, choice)
    return tuple(profile)


def greedy_certificates(game: CongestionGame) -> Dict[CanonicalProfile, Tuple[ArrivalOrder, TieBreak]]:
    """
    Z(G) 的每个 canonical profile → 一个可复现它的 (ArrivalOrder, TieBreak)

    DFS 每层在完整 best response 集合上分支；已选前缀的多重集相同的分支
    拥塞完全一样，只展开一次。结果按 profile 升序。
    """
    n = game.players
    found: Dict[CanonicalProfile, Tuple[int, ...]] = {}
    seen: Set[Tuple[int, ...]] = set()

    def dfs(chosen: List[int], background: List[int]):
        key = tuple(sorted(chosen))
        if key in seen:
            return
        seen.add(key)
        if len(chosen) == n:
            found.setdefault(key, tuple(chosen))
            return
        for t in best_response_set(game, background):
            chosen.append(t)
            _add(background, game, t)
            dfs(chosen, background)
            for r in mask_indices(game.form.strategies[t].mask):
                background[r] -= 1
            chosen.pop()

    dfs([], [0] * game.form.n_resources)
    logger.debug("greedy enumeration: %d profiles, %d prefixes visited", len(found), len(seen))
    identity = ArrivalOrder.identity(n)
    return {
        profile: (identity, TieBreak.explicit(choices))
        for profile, choices in sorted(found.items())
    }


def greedy_enumerate(game: CongestionGame) -> Set[CanonicalProfile]:
    """Z(G) 的全部 canonical profile（永不为空）"""
    return set(greedy_certificates(game))


def is_greedy_profile(game: CongestionGame, profile: Sequence[int]) -> bool:
    profile = validate_profile(game, profile)
    return canonicalize(profile) in greedy_enumerate(game)

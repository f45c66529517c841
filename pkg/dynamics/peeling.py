"""
从 tree representable 单调博弈的 NE 反推一个 greedy 到达顺序

剥洋葱：每次拿掉当前效用最低的玩家（平局取下标最小），剩下的人在少一人的博弈里
仍然是 NE；被剥掉的顺序倒过来就是到达顺序，每个人的策略就是显式平局选择。
"""

from typing import List, Sequence, Tuple

from core.errors import InvalidTieError, PreconditionError, TheoremViolationError
from core.model import CongestionGame, validate_profile
from core.payoffs import canonicalize, is_monotone, is_subset_free, utilities
from equilibrium.nash import is_nash
from forms.bad_config import is_tree_representable
from utils.logger import get_logger

from .greedy import ArrivalOrder, TieBreak, greedy_run

logger = get_logger("dynamics.peeling")


def _peel(game: CongestionGame, profile: Sequence[int]) -> List[int]:
    remaining = list(range(len(profile)))
    peeled: List[int] = []
    while remaining:
        sub = game.with_players(len(remaining))
        values = utilities(sub, [profile[i] for i in remaining])
        lowest = min(range(len(remaining)), key=lambda k: (values[k], remaining[k]))
        peeled.append(remaining.pop(lowest))
    return peeled


def extract_greedy_order(game: CongestionGame, ne: Sequence[int]) -> Tuple[ArrivalOrder, TieBreak]:
    """
    Raises:
        PreconditionError:     博弈非单调、form 非 subset-free / 非 tree representable、ne 不是 NE
        TheoremViolationError: 得到的顺序无法复现 ne
    """
    ne = validate_profile(game, ne)
    if not is_monotone(game):
        raise PreconditionError("greedy order extraction requires a monotone game")
    if is_subset_free(game.form) is not None:
        raise PreconditionError("greedy order extraction requires a subset-free form")
    if not is_tree_representable(game.form):
        raise PreconditionError("form is not tree representable")
    if is_nash(game, ne) is not None:
        raise PreconditionError("profile is not a Nash equilibrium")

    peeled = _peel(game, ne)
    order = ArrivalOrder(tuple(reversed(peeled)))
    tie = TieBreak.explicit(ne[p] for p in order.permutation)

    try:
        rebuilt = greedy_run(game, order, tie)
    except InvalidTieError as e:
        raise TheoremViolationError(f"peeled order is not a greedy run: {e}") from e
    if canonicalize(rebuilt) != canonicalize(ne):
        raise TheoremViolationError(
            f"peeled order rebuilds {list(rebuilt)}, expected {list(ne)}"
        )
    logger.debug("greedy order for %s: %s", list(ne), list(order.permutation))
    return order, tie

"""
反例合成 — 对 subset-free 但不 tree representable 的 form，构造 Z(G) ≠ NE(G) 的单调博弈

角色（从 bad configuration (a, b, s1, s2, s3) 得到）:
    C = a ∈ (s1∩s2)\\s3
    A = b ∈ (s1∩s3)\\s2

构造分支:
    (s2∩s3)\\s1 有资源 E            → SHARED_THIRD_RESOURCE，triangle(A, C, E)
    不存在 s4 ≠ s2, s4 ⊆ s2∪(s3\\s1) → NO_ALTERNATE_STRATEGY，全负 payoff 表
    存在 s4，取 D ∈ s4∩(s3\\(s1∪s2))，E ∈ s4\\s3:
        E ∈ s1 → ALTERNATE_IN_FIRST，triangle(A, D, E)
        E ∉ s1 → ALTERNATE_OUTSIDE_FIRST，two_layer(A, E, C, D)

每个候选都用穷举 Z(G)/NE(G) 确认分离；失败就按确定顺序试下一个候选
（下一个 E/s4/D 选择、对称角色、下一个 bad configuration）。

固定模板假设每个策略只碰到两个角色资源；某个策略同时包含三个角色资源时
（如 {ABC, ABD, ACD, BCD}）所有模板都可能失败，此时按 seed 顺序搜索随机单调
payoff 表（先 N=2 再 N=3），记为 RANDOM_SEARCH。
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from core.errors import GameError, PreconditionError, TheoremViolationError
from core.model import CanonicalProfile, CongestionGame, GameForm, mask_indices
from core.payoffs import is_monotone, is_subset_free
from dynamics.greedy import greedy_enumerate
from equilibrium.nash import enumerate_nash
from forms.bad_config import BadConfiguration, iter_bad_configurations
from forms.generator import random_monotone_game
from utils.logger import get_logger

from .templates import ScaleConstant, negative_game, triangle_game, two_layer_game

logger = get_logger("synthesis")

DEFAULT_SEARCH_SEEDS = 2000
SEARCH_PLAYERS = (2, 3)


class ConstructionCase(str, Enum):
    SHARED_THIRD_RESOURCE = "SHARED_THIRD_RESOURCE"
    NO_ALTERNATE_STRATEGY = "NO_ALTERNATE_STRATEGY"
    ALTERNATE_IN_FIRST = "ALTERNATE_IN_FIRST"
    ALTERNATE_OUTSIDE_FIRST = "ALTERNATE_OUTSIDE_FIRST"
    RANDOM_SEARCH = "RANDOM_SEARCH"


class WitnessSide(str, Enum):
    NE_NOT_GREEDY = "NE_NOT_GREEDY"
    GREEDY_NOT_NE = "GREEDY_NOT_NE"


PREFERRED_SIDE = {
    ConstructionCase.SHARED_THIRD_RESOURCE: WitnessSide.NE_NOT_GREEDY,
    ConstructionCase.NO_ALTERNATE_STRATEGY: WitnessSide.GREEDY_NOT_NE,
    ConstructionCase.ALTERNATE_IN_FIRST: WitnessSide.NE_NOT_GREEDY,
    ConstructionCase.ALTERNATE_OUTSIDE_FIRST: WitnessSide.NE_NOT_GREEDY,
    ConstructionCase.RANDOM_SEARCH: WitnessSide.NE_NOT_GREEDY,
}


@dataclass(frozen=True)
class CounterexampleCertificate:
    """
    role_map:    角色名 → 资源名（A, C, D, E）或策略标签（s1..s4）
    scale:       模板构造的缩放常数；RANDOM_SEARCH 时为 None
    search_seed: RANDOM_SEARCH 命中的 random_monotone_game seed
    """

    game: CongestionGame
    construction_case: ConstructionCase
    bad_config: BadConfiguration
    role_map: Mapping[str, str]
    witness: CanonicalProfile
    side: WitnessSide
    scale: Optional[ScaleConstant]
    search_seed: Optional[int] = None

    def to_dict(self) -> dict:
        form = self.game.form
        out = {
            "construction_case": self.construction_case.value,
            "bad_configuration": self.bad_config.describe(form),
            "roles": dict(self.role_map),
            "players": self.game.players,
            "witness": [form.strategy_label(s) for s in self.witness],
            "side": self.side.value,
            "scale": None if self.scale is None else self.scale.value,
        }
        if self.search_seed is not None:
            out["search_seed"] = self.search_seed
        return out


@dataclass(frozen=True)
class _Candidate:
    case: ConstructionCase
    game: CongestionGame
    config: BadConfiguration
    roles: Dict[str, int]
    strategies: Dict[str, int]
    scale: Optional[ScaleConstant]
    seed: Optional[int] = None


def _region(form: GameForm, inside: Tuple[int, ...], outside: Tuple[int, ...]) -> List[int]:
    """同时属于 inside 中全部策略、且不属于 outside 中任何策略的资源（升序）"""
    mask = form.universe_mask
    for s in inside:
        mask &= form.strategies[s].mask
    for s in outside:
        mask &= ~form.strategies[s].mask
    return list(mask_indices(mask))


def _alternates(form: GameForm, s1: int, s2: int, s3: int) -> List[int]:
    """s4 ≠ s2 且 s4 ⊆ s2 ∪ (s3\\s1)"""
    st = form.strategies
    allowed = st[s2].mask | (st[s3].mask & ~st[s1].mask)
    return [t for t in range(form.n_strategies) if t != s2 and st[t].mask & ~allowed == 0]


def _role_candidates(form: GameForm, config: BadConfiguration,
                     c: int, a: int, s2: int, s3: int) -> Iterator[_Candidate]:
    s1 = config.s1
    filler = ScaleConstant.for_filler(form.n_resources)
    base = {"A": a, "C": c}
    picks = {"s1": s1, "s2": s2, "s3": s3}

    shared = _region(form, (s2, s3), (s1,))
    for e in shared:
        yield _Candidate(ConstructionCase.SHARED_THIRD_RESOURCE,
                         triangle_game(form, a, c, e, filler),
                         config, {**base, "E": e}, picks, filler)
    if shared:
        return

    alternates = _alternates(form, s1, s2, s3)
    if not alternates:
        scale = ScaleConstant.for_negative(form.n_resources)
        yield _Candidate(ConstructionCase.NO_ALTERNATE_STRATEGY,
                         negative_game(form, s1, s2, s3, scale),
                         config, dict(base), picks, scale)
        return

    st = form.strategies
    for s4 in alternates:
        d_choices = _region(form, (s4, s3), (s1, s2))
        e_choices = _region(form, (s4,), (s3,))
        for d in d_choices:
            for e in e_choices:
                roles = {**base, "D": d, "E": e}
                with_s4 = {**picks, "s4": s4}
                if e in st[s1]:
                    yield _Candidate(ConstructionCase.ALTERNATE_IN_FIRST,
                                     triangle_game(form, a, d, e, filler),
                                     config, roles, with_s4, filler)
                else:
                    yield _Candidate(ConstructionCase.ALTERNATE_OUTSIDE_FIRST,
                                     two_layer_game(form, a, e, c, d, filler),
                                     config, roles, with_s4, filler)


def _candidates(form: GameForm) -> Iterator[_Candidate]:
    for config in iter_bad_configurations(form):
        a, b = config.resource_a, config.resource_b
        yield from _role_candidates(form, config, c=a, a=b, s2=config.s2, s3=config.s3)
        # (b, a, s1, s3, s2) 是同一个 bad configuration，角色互换
        yield from _role_candidates(form, config, c=b, a=a, s2=config.s3, s3=config.s2)


def _search_candidates(form: GameForm, config: BadConfiguration, seeds: int) -> Iterator[_Candidate]:
    roles = {"A": config.resource_b, "C": config.resource_a}
    picks = {"s1": config.s1, "s2": config.s2, "s3": config.s3}
    for players in SEARCH_PLAYERS:
        for seed in range(seeds):
            yield _Candidate(ConstructionCase.RANDOM_SEARCH,
                             random_monotone_game(seed, form, players),
                             config, roles, picks, None, seed)


def _separation(game: CongestionGame, preferred: WitnessSide
                ) -> Optional[Tuple[CanonicalProfile, WitnessSide]]:
    greedy = greedy_enumerate(game)
    nash = enumerate_nash(game)
    sides = {
        WitnessSide.NE_NOT_GREEDY: sorted(nash - greedy),
        WitnessSide.GREEDY_NOT_NE: sorted(greedy - nash),
    }
    order = [preferred] + [s for s in WitnessSide if s is not preferred]
    for side in order:
        if sides[side]:
            return sides[side][0], side
    return None


def _certify(form: GameForm, cand: _Candidate, found: Tuple[CanonicalProfile, WitnessSide],
             tried: int) -> CounterexampleCertificate:
    profile, side = found
    role_map = {k: form.resources[v].name for k, v in cand.roles.items()}
    role_map.update({k: form.strategy_label(v) for k, v in cand.strategies.items()})
    logger.info("counterexample: %s, witness %s (%s) after %d candidate(s)",
                cand.case.value, role_map, side.value, tried)
    return CounterexampleCertificate(
        game=cand.game,
        construction_case=cand.case,
        bad_config=cand.config,
        role_map=role_map,
        witness=profile,
        side=side,
        scale=cand.scale,
        search_seed=cand.seed,
    )


def synthesize_counterexample(form: GameForm,
                              search_seeds: int = DEFAULT_SEARCH_SEEDS) -> CounterexampleCertificate:
    """
    先按模板构造，全部失败再做随机搜索（每个 N 试 search_seeds 个 seed）

    Raises:
        PreconditionError:     form 非 subset-free，或 tree representable
        TheoremViolationError: 模板与随机搜索都没有分离 Z(G) 与 NE(G)
    """
    witness = is_subset_free(form)
    if witness is not None:
        raise PreconditionError(
            f"form is not subset-free: {form.strategy_label(witness[0])} ⊂ {form.strategy_label(witness[1])}"
        )

    tried = 0
    for cand in _candidates(form):
        tried += 1
        found = _separation(cand.game, PREFERRED_SIDE[cand.case])
        if found is None:
            logger.warning("candidate %s on %s rejected: Z(G) = NE(G)",
                           cand.case.value, cand.config.describe(form))
            continue
        return _certify(form, cand, found, tried)

    first = next(iter_bad_configurations(form), None)
    if first is None:
        raise PreconditionError("form is tree representable")

    logger.info("templates exhausted on %s, searching random payoff tables", first.describe(form))
    for cand in _search_candidates(form, first, search_seeds):
        tried += 1
        found = _separation(cand.game, PREFERRED_SIDE[cand.case])
        if found is not None:
            return _certify(form, cand, found, tried)
    raise TheoremViolationError(f"no construction separated Z(G) and NE(G) ({tried} candidates)")


def check_roles(form: GameForm, case: ConstructionCase, role_map: Mapping[str, str]) -> bool:
    """事后检查 role_map 满足各角色的定义隶属关系"""
    try:
        r = {k: form.resource_index(role_map[k]) for k in ("A", "C", "D", "E") if k in role_map}
        s = {k: form.find_strategy(role_map[k]) for k in ("s1", "s2", "s3", "s4") if k in role_map}
    except (KeyError, GameError):
        return False
    if not {"A", "C"} <= r.keys() or not {"s1", "s2", "s3"} <= s.keys():
        return False
    st = form.strategies
    s1, s2, s3 = st[s["s1"]], st[s["s2"]], st[s["s3"]]

    def member(res: str, *inside, outside=()) -> bool:
        return all(r[res] in x for x in inside) and all(r[res] not in x for x in outside)

    if not (member("A", s1, s3, outside=(s2,)) and member("C", s1, s2, outside=(s3,))):
        return False
    if case is ConstructionCase.RANDOM_SEARCH:
        return True

    if case is ConstructionCase.SHARED_THIRD_RESOURCE:
        return "E" in r and member("E", s2, s3, outside=(s1,))
    shared = _region(form, (s["s2"], s["s3"]), (s["s1"],))
    if shared:
        return False
    if case is ConstructionCase.NO_ALTERNATE_STRATEGY:
        return not _alternates(form, s["s1"], s["s2"], s["s3"])

    if not {"D", "E"} <= r.keys() or "s4" not in s:
        return False
    if s["s4"] not in _alternates(form, s["s1"], s["s2"], s["s3"]):
        return False
    s4 = st[s["s4"]]
    if not (member("D", s4, s3, outside=(s1, s2)) and member("E", s4, outside=(s3,))):
        return False
    if case is ConstructionCase.ALTERNATE_IN_FIRST:
        return r["E"] in s1
    return r["E"] not in s1


def validate_certificate(cert: CounterexampleCertificate) -> bool:
    """从头重算：单调、bad configuration 成立、见证恰好落在声明的一侧"""
    game = cert.game
    try:
        if not is_monotone(game):
            return False
        if not cert.bad_config.holds(game.form):
            return False
        greedy = greedy_enumerate(game)
        nash = enumerate_nash(game)
    except GameError as e:
        logger.debug("certificate rejected: %s", e)
        return False
    in_greedy = cert.witness in greedy
    in_nash = cert.witness in nash
    if cert.side is WitnessSide.NE_NOT_GREEDY:
        return in_nash and not in_greedy
    return in_greedy and not in_nash

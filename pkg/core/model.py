"""
核心数据模型 — 资源、策略、game form、拥塞博弈

所有类型构造后不可变（frozen dataclass），可安全跨线程共享。
策略以 bit mask 存储：第 i 位 = 资源 i，子集/交集判断全部是整数位运算。

    form = GameForm.from_names("ABC", ["AB", "AC", "BC"])
    game = CongestionGame.from_table(form, 3, {"A": [10, 8, 1], ...})
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InvalidGameError, InvalidProfileError

DEFAULT_MAX_RESOURCES = 64

# 每个玩家选择的策略下标（长度 = N）
StrategyProfile = Tuple[int, ...]
# 策略下标升序排列的多重集（对称博弈下的玩家重命名商）
CanonicalProfile = Tuple[int, ...]
# 每个资源的使用人数
CongestionVector = Tuple[int, ...]
# 每个资源的 P_r(1), ..., P_r(N)
PayoffTable = Tuple[Tuple[Fraction, ...], ...]

RationalLike = Union[int, str, Fraction]


def default_resource_names(n: int) -> List[str]:
    """A..Z，之后 R26, R27, ..."""
    names = []
    for i in range(n):
        names.append(chr(ord("A") + i) if i < 26 else f"R{i}")
    return names


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def mask_indices(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class ResourceId:
    index: int
    name: str


@dataclass(frozen=True)
class Strategy:
    """资源子集（bit mask）"""

    mask: int

    @property
    def resources(self) -> Tuple[int, ...]:
        return mask_indices(self.mask)

    def __contains__(self, resource: int) -> bool:
        return bool(self.mask >> resource & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def issubset(self, other: "Strategy") -> bool:
        return self.mask & ~other.mask == 0

    def is_proper_subset(self, other: "Strategy") -> bool:
        return self.mask != other.mask and self.issubset(other)


@dataclass(frozen=True)
class GameForm:
    """game form (R, Σ)：资源全集 + 有序策略列表"""

    resources: Tuple[ResourceId, ...]
    strategies: Tuple[Strategy, ...]
    max_resources: int = field(default=DEFAULT_MAX_RESOURCES, compare=False)

    def __post_init__(self):
        if len(self.resources) > self.max_resources:
            raise InvalidGameError(
                f"{len(self.resources)} resources exceed the width cap {self.max_resources}"
            )
        names = set()
        for pos, res in enumerate(self.resources):
            if res.index != pos:
                raise InvalidGameError(f"resource {res.name!r} has index {res.index}, expected {pos}")
            if res.name in names:
                raise InvalidGameError(f"duplicate resource name {res.name!r}")
            names.add(res.name)
        if not self.strategies:
            raise InvalidGameError("a game form needs at least one strategy")
        universe = self.universe_mask
        seen = set()
        for i, s in enumerate(self.strategies):
            if s.mask == 0:
                raise InvalidGameError(f"strategy {i} is empty")
            if s.mask & ~universe:
                raise InvalidGameError(f"strategy {i} uses resources outside the universe")
            if s.mask in seen:
                raise InvalidGameError(f"duplicate strategy {self.strategy_label(i)}")
            seen.add(s.mask)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def from_names(cls, resource_names: Iterable[str],
                   strategies: Iterable[Iterable[str]],
                   max_resources: int = DEFAULT_MAX_RESOURCES) -> "GameForm":
        """
        按名字构造

        Args:
            resource_names: 资源名序列（字符串 "ABC" 也可，逐字符）
            strategies:     每个策略的资源名序列（"AB" 或 ["A", "B"]）
        """
        names = list(resource_names)
        resources = tuple(ResourceId(i, n) for i, n in enumerate(names))
        lookup = {n: i for i, n in enumerate(names)}
        built = []
        for s in strategies:
            members = list(s)
            unknown = [m for m in members if m not in lookup]
            if unknown:
                raise InvalidGameError(f"unknown resource {unknown[0]!r} in strategy")
            built.append(Strategy(mask_of(lookup[m] for m in members)))
        return cls(resources, tuple(built), max_resources=max_resources)

    @classmethod
    def from_masks(cls, n_resources: int, masks: Iterable[int],
                   names: Optional[Sequence[str]] = None) -> "GameForm":
        names = list(names) if names is not None else default_resource_names(n_resources)
        resources = tuple(ResourceId(i, names[i]) for i in range(n_resources))
        return cls(resources, tuple(Strategy(m) for m in masks))

    def with_strategies(self, strategies: Iterable[Strategy]) -> "GameForm":
        return GameForm(self.resources, tuple(strategies), max_resources=self.max_resources)

    # ------------------------------------------------------------------
    # 查询
    # ------------------------------------------------------------------

    @property
    def universe_mask(self) -> int:
        return (1 << len(self.resources)) - 1

    @property
    def n_resources(self) -> int:
        return len(self.resources)

    @property
    def n_strategies(self) -> int:
        return len(self.strategies)

    def resource_index(self, name: str) -> int:
        for res in self.resources:
            if res.name == name:
                return res.index
        raise KeyError(name)

    def resource_names(self, mask: int) -> List[str]:
        return [self.resources[i].name for i in mask_indices(mask)]

    def _concatenated_labels(self) -> Optional[List[str]]:
        if any(len(r.name) != 1 for r in self.resources):
            return None
        labels = ["".join(self.resource_names(s.mask)) for s in self.strategies]
        if len(set(labels)) != len(labels):
            return None
        return labels

    def strategy_label(self, index: int) -> str:
        """单字符资源名时拼接（AB, AC, ...），否则 s<index>"""
        labels = self._concatenated_labels()
        if labels is None:
            return f"s{index}"
        return labels[index]

    def strategy_labels(self) -> List[str]:
        labels = self._concatenated_labels()
        if labels is None:
            return [f"s{i}" for i in range(self.n_strategies)]
        return labels

    def find_strategy(self, token: str) -> int:
        """按标签查策略下标；拼接写法与资源顺序无关（DB = BD）"""
        token = token.strip()
        if token.startswith("s") and token[1:].isdigit():
            idx = int(token[1:])
            if 0 <= idx < self.n_strategies:
                return idx
        if all(len(r.name) == 1 for r in self.resources):
            try:
                mask = mask_of(self.resource_index(ch) for ch in token)
            except KeyError:
                mask = None
            if mask is not None and len(token) == popcount(mask):
                for i, s in enumerate(self.strategies):
                    if s.mask == mask:
                        return i
        raise InvalidProfileError(f"unknown strategy {token!r}")


@dataclass(frozen=True)
class CongestionGame:
    """对称拥塞博弈 G = (N, R, Σ, {P_r})，payoff 为精确有理数"""

    form: GameForm
    players: int
    payoffs: PayoffTable

    def __post_init__(self):
        if self.players < 1:
            raise InvalidGameError("a game needs at least one player")
        if len(self.payoffs) != self.form.n_resources:
            raise InvalidGameError(
                f"{len(self.payoffs)} payoff rows for {self.form.n_resources} resources"
            )
        rows = []
        for res, row in zip(self.form.resources, self.payoffs):
            if len(row) < self.players:
                raise InvalidGameError(
                    f"payoff row {res.name} has {len(row)} entries, need {self.players}"
                )
            rows.append(tuple(Fraction(v) for v in row))
        object.__setattr__(self, "payoffs", tuple(rows))

    @classmethod
    def from_table(cls, form: GameForm, players: int,
                   table: Mapping[str, Sequence[RationalLike]]) -> "CongestionGame":
        """table: 资源名 → [P(1), P(2), ...]"""
        missing = [r.name for r in form.resources if r.name not in table]
        if missing:
            raise InvalidGameError(f"no payoff row for resource {missing[0]!r}")
        rows = tuple(tuple(Fraction(v) for v in table[r.name]) for r in form.resources)
        return cls(form, players, rows)

    def payoff(self, resource: int, load: int) -> Fraction:
        """P_r(load)，load 从 1 开始"""
        return self.payoffs[resource][load - 1]

    def with_form(self, form: GameForm) -> "CongestionGame":
        return CongestionGame(form, self.players, self.payoffs)

    def with_players(self, players: int) -> "CongestionGame":
        return CongestionGame(self.form, players, self.payoffs)

    def payoff_dict(self) -> Dict[str, Tuple[Fraction, ...]]:
        return {r.name: self.payoffs[r.index][:self.players] for r in self.form.resources}


def validate_profile(game: CongestionGame, profile: Sequence[int]) -> StrategyProfile:
    if len(profile) != game.players:
        raise InvalidProfileError(
            f"profile has {len(profile)} entries, game has {game.players} players"
        )
    for i, s in enumerate(profile):
        if not isinstance(s, int) or not 0 <= s < game.form.n_strategies:
            raise InvalidProfileError(f"player {i} plays invalid strategy index {s!r}")
    return tuple(profile)


def profile_label(form: GameForm, profile: Sequence[int]) -> str:
    return "[" + ",".join(form.strategy_label(s) for s in profile) + "]"

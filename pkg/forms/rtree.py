"""
R-tree — 根节点无标签，其余节点标签为互不相同的资源；
每个 terminal 节点的根路径诱导出一个策略。

构造算法（递归因子分解）:
    1. C = 当前策略组的公共资源，按资源下标升序挂成一条链
    2. 从所有成员中去掉 C
    3. 有成员变空 → 必须只剩这一个成员，链尾标记为 terminal
    4. 否则按"共享剩余资源"求连通分量，每个分量递归成一棵子树
    5. C 为空且只有一个分量（且成员 > 1）→ 不可表示
构造完成后用 verify_representation 自检。
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import NotRepresentableError, PreconditionError, RepresentationBugError
from core.model import GameForm, ResourceId, Strategy, mask_indices, mask_of
from core.payoffs import is_subset_free
from utils.logger import get_logger

from .bad_config import find_bad_configuration

logger = get_logger("forms.rtree")


@dataclass(frozen=True)
class RTree:
    """
    节点 0 为根。labels[k] 是节点 k 的资源下标（根为 None），
    parents[k] 是父节点（根为 None）。
    """

    resources: Tuple[ResourceId, ...]
    labels: Tuple[Optional[int], ...]
    parents: Tuple[Optional[int], ...]
    terminals: FrozenSet[int]

    def __post_init__(self):
        if not self.labels or self.labels[0] is not None or self.parents[0] is not None:
            raise ValueError("node 0 must be an unlabeled root")
        if len(self.labels) != len(self.parents):
            raise ValueError("labels and parents differ in length")
        used = list(self.labels[1:])
        if any(lab is None for lab in used):
            raise ValueError("non-root nodes must be labeled")
        if len(set(used)) != len(used):
            raise ValueError("a resource label appears more than once")
        for k in range(1, len(self.parents)):
            p = self.parents[k]
            if p is None or not 0 <= p < k:
                raise ValueError(f"node {k} has invalid parent {p}")
        internal = {p for p in self.parents[1:]}
        if any(t in internal or t == 0 for t in self.terminals):
            raise ValueError("every terminal must be a non-root leaf")

    # ------------------------------------------------------------------
    # 结构查询
    # ------------------------------------------------------------------

    def children(self, node: int) -> List[int]:
        return [k for k, p in enumerate(self.parents) if p == node]

    def path(self, node: int) -> Tuple[int, ...]:
        """根到 node 路径上的资源下标（不含根）"""
        out = []
        while node:
            out.append(self.labels[node])
            node = self.parents[node]
        return tuple(reversed(out))

    def label_name(self, node: int) -> Optional[str]:
        lab = self.labels[node]
        return None if lab is None else self.resources[lab].name

    # ------------------------------------------------------------------
    # 序列化
    # ------------------------------------------------------------------

    def to_outline(self) -> str:
        """缩进文本大纲；terminal 节点带 *"""
        lines = ["(root)"]

        def walk(node: int, depth: int):
            for child in self.children(node):
                mark = " *" if child in self.terminals else ""
                lines.append("  " * depth + self.label_name(child) + mark)
                walk(child, depth + 1)

        walk(0, 1)
        return "\n".join(lines)

    def to_nested(self) -> list:
        """[label | None, is_terminal, [children...]]"""
        def build(node: int) -> list:
            return [
                self.label_name(node),
                node in self.terminals,
                [build(c) for c in self.children(node)],
            ]
        return build(0)

    def swap_labels(self, name_a: str, name_b: str) -> "RTree":
        """交换两个资源标签（表示不唯一，交换链上相邻节点不改变诱导的策略集）"""
        index = {r.name: r.index for r in self.resources}
        a, b = index[name_a], index[name_b]
        swapped = tuple(b if lab == a else a if lab == b else lab for lab in self.labels)
        return RTree(self.resources, swapped, self.parents, self.terminals)


class _TreeBuilder:
    def __init__(self):
        self.labels: List[Optional[int]] = [None]
        self.parents: List[Optional[int]] = [None]
        self.terminals: List[int] = []

    def add(self, parent: int, label: int) -> int:
        self.labels.append(label)
        self.parents.append(parent)
        return len(self.labels) - 1

    def freeze(self, resources: Tuple[ResourceId, ...]) -> RTree:
        return RTree(resources, tuple(self.labels), tuple(self.parents), frozenset(self.terminals))


def _components(members: Sequence[Tuple[int, int]]) -> List[List[Tuple[int, int]]]:
    """按"共享至少一个剩余资源"求连通分量，分量按最小策略下标排序"""
    graph = nx.Graph()
    graph.add_nodes_from(idx for idx, _ in members)
    by_idx: Dict[int, int] = dict(members)
    for i, (si, mi) in enumerate(members):
        for sj, mj in members[i + 1:]:
            if mi & mj:
                graph.add_edge(si, sj)
    comps = [sorted(c) for c in nx.connected_components(graph)]
    comps.sort(key=lambda c: c[0])
    return [[(s, by_idx[s]) for s in comp] for comp in comps]


def _factor(builder: _TreeBuilder, node: int, members: List[Tuple[int, int]]):
    common = -1
    for _, mask in members:
        common &= mask
    for r in mask_indices(common):
        node = builder.add(node, r)
    remaining = [(idx, mask & ~common) for idx, mask in members]

    if any(mask == 0 for _, mask in remaining):
        if len(remaining) != 1:
            raise NotRepresentableError(
                f"strategy {remaining[0][0]} is exhausted while {len(remaining) - 1} others remain"
            )
        builder.terminals.append(node)
        return

    comps = _components(remaining)
    if common == 0 and len(comps) == 1:
        raise NotRepresentableError(
            f"strategies {[idx for idx, _ in members]} share no common resource but stay connected"
        )
    for comp in comps:
        _factor(builder, node, comp)


def build_r_tree(form: GameForm, precheck: bool = True) -> RTree:
    """
    构造 R-tree

    precheck=False 时跳过 bad configuration 扫描，只由递归分解判定

    Raises:
        PreconditionError:      form 不是 subset-free
        NotRepresentableError:  存在 bad configuration
        RepresentationBugError: 构造结果自检失败
    """
    witness = is_subset_free(form)
    if witness is not None:
        s, t = witness
        raise PreconditionError(
            f"form is not subset-free: {form.strategy_label(s)} ⊂ {form.strategy_label(t)}"
        )
    bad = find_bad_configuration(form) if precheck else None
    if bad is not None:
        raise NotRepresentableError(f"form has a bad configuration: {bad.describe(form)}")

    builder = _TreeBuilder()
    members = [(i, s.mask) for i, s in enumerate(form.strategies)]
    _factor(builder, 0, members)
    tree = builder.freeze(form.resources)

    if not verify_representation(form, tree):
        raise RepresentationBugError("constructed tree does not induce the form's strategies")
    logger.info("R-tree built: %d strategies, %d labeled nodes",
                form.n_strategies, len(tree.labels) - 1)
    return tree


def induced_strategies(tree: RTree) -> GameForm:
    """每个 terminal 一个策略（按节点编号顺序）"""
    strategies = [Strategy(mask_of(tree.path(t))) for t in sorted(tree.terminals)]
    return GameForm(tree.resources, tuple(strategies))


def verify_representation(form: GameForm, tree: RTree) -> bool:
    """按资源名比较，两边策略集合相等即为 True"""
    try:
        induced = induced_strategies(tree)
    except Exception as e:
        logger.debug("tree does not induce a valid form: %s", e)
        return False
    want = {frozenset(form.resource_names(s.mask)) for s in form.strategies}
    got = {frozenset(induced.resource_names(s.mask)) for s in induced.strategies}
    return want == got and len(induced.strategies) == form.n_strategies

"""
测试数据生成器 — 随机 R-tree form、subset-free form 穷举/抽样、随机单调 payoff

所有随机生成都用 random.Random(seed)，同一 seed 输出逐位相同。
"""

import random
from fractions import Fraction
from typing import Iterator, List, Optional

from core.model import CongestionGame, GameForm, mask_of


def random_tree_form(seed: int, resource_budget: int, depth_budget: int,
                     max_strategies: Optional[int] = None) -> GameForm:
    """
    随机生成一棵 R-tree，返回它诱导的 game form

    Args:
        resource_budget: 带标签节点数上限（即资源数上限）
        depth_budget:    树深上限；1 → 全部单资源策略
        max_strategies:  叶子数上限（None 不限）
    """
    if resource_budget < 1 or depth_budget < 1:
        raise ValueError("budgets must be >= 1")
    rng = random.Random(seed)
    parents: List[Optional[int]] = [None]
    depth = [0]
    n_labeled = rng.randint(1, resource_budget)

    for _ in range(n_labeled):
        children = {p for p in parents[1:]}
        leaves = [k for k in range(1, len(parents)) if k not in children]
        candidates = [k for k in range(len(parents)) if depth[k] < depth_budget]
        if max_strategies is not None and len(leaves) >= max_strategies:
            # 叶子已满：只能在现有叶子下延长
            candidates = [k for k in candidates if k in leaves]
        if not candidates:
            break
        parent = rng.choice(candidates)
        parents.append(parent)
        depth.append(depth[parent] + 1)

    n = len(parents) - 1
    labels = list(range(n))
    rng.shuffle(labels)
    # 节点 k（k ≥ 1）的资源下标为 labels[k - 1]
    internal = {p for p in parents[1:]}
    strategies = []
    for k in range(1, len(parents)):
        if k in internal:
            continue
        path = []
        node = k
        while node:
            path.append(labels[node - 1])
            node = parents[node]
        strategies.append(mask_of(path))
    return GameForm.from_masks(n, strategies)


def iter_subset_free_forms(n_resources: int, max_strategies: int,
                           min_strategies: int = 1) -> Iterator[GameForm]:
    """
    穷举 n_resources 个资源上所有 subset-free form（非空子集构成的反链），
    策略数在 [min_strategies, max_strategies]，策略按 mask 升序。
    """
    masks = list(range(1, 1 << n_resources))

    def extend(start: int, chosen: List[int]):
        if len(chosen) >= min_strategies:
            yield GameForm.from_masks(n_resources, chosen)
        if len(chosen) == max_strategies:
            return
        for pos in range(start, len(masks)):
            m = masks[pos]
            if any(m & c == c or m & c == m for c in chosen):
                continue
            chosen.append(m)
            yield from extend(pos + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


def random_subset_free_form(seed: int, n_resources: int, max_strategies: int) -> GameForm:
    """随机反链：按随机顺序尝试子集，与已选策略不可比才接受"""
    rng = random.Random(seed)
    target = rng.randint(2, max(2, max_strategies))
    chosen: List[int] = []
    attempts = 0
    while len(chosen) < target and attempts < 200:
        attempts += 1
        size = rng.randint(1, n_resources)
        m = mask_of(rng.sample(range(n_resources), size))
        if any(m & c == c or m & c == m for c in chosen):
            continue
        chosen.append(m)
    return GameForm.from_masks(n_resources, chosen)


def random_monotone_payoffs(rng: random.Random, n_resources: int, players: int) -> List[List[Fraction]]:
    """严格递减的有理数 payoff 行；符号不限"""
    rows = []
    for _ in range(n_resources):
        value = Fraction(rng.randint(-20, 60), rng.randint(1, 4))
        row = [value]
        for _ in range(players - 1):
            value -= Fraction(rng.randint(1, 24), rng.randint(1, 4))
            row.append(value)
        rows.append(row)
    return rows


def random_monotone_game(seed: int, form: GameForm, players: int) -> CongestionGame:
    rng = random.Random(seed)
    rows = random_monotone_payoffs(rng, form.n_resources, players)
    return CongestionGame(form, players, tuple(tuple(r) for r in rows))


def random_game(seed: int, n_resources: int, n_strategies: int, players: int) -> CongestionGame:
    """任意（不一定单调）的小博弈，用于势函数恒等式等通用性质"""
    rng = random.Random(seed)
    masks: List[int] = []
    while len(masks) < n_strategies:
        m = rng.randint(1, (1 << n_resources) - 1)
        if m not in masks:
            masks.append(m)
        if len(masks) == (1 << n_resources) - 1:
            break
    form = GameForm.from_masks(n_resources, masks)
    rows = tuple(
        tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(players))
        for _ in range(n_resources)
    )
    return CongestionGame(form, players, rows)

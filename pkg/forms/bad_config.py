"""
Bad configuration 扫描 — 判定 game form 是否 tree representable

bad configuration = 资源 A, B 与策略 s1, s2, s3，满足
    A, B ∈ s1;  A ∈ s2 \\ s3;  B ∈ s3 \\ s2
不存在 bad configuration ⇔ 存在 R-tree 表示。

(A, B, s1, s2, s3) 与 (B, A, s1, s3, s2) 是同一结构，
所以只扫描 A < B，字典序第一个见证一定落在其中。
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional

from core.model import GameForm


@dataclass(frozen=True)
class BadConfiguration:
    resource_a: int
    resource_b: int
    s1: int
    s2: int
    s3: int

    def holds(self, form: GameForm) -> bool:
        st = form.strategies
        a, b = self.resource_a, self.resource_b
        return (
            a in st[self.s1] and b in st[self.s1]
            and a in st[self.s2] and a not in st[self.s3]
            and b in st[self.s3] and b not in st[self.s2]
        )

    def describe(self, form: GameForm) -> dict:
        return {
            "A": form.resources[self.resource_a].name,
            "B": form.resources[self.resource_b].name,
            "s1": form.strategy_label(self.s1),
            "s2": form.strategy_label(self.s2),
            "s3": form.strategy_label(self.s3),
        }


def _pair_buckets(form: GameForm, a: int, b: int):
    """按 (含 a, 含 b) 把策略分桶：both / 只含 a / 只含 b"""
    both: List[int] = []
    only_a: List[int] = []
    only_b: List[int] = []
    for i, s in enumerate(form.strategies):
        has_a, has_b = a in s, b in s
        if has_a and has_b:
            both.append(i)
        elif has_a:
            only_a.append(i)
        elif has_b:
            only_b.append(i)
    return both, only_a, only_b


def iter_bad_configurations(form: GameForm) -> Iterator[BadConfiguration]:
    """按 (A, B, s1, s2, s3) 字典序产出全部见证（A < B）"""
    n = form.n_resources
    for a in range(n):
        for b in range(a + 1, n):
            both, only_a, only_b = _pair_buckets(form, a, b)
            if not (both and only_a and only_b):
                continue
            for s1 in both:
                for s2 in only_a:
                    for s3 in only_b:
                        yield BadConfiguration(a, b, s1, s2, s3)


def find_bad_configuration(form: GameForm) -> Optional[BadConfiguration]:
    return next(iter_bad_configurations(form), None)


def is_tree_representable(form: GameForm) -> bool:
    return find_bad_configuration(form) is None

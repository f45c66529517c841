"""
反例博弈的 payoff 模板（全部 2 人、严格单调）

角色资源取固定值，其余资源取很小的填充值：
    triangle   三个角色资源 (10,1) / (9,6) / (8,7)
    two_layer  四个角色资源 (40,10) / (30,11) / (20,12) / (15,13)
    negative   全负 payoff，按资源落在 s1/s2/s3 的哪个区域取值
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from core.model import CongestionGame, GameForm

Row = Tuple[Fraction, Fraction]

TRIANGLE = ((10, 1), (9, 6), (8, 7))
TWO_LAYER = ((40, 10), (30, 11), (20, 12), (15, 13))


@dataclass(frozen=True)
class ScaleConstant:
    """填充值的缩放常数 M"""

    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("scale constant must be a positive integer")

    @classmethod
    def for_filler(cls, n_resources: int) -> "ScaleConstant":
        """满足 2|R|/M < 1 的最小整数"""
        return cls(2 * n_resources + 1)

    @classmethod
    def for_negative(cls, n_resources: int) -> "ScaleConstant":
        """满足 M > |R|^9 的最小整数"""
        return cls(n_resources ** 9 + 1)

    def bounds_filler(self, n_resources: int) -> bool:
        return Fraction(2 * n_resources, self.value) < 1

    def bounds_negative(self, n_resources: int) -> bool:
        return self.value > n_resources ** 9


def _filler(m: int) -> Row:
    return (Fraction(1, m), Fraction(1, 2 * m))


def _game(form: GameForm, rows: Sequence[Row]) -> CongestionGame:
    return CongestionGame(form, 2, tuple(tuple(r) for r in rows))


def role_table(form: GameForm, roles: Sequence[int], values: Sequence[Tuple[int, int]],
               scale: ScaleConstant) -> CongestionGame:
    """roles[k] 号资源取 values[k]，其余资源取 (1/M, 1/(2M))"""
    assigned: Dict[int, Row] = {
        r: (Fraction(v[0]), Fraction(v[1])) for r, v in zip(roles, values)
    }
    filler = _filler(scale.value)
    return _game(form, [assigned.get(r, filler) for r in range(form.n_resources)])


def triangle_game(form: GameForm, first: int, second: int, third: int,
                  scale: ScaleConstant) -> CongestionGame:
    return role_table(form, (first, second, third), TRIANGLE, scale)


def two_layer_game(form: GameForm, a: int, e: int, c: int, d: int,
                   scale: ScaleConstant) -> CongestionGame:
    return role_table(form, (a, e, c, d), TWO_LAYER, scale)


def negative_game(form: GameForm, s1: int, s2: int, s3: int, scale: ScaleConstant) -> CongestionGame:
    """
    全负 payoff；n = |R|，M = scale

        s1∩s2∩s3        (-1/M², -1/n)
        (s1∩s2)\\s3      (-1/M², -n⁶)
        (s1∩s3)\\s2      (-1/n⁵, -2M)
        s1\\(s2∪s3)      (-1/n⁵, -2M)
        s2\\(s1∪s3)      (-1/n,  -2M)
        s3\\(s1∪s2)      (-1/n⁴, -2M)
        其余             (-M,    -2M)
    """
    n = form.n_resources
    m = scale.value
    st = form.strategies
    rows = []
    for r in range(n):
        in1, in2, in3 = r in st[s1], r in st[s2], r in st[s3]
        if in1 and in2 and in3:
            row = (Fraction(-1, m * m), Fraction(-1, n))
        elif in1 and in2:
            row = (Fraction(-1, m * m), Fraction(-(n ** 6)))
        elif in1:
            row = (Fraction(-1, n ** 5), Fraction(-2 * m))
        elif in2 and not in3:
            row = (Fraction(-1, n), Fraction(-2 * m))
        elif in3 and not in2:
            row = (Fraction(-1, n ** 4), Fraction(-2 * m))
        else:
            row = (Fraction(-m), Fraction(-2 * m))
        rows.append(row)
    return _game(form, rows)

"""
内置示例 — 五个小博弈及其已知的 Z(G) / NE(G)，外加 R-tree 示例 form

`examples` 命令逐个重算并与这里写死的期望值比对。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.model import CongestionGame, GameForm
from core.payoffs import canonicalize, utility_matrix
from dynamics.greedy import greedy_enumerate
from equilibrium.nash import enumerate_nash
from equilibrium.report import Classification, classify


@dataclass(frozen=True)
class CatalogExample:
    number: int
    title: str
    game: CongestionGame
    greedy: Tuple[Tuple[str, ...], ...]
    nash: Tuple[Tuple[str, ...], ...]
    classification: Classification
    matrix: Optional[Tuple[Tuple[Tuple[int, int], ...], ...]] = None

    def resolve(self, profiles: Sequence[Sequence[str]]) -> set:
        form = self.game.form
        return {canonicalize(form.find_strategy(tok) for tok in p) for p in profiles}


def _game(resources: str, strategies: Sequence[str], players: int,
          table: Dict[str, Sequence[int]]) -> CongestionGame:
    return CongestionGame.from_table(GameForm.from_names(resources, strategies), players, table)


EXAMPLES: Dict[int, CatalogExample] = {
    1: CatalogExample(
        1, "greedy profiles and equilibria are disjoint",
        _game("ABC", ["AB", "AC", "BC"], 3,
              {"A": [10, 8, 1], "B": [10, 4, 1], "C": [8, 6, 5]}),
        greedy=(("AB", "AC", "BC"),),
        nash=(("AC", "AC", "BC"),),
        classification=Classification.DISJOINT,
    ),
    2: CatalogExample(
        2, "every greedy profile is an equilibrium, not conversely",
        _game("ABCD", ["AC", "AD", "BC", "BD"], 2,
              {"A": [40, 10], "B": [30, 11], "C": [20, 12], "D": [15, 13]}),
        greedy=(("AC", "BD"),),
        nash=(("AC", "BD"), ("AD", "BC")),
        classification=Classification.GREEDY_STRICT_SUBSET,
    ),
    3: CatalogExample(
        3, "every equilibrium is greedy, not conversely",
        _game("ABC", ["AB", "AC", "BC"], 2,
              {"A": [10, 1], "B": [8, 7], "C": [8, 6]}),
        greedy=(("AB", "BC"), ("AC", "BC")),
        nash=(("AB", "BC"),),
        classification=Classification.NASH_STRICT_SUBSET,
    ),
    4: CatalogExample(
        4, "negative payoffs, overlapping sets",
        _game("ABCDE", ["AB", "AC", "DB", "E"], 2,
              {"A": [-1, -5], "B": [-1, -10], "C": [-5, -100],
               "D": [-2, -100], "E": [-10, -100]}),
        greedy=(("AB", "E"), ("AB", "AC")),
        nash=(("AB", "E"), ("AC", "DB")),
        classification=Classification.OVERLAP,
        matrix=(
            ((-15, -15), (-6, -10), (-11, -12), (-2, -10)),
            ((-10, -6), (-105, -105), (-6, -3), (-6, -10)),
            ((-12, -11), (-3, -6), (-110, -110), (-3, -10)),
            ((-10, -2), (-10, -6), (-10, -3), (-100, -100)),
        ),
    ),
    5: CatalogExample(
        5, "singleton strategies, sets coincide",
        _game("AB", ["A", "B"], 3, {"A": [10, 4, 1], "B": [6, 5, 2]}),
        greedy=(("A", "B", "B"),),
        nash=(("A", "B", "B"),),
        classification=Classification.EQUAL,
    ),
}

TREE_FORM = GameForm.from_names("ABCDEFGHIJKL", ["ABG", "AH", "CI", "CFJ", "DEK", "DEL"])
TRIANGLE_FORM = GameForm.from_names("ABC", ["AB", "AC", "BC"])
TWO_LAYER_FORM = GameForm.from_names("ABCD", ["AC", "AD", "BC", "BD"])


def _labels(form: GameForm, profiles) -> List[List[str]]:
    return [[form.strategy_label(s) for s in p] for p in sorted(profiles)]


def check_example(example: CatalogExample) -> dict:
    """重算一个示例，返回期望值、计算值与 passed"""
    game = example.game
    form = game.form
    greedy = greedy_enumerate(game)
    nash = enumerate_nash(game)
    want_greedy = example.resolve(example.greedy)
    want_nash = example.resolve(example.nash)
    got_class = classify(greedy, nash)

    result = {
        "example": example.number,
        "title": example.title,
        "expected": {
            "greedy": _labels(form, want_greedy),
            "nash": _labels(form, want_nash),
            "classification": example.classification.value,
        },
        "computed": {
            "greedy": _labels(form, greedy),
            "nash": _labels(form, nash),
            "classification": got_class.value,
        },
    }
    passed = (greedy == want_greedy and nash == want_nash
              and got_class is example.classification)

    if example.matrix is not None:
        got = [[(int(u), int(v)) if _integral(u, v) else (str(u), str(v)) for u, v in row]
               for row in utility_matrix(game)]
        want = [[tuple(cell) for cell in row] for row in example.matrix]
        result["computed"]["matrix"] = got
        result["expected"]["matrix"] = want
        passed = passed and got == want

    result["passed"] = passed
    return result


def _integral(*values: Fraction) -> bool:
    return all(v.denominator == 1 for v in values)

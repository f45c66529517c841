"""
核心模型单元测试 — 有理数、form/game 构造、效用、势函数、best response
"""

import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from core import (
    CongestionGame,
    GameForm,
    InvalidGameError,
    InvalidProfileError,
    PreconditionError,
    background_without,
    best_response_set,
    canonicalize,
    congestion_vector,
    default_resource_names,
    deviation_utility,
    format_rational,
    is_monotone,
    is_single_signed,
    is_subset_free,
    parse_rational,
    profile_label,
    reduce_to_subset_free,
    rosenthal_potential,
    utilities,
    utility,
    utility_matrix,
)
from cli.catalog import EXAMPLES
from forms.generator import random_game

EX1 = EXAMPLES[1].game
EX3 = EXAMPLES[3].game
EX4 = EXAMPLES[4].game


class TestRational(unittest.TestCase):
    """有理数字面量"""

    def test_literals(self):
        self.assertEqual(parse_rational("7"), Fraction(7))
        self.assertEqual(parse_rational("-3/4"), Fraction(-3, 4))
        self.assertEqual(parse_rational("0.5"), Fraction(1, 2))
        self.assertEqual(parse_rational(" .25 "), Fraction(1, 4))

    def test_malformed(self):
        for bad in ("1/0", "abc", "1e3", "1/-2", ""):
            with self.assertRaises(ValueError):
                parse_rational(bad)

    def test_format(self):
        self.assertEqual(format_rational(Fraction(3)), "3")
        self.assertEqual(format_rational(Fraction(-1, 2)), "-1/2")


class TestModel(unittest.TestCase):
    """GameForm / CongestionGame 构造与不变式"""

    def test_default_names(self):
        names = default_resource_names(28)
        self.assertEqual(names[:3], ["A", "B", "C"])
        self.assertEqual(names[26], "R26")

    def test_form_rejects_duplicates_and_empty(self):
        with self.assertRaises(InvalidGameError):
            GameForm.from_names("AB", ["AB", "BA"])
        with self.assertRaises(InvalidGameError):
            GameForm.from_names("AB", [])
        with self.assertRaises(InvalidGameError):
            GameForm.from_names("AB", ["AC"])

    def test_width_cap(self):
        with self.assertRaises(InvalidGameError):
            GameForm.from_names("ABC", ["A"], max_resources=2)

    def test_game_invariants(self):
        form = GameForm.from_names("AB", ["A", "B"])
        with self.assertRaises(InvalidGameError):
            CongestionGame.from_table(form, 0, {"A": [1], "B": [1]})
        with self.assertRaises(InvalidGameError):
            CongestionGame.from_table(form, 3, {"A": [3, 2], "B": [3, 2, 1]})
        with self.assertRaises(InvalidGameError):
            CongestionGame.from_table(form, 1, {"A": [1]})

    def test_labels(self):
        form = EX4.form
        self.assertEqual(form.strategy_labels(), ["AB", "AC", "BD", "E"])
        self.assertEqual(form.find_strategy("DB"), 2)
        self.assertEqual(form.find_strategy("s3"), 3)
        with self.assertRaises(InvalidProfileError):
            form.find_strategy("AD")
        self.assertEqual(profile_label(form, (0, 3)), "[AB,E]")

    def test_labels_fall_back_to_index(self):
        form = GameForm.from_names(["x1", "x2"], [["x1"], ["x2"]])
        self.assertEqual(form.strategy_labels(), ["s0", "s1"])
        self.assertEqual(form.find_strategy("s1"), 1)

    def test_profile_validation(self):
        with self.assertRaises(InvalidProfileError):
            utility(EX1, (0, 1), 0)
        with self.assertRaises(InvalidProfileError):
            utility(EX1, (0, 1, 5), 0)
        with self.assertRaises(InvalidProfileError):
            utility(EX1, (0, 1, 2), 3)


class TestPayoffs(unittest.TestCase):
    """效用、势函数与 best response（Example 1 / 3 / 4）"""

    def test_example1_values(self):
        profile = (0, 1, 2)
        self.assertEqual(congestion_vector(EX1, profile), (2, 2, 2))
        self.assertEqual(utilities(EX1, profile), (12, 14, 10))
        self.assertEqual(rosenthal_potential(EX1, profile), 46)
        # AB → AC: 8+4 → 8+5
        self.assertEqual(deviation_utility(EX1, profile, 0, 1), 13)
        self.assertEqual(utility(EX1, (1, 1, 2), 0), 13)
        self.assertEqual(rosenthal_potential(EX1, (1, 1, 2)), 47)

    def test_background(self):
        self.assertEqual(background_without(EX1, (0, 1, 2), 0), (1, 1, 2))

    def test_best_response(self):
        self.assertEqual(best_response_set(EX1, (0, 0, 0)), (0,))
        self.assertEqual(best_response_set(EX3, (0, 0, 0)), (0, 1))
        self.assertEqual(utility(EX3, (0, 2), 0), 17)
        self.assertEqual(utility(EX3, (0, 2), 1), 15)

    def test_best_response_background_bounds(self):
        with self.assertRaises(PreconditionError):
            best_response_set(EX1, (3, 0, 0))
        with self.assertRaises(PreconditionError):
            best_response_set(EX1, (0, 0))

    def test_canonicalize(self):
        self.assertEqual(canonicalize((2, 0, 1)), (0, 1, 2))

    def test_utility_matrix(self):
        matrix = utility_matrix(EX4)
        self.assertEqual(matrix[0], [(-15, -15), (-6, -10), (-11, -12), (-2, -10)])
        self.assertEqual(matrix[2][2], (-110, -110))
        with self.assertRaises(PreconditionError):
            utility_matrix(EX1)


class TestStructure(unittest.TestCase):
    """单调、单符号、subset-free 与约化"""

    def test_monotone_and_signs(self):
        self.assertTrue(is_monotone(EX1))
        self.assertTrue(is_single_signed(EX1))
        self.assertTrue(is_single_signed(EX4))
        form = GameForm.from_names("AB", ["A", "B"])
        mixed = CongestionGame.from_table(form, 2, {"A": [3, -1], "B": [2, 1]})
        self.assertTrue(is_monotone(mixed))
        self.assertFalse(is_single_signed(mixed))
        flat = CongestionGame.from_table(form, 2, {"A": [3, 3], "B": [2, 1]})
        self.assertFalse(is_monotone(flat))

    def test_subset_free(self):
        self.assertIsNone(is_subset_free(EX1.form))
        self.assertEqual(is_subset_free(GameForm.from_names("AB", ["A", "AB"])), (0, 1))

    def test_reduce_positive_keeps_maximal(self):
        form = GameForm.from_names("ABC", ["A", "AB", "C"])
        game = CongestionGame.from_table(form, 2, {"A": [5, 2], "B": [4, 1], "C": [3, 1]})
        self.assertEqual(reduce_to_subset_free(game).form.strategy_labels(), ["AB", "C"])

    def test_reduce_negative_keeps_minimal(self):
        form = GameForm.from_names("ABC", ["A", "AB", "C"])
        game = CongestionGame.from_table(form, 2, {"A": [-1, -2], "B": [-1, -3], "C": [-2, -5]})
        self.assertEqual(reduce_to_subset_free(game).form.strategy_labels(), ["A", "C"])

    def test_reduce_preconditions(self):
        form = GameForm.from_names("AB", ["A", "AB"])
        flat = CongestionGame.from_table(form, 2, {"A": [1, 1], "B": [2, 1]})
        with self.assertRaises(PreconditionError):
            reduce_to_subset_free(flat)
        mixed = CongestionGame.from_table(form, 2, {"A": [1, -1], "B": [2, 1]})
        with self.assertRaises(PreconditionError):
            reduce_to_subset_free(mixed)


class TestPotentialIdentity(unittest.TestCase):
    """单人偏离时 Φ 的变化量等于偏离者效用的变化量"""

    @settings(max_examples=150, deadline=None)
    @given(seed=st.integers(0, 10 ** 6), data=st.data())
    def test_identity(self, seed, data):
        game = random_game(seed, 4, 4, 3)
        n = game.form.n_strategies
        profile = tuple(data.draw(st.integers(0, n - 1)) for _ in range(game.players))
        player = data.draw(st.integers(0, game.players - 1))
        target = data.draw(st.integers(0, n - 1))
        moved = list(profile)
        moved[player] = target
        self.assertEqual(
            rosenthal_potential(game, moved) - rosenthal_potential(game, profile),
            utility(game, moved, player) - utility(game, profile, player),
        )


if __name__ == "__main__":
    unittest.main()

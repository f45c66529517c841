"""
反例合成测试 — 模板构造分支、随机搜索兜底、证书校验、角色检查
"""

import dataclasses
import unittest
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from cli.catalog import TREE_FORM, TRIANGLE_FORM, TWO_LAYER_FORM
from core import CongestionGame, GameForm, PreconditionError, TheoremViolationError, is_monotone
from forms import is_tree_representable, random_subset_free_form
from synthesis import (
    SEARCH_PLAYERS,
    ConstructionCase,
    ScaleConstant,
    WitnessSide,
    check_roles,
    synthesize_counterexample,
    validate_certificate,
)


class TestConstructionCases(unittest.TestCase):
    """每个构造分支的确定输出"""

    def test_shared_third_resource(self):
        cert = synthesize_counterexample(TRIANGLE_FORM)
        self.assertIs(cert.construction_case, ConstructionCase.SHARED_THIRD_RESOURCE)
        self.assertEqual(dict(cert.role_map),
                         {"A": "B", "C": "A", "E": "C", "s1": "AB", "s2": "AC", "s3": "BC"})
        self.assertEqual(cert.game.payoff_dict(), {
            "A": (Fraction(9), Fraction(6)),
            "B": (Fraction(10), Fraction(1)),
            "C": (Fraction(8), Fraction(7)),
        })
        self.assertEqual(cert.witness, (1, 2))
        self.assertIs(cert.side, WitnessSide.NE_NOT_GREEDY)
        self.assertTrue(validate_certificate(cert))

    def test_alternate_outside_first(self):
        cert = synthesize_counterexample(TWO_LAYER_FORM)
        self.assertIs(cert.construction_case, ConstructionCase.ALTERNATE_OUTSIDE_FIRST)
        self.assertEqual(dict(cert.role_map), {
            "A": "C", "C": "A", "D": "B", "E": "D",
            "s1": "AC", "s2": "AD", "s3": "BC", "s4": "BD",
        })
        self.assertEqual(cert.game.payoffs, (
            (Fraction(20), Fraction(12)),
            (Fraction(15), Fraction(13)),
            (Fraction(40), Fraction(10)),
            (Fraction(30), Fraction(11)),
        ))
        self.assertEqual(cert.witness, (1, 2))
        self.assertIs(cert.side, WitnessSide.NE_NOT_GREEDY)
        self.assertTrue(validate_certificate(cert))

    def test_no_alternate_strategy(self):
        form = GameForm.from_names("ABCD", ["AC", "CB", "AD"])
        cert = synthesize_counterexample(form)
        self.assertIs(cert.construction_case, ConstructionCase.NO_ALTERNATE_STRATEGY)
        self.assertEqual(cert.scale.value, 4 ** 9 + 1)
        self.assertTrue(all(v < 0 for row in cert.game.payoffs for v in row))
        # greedy 结果 [AC,AD] 不是 NE：先到者从 AC 换到 BC 更好
        self.assertEqual(cert.witness, (0, 2))
        self.assertIs(cert.side, WitnessSide.GREEDY_NOT_NE)
        self.assertTrue(validate_certificate(cert))
        self.assertTrue(check_roles(form, cert.construction_case, cert.role_map))

    def test_roles_are_consistent(self):
        for form in (TRIANGLE_FORM, TWO_LAYER_FORM):
            cert = synthesize_counterexample(form)
            self.assertTrue(check_roles(form, cert.construction_case, cert.role_map))
            self.assertTrue(is_monotone(cert.game))
            self.assertEqual(cert.game.players, 2)

    def test_wrong_case_fails_role_check(self):
        cert = synthesize_counterexample(TWO_LAYER_FORM)
        self.assertFalse(check_roles(TWO_LAYER_FORM, ConstructionCase.ALTERNATE_IN_FIRST, cert.role_map))
        broken = dict(cert.role_map, A="A")
        self.assertFalse(check_roles(TWO_LAYER_FORM, cert.construction_case, broken))

    def test_random_search_when_templates_fail(self):
        # 每个策略都含三个角色资源，固定模板都分离不了
        form = GameForm.from_names("ABCD", ["ABC", "ABD", "ACD", "BCD"])
        cert = synthesize_counterexample(form)
        self.assertIs(cert.construction_case, ConstructionCase.RANDOM_SEARCH)
        self.assertIsNone(cert.scale)
        self.assertIsNotNone(cert.search_seed)
        self.assertIn(cert.game.players, SEARCH_PLAYERS)
        self.assertTrue(is_monotone(cert.game))
        self.assertTrue(validate_certificate(cert))
        self.assertTrue(check_roles(form, cert.construction_case, cert.role_map))
        doc = cert.to_dict()
        self.assertEqual(doc["construction_case"], "RANDOM_SEARCH")
        self.assertIsNone(doc["scale"])
        self.assertEqual(doc["search_seed"], cert.search_seed)
        self.assertEqual(synthesize_counterexample(form), cert)

    def test_random_search_budget_exhausted(self):
        form = GameForm.from_names("ABCD", ["ABC", "ABD", "ACD", "BCD"])
        with self.assertRaises(TheoremViolationError):
            synthesize_counterexample(form, search_seeds=0)

    def test_deterministic(self):
        self.assertEqual(synthesize_counterexample(TWO_LAYER_FORM),
                         synthesize_counterexample(TWO_LAYER_FORM))


class TestPreconditions(unittest.TestCase):
    """不可合成的输入"""

    def test_tree_representable(self):
        with self.assertRaises(PreconditionError) as ctx:
            synthesize_counterexample(TREE_FORM)
        self.assertIn("form is tree representable", str(ctx.exception))

    def test_not_subset_free(self):
        with self.assertRaises(PreconditionError):
            synthesize_counterexample(GameForm.from_names("ABC", ["AB", "ABC", "AC"]))


class TestCertificateValidation(unittest.TestCase):
    """证书篡改后必须校验失败"""

    def setUp(self):
        self.cert = synthesize_counterexample(TWO_LAYER_FORM)

    def test_witness_in_both_sets(self):
        # [AC,BD] 既是 greedy 也是 NE
        tampered = dataclasses.replace(self.cert, witness=(0, 3))
        self.assertFalse(validate_certificate(tampered))

    def test_wrong_side(self):
        tampered = dataclasses.replace(self.cert, side=WitnessSide.GREEDY_NOT_NE)
        self.assertFalse(validate_certificate(tampered))

    def test_non_monotone(self):
        rows = list(self.cert.game.payoffs)
        rows[0] = (Fraction(1), Fraction(5))
        game = CongestionGame(TWO_LAYER_FORM, 2, tuple(rows))
        self.assertFalse(validate_certificate(dataclasses.replace(self.cert, game=game)))


class TestScaleConstant(unittest.TestCase):
    """缩放常数的下界"""

    def test_bounds(self):
        self.assertEqual(ScaleConstant.for_filler(4).value, 9)
        self.assertTrue(ScaleConstant.for_filler(4).bounds_filler(4))
        self.assertFalse(ScaleConstant(8).bounds_filler(4))
        self.assertTrue(ScaleConstant.for_negative(3).bounds_negative(3))
        with self.assertRaises(ValueError):
            ScaleConstant(0)


class TestRandomForms(unittest.TestCase):
    """随机非 tree representable form 都能合成出有效反例"""

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10 ** 6))
    def test_random_non_representable(self, seed):
        form = random_subset_free_form(seed, 6, 5)
        assume(not is_tree_representable(form))
        cert = synthesize_counterexample(form)
        self.assertTrue(validate_certificate(cert))
        self.assertTrue(check_roles(form, cert.construction_case, cert.role_map))


if __name__ == "__main__":
    unittest.main()

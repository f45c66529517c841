"""
验收扫描测试 — 小规模参数下每个扫描都应全部通过
"""

import unittest

from config.settings import Settings
from sweeps import (
    SWEEP_NAMES,
    SweepResult,
    TheoremSweep,
    run_necessity,
    run_potential,
    run_recognition,
    run_sufficiency,
)


class TestSweepResult(unittest.TestCase):
    """trial 记录"""

    def test_record(self):
        result = SweepResult("demo")
        result.record("ok", lambda: None)
        result.record("bad", lambda: "mismatch")
        result.record("boom", lambda: 1 // 0)
        self.assertEqual((result.trials, result.passed), (3, 1))
        self.assertFalse(result.ok)
        self.assertEqual(result.failures[0], "bad: mismatch")
        self.assertTrue(result.failures[1].startswith("boom: ZeroDivisionError"))

    def test_to_dict(self):
        result = SweepResult("demo")
        result.bump("b")
        result.bump("a")
        result.bump("b")
        doc = result.to_dict()
        self.assertEqual(list(doc["details"]), ["a", "b"])
        self.assertEqual(doc["details"]["b"], 2)
        self.assertTrue(doc["ok"])


class TestSweeps(unittest.TestCase):
    """各扫描在小参数下通过"""

    def test_sufficiency(self):
        result = run_sufficiency(trials=6, seed=1, max_resources=6, max_strategies=4,
                                 trace_cap=256, trace_samples=16)
        self.assertTrue(result.ok, result.failures)
        self.assertEqual(result.trials, 6)

    def test_necessity(self):
        result = run_necessity(max_resources=4, max_strategies=4, random_trials=5,
                               random_resources=6, random_max_strategies=5)
        self.assertTrue(result.ok, result.failures)
        self.assertGreater(result.details["exhaustive"], 0)

    def test_necessity_at_default_sizes(self):
        result = run_necessity(max_resources=5, max_strategies=5, random_trials=10)
        self.assertTrue(result.ok, result.failures)
        self.assertGreater(result.details["RANDOM_SEARCH"], 0)

    def test_recognition_at_default_sizes(self):
        result = run_recognition()
        self.assertTrue(result.ok, result.failures)
        self.assertGreater(result.trials, 1000)

    def test_recognition(self):
        result = run_recognition(3, 4)
        self.assertTrue(result.ok, result.failures)
        self.assertGreater(result.details["representable"], 0)
        self.assertGreater(result.details["not_representable"], 0)

    def test_potential(self):
        result = run_potential(200, 3)
        self.assertTrue(result.ok, result.failures)
        self.assertEqual(result.passed, 200)


class TestTheoremSweep(unittest.TestCase):
    """按 Settings 调度"""

    def test_run_by_name(self):
        runner = TheoremSweep(Settings(recognition_max_resources=3, recognition_max_strategies=3))
        result = runner.run("recognition")
        self.assertEqual(result.name, "recognition")
        self.assertTrue(result.ok)
        self.assertEqual(runner.run("potential", trials=10).trials, 10)

    def test_recognition_defaults(self):
        settings = Settings()
        self.assertEqual((settings.recognition_max_resources, settings.recognition_max_strategies), (5, 5))

    def test_unknown_name(self):
        with self.assertRaises(ValueError):
            TheoremSweep(Settings()).run("everything")

    def test_names(self):
        self.assertEqual(SWEEP_NAMES, ("sufficiency", "necessity", "recognition", "potential"))


if __name__ == "__main__":
    unittest.main()

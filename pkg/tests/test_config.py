"""
配置与日志测试
"""

import logging
import logging.handlers
import os
import tempfile
import unittest
from unittest import mock

from config.settings import Settings, load_dotenv, load_settings, load_yaml_defaults
from utils.logger import HANDLER_NAME, ROOT_LOGGER, get_logger, set_level


class TestSettings(unittest.TestCase):
    """defaults.yaml → 环境变量 → overrides"""

    def test_yaml_defaults(self):
        defaults = load_yaml_defaults()
        self.assertEqual(defaults["strong_max_players"], 12)
        self.assertEqual(defaults["output_format"], "text")
        self.assertEqual(defaults["recognition_max_resources"], 5)
        self.assertEqual(defaults["recognition_max_strategies"], 5)

    def test_overrides(self):
        settings = load_settings(seed=7, output_format="json")
        self.assertEqual(settings.seed, 7)
        self.assertEqual(settings.output_format, "json")

    def test_none_override_is_ignored(self):
        self.assertEqual(load_settings(max_steps=None).max_steps, None)

    @mock.patch.dict(os.environ, {"CGAME_SEED": "42", "CGAME_REPORT_TIMING": "yes"})
    def test_environment(self):
        settings = load_settings()
        self.assertEqual(settings.seed, 42)
        self.assertTrue(settings.report_timing)
        self.assertEqual(load_settings(seed=3).seed, 3)

    @mock.patch.dict(os.environ, {"CGAME_OUTPUT_FORMAT": "text"})
    def test_dotenv_file(self):
        text = ("# local overrides\n"
                "export CGAME_SEED=11\n"
                "CGAME_OUTPUT_FORMAT=json\n"
                "CGAME_LOG_LEVEL=\"DEBUG\"\n"
                "OTHER_TOOL=1\n"
                "not a pair\n")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, ".env")
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
            os.environ.pop("CGAME_SEED", None)
            os.environ.pop("CGAME_LOG_LEVEL", None)
            loaded = load_dotenv(path)
        self.assertEqual(loaded, {"CGAME_SEED": "11", "CGAME_LOG_LEVEL": "DEBUG"})
        self.assertEqual(os.environ["CGAME_OUTPUT_FORMAT"], "text")
        self.assertNotIn("OTHER_TOOL", os.environ)
        self.assertEqual(Settings().seed, 11)

    def test_missing_dotenv(self):
        self.assertEqual(load_dotenv("/nonexistent/.env"), {})

    def test_invalid_format(self):
        with self.assertRaises(ValueError):
            Settings(output_format="xml")


class TestLogger(unittest.TestCase):
    """logger 命名空间"""

    def test_namespace(self):
        self.assertEqual(get_logger("x").name, ROOT_LOGGER + ".x")
        self.assertEqual(get_logger("cgame.y").name, "cgame.y")

    def test_single_handler(self):
        get_logger("a")
        get_logger("b")
        root = logging.getLogger(ROOT_LOGGER)
        own = [h for h in root.handlers if h.get_name() == HANDLER_NAME]
        self.assertEqual(len(own), 1)
        self.assertTrue(root.propagate)

    def test_records_reach_outer_handlers(self):
        outer = logging.handlers.BufferingHandler(capacity=10)
        logging.getLogger().addHandler(outer)
        try:
            get_logger("sweeps").warning("trial failed")
        finally:
            logging.getLogger().removeHandler(outer)
        self.assertEqual([r.getMessage() for r in outer.buffer], ["trial failed"])
        self.assertEqual(outer.buffer[0].name, "cgame.sweeps")

    def test_set_level(self):
        root = logging.getLogger(ROOT_LOGGER)
        previous = root.level
        try:
            set_level("debug")
            self.assertEqual(root.level, logging.DEBUG)
        finally:
            root.setLevel(previous)


if __name__ == "__main__":
    unittest.main()

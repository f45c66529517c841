"""
命令行测试 — 游戏文件解析、子命令输出、退出码
"""

import json
import os
import tempfile
import unittest

from cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, render, run_command
from cli.catalog import EXAMPLES
from cli.game_file import parse_form, parse_game_file, serialize_game
from config.settings import Settings
from core import GameFileError, GameForm

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GAMES = os.path.join(ROOT, "data", "games")


def _path(name: str) -> str:
    return os.path.join(GAMES, name)


def _run(*argv):
    return run_command(list(argv), Settings())


class TestGameFile(unittest.TestCase):
    """游戏文件语法"""

    def test_example_files_match_catalog(self):
        for number in (1, 2, 3, 4):
            with open(_path(f"ex{number}.game"), encoding="utf-8") as f:
                game = parse_game_file(f.read())
            self.assertEqual(game, EXAMPLES[number].game)

    def test_form_only(self):
        with open(_path("tree.form"), encoding="utf-8") as f:
            form = parse_game_file(f.read())
        self.assertIsInstance(form, GameForm)
        self.assertEqual(form.n_resources, 12)

    def test_serialize_reparses(self):
        game = EXAMPLES[4].game
        self.assertEqual(parse_game_file(serialize_game(game)), game)

    def test_bad_rational_position(self):
        text = "resources: A\nplayers: 1\nstrategy: A\npayoff A: 1/0\n"
        with self.assertRaises(GameFileError) as ctx:
            parse_game_file(text)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (4, 11))

    def test_unknown_resource_position(self):
        with self.assertRaises(GameFileError) as ctx:
            parse_form("resources: A B\nstrategy: A,C\n")
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 13))

    def test_missing_sections(self):
        with self.assertRaises(GameFileError) as ctx:
            parse_form("resources: A\n")
        self.assertEqual(ctx.exception.line, 0)
        with self.assertRaises(GameFileError):
            parse_game_file("resources: A\nstrategy: A\npayoff A: 1\n")
        with self.assertRaises(GameFileError):
            parse_game_file("resources: A B\nplayers: 2\nstrategy: A\nstrategy: B\npayoff A: 2 1\n")

    def test_short_payoff_row(self):
        text = "resources: A\nplayers: 2\nstrategy: A\npayoff A: 1\n"
        with self.assertRaises(GameFileError):
            parse_game_file(text)


class TestCommands(unittest.TestCase):
    """子命令"""

    def test_compare_example1(self):
        code, doc = _run("compare", _path("ex1.game"))
        self.assertEqual(code, EXIT_OK)
        result = doc["result"]
        self.assertEqual(result["classification"], "DISJOINT")
        self.assertEqual(result["greedy"], ["[AB,AC,BC]"])
        self.assertEqual(result["nash"], ["[AC,AC,BC]"])
        self.assertTrue(doc["input"]["digest"].startswith("sha256:"))

    def test_check_form(self):
        code, doc = _run("check-form", _path("triangle.form"))
        self.assertEqual(code, EXIT_OK)
        self.assertFalse(doc["result"]["tree_representable"])
        self.assertEqual(doc["result"]["bad_configuration"]["s3"], "BC")

    def test_tree(self):
        code, doc = _run("tree", _path("tree.form"))
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(doc["result"]["outline"].startswith("(root)\n  A\n"))

    def test_tree_rejects_triangle(self):
        code, doc = _run("tree", _path("triangle.form"))
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertEqual(doc["error"]["type"], "NotRepresentableError")

    def test_greedy_order_and_ties(self):
        code, doc = _run("greedy", _path("ex3.game"), "--order", "2,1", "--ties", "AC,BC")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["result"]["profile"], "[BC,AC]")
        self.assertEqual(doc["result"]["order"], [2, 1])

    def test_greedy_all(self):
        code, doc = _run("greedy", _path("ex3.game"), "--all")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([g["profile"] for g in doc["result"]["greedy"]], ["[AB,BC]", "[AC,BC]"])

    def test_greedy_invalid_tie(self):
        code, doc = _run("greedy", _path("ex3.game"), "--ties", "BC,BC")
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertEqual(doc["error"]["type"], "InvalidTieError")

    def test_dynamics(self):
        code, doc = _run("dynamics", _path("ex1.game"), "--start", "AB,AC,BC")
        self.assertEqual(code, EXIT_OK)
        result = doc["result"]
        self.assertEqual(len(result["steps"]), 1)
        self.assertEqual(result["steps"][0]["player"], 1)
        self.assertEqual(result["terminal"], "[AC,AC,BC]")
        self.assertTrue(result["converged"])

    def test_dynamics_wrong_arity(self):
        code, _ = _run("dynamics", _path("ex1.game"), "--start", "AB,AC")
        self.assertEqual(code, EXIT_USAGE)

    def test_synthesize(self):
        code, doc = _run("synthesize", _path("triangle.form"))
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(doc["result"]["validated"])
        code, doc = _run("synthesize", _path("tree.form"))
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertEqual(doc["error"]["message"], "form is tree representable")

    def test_synthesize_two_layer(self):
        code, doc = _run("synthesize", _path("ex2.form"))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["result"]["construction_case"], "ALTERNATE_OUTSIDE_FIRST")
        self.assertEqual(doc["result"]["witness"], ["AD", "BC"])

    def test_examples(self):
        code, doc = _run("examples", "all")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(doc["result"]["summary"]), 5)
        self.assertTrue(all("PASS" in line for line in doc["result"]["summary"]))

    def test_reduce(self):
        text = ("resources: A B C\nplayers: 2\nstrategy: A\nstrategy: A,B\nstrategy: C\n"
                "payoff A: 5 2\npayoff B: 4 1\npayoff C: 3 1\n")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "dominated.game")
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
            code, doc = _run("reduce", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(doc["result"]["removed"], ["A"])
        self.assertEqual(doc["result"]["strategies"], ["AB", "C"])

    def test_nash_strong(self):
        code, doc = _run("nash", _path("ex2.game"), "--strong")
        self.assertEqual(code, EXIT_OK)
        self.assertLessEqual(set(doc["result"]["strong"]), set(doc["result"]["nash"]))


class TestExitCodes(unittest.TestCase):
    """参数错误、文件错误与输出稳定性"""

    def test_missing_file(self):
        code, doc = _run("compare", _path("nope.game"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(doc["error"]["type"], "UsageError")

    def test_bad_arguments(self):
        self.assertEqual(_run("frobnicate")[0], EXIT_USAGE)
        self.assertEqual(_run("examples", "9")[0], EXIT_USAGE)
        self.assertEqual(_run("greedy", _path("ex1.game"), "--order", "x")[0], EXIT_USAGE)

    def test_form_where_game_required(self):
        code, doc = _run("compare", _path("triangle.form"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(doc["error"]["type"], "GameFileError")

    def test_global_option_after_subcommand(self):
        code, doc = run_command(["compare", _path("ex2.game"), "--seed", "5"], Settings())
        self.assertEqual(code, EXIT_OK)

    def test_json_is_stable(self):
        argv = ["--format", "json", "compare", _path("ex4.game")]
        first = render(run_command(argv, Settings())[1], "json")
        second = render(run_command(argv, Settings())[1], "json")
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first)["result"]["classification"], "OVERLAP")

    def test_text_render(self):
        _, doc = _run("compare", _path("ex1.game"))
        text = render(doc, "text")
        self.assertIn("classification: DISJOINT", text)


if __name__ == "__main__":
    unittest.main()

"""
cli — 游戏文件、内置示例、报告输出与子命令
"""

from .game_file import parse_form, parse_game_file, serialize_form, serialize_game
from .catalog import EXAMPLES, TREE_FORM, CatalogExample, check_example
from .render import render, render_json, render_text
from .commands import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, execute, main, run_command

__all__ = [
    "parse_form", "parse_game_file", "serialize_form", "serialize_game",
    "EXAMPLES", "TREE_FORM", "CatalogExample", "check_example",
    "render", "render_json", "render_text",
    "EXIT_DOMAIN", "EXIT_OK", "EXIT_USAGE", "execute", "main", "run_command",
]

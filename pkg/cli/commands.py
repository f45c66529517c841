"""
命令行子命令 — 每次调用产出一个 ReportDocument（dict）和退出码

退出码:
    0  成功
    1  领域错误（前置条件不满足、示例/扫描不通过等）
    2  参数错误、文件缺失、游戏文件语法错误
"""

import argparse
import dataclasses
import hashlib
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config.settings import Settings, load_settings
from core.errors import GameError, GameFileError, InvalidProfileError
from core.model import CongestionGame, GameForm, profile_label
from core.payoffs import canonicalize, is_subset_free, reduce_to_subset_free, utilities
from dynamics.greedy import ArrivalOrder, TieBreak, greedy_certificates, greedy_run
from dynamics.response import MoverPolicy, ResponseMode, response_dynamics
from equilibrium.nash import enumerate_nash
from equilibrium.report import compare
from equilibrium.strong import enumerate_strong
from forms.bad_config import find_bad_configuration
from forms.rtree import build_r_tree, induced_strategies
from synthesis.counterexample import synthesize_counterexample, validate_certificate
from sweeps.runner import SWEEP_NAMES, TheoremSweep
from utils.logger import get_logger, set_level

from .catalog import EXAMPLES, check_example
from .game_file import parse_form, parse_game_file, serialize_game
from .render import render

logger = get_logger("cli")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

Result = Tuple[int, dict]


class UsageError(Exception):
    """命令行参数错误（退出码 2）"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ----------------------------------------------------------------------
# 参数解析
# ----------------------------------------------------------------------

def _global_options() -> argparse.ArgumentParser:
    """全局参数既可写在子命令前也可写在后"""
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", dest="output_format", choices=["text", "json"],
                        help="输出格式（默认 text）")
    common.add_argument("--seed", type=int, help="随机种子")
    common.add_argument("--max-steps", dest="max_steps", type=int,
                        help="dynamics 步数上限（默认 N·|Σ|·10）")
    common.add_argument("--log-level", dest="log_level",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], type=str.upper,
                        help="日志级别（输出到 stderr）")
    common.add_argument("--timing", dest="report_timing", action="store_true",
                        help="报告里附带耗时（JSON 不再逐字节稳定）")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = _Parser(prog="cgame", parents=[common],
                     description="对称拥塞博弈分析器 — greedy 序列、Nash 均衡与 R-tree 表示")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("check-form", "subset-free 检查、bad configuration、tree representable 判定")
    p.add_argument("file")

    p = add("tree", "构造并打印 R-tree")
    p.add_argument("file")

    p = add("greedy", "运行一次 greedy 到达，或 --all 枚举 Z(G)")
    p.add_argument("file")
    p.add_argument("--order", help="到达顺序，1 起始的玩家编号，如 2,1,3")
    p.add_argument("--ties", help="每个到达位置选的策略，如 AC,BD")
    p.add_argument("--all", action="store_true", help="枚举全部 greedy profile 及其证书")

    p = add("nash", "枚举纯策略 Nash 均衡")
    p.add_argument("file")
    p.add_argument("--strong", action="store_true", help="同时枚举强均衡")

    p = add("compare", "比较 Z(G) 与 NE(G)")
    p.add_argument("file")
    p.add_argument("--strong", action="store_true", help="同时枚举强均衡")

    p = add("dynamics", "best-response / better-response 动态")
    p.add_argument("file")
    p.add_argument("--start", required=True, help="起始 profile，如 AB,AC,BC")
    p.add_argument("--mode", choices=[m.value for m in ResponseMode], default=ResponseMode.BEST.value)
    p.add_argument("--policy", choices=[m.value for m in MoverPolicy],
                   default=MoverPolicy.LOWEST_INDEX.value)

    p = add("synthesize", "为不可 tree 表示的 form 合成反例博弈")
    p.add_argument("file")

    p = add("examples", "重算内置示例并与已知结果比对")
    p.add_argument("which", nargs="?", default="all", choices=["all"] + [str(k) for k in EXAMPLES])

    p = add("reduce", "删除被占优策略，得到 subset-free 博弈")
    p.add_argument("file")

    p = add("sweep", "运行验收扫描")
    p.add_argument("name", nargs="?", default="all", choices=["all"] + list(SWEEP_NAMES))
    p.add_argument("--trials", type=int, help="覆盖 trial 数")
    return parser


def _settings(args: argparse.Namespace, base: Optional[Settings]) -> Settings:
    overrides = {
        key: getattr(args, key, None)
        for key in ("output_format", "seed", "max_steps", "log_level", "report_timing")
    }
    if base is None:
        return load_settings(**overrides)
    return dataclasses.replace(base, **{k: v for k, v in overrides.items() if v is not None})


# ----------------------------------------------------------------------
# 输入
# ----------------------------------------------------------------------

def _read(path: str, document: dict) -> str:
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
    document["input"] = {"path": path, "digest": "sha256:" + hashlib.sha256(raw).hexdigest()[:16]}
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise GameFileError(f"file is not UTF-8: {e.reason}") from e


def _load_game(path: str, settings: Settings, document: dict) -> CongestionGame:
    parsed = parse_game_file(_read(path, document), settings.max_resources)
    if not isinstance(parsed, CongestionGame):
        raise GameFileError("file declares a form only; players and payoff rows are required")
    return parsed


def _load_form(path: str, settings: Settings, document: dict) -> GameForm:
    return parse_form(_read(path, document), settings.max_resources)


def _split(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _strategies(form: GameForm, text: str, what: str) -> Tuple[int, ...]:
    try:
        return tuple(form.find_strategy(tok) for tok in _split(text))
    except InvalidProfileError as e:
        raise UsageError(f"{what}: {e}") from e


def _labels(form: GameForm, profiles) -> List[str]:
    return [profile_label(form, p) for p in sorted(profiles)]


# ----------------------------------------------------------------------
# 子命令
# ----------------------------------------------------------------------

def cmd_check_form(args, settings: Settings, document: dict) -> Result:
    form = _load_form(args.file, settings, document)
    subset = is_subset_free(form)
    bad = find_bad_configuration(form)
    return EXIT_OK, {
        "strategies": form.strategy_labels(),
        "subset_free": subset is None,
        "subset_witness": None if subset is None else [form.strategy_label(i) for i in subset],
        "bad_configuration": None if bad is None else bad.describe(form),
        "tree_representable": bad is None,
    }


def cmd_tree(args, settings: Settings, document: dict) -> Result:
    form = _load_form(args.file, settings, document)
    tree = build_r_tree(form)
    return EXIT_OK, {
        "outline": tree.to_outline() + "\n",
        "nested": tree.to_nested(),
        "induced": induced_strategies(tree).strategy_labels(),
    }


def cmd_greedy(args, settings: Settings, document: dict) -> Result:
    game = _load_game(args.file, settings, document)
    form = game.form
    if args.all:
        certificates = greedy_certificates(game)
        return EXIT_OK, {
            "greedy": [
                {
                    "profile": profile_label(form, profile),
                    "order": [p + 1 for p in order.permutation],
                    "ties": [form.strategy_label(s) for s in tie.choices],
                }
                for profile, (order, tie) in certificates.items()
            ],
        }

    if args.order:
        try:
            numbers = [int(t) for t in _split(args.order)]
        except ValueError as e:
            raise UsageError(f"--order: {e}") from e
        order = ArrivalOrder.from_one_based(numbers)
    else:
        order = ArrivalOrder.identity(game.players)
    tie = TieBreak.explicit(_strategies(form, args.ties, "--ties")) if args.ties else TieBreak.lowest()
    profile = greedy_run(game, order, tie)
    return EXIT_OK, {
        "order": [p + 1 for p in order.permutation],
        "profile": profile_label(form, profile),
        "canonical": profile_label(form, canonicalize(profile)),
        "utilities": [str(u) for u in utilities(game, profile)],
    }


def cmd_nash(args, settings: Settings, document: dict) -> Result:
    game = _load_game(args.file, settings, document)
    nash = enumerate_nash(game)
    result = {"nash": _labels(game.form, nash)}
    if args.strong:
        result["strong"] = _labels(game.form, enumerate_strong(game, settings.strong_max_players))
    return EXIT_OK, result


def cmd_compare(args, settings: Settings, document: dict) -> Result:
    game = _load_game(args.file, settings, document)
    report = compare(game, include_strong=args.strong, strong_max_players=settings.strong_max_players)
    return EXIT_OK, report.to_dict(game.form)


def cmd_dynamics(args, settings: Settings, document: dict) -> Result:
    game = _load_game(args.file, settings, document)
    form = game.form
    start = _strategies(form, args.start, "--start")
    if len(start) != game.players:
        raise UsageError(f"--start lists {len(start)} strategies, game has {game.players} players")
    trace = response_dynamics(game, start, ResponseMode(args.mode), MoverPolicy(args.policy),
                              settings.max_steps, settings.seed)
    return EXIT_OK, {
        "start": profile_label(form, trace.start),
        "steps": [
            {
                "player": step.player + 1,
                "from": form.strategy_label(step.from_strategy),
                "to": form.strategy_label(step.to_strategy),
                "utility": f"{step.utility_before} -> {step.utility_after}",
            }
            for step in trace.steps
        ],
        "terminal": profile_label(form, trace.terminal),
        "converged": trace.converged,
        "potential": [str(v) for v in trace.potential_path],
    }


def cmd_synthesize(args, settings: Settings, document: dict) -> Result:
    form = _load_form(args.file, settings, document)
    cert = synthesize_counterexample(form)
    validated = validate_certificate(cert)
    result = cert.to_dict()
    result["validated"] = validated
    result["game_file"] = serialize_game(cert.game)
    return (EXIT_OK if validated else EXIT_DOMAIN), result


def cmd_examples(args, settings: Settings, document: dict) -> Result:
    numbers = sorted(EXAMPLES) if args.which == "all" else [int(args.which)]
    checks = [check_example(EXAMPLES[n]) for n in numbers]
    summary = [
        f"Example {c['example']}: {'PASS' if c['passed'] else 'FAIL'} ({c['computed']['classification']})"
        for c in checks
    ]
    ok = all(c["passed"] for c in checks)
    return (EXIT_OK if ok else EXIT_DOMAIN), {"summary": summary, "examples": checks}


def cmd_reduce(args, settings: Settings, document: dict) -> Result:
    game = _load_game(args.file, settings, document)
    reduced = reduce_to_subset_free(game)
    kept = {s.mask for s in reduced.form.strategies}
    removed = [game.form.strategy_label(i) for i, s in enumerate(game.form.strategies) if s.mask not in kept]
    return EXIT_OK, {
        "removed": removed,
        "strategies": reduced.form.strategy_labels(),
        "game_file": serialize_game(reduced),
    }


def cmd_sweep(args, settings: Settings, document: dict) -> Result:
    runner = TheoremSweep(settings)
    if args.name == "all":
        results = runner.run_all(args.trials)
    else:
        results = [runner.run(args.name, args.trials)]
    ok = all(r.ok for r in results)
    return (EXIT_OK if ok else EXIT_DOMAIN), {"sweeps": [r.to_dict() for r in results]}


COMMANDS: Dict[str, Callable[..., Result]] = {
    "check-form": cmd_check_form,
    "tree": cmd_tree,
    "greedy": cmd_greedy,
    "nash": cmd_nash,
    "compare": cmd_compare,
    "dynamics": cmd_dynamics,
    "synthesize": cmd_synthesize,
    "examples": cmd_examples,
    "reduce": cmd_reduce,
    "sweep": cmd_sweep,
}


def _error(e: Exception) -> dict:
    if isinstance(e, GameFileError):
        return {"type": type(e).__name__, "message": e.reason, "line": e.line, "column": e.column}
    return {"type": type(e).__name__, "message": str(e)}


def _requested_format(argv: Sequence[str], settings: Optional[Settings]) -> Settings:
    """参数解析失败时也尽量按 --format 输出"""
    base = settings or load_settings()
    for i, token in enumerate(argv):
        value = None
        if token == "--format" and i + 1 < len(argv):
            value = argv[i + 1]
        elif token.startswith("--format="):
            value = token.split("=", 1)[1]
        if value in ("text", "json"):
            return dataclasses.replace(base, output_format=value)
    return base


def execute(argv: Sequence[str], settings: Optional[Settings] = None
            ) -> Tuple[int, dict, Settings]:
    """run_command 的完整版本，额外返回生效的 Settings（决定输出格式）"""
    argv = list(argv)
    document: dict = {"command": " ".join(argv)}
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        document["error"] = _error(e)
        return EXIT_USAGE, document, _requested_format(argv, settings)

    settings = _settings(args, settings)
    set_level(settings.log_level)
    started = time.perf_counter()
    try:
        code, document["result"] = COMMANDS[args.command](args, settings, document)
    except (UsageError, GameFileError) as e:
        code, document["error"] = EXIT_USAGE, _error(e)
    except GameError as e:
        code, document["error"] = EXIT_DOMAIN, _error(e)
    if code != EXIT_OK:
        logger.info("%s exited with %d", args.command, code)
    if settings.report_timing:
        document["timing"] = round(time.perf_counter() - started, 3)
    return code, document, settings


def run_command(argv: Sequence[str], settings: Optional[Settings] = None) -> Tuple[int, dict]:
    """
    执行一条命令

    Returns:
        (退出码, ReportDocument)；ReportDocument 含 command / input / result / error
        （--timing 时另含 timing）
    """
    code, document, _ = execute(argv, settings)
    return code, document


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, document, settings = execute(sys.argv[1:] if argv is None else argv)
    print(render(document, settings.output_format))
    return code

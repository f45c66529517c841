"""
游戏文件格式 — 行式文本，`#` 起注释

    format: 1                 # 可选
    resources: A B C
    players: 3
    strategy: A,B
    strategy: A,C
    payoff A: 10 8 1
    payoff B: 10 4 1/2
    payoff C: 8 6 0.5

players 与 payoff 都缺省时解析为 GameForm；否则两者必须齐全。
所有错误都抛 GameFileError，带 1 起始的行号/列号。
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from core.errors import GameFileError, InvalidGameError
from core.model import DEFAULT_MAX_RESOURCES, CongestionGame, GameForm, ResourceId, Strategy, mask_of
from core.rational import format_rational, parse_rational

FORMAT_VERSION = 1

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"[^\s,]+")
_KEY = re.compile(r"^\s*(format|resources|players|strategy|payoff)\b\s*([^:]*?)\s*:", re.IGNORECASE)


@dataclass
class _Draft:
    version: Optional[int] = None
    resources: List[str] = field(default_factory=list)
    resources_line: int = 0
    players: Optional[int] = None
    players_line: int = 0
    strategies: List[Tuple[int, int]] = field(default_factory=list)  # (mask, line)
    payoffs: Dict[str, Tuple[Tuple[Fraction, ...], int]] = field(default_factory=dict)


def _tokens(text: str, offset: int) -> List[Tuple[str, int]]:
    """(token, 1 起始列号)"""
    return [(m.group(0), offset + m.start() + 1) for m in _TOKEN.finditer(text)]


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _parse_resources(draft: _Draft, body: str, offset: int, lineno: int):
    if draft.resources:
        raise GameFileError("resources declared twice", lineno, 1)
    tokens = _tokens(body, offset)
    if not tokens:
        raise GameFileError("resources: needs at least one name", lineno, offset + 1)
    seen = set()
    for name, col in tokens:
        if not _NAME.match(name):
            raise GameFileError(f"invalid resource name {name!r}", lineno, col)
        if name in seen:
            raise GameFileError(f"duplicate resource {name!r}", lineno, col)
        seen.add(name)
    draft.resources = [name for name, _ in tokens]
    draft.resources_line = lineno


def _parse_players(draft: _Draft, body: str, offset: int, lineno: int):
    if draft.players is not None:
        raise GameFileError("players declared twice", lineno, 1)
    tokens = _tokens(body, offset)
    if len(tokens) != 1 or not tokens[0][0].isdigit():
        raise GameFileError("players: expects one positive integer", lineno, offset + 1)
    value, col = int(tokens[0][0]), tokens[0][1]
    if value < 1:
        raise GameFileError("players must be at least 1", lineno, col)
    draft.players = value
    draft.players_line = lineno


def _parse_strategy(draft: _Draft, body: str, offset: int, lineno: int):
    if not draft.resources:
        raise GameFileError("strategy declared before resources", lineno, 1)
    tokens = _tokens(body, offset)
    if not tokens:
        raise GameFileError("empty strategy", lineno, offset + 1)
    lookup = {name: i for i, name in enumerate(draft.resources)}
    indices = []
    for name, col in tokens:
        if name not in lookup:
            raise GameFileError(f"unknown resource {name!r} in strategy", lineno, col)
        if lookup[name] in indices:
            raise GameFileError(f"resource {name!r} repeated in strategy", lineno, col)
        indices.append(lookup[name])
    mask = mask_of(indices)
    for other, other_line in draft.strategies:
        if other == mask:
            raise GameFileError(f"duplicate strategy (first declared on line {other_line})",
                                lineno, tokens[0][1])
    draft.strategies.append((mask, lineno))


def _parse_payoff(draft: _Draft, name: str, name_col: int, body: str, offset: int, lineno: int):
    if not draft.resources:
        raise GameFileError("payoff declared before resources", lineno, 1)
    if not name:
        raise GameFileError("payoff line needs a resource name", lineno, name_col)
    if name not in draft.resources:
        raise GameFileError(f"payoff for unknown resource {name!r}", lineno, name_col)
    if name in draft.payoffs:
        raise GameFileError(f"payoff row for {name!r} declared twice", lineno, name_col)
    values = []
    for token, col in _tokens(body, offset):
        try:
            values.append(parse_rational(token))
        except ValueError as e:
            raise GameFileError(str(e), lineno, col) from e
    if not values:
        raise GameFileError(f"payoff row for {name!r} is empty", lineno, offset + 1)
    draft.payoffs[name] = (tuple(values), lineno)


def parse_game_file(text: str, max_resources: int = DEFAULT_MAX_RESOURCES
                    ) -> Union[CongestionGame, GameForm]:
    """
    解析游戏文件

    Returns:
        有 players/payoff 时返回 CongestionGame，否则返回 GameForm

    Raises:
        GameFileError: 语法或语义错误（含行号/列号）
    """
    draft = _Draft()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _KEY.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise GameFileError(f"unrecognized line {line.strip()!r}", lineno, col)
        key = m.group(1).lower()
        arg = m.group(2)
        body = line[m.end():]
        offset = m.end()

        if key == "payoff":
            _parse_payoff(draft, arg, m.start(2) + 1, body, offset, lineno)
            continue
        if arg:
            raise GameFileError(f"unexpected text {arg!r} after {key}", lineno, m.start(2) + 1)
        if key == "format":
            tokens = _tokens(body, offset)
            if draft.version is not None or len(tokens) != 1 or tokens[0][0] != str(FORMAT_VERSION):
                raise GameFileError(f"unsupported format header (expected {FORMAT_VERSION})",
                                    lineno, offset + 1)
            draft.version = FORMAT_VERSION
        elif key == "resources":
            _parse_resources(draft, body, offset, lineno)
        elif key == "players":
            _parse_players(draft, body, offset, lineno)
        else:
            _parse_strategy(draft, body, offset, lineno)

    return _finish(draft, max_resources)


def _finish(draft: _Draft, max_resources: int) -> Union[CongestionGame, GameForm]:
    if not draft.resources:
        raise GameFileError("missing resources: declaration", 0, 0)
    if not draft.strategies:
        raise GameFileError("missing strategy: declarations", 0, 0)
    try:
        form = GameForm(
            tuple(ResourceId(i, n) for i, n in enumerate(draft.resources)),
            tuple(Strategy(mask) for mask, _ in draft.strategies),
            max_resources=max_resources,
        )
    except InvalidGameError as e:
        raise GameFileError(str(e), draft.resources_line, 1) from e

    if draft.players is None and not draft.payoffs:
        return form
    if draft.players is None:
        first_line = min(line for _, line in draft.payoffs.values())
        raise GameFileError("payoff rows given without players:", first_line, 1)

    rows = []
    for name in draft.resources:
        if name not in draft.payoffs:
            raise GameFileError(f"no payoff row for resource {name!r}", draft.players_line, 1)
        values, line = draft.payoffs[name]
        if len(values) < draft.players:
            raise GameFileError(
                f"payoff row {name} has {len(values)} entries, need {draft.players}", line, 1
            )
        rows.append(values)
    return CongestionGame(form, draft.players, tuple(rows))


def parse_form(text: str, max_resources: int = DEFAULT_MAX_RESOURCES) -> GameForm:
    """游戏文件或 form 文件都接受，只取 form"""
    parsed = parse_game_file(text, max_resources)
    return parsed.form if isinstance(parsed, CongestionGame) else parsed


def serialize_form(form: GameForm) -> str:
    lines = [f"format: {FORMAT_VERSION}", "resources: " + " ".join(r.name for r in form.resources)]
    lines += ["strategy: " + ",".join(form.resource_names(s.mask)) for s in form.strategies]
    return "\n".join(lines) + "\n"


def serialize_game(game: CongestionGame) -> str:
    form = game.form
    lines = [f"format: {FORMAT_VERSION}", "resources: " + " ".join(r.name for r in form.resources),
             f"players: {game.players}"]
    lines += ["strategy: " + ",".join(form.resource_names(s.mask)) for s in form.strategies]
    for res, row in zip(form.resources, game.payoffs):
        lines.append(f"payoff {res.name}: " + " ".join(format_rational(v) for v in row))
    return "\n".join(lines) + "\n"

"""
验收扫描 — 把各条性质做成可复现的带 seed 批量检查

    sufficiency  tree representable form 上 Z(G) = NE(G)，NE 可反推 greedy 顺序，
                 best-response 轨迹收敛（超过 N 步只记 flag），N ≤ 3 时强均衡也相同
    necessity    非 tree representable 的 subset-free form 都能合成并验证反例
    recognition  build_r_tree 成功 ⇔ 没有 bad configuration
    potential    单人偏离时 Φ 的差 = 偏离者效用的差

单个 trial 内的任何异常都记为 failure，扫描本身不抛异常。
"""

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional

from config.settings import Settings
from core.errors import NotRepresentableError
from core.model import CongestionGame
from core.payoffs import rosenthal_potential, utility
from dynamics.peeling import extract_greedy_order
from dynamics.response import ResponseMode, response_dynamics
from equilibrium.report import Classification, compare
from equilibrium.strong import enumerate_strong
from forms.bad_config import find_bad_configuration, is_tree_representable
from forms.generator import (
    iter_subset_free_forms,
    random_game,
    random_monotone_game,
    random_subset_free_form,
    random_tree_form,
)
from forms.rtree import build_r_tree
from synthesis.counterexample import check_roles, synthesize_counterexample, validate_certificate
from utils.logger import get_logger

logger = get_logger("sweeps")

SWEEP_NAMES = ("sufficiency", "necessity", "recognition", "potential")


@dataclass
class SweepResult:
    name: str
    trials: int = 0
    passed: int = 0
    failures: List[str] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, label: str, check: Callable[[], Optional[str]]):
        """跑一个 trial；check 返回 None 表示通过，返回字符串即失败原因"""
        self.trials += 1
        try:
            reason = check()
        except Exception as e:
            reason = f"{type(e).__name__}: {e}"
        if reason is None:
            self.passed += 1
        else:
            self.failures.append(f"{label}: {reason}")
            logger.warning("%s %s failed: %s", self.name, label, reason)

    def bump(self, key: str):
        self.details[key] = self.details.get(key, 0) + 1

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "ok": self.ok,
            "failures": list(self.failures),
            "flags": list(self.flags),
            "flag_count": len(self.flags),
            "details": dict(sorted(self.details.items())),
        }


# ----------------------------------------------------------------------
# sufficiency
# ----------------------------------------------------------------------

def _trace_starts(game: CongestionGame, rng: random.Random, cap: int, samples: int):
    n_strategies, players = game.form.n_strategies, game.players
    if n_strategies ** players <= cap:
        return list(product(range(n_strategies), repeat=players))
    return [tuple(rng.randrange(n_strategies) for _ in range(players)) for _ in range(samples)]


def _sufficiency_trial(result: SweepResult, game: CongestionGame, rng: random.Random,
                       trace_cap: int, trace_samples: int, strong_players: int) -> Optional[str]:
    report = compare(game)
    if report.classification is not Classification.EQUAL:
        return f"classification {report.classification.value}"
    for ne in sorted(report.nash):
        extract_greedy_order(game, ne)

    for start in _trace_starts(game, rng, trace_cap, trace_samples):
        trace = response_dynamics(game, start, ResponseMode.BEST)
        if not trace.converged:
            return f"best-response trace from {list(start)} did not converge"
        if len(trace) > game.players:
            result.flags.append(
                f"{game.form.strategy_labels()} N={game.players}: "
                f"{len(trace)} steps from {list(start)}"
            )

    if game.players <= strong_players:
        strong = enumerate_strong(game)
        if strong != set(report.nash):
            return "strong equilibria differ from Nash equilibria"
        result.bump("strong_checked")
    return None


def run_sufficiency(trials: int = 200, seed: int = 0, max_resources: int = 10,
                    max_strategies: int = 8, trace_cap: int = 4096, trace_samples: int = 256,
                    strong_players: int = 3) -> SweepResult:
    result = SweepResult("sufficiency")
    for trial in range(trials):
        trial_seed = seed * 1_000_003 + trial
        players = (2, 3, 4)[trial % 3]
        rng = random.Random(trial_seed)

        def check():
            form = random_tree_form(trial_seed, max_resources, 1 + trial % 4, max_strategies)
            game = random_monotone_game(trial_seed, form, players)
            return _sufficiency_trial(result, game, rng, trace_cap, trace_samples, strong_players)

        result.record(f"trial {trial} (seed {trial_seed}, N={players})", check)
    logger.info("sufficiency: %d/%d passed, %d flags", result.passed, result.trials, len(result.flags))
    return result


# ----------------------------------------------------------------------
# necessity
# ----------------------------------------------------------------------

def _necessity_check(result: SweepResult, form) -> Optional[str]:
    cert = synthesize_counterexample(form)
    result.bump(cert.construction_case.value)
    if not validate_certificate(cert):
        return "certificate does not validate"
    if not check_roles(form, cert.construction_case, cert.role_map):
        return f"role map {dict(cert.role_map)} fails membership check"
    return None


def run_necessity(seed: int = 0, max_resources: int = 5, max_strategies: int = 5,
                  random_trials: int = 100, random_resources: int = 7,
                  random_max_strategies: int = 6) -> SweepResult:
    result = SweepResult("necessity")
    for form in iter_subset_free_forms(max_resources, max_strategies, min_strategies=3):
        if is_tree_representable(form):
            continue
        result.record(f"form {form.strategy_labels()}", lambda f=form: _necessity_check(result, f))
    result.details["exhaustive"] = result.trials

    for k in range(random_trials):
        form = None
        for attempt in range(50):
            candidate = random_subset_free_form(seed * 1_000_003 + k * 50 + attempt,
                                                random_resources, random_max_strategies)
            if not is_tree_representable(candidate):
                form = candidate
                break
        if form is None:
            result.bump("random_skipped")
            continue
        result.record(f"random form {form.strategy_labels()}", lambda f=form: _necessity_check(result, f))
    logger.info("necessity: %d/%d passed", result.passed, result.trials)
    return result


# ----------------------------------------------------------------------
# recognition
# ----------------------------------------------------------------------

def _recognition_check(form) -> Optional[str]:
    bad = find_bad_configuration(form)
    try:
        build_r_tree(form, precheck=False)
        built = True
    except NotRepresentableError:
        built = False
    if built != (bad is None):
        return f"build_r_tree {'succeeded' if built else 'failed'} but bad configuration is {bad}"
    return None


def run_recognition(max_resources: int = 5, max_strategies: int = 5) -> SweepResult:
    result = SweepResult("recognition")
    for form in iter_subset_free_forms(max_resources, max_strategies):
        result.record(f"form {form.strategy_labels()}", lambda f=form: _recognition_check(f))
        result.bump("representable" if is_tree_representable(form) else "not_representable")
    logger.info("recognition: %d/%d passed", result.passed, result.trials)
    return result


# ----------------------------------------------------------------------
# potential
# ----------------------------------------------------------------------

def run_potential(trials: int = 1000, seed: int = 0) -> SweepResult:
    result = SweepResult("potential")
    rng = random.Random(seed)
    for trial in range(trials):
        game = random_game(rng.randrange(1 << 30), rng.randint(2, 5), rng.randint(2, 6), rng.randint(1, 4))
        profile = tuple(rng.randrange(game.form.n_strategies) for _ in range(game.players))
        player = rng.randrange(game.players)
        target = rng.randrange(game.form.n_strategies)

        def check(game=game, profile=profile, player=player, target=target):
            moved = list(profile)
            moved[player] = target
            d_phi = rosenthal_potential(game, moved) - rosenthal_potential(game, profile)
            d_u = utility(game, moved, player) - utility(game, profile, player)
            if d_phi != d_u:
                return f"ΔΦ = {d_phi}, ΔU = {d_u}"
            return None

        result.record(f"trial {trial}", check)
    logger.info("potential: %d/%d passed", result.passed, result.trials)
    return result


# ----------------------------------------------------------------------
# 调度
# ----------------------------------------------------------------------

class TheoremSweep:
    """按 Settings 的规模参数运行扫描"""

    def __init__(self, settings: Settings):
        self.settings = settings

    def run(self, name: str, trials: Optional[int] = None) -> SweepResult:
        s = self.settings
        started = time.perf_counter()
        if name == "sufficiency":
            result = run_sufficiency(
                trials if trials is not None else s.sufficiency_trials, s.seed,
                s.sufficiency_max_resources, s.sufficiency_max_strategies,
                s.trace_exhaustive_cap, s.trace_samples,
            )
        elif name == "necessity":
            result = run_necessity(
                s.seed, s.necessity_max_resources, s.necessity_max_strategies,
                trials if trials is not None else s.necessity_random_trials,
                s.necessity_random_resources,
            )
        elif name == "recognition":
            result = run_recognition(s.recognition_max_resources, s.recognition_max_strategies)
        elif name == "potential":
            result = run_potential(trials if trials is not None else s.potential_trials, s.seed)
        else:
            raise ValueError(f"unknown sweep {name!r}")
        if s.report_timing:
            result.details["seconds"] = round(time.perf_counter() - started, 3)
        return result

    def run_all(self, trials: Optional[int] = None) -> List[SweepResult]:
        return [self.run(name, trials) for name in SWEEP_NAMES]


def run_all(settings: Optional[Settings] = None, trials: Optional[int] = None) -> List[SweepResult]:
    return TheoremSweep(settings or Settings()).run_all(trials)

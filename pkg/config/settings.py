"""
全局配置 — 从 config/defaults.yaml、.env 和环境变量加载

优先级（后者覆盖前者）：
    dataclass 默认值 → defaults.yaml → .env / CGAME_* 环境变量 → overrides
"""

import os
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional, Tuple

import yaml

from utils.logger import get_logger

logger = get_logger("config")

_CONFIG_DIR = os.path.dirname(os.path.abspath(__file__))
ENV_PREFIX = "CGAME_"


# ---------------------------------------------------------------------------
# .env 加载（不依赖 python-dotenv）
# ---------------------------------------------------------------------------

def _parse_env_line(line: str) -> Optional[Tuple[str, str]]:
    """`[export ]CGAME_KEY=value`，值两端的成对引号去掉；其余行返回 None"""
    line = line.strip()
    if line.startswith("export "):
        line = line[len("export "):].lstrip()
    key, sep, value = line.partition("=")
    key, value = key.strip(), value.strip()
    if not sep or not key.startswith(ENV_PREFIX):
        return None
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        value = value[1:-1]
    return key, value


def load_dotenv(path: Optional[str] = None) -> Dict[str, str]:
    """
    把 .env 里的 CGAME_* 项写进 os.environ（已设置的变量优先）

    Returns:
        实际写入的键值
    """
    path = path or os.path.join(os.path.dirname(_CONFIG_DIR), ".env")
    if not os.path.isfile(path):
        return {}
    loaded: Dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            if not raw.strip() or raw.lstrip().startswith("#"):
                continue
            entry = _parse_env_line(raw)
            if entry is None:
                logger.debug("%s:%d: skipped", path, lineno)
                continue
            key, value = entry
            if key not in os.environ:
                os.environ[key] = value
                loaded[key] = value
    return loaded


def load_yaml_defaults(path: str = None) -> Dict[str, Any]:
    path = path or os.path.join(_CONFIG_DIR, "defaults.yaml")
    if not os.path.exists(path):
        return {}
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        logger.warning("ignoring %s: top level is not a mapping", path)
        return {}
    return data


# ---------------------------------------------------------------------------
# Settings 数据类
# ---------------------------------------------------------------------------

@dataclass
class Settings:
    """项目配置（集中管理所有参数）"""

    # ---- 模型 ----
    max_resources: int = 64          # 策略 bit mask 位宽上限

    # ---- CLI ----
    output_format: str = "text"      # "text" / "json"
    seed: int = 0
    max_steps: Optional[int] = None  # None → N·|Σ|·10
    log_level: str = "WARNING"
    report_timing: bool = False      # 打开后 JSON 里带耗时，输出不再逐字节稳定

    # ---- 均衡 ----
    strong_max_players: int = 12     # coalition 扫描 2^N·|Σ|^N，限制 N

    # ---- dynamics 轨迹扫描 ----
    trace_exhaustive_cap: int = 4096  # |Σ|^N 不超过此值时遍历所有起点
    trace_samples: int = 256

    # ---- sweeps ----
    sufficiency_trials: int = 200
    sufficiency_max_resources: int = 10
    sufficiency_max_strategies: int = 8
    necessity_max_resources: int = 5
    necessity_max_strategies: int = 5
    necessity_random_trials: int = 100
    necessity_random_resources: int = 7
    recognition_max_resources: int = 5
    recognition_max_strategies: int = 5
    potential_trials: int = 1000

    def __post_init__(self):
        """从 CGAME_* 环境变量填充（仅当字段仍为默认值时）"""
        for f in fields(self):
            raw = os.getenv(ENV_PREFIX + f.name.upper())
            if raw is None or getattr(self, f.name) != f.default:
                continue
            setattr(self, f.name, _coerce(f.name, raw, f.default))
        if self.output_format not in ("text", "json"):
            raise ValueError(f"output_format must be text or json, got {self.output_format!r}")


def _coerce(name: str, raw: str, default: Any) -> Any:
    if isinstance(default, bool):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(default, int) or name == "max_steps":
        return int(raw)
    return raw


def load_settings(**overrides) -> Settings:
    """
    加载配置：defaults.yaml → .env → 环境变量 → overrides

    用法:
        settings = load_settings(seed=7, output_format="json")
    """
    load_dotenv()
    known = {f.name for f in fields(Settings)}
    values = {}
    for key, value in load_yaml_defaults().items():
        if key in known:
            values[key] = value
        else:
            logger.warning("unknown config key %r in defaults.yaml", key)
    # overrides 里的 None 表示"未指定"
    values.update({k: v for k, v in overrides.items() if v is not None})

    # 环境变量优先于 yaml：把被环境变量覆盖的 yaml 值交给 __post_init__ 处理
    for key in list(values):
        if overrides.get(key) is None and os.getenv(ENV_PREFIX + key.upper()) is not None:
            del values[key]
    return Settings(**values)

"""
统一日志配置

所有 logger 挂在 `cgame` 命名空间下，命名空间根上只挂一个 `cgame.stderr` handler；
记录照常向上传播，宿主程序（如 pytest）自己的 handler 不受影响。
输出到 stderr，保证 `--format json` 的 stdout 干净。
"""

import logging
import sys
from typing import Optional, Union

ROOT_LOGGER = "cgame"
HANDLER_NAME = "cgame.stderr"


def get_logger(name: str = ROOT_LOGGER,
               level: Optional[Union[int, str]] = None) -> logging.Logger:
    """
    获取/创建 logger 实例

    Args:
        name:  logger 名称（自动挂到 cgame.* 下）
        level: 日志级别；None 表示沿用命名空间根的级别
    """
    root = logging.getLogger(ROOT_LOGGER)
    if not any(h.get_name() == HANDLER_NAME for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.set_name(HANDLER_NAME)
        formatter = logging.Formatter(
            "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        handler.setFormatter(formatter)
        root.addHandler(handler)
        root.setLevel(logging.WARNING)

    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        logger = logging.getLogger(name)
    else:
        logger = logging.getLogger(f"{ROOT_LOGGER}.{name}")

    if level is not None:
        logger.setLevel(level if isinstance(level, int) else level.upper())
    return logger


def set_level(level: Union[int, str]):
    """CLI --log-level 入口：调整命名空间根级别"""
    get_logger(ROOT_LOGGER, level)

#!/usr/bin/env python3
"""
拥塞博弈分析器 — 入口
greedy 到达序列、纯策略 Nash 均衡、R-tree 表示与反例合成

用法:
    python main.py examples all                  # 重算内置示例
    python main.py compare data/games/ex1.game   # 比较 Z(G) 与 NE(G)
    python main.py tree data/games/tree.form     # 构造 R-tree
    python main.py --format json synthesize data/games/triangle.form
    python main.py --help                        # 帮助
"""

import sys

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())

"""
forms — game form 结构分析：bad configuration、R-tree、随机 form 生成
"""

from .bad_config import (
    BadConfiguration,
    find_bad_configuration,
    is_tree_representable,
    iter_bad_configurations,
)
from .rtree import RTree, build_r_tree, induced_strategies, verify_representation
from .generator import (
    iter_subset_free_forms,
    random_game,
    random_monotone_game,
    random_subset_free_form,
    random_tree_form,
)

__all__ = [
    "BadConfiguration", "find_bad_configuration", "is_tree_representable",
    "iter_bad_configurations",
    "RTree", "build_r_tree", "induced_strategies", "verify_representation",
    "iter_subset_free_forms", "random_game", "random_monotone_game",
    "random_subset_free_form", "random_tree_form",
]

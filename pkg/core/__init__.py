"""
core — 精确有理数拥塞博弈模型

用法:
    from core import GameForm, CongestionGame, utility, best_response_set
"""

from .errors import (
    GameError,
    PreconditionError,
    InvalidGameError,
    InvalidProfileError,
    InvalidTieError,
    NotRepresentableError,
    TheoremViolationError,
    RepresentationBugError,
    GameFileError,
)
from .model import (
    DEFAULT_MAX_RESOURCES,
    CanonicalProfile,
    CongestionGame,
    CongestionVector,
    GameForm,
    PayoffTable,
    ResourceId,
    Strategy,
    StrategyProfile,
    default_resource_names,
    mask_indices,
    mask_of,
    popcount,
    profile_label,
    validate_profile,
)
from .payoffs import (
    background_without,
    best_response_set,
    canonicalize,
    congestion_vector,
    deviation_utility,
    is_monotone,
    is_single_signed,
    is_subset_free,
    reduce_to_subset_free,
    rosenthal_potential,
    strategy_value,
    utilities,
    utility,
    utility_matrix,
)
from .rational import format_rational, parse_rational

__all__ = [
    "GameError", "PreconditionError", "InvalidGameError", "InvalidProfileError",
    "InvalidTieError", "NotRepresentableError", "TheoremViolationError",
    "RepresentationBugError", "GameFileError",
    "DEFAULT_MAX_RESOURCES", "CanonicalProfile", "CongestionGame", "CongestionVector",
    "GameForm", "PayoffTable", "ResourceId", "Strategy", "StrategyProfile",
    "default_resource_names", "mask_indices", "mask_of", "popcount",
    "profile_label", "validate_profile",
    "background_without", "best_response_set", "canonicalize", "congestion_vector",
    "deviation_utility", "is_monotone", "is_single_signed", "is_subset_free",
    "reduce_to_subset_free", "rosenthal_potential", "strategy_value",
    "utilities", "utility", "utility_matrix",
    "format_rational", "parse_rational",
]

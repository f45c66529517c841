from .templates import ScaleConstant, negative_game, role_table, triangle_game, two_layer_game
from .counterexample import (
    DEFAULT_SEARCH_SEEDS,
    SEARCH_PLAYERS,
    ConstructionCase,
    CounterexampleCertificate,
    WitnessSide,
    check_roles,
    synthesize_counterexample,
    validate_certificate,
)

__all__ = [
    "ScaleConstant", "negative_game", "role_table", "triangle_game", "two_layer_game",
    "DEFAULT_SEARCH_SEEDS", "SEARCH_PLAYERS",
    "ConstructionCase", "CounterexampleCertificate", "WitnessSide",
    "check_roles", "synthesize_counterexample", "validate_certificate",
]

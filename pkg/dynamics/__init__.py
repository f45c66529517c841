from .greedy import (
    ArrivalOrder,
    TieBreak,
    TiePolicy,
    greedy_certificates,
    greedy_enumerate,
    greedy_run,
    is_greedy_profile,
)
from .response import (
    DynamicsStep,
    DynamicsTrace,
    MoverPolicy,
    ResponseMode,
    default_max_steps,
    response_dynamics,
)
from .peeling import extract_greedy_order

__all__ = [
    "ArrivalOrder", "TieBreak", "TiePolicy",
    "greedy_certificates", "greedy_enumerate", "greedy_run", "is_greedy_profile",
    "DynamicsStep", "DynamicsTrace", "MoverPolicy", "ResponseMode",
    "default_max_steps", "response_dynamics",
    "extract_greedy_order",
]

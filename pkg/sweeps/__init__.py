from .runner import (
    SWEEP_NAMES,
    SweepResult,
    TheoremSweep,
    run_all,
    run_necessity,
    run_potential,
    run_recognition,
    run_sufficiency,
)

__all__ = [
    "SWEEP_NAMES", "SweepResult", "TheoremSweep", "run_all",
    "run_necessity", "run_potential", "run_recognition", "run_sufficiency",
]

from .branch_bound import remainder_lower_bound, solve_branch_and_bound
from .brute import solve_brute_force
from .dispatch import SolverConfig, solve
from .result import CapExceededError, Method, SolverRefusal, SolveResult
from .transfer import (
    INF,
    TransferSystem,
    build_transfer_system,
    cyclic_walk,
    min_plus_power,
    min_plus_product,
    solve_profile_dp,
)

__all__ = [
    "INF",
    "CapExceededError",
    "Method",
    "SolveResult",
    "SolverConfig",
    "SolverRefusal",
    "TransferSystem",
    "build_transfer_system",
    "cyclic_walk",
    "min_plus_power",
    "min_plus_product",
    "remainder_lower_bound",
    "solve",
    "solve_branch_and_bound",
    "solve_brute_force",
    "solve_profile_dp",
]

"""Exact Pareto front enumeration for monotone feasibility oracles.

Given a finite integer grid and a yes/no feasibility callable that can only
flip from no to yes as coordinates grow, this package enumerates every
minimal feasible point (the Pareto front) and every maximal infeasible point
(the co-Pareto front), keeping the number of oracle calls within
p * (sum_i ceil(log2 D_i) + 1) + psi, where p and psi are the sizes of the
two fronts and D_i the per-dimension value counts.
"""

from .bruteforce import (
    GRID_GUARD,
    BruteForceResult,
    GridTooLargeError,
    RandomInstanceSpec,
    bound_value,
    brute_force_fronts,
    random_monotone_instance,
)
from .enumerator import (
    CoParetoPointFound,
    Done,
    Enumeration,
    EnumerationResult,
    Event,
    ParetoPointFound,
    SelectionStrategy,
    enumerate_front,
    expand_frontier,
    search_pareto_point,
)
from .grid import (
    Point,
    SearchSpace,
    is_antichain,
    leq,
    maximal_elements,
    minimal_elements,
)
from .oracles import (
    ConeUnionOracle,
    CountingOracle,
    ExternalProcessOracle,
    FeasibilityOracle,
    MonotonicityGuard,
    NegativeCacheOracle,
    NonMonotoneOracleError,
    OracleError,
    OracleStats,
    WeightedThresholdOracle,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceResult",
    "CoParetoPointFound",
    "ConeUnionOracle",
    "CountingOracle",
    "Done",
    "Enumeration",
    "EnumerationResult",
    "Event",
    "ExternalProcessOracle",
    "FeasibilityOracle",
    "GRID_GUARD",
    "GridTooLargeError",
    "MonotonicityGuard",
    "NegativeCacheOracle",
    "NonMonotoneOracleError",
    "OracleError",
    "OracleStats",
    "ParetoPointFound",
    "Point",
    "RandomInstanceSpec",
    "SearchSpace",
    "SelectionStrategy",
    "WeightedThresholdOracle",
    "bound_value",
    "brute_force_fronts",
    "enumerate_front",
    "expand_frontier",
    "is_antichain",
    "leq",
    "maximal_elements",
    "minimal_elements",
    "random_monotone_instance",
    "search_pareto_point",
]

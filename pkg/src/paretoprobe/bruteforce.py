"""Independent verification tools: exhaustive front computation by direct
definition, random monotone instance generation, and the call-budget
formula the enumerator is held to."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .grid import Point, SearchSpace, minimal_elements
from .oracles import ConeUnionOracle, FeasibilityOracle

GRID_GUARD = 10**6


class GridTooLargeError(ValueError):
    """The grid is beyond what exhaustive evaluation is allowed to attempt."""

    def __init__(self, size: int, guard: int = GRID_GUARD):
        super().__init__(f"grid has {size} points, over the brute-force guard of {guard}")
        self.size = size
        self.guard = guard


@dataclass(frozen=True)
class BruteForceResult:
    """Fronts computed definitionally from a full sweep of the grid."""

    front: tuple[Point, ...]
    co_front: tuple[Point, ...]
    grid_size: int


def brute_force_fronts(space: SearchSpace, oracle: FeasibilityOracle) -> BruteForceResult:
    """Compute both fronts by evaluating the oracle once on every grid point.

    front:    feasible points with no feasible point strictly below them.
    co_front: infeasible points with every strictly greater point feasible.

    The two "for all points below/above" conditions are evaluated exactly,
    by dynamic programming over the memo table rather than by rescanning;
    monotonicity of the oracle is NOT assumed anywhere, which is what makes
    this a trustworthy reference for the enumerator.
    """
    if space.size > GRID_GUARD:
        raise GridTooLargeError(space.size)
    pts = list(space.points())
    value = {p: bool(oracle(p)) for p in pts}

    # feasible_leq[p]: some feasible point <= p. Lexicographic order makes
    # every predecessor p - e_i available before p itself.
    feasible_leq: dict[Point, bool] = {}
    front = []
    for p in pts:
        below = False
        for i, c in enumerate(p):
            if c and feasible_leq[p[:i] + (c - 1,) + p[i + 1:]]:
                below = True
                break
        feasible_leq[p] = below or value[p]
        if value[p] and not below:
            front.append(p)

    # all_geq[p]: every point >= p (including p) is feasible; reverse sweep.
    all_geq: dict[Point, bool] = {}
    co_front = []
    for p in reversed(pts):
        above = True
        for i, c in enumerate(p):
            if c < space.bounds[i] and not all_geq[p[:i] + (c + 1,) + p[i + 1:]]:
                above = False
                break
        all_geq[p] = above and value[p]
        if above and not value[p]:
            co_front.append(p)

    return BruteForceResult(front=tuple(front), co_front=tuple(sorted(co_front)), grid_size=len(pts))


@dataclass(frozen=True)
class RandomInstanceSpec:
    """Recipe for a reproducible random monotone instance.

    The same spec always yields the same oracle (Mersenne Twister seeded
    with ``seed``). The realized Pareto front has at most
    ``target_front_size`` points, since dominated draws are pruned.
    """

    space: SearchSpace
    target_front_size: int
    seed: int

    def __post_init__(self) -> None:
        if self.target_front_size < 0:
            raise ValueError("target_front_size must be >= 0")


def random_monotone_instance(spec: RandomInstanceSpec) -> ConeUnionOracle:
    """Draw a random cone-union oracle whose front is its generator set.

    Draws target_front_size points uniformly and keeps the minimal ones, so
    the generators form an anti-chain and the oracle's Pareto front equals
    them exactly. A target of 0 yields the nothing-is-feasible oracle.
    """
    if spec.target_front_size == 0:
        return ConeUnionOracle(())
    rng = random.Random(spec.seed)
    bounds = spec.space.bounds
    while True:
        draws = [tuple(rng.randint(0, n) for n in bounds) for _ in range(spec.target_front_size)]
        generators = minimal_elements(draws)
        if generators:
            return ConeUnionOracle(tuple(sorted(generators)))


def bound_value(space: SearchSpace, p: int, psi: int) -> int:
    """Worst-case oracle calls to enumerate a front of size p with psi co-Pareto points.

    Each of the p found points costs one hit on a frontier point plus one
    binary search per dimension, ceil(log2 D_i) calls each; each co-Pareto
    point costs exactly one certifying call.
    """
    per_point = sum((d - 1).bit_length() for d in space.domain_sizes) + 1
    return p * per_point + psi

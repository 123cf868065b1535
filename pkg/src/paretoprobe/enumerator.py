"""Pareto front enumeration over a monotone feasibility oracle.

The loop maintains a frontier: the maximal points of the part of the grid
that may still hold undiscovered Pareto points. Each iteration probes one
frontier point. A false answer retires it as a co-Pareto point. A true
answer means a Pareto point lives at or below it; a per-dimension binary
search pins it down, and the frontier is reshaped so everything at or above
the new point is excluded while everything still worth exploring stays
covered. The region below the frontier strictly shrinks every iteration, so
the loop terminates even on a misbehaving oracle.

The enumeration is any-time: every Pareto point is reported the moment it
is found, and stopping early leaves a valid partial front.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Callable, Union

from .grid import Point, SearchSpace, leq, maximal_elements
from .oracles import (
    CountingOracle,
    FeasibilityOracle,
    MonotonicityGuard,
    NegativeCacheOracle,
    OracleError,
    OracleStats,
)


class SelectionStrategy(enum.Enum):
    """Rule for picking which frontier point to probe next.

    The choice never affects which fronts come out, only the order events
    are emitted in and how the oracle-call budget is spent along the way.
    """

    LEXICOGRAPHIC_MAX = "lexicographic-max"
    LEXICOGRAPHIC_MIN = "lexicographic-min"
    QUEUE_ORDER = "queue-order"

    def select(self, frontier: Sequence[Point]) -> Point:
        if self is SelectionStrategy.LEXICOGRAPHIC_MAX:
            return max(frontier)
        if self is SelectionStrategy.LEXICOGRAPHIC_MIN:
            return min(frontier)
        return frontier[0]  # queue order: oldest insertion first


@dataclass(frozen=True)
class ParetoPointFound:
    point: Point


@dataclass(frozen=True)
class CoParetoPointFound:
    point: Point


@dataclass(frozen=True)
class Done:
    pass


Event = Union[ParetoPointFound, CoParetoPointFound, Done]


@dataclass(frozen=True)
class EnumerationResult:
    """Both fronts plus the oracle-call statistics of the producing run.

    ``front`` holds the minimal feasible points (the Pareto front) and
    ``co_front`` the maximal infeasible points (the co-Pareto front), each
    sorted lexicographically. Both are anti-chains, and no front member is
    below-or-equal any co-front member.
    """

    front: tuple[Point, ...]
    co_front: tuple[Point, ...]
    stats: OracleStats


def search_pareto_point(start: Point, oracle: FeasibilityOracle) -> Point:
    """Walk a feasible point down to a Pareto point at or below it.

    Dimension by dimension, binary search for the least coordinate value
    that keeps the point feasible while the other coordinates stay fixed.
    After the last dimension no coordinate can be lowered without losing
    feasibility, which is exactly the Pareto property.

    The caller must have established that ``start`` is feasible; it is not
    re-checked. The top of each per-dimension range is known feasible and
    is never re-queried, so a search from point x costs at most
    sum_i ceil(log2(x_i + 1)) oracle calls.
    """
    coords = list(start)
    for i in range(len(coords)):
        lo = 0
        hi = coords[i] + 1
        while hi - lo > 1:
            mid = lo + (hi - lo - 1) // 2
            coords[i] = mid
            if oracle(tuple(coords)):
                hi = mid + 1
            else:
                lo = mid + 1
        coords[i] = lo
    return tuple(coords)


def expand_frontier(
    frontier: Sequence[Point],
    found: Point,
    known_false: Sequence[Point] = (),
) -> list[Point]:
    """Reshape the frontier around a newly found Pareto point.

    Frontier members incomparable to ``found`` survive as they are. A member
    at or above ``found`` is replaced by its k lowered copies, one per
    dimension i with found_i > 0, whose i-th coordinate drops to found_i - 1:
    any further Pareto point below that member must beat ``found`` in at
    least one dimension. Non-maximal points are then pruned so the result is
    again an anti-chain. Survivors keep their insertion order and new points
    append after them, which is what gives the queue strategy its FIFO
    behavior.

    ``known_false`` holds points the oracle already answered false on. A
    candidate strictly below one of them sits inside a cone already known to
    be infeasible, so it is dropped: probing it would spend a call learning
    nothing and would misreport the point as part of the co-Pareto front. A
    candidate exactly equal to a known false point stays, because it may
    itself be a co-Pareto point, which only the main loop certifies.
    """
    kept = []
    added = []
    for y in frontier:
        if not leq(found, y):
            kept.append(y)
        else:
            for i, c in enumerate(found):
                if c > 0:
                    added.append(y[:i] + (c - 1,) + y[i + 1:])
    alive = [
        z for z in kept + added
        if not any(z != f and leq(z, f) for f in known_false)
    ]
    return maximal_elements(alive)


class Enumeration:
    """One stepwise enumeration run.

    ``step()`` performs a single main-loop iteration and reports what
    happened, which makes the any-time behavior available without threads
    or callbacks; ``run()`` drives it to completion. Between steps the
    ``frontier``, ``front`` and ``co_front`` attributes are free to inspect.

    Unless disabled, the oracle is wrapped in a negative-result cache so a
    query below an already-failed point never reaches the user's oracle.
    The cache never changes answers, only inner call counts; the reported
    stats always count the algorithm's queries, above the cache.
    """

    def __init__(
        self,
        space: SearchSpace,
        oracle: FeasibilityOracle,
        strategy: SelectionStrategy | str = SelectionStrategy.LEXICOGRAPHIC_MAX,
        *,
        cache: bool = True,
        check_monotone: bool = False,
        trace: bool = True,
    ):
        self.space = space
        self.strategy = SelectionStrategy(strategy)
        stack: FeasibilityOracle = oracle
        if check_monotone:
            stack = MonotonicityGuard(stack)
        if cache:
            stack = NegativeCacheOracle(stack)
        self._counter = CountingOracle(stack, trace=trace)
        self.frontier: list[Point] = [space.top]
        self.front: list[Point] = []
        self.co_front: list[Point] = []
        # maximal points every answer so far proves infeasible; expansion
        # never re-admits anything strictly inside their cones
        self.known_false: list[Point] = []

    @property
    def stats(self) -> OracleStats:
        return self._counter.stats

    @property
    def done(self) -> bool:
        return not self.frontier

    def _query(self, point: Point) -> bool:
        answer = self._counter(point)
        if not answer:
            self.known_false = maximal_elements(self.known_false + [point])
        return answer

    def step(self) -> Event:
        """Probe one frontier point; report the Pareto or co-Pareto point found.

        Returns Done once the frontier is exhausted, meaning no part of the
        grid can still hold an unreported Pareto point.
        """
        if not self.frontier:
            return Done()
        x = self.strategy.select(self.frontier)
        if self._query(x):
            found = search_pareto_point(x, self._query)
            self.front.append(found)
            self.frontier = expand_frontier(self.frontier, found, self.known_false)
            return ParetoPointFound(found)
        self.frontier.remove(x)
        self.co_front.append(x)
        return CoParetoPointFound(x)

    def result(self) -> EnumerationResult:
        """Snapshot of everything found so far; complete once done."""
        return EnumerationResult(
            front=tuple(sorted(self.front)),
            co_front=tuple(sorted(self.co_front)),
            stats=self.stats.copy(),
        )

    def run(self, sink: Callable[[Event], None] | None = None) -> EnumerationResult:
        """Step to completion, pushing each found-point event to ``sink``.

        The terminal Done event is not delivered; returning is the signal.
        If the oracle fails mid-run the error propagates with the partial
        result attached as ``exc.partial_result``, so work done up to the
        failure is never lost.
        """
        try:
            while True:
                event = self.step()
                if isinstance(event, Done):
                    return self.result()
                if sink is not None:
                    sink(event)
        except OracleError as exc:
            exc.partial_result = self.result()
            raise


def enumerate_front(
    space: SearchSpace,
    oracle: FeasibilityOracle,
    strategy: SelectionStrategy | str = SelectionStrategy.LEXICOGRAPHIC_MAX,
    sink: Callable[[Event], None] | None = None,
    *,
    cache: bool = True,
    check_monotone: bool = False,
    trace: bool = True,
) -> EnumerationResult:
    """Enumerate the complete Pareto front and co-Pareto front of an oracle.

    Requires ``oracle`` to be monotone and deterministic over ``space``;
    pass check_monotone=True to have observed answers audited. The total
    number of oracle queries is at most
    p * (sum_i ceil(log2 D_i) + 1) + psi, where p and psi are the two front
    sizes and D_i the per-dimension value counts.
    """
    run = Enumeration(space, oracle, strategy, cache=cache, check_monotone=check_monotone, trace=trace)
    return run.run(sink)

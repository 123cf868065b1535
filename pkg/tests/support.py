"""Shared helpers: independent reference computations the tests check against.

Everything here deliberately avoids the package's own algorithmic paths:
fronts are recomputed definitionally point by point, maximal sets by a
one-line comprehension, and down-closure sizes by counting dominated grid
points with numpy.
"""

from __future__ import annotations

import random

import numpy as np

from paretoprobe import (
    Done,
    Enumeration,
    RandomInstanceSpec,
    SearchSpace,
    is_antichain,
    leq,
    random_monotone_instance,
)

GOLDEN_BOUNDS = (3, 3, 3)
GOLDEN_GENERATORS = ((2, 1, 1), (1, 2, 2))
GOLDEN_FRONT = {(1, 2, 2), (2, 1, 1)}
GOLDEN_CO_FRONT = {(0, 3, 3), (1, 1, 3), (1, 3, 1), (3, 0, 3), (3, 3, 0)}
# frontier contents after the first and second Pareto point, as traced
GOLDEN_FRONTIER_1 = {(0, 3, 3), (3, 1, 3), (3, 3, 1)}
GOLDEN_FRONTIER_2 = {(0, 3, 3), (1, 1, 3), (1, 3, 1), (3, 0, 3), (3, 3, 0)}


def naive_fronts(space, oracle):
    """Both fronts by the literal definition: a quadratic scan of the grid."""
    pts = list(space.points())
    value = {p: bool(oracle(p)) for p in pts}
    front = {
        x for x in pts
        if value[x] and not any(value[y] for y in pts if y != x and leq(y, x))
    }
    co_front = {
        x for x in pts
        if not value[x] and all(value[y] for y in pts if y != x and leq(x, y))
    }
    return front, co_front


def definitional_maximal(points):
    """Keep x iff no strictly greater member exists."""
    pts = set(points)
    return {x for x in pts if not any(x != y and leq(x, y) for y in pts)}


def definitional_minimal(points):
    pts = set(points)
    return {x for x in pts if not any(x != y and leq(y, x) for y in pts)}


def is_monotone_on(space, oracle) -> bool:
    """Neighbor check: no feasible point with an infeasible successor."""
    for p in space.points():
        if not oracle(p):
            continue
        for i, c in enumerate(p):
            if c < space.bounds[i] and not oracle(p[:i] + (c + 1,) + p[i + 1:]):
                return False
    return True


def down_closure_size(space, points) -> int:
    """Grid points at or below some member, counted by brute broadcasting."""
    members = sorted(set(points))
    if not members:
        return 0
    grid = np.array(list(space.points()), dtype=np.int64)
    ms = np.array(members, dtype=np.int64)
    total = 0
    for start in range(0, len(grid), 65536):
        block = grid[start:start + 65536]
        total += int((block[:, None, :] <= ms[None, :, :]).all(-1).any(-1).sum())
    return total


def first_true_below_violation(trace):
    """Lemma-4 style check: a query at or above an earlier true answer.

    Returns (earlier_true_point, offending_query) or None. Keeps only the
    minimal true points seen so far; any violation involves one of them.
    """
    minimal_true = []
    for point, answer in trace:
        for t in minimal_true:
            if leq(t, point):
                return (t, point)
        if answer:
            minimal_true = [t for t in minimal_true if not leq(point, t)] + [point]
    return None


def first_query_below_false_violation(trace):
    """Cache-property check: a query at or below an earlier false answer.

    Returns (earlier_false_point, offending_query) or None.
    """
    maximal_false = []
    for point, answer in trace:
        for f in maximal_false:
            if leq(point, f):
                return (f, point)
        if not answer:
            maximal_false = [f for f in maximal_false if not leq(f, point)] + [point]
    return None


def run_with_lemma_checks(space, oracle, strategy="lexicographic-max", cache=True,
                          check_down_closure=True):
    """Drive a run step by step, asserting the loop invariants after each step.

    Checks after every step: frontier and front are disjoint and their union
    is an anti-chain; optionally, that the number of grid points at or below
    the frontier strictly shrank. Returns (enumeration, events).
    """
    enum = Enumeration(space, oracle, strategy, cache=cache, trace=True)
    events = []
    closure = down_closure_size(space, enum.frontier) if check_down_closure else None
    while True:
        event = enum.step()
        if isinstance(event, Done):
            break
        events.append(event)
        combined = list(enum.frontier) + list(enum.front)
        assert len(set(combined)) == len(combined), "frontier and front overlap"
        assert is_antichain(combined), "frontier + front is not an anti-chain"
        assert not (set(enum.frontier) & set(enum.co_front)), "co-front point still on frontier"
        if check_down_closure:
            new_closure = down_closure_size(space, enum.frontier)
            assert new_closure < closure, (
                f"down-closure did not shrink: {closure} -> {new_closure}"
            )
            closure = new_closure
    violation = first_true_below_violation(enum.stats.trace)
    assert violation is None, f"query above an earlier true answer: {violation}"
    return enum, events


def instance_pool(count, base_seed=20260810, max_k=4, max_bound=8, max_front=12):
    """Reproducible random instances: (space, oracle) pairs of varied shape."""
    instances = []
    for index in range(count):
        rng = random.Random(base_seed + index)
        k = rng.randint(1, max_k)
        bounds = tuple(rng.randint(0, max_bound) for _ in range(k))
        target = rng.randint(0, max_front)
        space = SearchSpace(bounds)
        oracle = random_monotone_instance(RandomInstanceSpec(space, target, seed=base_seed ^ index))
        instances.append((space, oracle))
    return instances

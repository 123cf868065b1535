"""Integer grid geometry: points, search spaces, and the dominance order.

A point is a plain tuple of non-negative ints, one coordinate per objective.
Dominance is the component-wise order under the minimization convention:
``a`` dominates-or-equals ``b`` when every coordinate of ``a`` is at most the
matching coordinate of ``b``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

Point = tuple[int, ...]


def leq(a: Point, b: Point) -> bool:
    """Component-wise order: true iff a_i <= b_i in every dimension."""
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: point {a!r} has {len(a)} coordinates, {b!r} has {len(b)}")
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class SearchSpace:
    """The finite grid {0..n_1} x ... x {0..n_k}.

    ``bounds`` holds the inclusive per-dimension maxima (n_1, ..., n_k), so
    dimension i ranges over n_i + 1 values. Dimensions may have different
    sizes; a bound of 0 means the dimension is a single fixed value.
    """

    bounds: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.bounds, tuple):
            object.__setattr__(self, "bounds", tuple(self.bounds))
        if len(self.bounds) < 1:
            raise ValueError("a search space needs at least one dimension")
        for i, n in enumerate(self.bounds):
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise ValueError(f"bound for dimension {i} must be a non-negative integer, got {n!r}")

    @property
    def arity(self) -> int:
        return len(self.bounds)

    @property
    def top(self) -> Point:
        """The greatest grid point (n_1, ..., n_k); every point is below it."""
        return self.bounds

    @property
    def origin(self) -> Point:
        return (0,) * self.arity

    @property
    def domain_sizes(self) -> tuple[int, ...]:
        """Number of values per dimension, n_i + 1."""
        return tuple(n + 1 for n in self.bounds)

    @property
    def size(self) -> int:
        """Total number of grid points."""
        return math.prod(self.domain_sizes)

    def contains(self, point: Point) -> bool:
        return len(point) == self.arity and all(0 <= c <= n for c, n in zip(point, self.bounds))

    def points(self) -> Iterator[Point]:
        """All grid points in ascending lexicographic order."""
        return itertools.product(*(range(n + 1) for n in self.bounds))


def is_antichain(points: Iterable[Point]) -> bool:
    """True iff no two distinct members are comparable under leq."""
    pts = list(dict.fromkeys(points))
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            if leq(a, b) or leq(b, a):
                return False
    return True


def maximal_elements(points: Iterable[Point]) -> list[Point]:
    """The members with no strictly greater member; always an anti-chain.

    Duplicates collapse, and survivors keep their first-occurrence order, so
    the result is deterministic for any deterministic input order. Every
    input point is below-or-equal some survivor.
    """
    pts = list(dict.fromkeys(points))
    keep = []
    for a in pts:
        if not any(a != b and leq(a, b) for b in pts):
            keep.append(a)
    return keep


def minimal_elements(points: Iterable[Point]) -> list[Point]:
    """The members with no strictly smaller member; dual of maximal_elements."""
    pts = list(dict.fromkeys(points))
    keep = []
    for a in pts:
        if not any(a != b and leq(b, a) for b in pts):
            keep.append(a)
    return keep

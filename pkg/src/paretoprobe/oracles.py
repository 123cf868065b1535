"""Feasibility oracles and instrumentation wrappers.

An oracle is any callable mapping a grid point to a bool. The enumerator
relies on two contract obligations, which none of the wrappers can create
for you:

* deterministic: asking the same point twice gives the same answer;
* monotone: if a point is feasible, every point above it is feasible too.

``MonotonicityGuard`` spot-checks the second obligation against the answers
actually observed. ``NegativeCacheOracle`` exploits it to answer queries
below a known-infeasible point without consulting the inner oracle.
"""

from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .grid import Point, leq, maximal_elements, minimal_elements

FeasibilityOracle = Callable[[Point], bool]


class OracleError(Exception):
    """An oracle could not produce an answer for a query point."""

    def __init__(self, message: str, point: Point | None = None):
        super().__init__(message)
        self.point = point


class NonMonotoneOracleError(OracleError):
    """Observed answers contradict the monotonicity contract."""

    def __init__(self, point: Point, answer: bool, witness: Point):
        if answer:
            detail = f"f{point} = true contradicts the earlier answer f{witness} = false, and {point} <= {witness}"
        else:
            detail = f"f{point} = false contradicts the earlier answer f{witness} = true, and {witness} <= {point}"
        super().__init__(f"oracle is not monotone: {detail}", point)
        self.answer = answer
        self.witness = witness


@dataclass(frozen=True)
class ConeUnionOracle:
    """Feasible iff the point lies above-or-at one of the generator points.

    The feasible region is the union of the upward cones of the generators,
    so the oracle is monotone by construction. When the generators form an
    anti-chain they are exactly the minimal feasible points, i.e. the Pareto
    front realized by this oracle. No generators means nothing is feasible.
    """

    generators: tuple[Point, ...]

    def __post_init__(self) -> None:
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        arities = {len(g) for g in gens}
        if len(arities) > 1:
            raise ValueError(f"generators have mixed arities {sorted(arities)}")
        for g in gens:
            if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in g):
                raise ValueError(f"generator {g!r} has a non-integer or negative coordinate")

    def __call__(self, point: Point) -> bool:
        return any(leq(g, point) for g in self.generators)


@dataclass(frozen=True)
class WeightedThresholdOracle:
    """Feasible iff the weighted coordinate sum reaches the threshold.

    Monotone because all weights are non-negative.
    """

    weights: tuple[int, ...]
    threshold: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if any(not isinstance(w, int) or isinstance(w, bool) or w < 0 for w in self.weights):
            raise ValueError(f"weights must be non-negative integers, got {self.weights!r}")

    def __call__(self, point: Point) -> bool:
        if len(point) != len(self.weights):
            raise ValueError(f"arity mismatch: point {point!r} vs {len(self.weights)} weights")
        return sum(w * c for w, c in zip(self.weights, point)) >= self.threshold


@dataclass
class OracleStats:
    """Call counters, plus the per-call trace when tracing is enabled."""

    total_calls: int = 0
    true_calls: int = 0
    false_calls: int = 0
    trace: list[tuple[Point, bool]] | None = None

    def record(self, point: Point, answer: bool) -> None:
        self.total_calls += 1
        if answer:
            self.true_calls += 1
        else:
            self.false_calls += 1
        if self.trace is not None:
            self.trace.append((point, answer))

    def copy(self) -> "OracleStats":
        return OracleStats(
            total_calls=self.total_calls,
            true_calls=self.true_calls,
            false_calls=self.false_calls,
            trace=None if self.trace is None else list(self.trace),
        )


class CountingOracle:
    """Transparent wrapper that counts calls and optionally records them."""

    def __init__(self, inner: FeasibilityOracle, trace: bool = False):
        self.inner = inner
        self.stats = OracleStats(trace=[] if trace else None)

    def __call__(self, point: Point) -> bool:
        answer = bool(self.inner(point))
        self.stats.record(point, answer)
        return answer


class NegativeCacheOracle:
    """Answers known-infeasible queries without consulting the inner oracle.

    Keeps only the maximal points the inner oracle answered false on; that
    anti-chain implies the answer for everything below it. Positive answers
    always come from the inner oracle, and for a monotone inner oracle the
    wrapper is answer-transparent: it changes call counts, never answers.
    """

    def __init__(self, inner: FeasibilityOracle):
        self.inner = inner
        self.infeasible_frontier: list[Point] = []

    def is_known_infeasible(self, point: Point) -> bool:
        return any(leq(point, x) for x in self.infeasible_frontier)

    def insert(self, point: Point) -> None:
        """Record a point the inner oracle answered false on."""
        self.infeasible_frontier = maximal_elements(self.infeasible_frontier + [point])

    def __call__(self, point: Point) -> bool:
        if self.is_known_infeasible(point):
            return False
        answer = bool(self.inner(point))
        if not answer:
            self.insert(point)
        return answer


class MonotonicityGuard:
    """Debug wrapper that cross-checks every answer against past answers.

    Retains only the maximal false and minimal true points seen so far;
    any new contradiction must involve one of those. Opt-in, since the
    witness sets grow with the query history.
    """

    def __init__(self, inner: FeasibilityOracle):
        self.inner = inner
        self.maximal_false: list[Point] = []
        self.minimal_true: list[Point] = []

    def check(self, point: Point, answer: bool) -> Point | None:
        """Return a recorded witness contradicting (point, answer), if any."""
        if answer:
            for y in self.maximal_false:
                if leq(point, y):
                    return y
        else:
            for y in self.minimal_true:
                if leq(y, point):
                    return y
        return None

    def observe(self, point: Point, answer: bool) -> None:
        """Validate one answer and add it to the witness sets."""
        witness = self.check(point, answer)
        if witness is not None:
            raise NonMonotoneOracleError(point, answer, witness)
        if answer:
            self.minimal_true = minimal_elements(self.minimal_true + [point])
        else:
            self.maximal_false = maximal_elements(self.maximal_false + [point])

    def __call__(self, point: Point) -> bool:
        answer = bool(self.inner(point))
        self.observe(point, answer)
        return answer


class ExternalProcessOracle:
    """Queries a child process over a line protocol on stdin/stdout.

    For each query the parent writes the coordinates as base-10 integers
    separated by single spaces, terminated by one line feed. The child must
    reply with a single line containing exactly ``1`` (feasible) or ``0``
    (infeasible). One child serves every query of a run; closing stdin tells
    it to finish. Any other reply, or a child exit before replying, raises
    OracleError carrying the offending point.
    """

    def __init__(self, command: str | Sequence[str]):
        argv = shlex.split(command) if isinstance(command, str) else [str(a) for a in command]
        if not argv:
            raise ValueError("external oracle command is empty")
        self.command = argv
        try:
            self._proc = subprocess.Popen(
                argv,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise OracleError(f"cannot start external oracle {argv!r}: {exc}") from exc

    def __call__(self, point: Point) -> bool:
        line = " ".join(str(c) for c in point) + "\n"
        try:
            self._proc.stdin.write(line)
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise OracleError(
                f"external oracle stopped accepting queries at point {point}: {exc}", point
            ) from exc
        reply = self._proc.stdout.readline()
        if reply == "":
            code = self._proc.poll()
            raise OracleError(
                f"external oracle exited before replying to point {point} (exit code {code})", point
            )
        reply = reply.rstrip("\r\n")
        if reply == "1":
            return True
        if reply == "0":
            return False
        raise OracleError(
            f"external oracle replied {reply!r} to point {point}, expected '1' or '0'", point
        )

    def close(self) -> None:
        """Close the child's stdin and reap it; safe to call twice."""
        proc = self._proc
        if proc.stdin and not proc.stdin.closed:
            try:
                proc.stdin.close()
            except OSError:
                pass
        try:
            proc.wait(timeout=5)
        except subprocess.TimeoutExpired:
            proc.kill()
            proc.wait()

    def __enter__(self) -> "ExternalProcessOracle":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

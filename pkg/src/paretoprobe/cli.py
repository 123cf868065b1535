"""Command-line front end.

``run`` streams enumeration events as JSON lines, one record per line, so a
consumer can stop reading at any moment and still hold a valid partial
front. ``verify`` replays an instance through both the enumerator and the
exhaustive reference and reports whether they agree and whether the call
budget held.

Exit codes: 0 success, 1 malformed input or failed verification, 2 oracle
failure (partial results already streamed), 3 monotonicity violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .bruteforce import (
    GRID_GUARD,
    RandomInstanceSpec,
    bound_value,
    brute_force_fronts,
    random_monotone_instance,
)
from .enumerator import (
    CoParetoPointFound,
    Enumeration,
    ParetoPointFound,
    SelectionStrategy,
)
from .grid import SearchSpace
from .oracles import (
    ConeUnionOracle,
    ExternalProcessOracle,
    NonMonotoneOracleError,
    OracleError,
    WeightedThresholdOracle,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ORACLE_FAILURE = 2
EXIT_NON_MONOTONE = 3

ORACLE_KINDS = ("cone", "threshold", "external")
STRATEGY_NAMES = tuple(s.value for s in SelectionStrategy)


class ProblemFormatError(ValueError):
    """A problem description is malformed; the message names the field."""


@dataclass
class Problem:
    space: SearchSpace
    oracle_kind: str
    generators: tuple[tuple[int, ...], ...] = ()
    weights: tuple[int, ...] = ()
    threshold: int = 0
    command: Sequence[str] | str = ()
    strategy: str = SelectionStrategy.LEXICOGRAPHIC_MAX.value
    cache: bool = True

    def build_oracle(self):
        """Instantiate the oracle; ExternalProcessOracle must be closed by the caller."""
        if self.oracle_kind == "cone":
            return ConeUnionOracle(self.generators)
        if self.oracle_kind == "threshold":
            return WeightedThresholdOracle(self.weights, self.threshold)
        return ExternalProcessOracle(self.command)


def _require_int(value, field: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ProblemFormatError(f"'{field}' must be an integer, got {value!r}")
    return value


def _parse_bounds(raw, field: str = "bounds") -> tuple[int, ...]:
    if not isinstance(raw, (list, tuple)) or len(raw) == 0:
        raise ProblemFormatError(f"'{field}' must be a non-empty list of integers")
    bounds = tuple(_require_int(v, field) for v in raw)
    if any(v < 0 for v in bounds):
        raise ProblemFormatError(f"'{field}' entries must be >= 0, got {list(bounds)}")
    return bounds


def _parse_points(raw, field: str, arity: int) -> tuple[tuple[int, ...], ...]:
    if not isinstance(raw, (list, tuple)):
        raise ProblemFormatError(f"'{field}' must be a list of points")
    points = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, (list, tuple)):
            raise ProblemFormatError(f"'{field}[{idx}]' must be a list of integers")
        point = tuple(_require_int(v, f"{field}[{idx}]") for v in entry)
        if len(point) != arity:
            raise ProblemFormatError(
                f"'{field}[{idx}]' has {len(point)} coordinates, expected {arity}"
            )
        if any(v < 0 for v in point):
            raise ProblemFormatError(f"'{field}[{idx}]' coordinates must be >= 0")
        points.append(point)
    return tuple(points)


def problem_from_dict(doc) -> Problem:
    """Validate a problem description; error messages name the bad field."""
    if not isinstance(doc, dict):
        raise ProblemFormatError("problem document must be an object")
    if "bounds" not in doc:
        raise ProblemFormatError("'bounds' is required")
    space = SearchSpace(_parse_bounds(doc["bounds"]))

    oracle = doc.get("oracle")
    if not isinstance(oracle, dict):
        raise ProblemFormatError("'oracle' must be an object with a 'kind'")
    kind = oracle.get("kind")
    if kind not in ORACLE_KINDS:
        raise ProblemFormatError(f"'oracle.kind' must be one of {list(ORACLE_KINDS)}, got {kind!r}")

    problem = Problem(space=space, oracle_kind=kind)
    if kind == "cone":
        problem.generators = _parse_points(
            oracle.get("generators", []), "oracle.generators", space.arity
        )
        for idx, g in enumerate(problem.generators):
            if not space.contains(g):
                raise ProblemFormatError(f"'oracle.generators[{idx}]' {list(g)} is outside the bounds")
    elif kind == "threshold":
        if "weights" not in oracle:
            raise ProblemFormatError("'oracle.weights' is required for kind 'threshold'")
        weights = oracle["weights"]
        if not isinstance(weights, (list, tuple)):
            raise ProblemFormatError("'oracle.weights' must be a list of integers")
        problem.weights = tuple(_require_int(v, "oracle.weights") for v in weights)
        if len(problem.weights) != space.arity:
            raise ProblemFormatError(
                f"'oracle.weights' has {len(problem.weights)} entries, expected {space.arity}"
            )
        if any(w < 0 for w in problem.weights):
            raise ProblemFormatError("'oracle.weights' entries must be >= 0")
        problem.threshold = _require_int(oracle.get("threshold", 0), "oracle.threshold")
    else:
        command = oracle.get("command")
        if isinstance(command, str):
            if not command.strip():
                raise ProblemFormatError("'oracle.command' must not be empty")
        elif isinstance(command, (list, tuple)):
            if not command or not all(isinstance(a, str) for a in command):
                raise ProblemFormatError("'oracle.command' must be a non-empty list of strings")
        else:
            raise ProblemFormatError("'oracle.command' must be a string or list of strings")
        problem.command = command

    strategy = doc.get("strategy", SelectionStrategy.LEXICOGRAPHIC_MAX.value)
    if strategy not in STRATEGY_NAMES:
        raise ProblemFormatError(f"'strategy' must be one of {list(STRATEGY_NAMES)}, got {strategy!r}")
    problem.strategy = strategy

    cache = doc.get("cache", True)
    if not isinstance(cache, bool):
        raise ProblemFormatError(f"'cache' must be a boolean, got {cache!r}")
    problem.cache = cache
    return problem


def load_problem(path: str) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ProblemFormatError(f"cannot read problem file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"problem file is not valid JSON: {exc}") from exc
    return problem_from_dict(doc)


def _parse_inline_point_list(raw: str, field: str) -> list[list[int]]:
    # "2,1,1;1,2,2" -> [[2,1,1],[1,2,2]]; empty string means no points
    points = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            points.append([int(tok) for tok in chunk.split(",")])
        except ValueError as exc:
            raise ProblemFormatError(f"'{field}': cannot parse point {chunk!r}: {exc}") from exc
    return points


def problem_from_args(args) -> Problem:
    """Build the problem from --problem or from the inline oracle flags."""
    if args.problem:
        problem = load_problem(args.problem)
    else:
        if args.bounds is None:
            raise ProblemFormatError("'bounds' is required (--problem or --bounds)")
        if args.oracle is None:
            raise ProblemFormatError("'oracle.kind' is required (--oracle with --bounds)")
        try:
            bounds = [int(tok) for tok in args.bounds.split(",") if tok.strip()]
        except ValueError as exc:
            raise ProblemFormatError(f"'bounds': cannot parse {args.bounds!r}: {exc}") from exc
        doc = {"bounds": bounds, "oracle": {"kind": args.oracle}}
        if args.oracle == "cone":
            doc["oracle"]["generators"] = _parse_inline_point_list(args.generators or "", "oracle.generators")
        elif args.oracle == "threshold":
            if args.weights is None:
                raise ProblemFormatError("'oracle.weights' is required (--weights)")
            doc["oracle"]["weights"] = _parse_inline_point_list(args.weights, "oracle.weights")[0]
            doc["oracle"]["threshold"] = args.threshold
        else:
            if not args.command:
                raise ProblemFormatError("'oracle.command' is required (--command)")
            doc["oracle"]["command"] = args.command
        problem = problem_from_dict(doc)
    if args.strategy:
        problem.strategy = args.strategy
    if args.no_cache:
        problem.cache = False
    return problem


def _parse_random_spec(tokens: Sequence[str], default_seed: int) -> Problem:
    values = {}
    for token in tokens:
        key, sep, raw = token.partition("=")
        if not sep or key not in ("k", "n", "front", "seed"):
            raise ProblemFormatError(
                f"'--random': expected k=.. n=.. front=.. [seed=..], got {token!r}"
            )
        try:
            values[key] = int(raw)
        except ValueError as exc:
            raise ProblemFormatError(f"'--random {key}' must be an integer, got {raw!r}") from exc
    for key in ("k", "n", "front"):
        if key not in values:
            raise ProblemFormatError(f"'--random' is missing '{key}='")
    if values["k"] < 1:
        raise ProblemFormatError("'--random k' must be >= 1")
    if values["n"] < 0 or values["front"] < 0:
        raise ProblemFormatError("'--random n' and '--random front' must be >= 0")
    space = SearchSpace((values["n"],) * values["k"])
    seed = values.get("seed", default_seed)
    oracle = random_monotone_instance(RandomInstanceSpec(space, values["front"], seed))
    problem = Problem(space=space, oracle_kind="cone", generators=oracle.generators)
    return problem


def _emit(record: dict, out) -> None:
    out.write(json.dumps(record, separators=(",", ":")) + "\n")
    out.flush()


def _summary_record(space, result) -> dict:
    p = len(result.front)
    psi = len(result.co_front)
    bound = bound_value(space, p, psi)
    stats = result.stats
    return {
        "event": "summary",
        "p": p,
        "psi": psi,
        "total_calls": stats.total_calls,
        "true_calls": stats.true_calls,
        "false_calls": stats.false_calls,
        "bound": bound,
        "within_bound": stats.total_calls <= bound,
    }


def cmd_run(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        problem = problem_from_args(args)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE

    def sink(event) -> None:
        if isinstance(event, ParetoPointFound):
            _emit({"event": "pareto", "point": list(event.point)}, out)
        elif isinstance(event, CoParetoPointFound):
            _emit({"event": "co_pareto", "point": list(event.point)}, out)

    oracle = None
    try:
        oracle = problem.build_oracle()
        enumeration = Enumeration(
            problem.space,
            oracle,
            problem.strategy,
            cache=problem.cache,
            check_monotone=args.check_monotone,
            trace=True,
        )
        result = enumeration.run(sink)
    except NonMonotoneOracleError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_NON_MONOTONE
    except OracleError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ORACLE_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    finally:
        if isinstance(oracle, ExternalProcessOracle):
            oracle.close()

    summary = _summary_record(problem.space, result)
    if args.trace:
        summary["trace"] = [[list(point), answer] for point, answer in result.stats.trace]
    _emit(summary, out)
    return EXIT_OK


def cmd_verify(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if args.random:
            problem = _parse_random_spec(args.random, args.seed)
            if args.strategy:
                problem.strategy = args.strategy
            if args.no_cache:
                problem.cache = False
        else:
            problem = problem_from_args(args)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE

    if problem.space.size > GRID_GUARD:
        print(
            f"error: grid has {problem.space.size} points, over the brute-force guard of {GRID_GUARD}",
            file=err,
        )
        return EXIT_USAGE

    oracle = None
    try:
        oracle = problem.build_oracle()
        enumeration = Enumeration(
            problem.space,
            oracle,
            problem.strategy,
            cache=problem.cache,
            check_monotone=args.check_monotone,
            trace=False,
        )
        result = enumeration.run()
        reference = brute_force_fronts(problem.space, oracle)
    except NonMonotoneOracleError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_NON_MONOTONE
    except OracleError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ORACLE_FAILURE
    finally:
        if isinstance(oracle, ExternalProcessOracle):
            oracle.close()

    front_ok = set(result.front) == set(reference.front)
    co_ok = set(result.co_front) == set(reference.co_front)
    bound = bound_value(problem.space, len(result.front), len(result.co_front))
    bound_ok = result.stats.total_calls <= bound

    print(f"grid points: {reference.grid_size}", file=out)
    print(
        f"front: enumerated {len(result.front)}, brute force {len(reference.front)}: "
        f"{'EQUAL' if front_ok else 'DIFFERENT'}",
        file=out,
    )
    print(
        f"co-front: enumerated {len(result.co_front)}, brute force {len(reference.co_front)}: "
        f"{'EQUAL' if co_ok else 'DIFFERENT'}",
        file=out,
    )
    print(
        f"oracle calls: {result.stats.total_calls}, bound: {bound}: "
        f"{'WITHIN' if bound_ok else 'EXCEEDED'}",
        file=out,
    )
    verdict = front_ok and co_ok and bound_ok
    print(f"result: {'PASS' if verdict else 'FAIL'}", file=out)
    return EXIT_OK if verdict else EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for oracle failures
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common_flags(parser) -> None:
    parser.add_argument("--problem", metavar="PATH", help="problem file (JSON)")
    parser.add_argument("--bounds", metavar="N1,N2,..", help="inclusive per-dimension maxima")
    parser.add_argument("--oracle", choices=ORACLE_KINDS, help="inline oracle kind")
    parser.add_argument("--generators", metavar="PTS", help="cone generators, e.g. '2,1,1;1,2,2'")
    parser.add_argument("--weights", metavar="W1,W2,..", help="threshold oracle weights")
    parser.add_argument("--threshold", type=int, default=0, metavar="T", help="threshold value")
    parser.add_argument("--command", metavar="CMD", help="external oracle command line")
    parser.add_argument("--strategy", choices=STRATEGY_NAMES, help="frontier selection strategy")
    parser.add_argument("--no-cache", action="store_true", help="disable the negative-result cache")
    parser.add_argument("--check-monotone", action="store_true", help="audit answers for monotonicity")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paretoprobe", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="mode", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="enumerate and stream JSON records")
    _add_common_flags(run)
    run.add_argument("--trace", action="store_true", help="include the per-call trace in the summary")
    run.set_defaults(func=cmd_run)

    verify = sub.add_parser("verify", help="cross-check the enumerator against brute force")
    _add_common_flags(verify)
    verify.add_argument(
        "--random",
        nargs="+",
        metavar="KEY=VAL",
        help="random instance instead of a problem: k=3 n=5 front=4 [seed=7]",
    )
    verify.add_argument("--seed", type=int, default=0, metavar="U64", help="seed for --random")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse --help exits 0, usage errors exit 1
        return int(exc.code or 0)
    return args.func(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

"""Command-line front end: parse JSON instances, dispatch checkers, emit JSON.

Exit codes: 0 for PASS / found / no disagreement, 1 for FAIL / not found /
disagreement, 2 for usage or parse errors.  All output is a single JSON
document on stdout with sorted keys and fixed separators, so identical
invocations are byte-identical; --pretty trades that for readability.
+inf is spelled "inf" in instance files and output, since JSON has no
infinity literal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import axioms, exchange, oracle
from .bisubmod import INF, BisubFunction, check_bisubmodular, enumerate_integer_points
from .core import PointSet, _jsonable, as_signed_vector, zero
from .oracle import HarnessConfig, run_equivalence_harness


class CliError(ValueError):
    """Malformed input or arguments; reported on stderr with exit code 2."""


SET_CHECKERS = {
    "delta-exc": axioms.check_delta_exc,
    "bs-exc": axioms.check_bs_exc,
    "jump": axioms.check_jump_system,
    "hole-free": axioms.check_hole_free,
    "bs-convex": oracle.is_bs_convex,
}
FUNCTION_CHECKERS = {
    "bisubmodular": check_bisubmodular,
}


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CliError(f"{what} must be an integer, got {value!r}")
    return value


def load_instance(path: str):
    """Parse an instance file into a PointSet or a BisubFunction."""
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise CliError("instance file must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("set", "function"):
        raise CliError('instance "kind" must be "set" or "function"')
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise CliError('"dim" must be a positive integer')
    if kind == "set":
        points = doc.get("points")
        if not isinstance(points, list):
            raise CliError('"points" must be a list of integer vectors')
        for p in points:
            if not isinstance(p, list) or len(p) != dim:
                raise CliError(f"point {p!r} is not a length-{dim} list")
            for e in p:
                _require_int(e, "point entry")
        return PointSet.from_points(dim, points)
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise CliError('"entries" must be a list of {"x": ..., "f": ...}')
    table = {}
    origin = zero(dim)
    for item in entries:
        if not isinstance(item, dict) or "x" not in item or "f" not in item:
            raise CliError(f'entry {item!r} needs keys "x" and "f"')
        raw_x = item["x"]
        if not isinstance(raw_x, list) or len(raw_x) != dim:
            raise CliError(f"argument {raw_x!r} is not a length-{dim} list")
        for e in raw_x:
            _require_int(e, "argument entry")
        try:
            x = as_signed_vector(raw_x)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if x in table:
            raise CliError(f"duplicate entry for argument {list(x)}")
        value = item["f"]
        if value == "inf":
            value = INF
        else:
            value = _require_int(value, f"value at {list(x)}")
        table[x] = value
    # The zero argument always maps to 0, whatever the file says.
    table.pop(origin, None)
    return BisubFunction.from_table(dim, table)


def _parse_point(text: str, dim: int) -> tuple:
    try:
        point = tuple(int(token) for token in text.split(","))
    except ValueError as exc:
        raise CliError(f"cannot parse point {text!r}") from exc
    if len(point) != dim:
        raise CliError(f"point {text!r} has {len(point)} entries, expected {dim}")
    return point


def emit(doc, pretty: bool, out: Optional[str] = None) -> None:
    if pretty:
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def cmd_check(args) -> int:
    instance = load_instance(args.file)
    if args.axiom in SET_CHECKERS:
        if not isinstance(instance, PointSet):
            raise CliError(f'axiom "{args.axiom}" needs a "set" instance')
        verdict = SET_CHECKERS[args.axiom](instance)
    else:
        if not isinstance(instance, BisubFunction):
            raise CliError(f'axiom "{args.axiom}" needs a "function" instance')
        verdict = FUNCTION_CHECKERS[args.axiom](instance)
    emit(verdict.to_jsonable(), args.pretty)
    return 0 if verdict.passed else 1


def cmd_decompose(args) -> int:
    instance = load_instance(args.file)
    if not isinstance(instance, PointSet):
        raise CliError("decompose needs a \"set\" instance")
    p = _parse_point(args.p, instance.dim)
    q = _parse_point(args.q, instance.dim)
    result = exchange.decompose(instance, p, q)
    if isinstance(result, exchange.Decomposition):
        steps = [{"step": list(step), "mult": mult}
                 for step, mult in result.multiplicities()]
        emit({"found": True, "p": list(p), "q": list(q), "steps": steps},
             args.pretty)
        return 0
    emit({"found": False, "p": list(p), "q": list(q),
          "reason": result.reason,
          "optimal_value": _jsonable(result.optimal_value)}, args.pretty)
    return 1


def cmd_enumerate(args) -> int:
    instance = load_instance(args.file)
    if not isinstance(instance, BisubFunction):
        raise CliError("enumerate needs a \"function\" instance")
    box = None
    if args.box is not None:
        try:
            lo, hi = (int(token) for token in args.box.split(","))
        except ValueError as exc:
            raise CliError(f"cannot parse box {args.box!r}; expected lo,hi") from exc
        box = ((lo,) * instance.dim, (hi,) * instance.dim)
    points = enumerate_integer_points(instance, box)
    emit([list(p) for p in points], args.pretty)
    return 0


def cmd_fuzz(args) -> int:
    if args.exhaustive:
        if args.range is None:
            raise CliError("--exhaustive requires --range")
        if args.count is not None:
            raise CliError("--count does not apply to --exhaustive")
        config = HarnessConfig(dim=args.dim, exhaustive_range=args.range)
    else:
        if args.count is None:
            raise CliError("random mode requires --count (or pass --exhaustive)")
        if args.range is not None:
            raise CliError("--range only applies to --exhaustive")
        config = HarnessConfig(dim=args.dim, random_count=args.count,
                               seed=args.seed, box_radius=args.box_radius,
                               density=args.density)
    report = run_equivalence_harness(config)
    emit(report.to_jsonable(), args.pretty, args.out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bspoly",
        description="Decide BS-convexity of finite integer point sets and "
                    "certify the equivalent exchange axioms.")
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--pretty", action="store_true",
                        help="indent the JSON output (not byte-stable)")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[shared],
                           help="run one checker on an instance file")
    check.add_argument("axiom",
                       choices=sorted(SET_CHECKERS) + sorted(FUNCTION_CHECKERS))
    check.add_argument("file")
    check.set_defaults(handler=cmd_check)

    decompose = sub.add_parser("decompose", parents=[shared],
                               help="find a half-step decomposition from p to q")
    decompose.add_argument("file")
    decompose.add_argument("--p", required=True, metavar="X,Y,...")
    decompose.add_argument("--q", required=True, metavar="X,Y,...")
    decompose.set_defaults(handler=cmd_decompose)

    enumerate_ = sub.add_parser("enumerate", parents=[shared],
                                help="list the integer points of a function's polyhedron")
    enumerate_.add_argument("file")
    enumerate_.add_argument("--box", metavar="LO,HI",
                            help="scalar bounds applied to every coordinate")
    enumerate_.set_defaults(handler=cmd_enumerate)

    fuzz = sub.add_parser("fuzz", parents=[shared],
                          help="run the five-checker equivalence harness")
    fuzz.add_argument("--dim", type=int, required=True)
    fuzz.add_argument("--exhaustive", action="store_true",
                      help="all nonempty subsets of the grid {0..range}^dim")
    fuzz.add_argument("--range", type=int, default=None)
    fuzz.add_argument("--count", type=int, default=None,
                      help="number of seeded random point sets")
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--box-radius", type=int, default=2)
    fuzz.add_argument("--density", type=float, default=0.5)
    fuzz.add_argument("--out", default=None,
                      help="write the report to this path instead of stdout")
    fuzz.set_defaults(handler=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

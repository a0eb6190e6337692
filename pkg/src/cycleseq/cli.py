"""Command line front end.

Subcommands map one-to-one onto the library: ``esa`` runs the Euclidean
construction, ``moments`` and ``verify`` analyze a given cycle, ``exact``
brute-forces small problems, ``bound`` prints the spacing lower bound,
``compare`` tabulates variance against per-pulse variance, and
``export-miqp`` writes the quadratic model as LP text.

Exit status: 0 on success, 1 on any validation or input error (one-line
diagnostic on stderr), 2 when a problem exceeds the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import Cycle, SequencingProblem, canonical_rotation, central_moment
from .core import mean, raw_moment, variance
from .exact import DEFAULT_CAP, CapExceeded, exact_min
from .metrics import compare_report, comparison_csv, comparison_json, comparison_table
from .miqp import build_model, write_lp
from .optimality import lower_bound, lower_bound_variance, verify_optimal
from .sequencer import esa_solve, render_trace_table, trace_to_json

__all__ = ["main"]


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 1 for bad usage, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


def _rational(value) -> str:
    return f"{value} ({float(value):g})"


def _parse_labels(text: str) -> tuple[str, ...]:
    labels = tuple(text.split(","))
    if len(labels) != 2:
        raise ValueError("--labels needs exactly two comma-separated labels")
    return labels


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_problem(path: str) -> SequencingProblem:
    return SequencingProblem.from_json_dict(_load_json(path))


def _load_cycle(source: str) -> Cycle:
    """A cycle argument is a JSON file path or an inline compact string."""
    if os.path.exists(source):
        return Cycle.from_json_dict(_load_json(source))
    return Cycle.from_string(source)


def _load_cycles(path: str, problem: SequencingProblem) -> list[Cycle]:
    """Cycles file: JSON array whose entries are label arrays or compact
    strings, all over the given problem."""
    doc = _load_json(path)
    if not isinstance(doc, list):
        raise ValueError("cycles file must hold a JSON array")
    cycles = []
    for entry in doc:
        if isinstance(entry, str):
            cycles.append(Cycle.from_compact(problem, entry))
        elif isinstance(entry, list):
            cycles.append(Cycle.from_labels(problem, entry))
        else:
            raise ValueError("cycle entries must be strings or label arrays")
    return cycles


def _rhythm(cycle: Cycle, pulse: int) -> str:
    return "".join("x" if k == pulse else "." for k in cycle.positions)


def cmd_esa(args) -> int:
    problem = SequencingProblem(_parse_labels(args.labels), (args.m1, args.m2))
    trace = esa_solve(problem)
    cycle = trace.result
    if args.canonical:
        cycle = canonical_rotation(cycle)
    if args.json:
        print(trace_to_json(trace))
        return 0
    if args.trace:
        print(render_trace_table(trace), end="")
    if args.rhythm:
        if args.pulse is not None:
            pulse = problem.index_of(args.pulse)
        else:
            # default pulse: the more abundant symbol, first on ties
            pulse = 0 if args.m1 >= args.m2 else 1
        print(_rhythm(cycle, pulse))
    else:
        print(cycle.to_compact())
    return 0


def cmd_moments(args) -> int:
    cycle = _load_cycle(args.cycle)
    problem = cycle.problem
    info = {
        "symbols": list(problem.symbols),
        "multiplicities": list(problem.multiplicities),
        "N": problem.total,
        "mean": mean(cycle),
        "variance": variance(cycle),
    }
    if args.order is not None:
        info[f"raw_moment[{args.order}]"] = raw_moment(cycle, args.order)
        info[f"central_moment[{args.order}]"] = central_moment(cycle, args.order)
    if args.json:
        doc = {
            k: (str(v) if not isinstance(v, (int, list)) else v)
            for k, v in info.items()
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(
        f"symbols: {','.join(problem.symbols)}  "
        f"multiplicities: {','.join(str(m) for m in problem.multiplicities)}  "
        f"N = {problem.total}"
    )
    print(f"mean = {_rational(info['mean'])}")
    print(f"variance = {_rational(info['variance'])}")
    if args.order is not None:
        p = args.order
        print(f"raw_moment[{p}] = {_rational(info[f'raw_moment[{p}]'])}")
        print(f"central_moment[{p}] = {_rational(info[f'central_moment[{p}]'])}")
    return 0


def cmd_verify(args) -> int:
    cycle = _load_cycle(args.cycle)
    verdict = verify_optimal(cycle)
    print(json.dumps(verdict.to_json_dict(), indent=2))
    return 0


def cmd_exact(args) -> int:
    problem = SequencingProblem(_parse_labels(args.labels), (args.m1, args.m2))
    result = exact_min(problem, cap=args.cap)
    if args.table:
        lines = [f"minimum objective {result.min_objective}  "
                 f"variance {_rational(result.min_variance)}  "
                 f"cycles enumerated {result.enumerated_count}"]
        lines.extend(c.to_compact() for c in result.witnesses)
        print("\n".join(lines))
        return 0
    print(json.dumps(result.to_json_dict(), indent=2))
    return 0


def cmd_bound(args) -> int:
    problem = _load_problem(args.problem)
    objective_lb = lower_bound(problem)
    variance_lb = lower_bound_variance(problem)
    if args.json:
        print(
            json.dumps(
                {
                    "problem": problem.to_json_dict(),
                    "objective_lb": str(objective_lb),
                    "objective_lb_float": float(objective_lb),
                    "variance_lb": str(variance_lb),
                    "variance_lb_float": float(variance_lb),
                },
                indent=2,
            )
        )
        return 0
    print(f"lower bound, sum of squared distances: {_rational(objective_lb)}")
    if variance_lb < 0:
        print(f"lower bound, variance scale: 0 (clamped from {variance_lb})")
    else:
        print(f"lower bound, variance scale: {_rational(variance_lb)}")
    return 0


def cmd_compare(args) -> int:
    problem = _load_problem(args.problem)
    cycles = _load_cycles(args.cycles, problem)
    rows = compare_report(problem, cycles)
    if args.format == "csv":
        print(comparison_csv(rows), end="")
    elif args.format == "json":
        print(comparison_json(rows))
    else:
        print(comparison_table(rows), end="")
    return 0


def cmd_export_miqp(args) -> int:
    problem = _load_problem(args.problem)
    text = write_lp(build_model(problem))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cycleseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("esa", help="run the Euclidean construction on two symbols")
    p.add_argument("--m1", type=int, required=True, help="multiplicity of the first symbol")
    p.add_argument("--m2", type=int, required=True, help="multiplicity of the second symbol")
    p.add_argument("--labels", default="a,b", help="two comma-separated labels (default a,b)")
    p.add_argument("--trace", action="store_true", help="print the division trace table")
    p.add_argument("--rhythm", action="store_true", help="print pulse notation instead of labels")
    p.add_argument("--pulse", help="label rendered as the pulse in rhythm output")
    p.add_argument("--canonical", action="store_true", help="rotate the output to canonical form")
    p.add_argument("--json", action="store_true", help="emit the trace as JSON")
    p.set_defaults(handler=cmd_esa)

    p = sub.add_parser("moments", help="exact distance moments of a cycle")
    p.add_argument("--cycle", required=True, help="compact cycle string or JSON cycle file")
    p.add_argument("-p", "--order", type=int, help="also report this moment order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_moments)

    p = sub.add_parser("verify", help="exact optimality verdict for a two-symbol cycle")
    p.add_argument("--cycle", required=True, help="compact cycle string or JSON cycle file")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("exact", help="brute-force minimum over all admissible cycles")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.add_argument("--labels", default="a,b")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"refuse problems with more than this many items (default {DEFAULT_CAP})")
    p.add_argument("--table", action="store_true", help="human table instead of JSON")
    p.set_defaults(handler=cmd_exact)

    p = sub.add_parser("bound", help="spacing lower bound for a problem")
    p.add_argument("--problem", required=True, help="JSON problem file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("compare", help="variance vs per-pulse variance for listed cycles")
    p.add_argument("--problem", required=True, help="JSON problem file")
    p.add_argument("--cycles", required=True, help="JSON array of cycles")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("export-miqp", help="write the quadratic model as LP text")
    p.add_argument("--problem", required=True, help="JSON problem file")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(handler=cmd_export_miqp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = getattr(args, "handler", None)
        if handler is None:
            parser.print_help(sys.stderr)
            return 1
        return handler(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

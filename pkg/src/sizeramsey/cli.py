"""Command-line front end.

Subcommands:
  compute      limit slope of a problem spec (text, JSON, or CSV output)
  closed-form  closed-form evaluation for the q = 1 and q = 2 families
  verify       exhaustive arrowing check on a small explicit graph
  sweep        parameter grid to CSV, cross-checking LP against closed forms

Problem spec files use the line format

    q r
    s_1 t_1        # one line per growing graph; t may be "p" or "p/q"
    ...
    m_{q+1}        # one line per fixed graph: its smaller side
    ...

with '#' starting a comment.  Tokens are whitespace-separated, so line
breaks are cosmetic.  All value output is exact ("p" or "p/q"); decimal
columns are advisory only.

Exit codes: 0 success, 2 parse/parameter error, 3 instance too large,
4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .arrowing import DEFAULT_BUDGET, arrows, complete, complete_bipartite
from .closed_forms import limit_q1, limit_q1_star, limit_q2
from .errors import InstanceTooLargeError, SearchBudgetExceededError
from .exactnum import approx_decimal, format_rational, parse_rational
from .ramsey_core import DEFAULT_COLUMN_CAP, LimitResult, ProblemSpec, compute_limit

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_BUDGET = 4


class SpecParseError(ValueError):
    """A problem spec file or parameter list could not be parsed."""


def parse_spec_text(text: str) -> ProblemSpec:
    """Parse the whitespace-token spec grammar into a ProblemSpec."""
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    pos = 0

    def next_token(what: str) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise SpecParseError(f"unexpected end of input, expected {what}")
        tok = tokens[pos]
        pos += 1
        return tok

    def next_int(what: str) -> int:
        tok = next_token(what)
        try:
            return int(tok)
        except ValueError:
            raise SpecParseError(f"expected integer {what}, got {tok!r}") from None

    q = next_int("q")
    r = next_int("r")
    if q < 1 or r < q:
        raise SpecParseError(f"need 1 <= q <= r, got q={q} r={r}")
    dilating = []
    for i in range(q):
        s = next_int(f"s_{i + 1}")
        tok = next_token(f"t_{i + 1}")
        try:
            t = parse_rational(tok)
        except ValueError:
            raise SpecParseError(f"expected rational t_{i + 1}, got {tok!r}") from None
        dilating.append((s, t))
    fixed = [next_int(f"m_{i + 1}") for i in range(q, r)]
    if pos != len(tokens):
        raise SpecParseError(f"trailing input starting at {tokens[pos]!r}")
    try:
        return ProblemSpec(tuple(dilating), tuple(fixed))
    except ValueError as exc:
        raise SpecParseError(str(exc)) from None


def format_spec_text(spec: ProblemSpec) -> str:
    """Canonical spec text; parsing it reproduces an equal ProblemSpec."""
    lines = [f"{spec.q} {spec.r}"]
    lines.extend(f"{s} {format_rational(t)}" for s, t in spec.dilating)
    lines.extend(str(m) for m in spec.fixed)
    return "\n".join(lines) + "\n"


def _load_spec(args: argparse.Namespace) -> ProblemSpec:
    if args.dilating:
        dilating = []
        for item in args.dilating:
            parts = item.split(",")
            if len(parts) != 2:
                raise SpecParseError(f"--dilating wants 's,t', got {item!r}")
            dilating.append((int(parts[0]), parse_rational(parts[1])))
        fixed = []
        for item in args.fixed or []:
            sides = [int(p) for p in item.split(",")]
            if len(sides) == 1:
                fixed.append(sides[0])
            elif len(sides) == 2:
                fixed.append(min(sides))  # K_{s,t} and K_{t,s} coincide
            else:
                raise SpecParseError(f"--fixed wants 'm' or 's,t', got {item!r}")
        try:
            return ProblemSpec(tuple(dilating), tuple(fixed))
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None
    if args.spec is None:
        text = sys.stdin.read()
    else:
        with open(args.spec, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_spec_text(text)


def _limit_json(result: LimitResult) -> dict:
    return {
        "value": format_rational(result.value),
        "argmin_s": result.argmin_s,
        "t_prime": format_rational(result.t_prime_at_argmin),
        "table": [
            {"s": s, "t_prime": format_rational(tp), "candidate": format_rational(c)}
            for s, tp, c in result.table
        ],
        "terminated_at": result.terminated_at,
    }


def cmd_compute(args: argparse.Namespace) -> int:
    spec = _load_spec(args)
    result = compute_limit(spec, max_columns=args.max_columns)
    if args.format == "json":
        print(json.dumps(_limit_json(result), indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["value", "approx", "argmin_s", "t_prime", "terminated_at"])
        writer.writerow(
            [
                format_rational(result.value),
                approx_decimal(result.value),
                result.argmin_s,
                format_rational(result.t_prime_at_argmin),
                result.terminated_at,
            ]
        )
    else:
        if args.verbose:
            for s, tp, cand in result.table:
                print(
                    f"s={s} t_prime={format_rational(tp)} candidate={format_rational(cand)}"
                )
            print(
                f"witness s={result.argmin_s} t_prime="
                f"{format_rational(result.t_prime_at_argmin)} "
                f"terminated_at={result.terminated_at}"
            )
        print(format_rational(result.value))
    return EXIT_OK


def _parse_fixed_list(text: str) -> list[int]:
    if not text:
        return []
    return [int(p) for p in text.split(",")]


def cmd_closed_form(args: argparse.Namespace) -> int:
    fixed = _parse_fixed_list(args.fixed)
    if args.kind == "q1":
        if args.s is None:
            raise SpecParseError("q1 requires --s")
        res = limit_q1(args.s, fixed)
        payload = {
            "value": format_rational(res.value),
            "argmin": res.argmin,
            "scanned_upper": res.scanned_upper,
        }
        text = f"{format_rational(res.value)} @ s={res.argmin}"
    elif args.kind == "q1star":
        value = limit_q1_star(fixed)
        payload = {"value": format_rational(value)}
        text = format_rational(value)
    else:
        if args.s is None:
            raise SpecParseError("q2 requires --s")
        res = limit_q2(args.s, fixed)
        payload = {
            "value": format_rational(res.value),
            "argmin": res.argmin,
            "scanned_upper": res.scanned_upper,
        }
        text = f"{format_rational(res.value)} @ a={res.argmin}"
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(sorted(payload))
        writer.writerow([payload[k] for k in sorted(payload)])
    else:
        print(text)
    return EXIT_OK


def _parse_graph(text: str):
    body = text.strip()
    if body.upper().startswith("K"):
        body = body[1:]
    parts = body.split(",")
    try:
        if len(parts) == 1:
            return complete(int(parts[0]))
        if len(parts) == 2:
            return complete_bipartite(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise SpecParseError(f"bad graph {text!r}: {exc}") from None
    raise SpecParseError(f"bad graph {text!r}; use K6 or K3,7 forms")


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _parse_graph(args.graph)
    forbidden = []
    for item in args.forbid:
        parts = item.split(",")
        if len(parts) != 2:
            raise SpecParseError(f"--forbid wants 's,t', got {item!r}")
        forbidden.append((int(parts[0]), int(parts[1])))
    result = arrows(graph, forbidden, len(forbidden), budget=args.budget)
    if args.format == "json":
        print(json.dumps({"arrows": result.arrows, "certificate": result.certificate}))
    elif result.arrows:
        print("ARROWS")
    else:
        print(f"AVOIDED {result.certificate}")
    return EXIT_OK


def _sweep_cells(kind: str, s_values: list[int], fixed_lists: list[list[int]]):
    for s in s_values:
        for fixed in fixed_lists:
            yield kind, s, fixed


def _sweep_cell(cell: tuple[str, int, list[int]]) -> list[str]:
    kind, s, fixed = cell
    fixed_text = ",".join(str(m) for m in fixed)
    try:
        if kind == "q1":
            spec = ProblemSpec(((s, Fraction(1)),), tuple(fixed))
            closed = limit_q1(s, fixed).value
        else:
            spec = ProblemSpec(((s, Fraction(1)), (s, Fraction(1))), tuple(fixed))
            closed = limit_q2(s, fixed).value
        result = compute_limit(spec)
        return [
            kind,
            str(s),
            fixed_text,
            format_rational(result.value),
            approx_decimal(result.value),
            str(result.argmin_s),
            format_rational(result.t_prime_at_argmin),
            format_rational(closed),
            str(result.value == closed).lower(),
            "",
        ]
    except Exception as exc:  # recorded per-row, the sweep itself continues
        return [kind, str(s), fixed_text, "", "", "", "", "", "", str(exc)]


SWEEP_HEADER = [
    "kind",
    "s",
    "fixed",
    "value",
    "approx",
    "argmin_s",
    "t_prime",
    "closed_form",
    "match",
    "error",
]


def cmd_sweep(args: argparse.Namespace) -> int:
    s_values = [int(p) for p in args.s.split(",")] if args.s else []
    fixed_lists = (
        [_parse_fixed_list(part) for part in args.fixed.split(";")]
        if args.fixed is not None
        else [[]]
    )
    cells = list(_sweep_cells(args.kind, s_values, fixed_lists))
    if args.jobs > 1 and cells:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(cell) for cell in cells]
    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sizeramsey",
        description="Exact asymptotic size Ramsey limits for complete bipartite families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="limit slope of a problem spec")
    p_compute.add_argument("--spec", help="spec file (omit to read stdin)")
    p_compute.add_argument(
        "--dilating",
        action="append",
        metavar="s,t",
        help="growing graph; repeatable, overrides --spec",
    )
    p_compute.add_argument(
        "--fixed",
        action="append",
        metavar="m|s,t",
        help="fixed graph side(s); repeatable, pairs are reduced to min(s,t)",
    )
    p_compute.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_compute.add_argument("--verbose", action="store_true", help="print the scan table")
    p_compute.add_argument(
        "--max-columns",
        type=int,
        default=DEFAULT_COLUMN_CAP,
        help="per-size LP column cap",
    )
    p_compute.set_defaults(func=cmd_compute)

    p_closed = sub.add_parser("closed-form", help="closed-form limit evaluation")
    p_closed.add_argument("kind", choices=("q1", "q1star", "q2"))
    p_closed.add_argument("--s", type=int, help="growing side (q1: s1, q2: s)")
    p_closed.add_argument(
        "--fixed", default="", metavar="m,m,...", help="fixed graph smaller sides"
    )
    p_closed.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_closed.set_defaults(func=cmd_closed_form)

    p_verify = sub.add_parser("verify", help="exhaustive arrowing check")
    p_verify.add_argument("--graph", required=True, help="K6 or K3,7 style host graph")
    p_verify.add_argument(
        "--forbid",
        action="append",
        required=True,
        metavar="s,t",
        help="forbidden K_{s,t}, one per colour in order",
    )
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="parameter grid to CSV")
    p_sweep.add_argument("--kind", choices=("q1", "q2"), required=True)
    p_sweep.add_argument("--s", default="", metavar="a,b,...", help="growing sides")
    p_sweep.add_argument(
        "--fixed",
        default=None,
        metavar="LIST;LIST;...",
        help="semicolon-separated fixed lists, each comma-separated (empty = none)",
    )
    p_sweep.add_argument("--out", default="-", help="output CSV path (default stdout)")
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel grid workers")
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:  # includes SpecParseError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InstanceTooLargeError as exc:
        print(f"error: instance too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except SearchBudgetExceededError as exc:
        print(f"error: search budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

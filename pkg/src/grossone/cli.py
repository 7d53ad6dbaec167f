"""Command-line interface.

Subcommands: eval, solve, sum, prob, measure, repl.  Numerals use the
text grammar from the notation module; linear systems and measure pieces
are read from JSON files.  Every failure prints a single
``<category>: <message>`` line to stderr and exits with the category's
code (see _ERROR_TABLE).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .applications import MeasurePiece, event_probability, total_measure
from .core import DEFAULT_DEPTH_LIMIT, DEFAULT_MIN_POWER, GrossNumber
from .errors import (
    DepthExceeded,
    DivisionByZero,
    GrossoneError,
    InexactInverse,
    InexactProbability,
    NonTerminatingDivision,
    NotIntegerValued,
    ParseError,
    SchemaError,
    SingularSystem,
)
from .expr import contains_variable, eval_alternating, eval_at, parse_expr
from .linsolve import LinearSystem, solve_grossone
from .notation import parse, parse_rational, print_canonical, print_decimal

_ERROR_TABLE = [
    (ParseError, "syntax-error", 3),
    (DivisionByZero, "division-by-zero", 4),
    (DepthExceeded, "depth-exceeded", 5),
    (NotIntegerValued, "not-integer-valued", 6),
    (InexactInverse, "inexact-inverse", 7),
    (InexactProbability, "inexact-probability", 8),
    (SingularSystem, "singular-system", 9),
    (SchemaError, "schema-error", 10),
    (NonTerminatingDivision, "non-terminating-division", 11),
    (OSError, "io-error", 12),
    (ValueError, "value-error", 13),
]


@dataclass
class CliConfig:
    min_power: int = DEFAULT_MIN_POWER
    depth_limit: int = DEFAULT_DEPTH_LIMIT
    output_mode: str = "canonical"  # or "decimal"
    decimal_digits: int = 6

    def render(self, value: GrossNumber) -> str:
        if self.output_mode == "decimal":
            return print_decimal(value, self.decimal_digits)
        return print_canonical(value)


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(min_power=args.min_power, depth_limit=args.depth)
    if args.decimal is not None:
        cfg.output_mode = "decimal"
        cfg.decimal_digits = args.decimal
    if cfg.depth_limit < 1:
        raise ValueError("--depth must be >= 1")
    if cfg.decimal_digits < 1:
        raise ValueError("--decimal digits must be >= 1")
    return cfg


class _SingleLineParser(argparse.ArgumentParser):
    """Argument errors as one greppable line instead of a usage dump."""

    def error(self, message):
        self.exit(2, f"usage-error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--min-power",
        type=int,
        default=DEFAULT_MIN_POWER,
        dest="min_power",
        help="lowest grosspower kept by divisions (default %(default)s)",
    )
    common.add_argument(
        "--depth",
        type=int,
        default=DEFAULT_DEPTH_LIMIT,
        help="grosspower nesting limit (default %(default)s)",
    )
    common.add_argument(
        "--decimal",
        nargs="?",
        const=6,
        default=None,
        type=int,
        metavar="DIGITS",
        help="print digits as decimals instead of exact rationals",
    )

    parser = _SingleLineParser(
        prog="grossone",
        description="Exact arithmetic with finite, infinite, and infinitesimal numerals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p_eval.add_argument("expr", help="expression over x, G, and numeric literals")
    p_eval.add_argument("--at", help="numeral substituted for x", default=None)

    p_solve = sub.add_parser("solve", parents=[common], help="solve a linear system from JSON")
    p_solve.add_argument("path", help='JSON file {"A": [[...]], "b": [...]}')

    p_sum = sub.add_parser("sum", parents=[common], help="sum with an explicit item count")
    p_sum.add_argument("formula", nargs="?", help="partial-sum formula S(x)")
    p_sum.add_argument("--items", required=True, help="numeral item count")
    p_sum.add_argument(
        "--alternating",
        action="store_true",
        help="sum 1 - 1 + 1 - ... instead of using a formula",
    )

    p_prob = sub.add_parser("prob", parents=[common], help="event probability favorable/total")
    p_prob.add_argument("--favorable", required=True, help="numeral count of favorable events")
    p_prob.add_argument("--total", required=True, help="numeral count of all events")

    p_measure = sub.add_parser(
        "measure", parents=[common], help="total measure of mixed-dimension pieces"
    )
    p_measure.add_argument("path", help="JSON file with a list of pieces")

    sub.add_parser("repl", parents=[common], help="interactive read-eval-print loop")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        handler = {
            "eval": _cmd_eval,
            "solve": _cmd_solve,
            "sum": _cmd_sum,
            "prob": _cmd_prob,
            "measure": _cmd_measure,
            "repl": _cmd_repl,
        }[args.command]
        return handler(args, cfg)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes below
        for exc_type, category, code in _ERROR_TABLE:
            if isinstance(exc, exc_type):
                print(f"{category}: {exc}", file=sys.stderr)
                return code
        raise


def entry() -> None:
    sys.exit(main())


def _cmd_eval(args: argparse.Namespace, cfg: CliConfig) -> int:
    tree = parse_expr(args.expr)
    if contains_variable(tree) and args.at is None:
        print("usage-error: expression contains 'x'; provide --at NUMERAL", file=sys.stderr)
        return 2
    point = GrossNumber.from_rational(0) if args.at is None else parse(args.at, cfg.depth_limit)
    value, exact = eval_at(tree, point, cfg.min_power)
    print(cfg.render(value))
    print("exact" if exact else "inexact")
    return 0


def _cmd_sum(args: argparse.Namespace, cfg: CliConfig) -> int:
    items = parse(args.items, cfg.depth_limit)
    if args.alternating:
        if args.formula is not None:
            print("usage-error: --alternating does not take a formula", file=sys.stderr)
            return 2
        value, exact = eval_alternating(items), True
    else:
        if args.formula is None:
            print("usage-error: provide a partial-sum formula or --alternating", file=sys.stderr)
            return 2
        value, exact = eval_at(parse_expr(args.formula), items, cfg.min_power)
    print(cfg.render(value))
    print("exact" if exact else "inexact")
    return 0


def _cmd_prob(args: argparse.Namespace, cfg: CliConfig) -> int:
    favorable = parse(args.favorable, cfg.depth_limit)
    total = parse(args.total, cfg.depth_limit)
    print(cfg.render(event_probability(favorable, total, cfg.min_power)))
    return 0


def _cmd_measure(args: argparse.Namespace, cfg: CliConfig) -> int:
    data = _load_json(args.path)
    if not isinstance(data, list):
        raise SchemaError("measure input must be a JSON list of pieces")
    pieces = [_piece_from_json(i, entry) for i, entry in enumerate(data)]
    print(cfg.render(total_measure(pieces)))
    return 0


def _cmd_solve(args: argparse.Namespace, cfg: CliConfig) -> int:
    system = _system_from_json(_load_json(args.path))
    report = solve_grossone(system)
    lead = report.residual_leading_power
    payload = {
        "solution": [print_canonical(x) for x in report.solution],
        "finite_solution": [str(x) for x in report.finite_solution],
        "z": report.injected_pivots,
        "injected_rows": list(report.injected_rows),
        "residual_leading_power": "zero" if lead is None else print_canonical(lead),
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_repl(args: argparse.Namespace, cfg: CliConfig) -> int:
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            sys.stdout.write("g> ")
            sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            return 0
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return 0
        if line.startswith(":"):
            _repl_directive(line, cfg)
            continue
        try:
            tree = parse_expr(line)
            if contains_variable(tree):
                raise ParseError("the repl evaluates closed expressions; 'x' is not bound", 0)
            value, exact = eval_at(tree, GrossNumber.from_rational(0), cfg.min_power)
            suffix = "" if exact else "  (inexact)"
            print(f"{cfg.render(value)}{suffix}")
        except (GrossoneError, ValueError) as exc:
            print(f"{_category_of(exc)}: {exc}", file=sys.stderr)


def _repl_directive(line: str, cfg: CliConfig) -> None:
    parts = line.split()
    try:
        if parts[0] != ":set" or len(parts) != 3:
            raise ValueError(f"unknown directive {line!r}; try :set KEY VALUE or :quit")
        key, value = parts[1], parts[2]
        if key == "min_power":
            cfg.min_power = int(value)
        elif key == "depth":
            depth = int(value)
            if depth < 1:
                raise ValueError("depth must be >= 1")
            cfg.depth_limit = depth
        elif key == "output":
            if value not in ("canonical", "decimal"):
                raise ValueError("output must be 'canonical' or 'decimal'")
            cfg.output_mode = value
        elif key == "decimal_digits":
            digits = int(value)
            if digits < 1:
                raise ValueError("decimal_digits must be >= 1")
            cfg.decimal_digits = digits
        else:
            raise ValueError(f"unknown setting {key!r}")
    except ValueError as exc:
        print(f"value-error: {exc}", file=sys.stderr)


def _category_of(exc: Exception) -> str:
    for exc_type, category, _ in _ERROR_TABLE:
        if isinstance(exc, exc_type):
            return category
    return "error"


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc


def _rational_field(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"{where}: expected a string or integer literal")
    try:
        return parse_rational(str(value))
    except ParseError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _int_field(value, where: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer")
    if value < minimum:
        raise SchemaError(f"{where}: must be >= {minimum}")
    return value


def _system_from_json(data) -> LinearSystem:
    if not isinstance(data, dict) or "A" not in data or "b" not in data:
        raise SchemaError('system file must be a JSON object with keys "A" and "b"')
    a, b = data["A"], data["b"]
    if not isinstance(a, list) or not all(isinstance(row, list) for row in a) or not a:
        raise SchemaError('"A" must be a non-empty list of rows')
    if not isinstance(b, list):
        raise SchemaError('"b" must be a list')
    n = len(a)
    if any(len(row) != n for row in a):
        raise SchemaError('"A" must be square')
    if len(b) != n:
        raise SchemaError('"b" must have one entry per row of "A"')
    rows = [
        [_rational_field(x, f"A[{i}][{j}]") for j, x in enumerate(row)]
        for i, row in enumerate(a)
    ]
    rhs = [_rational_field(x, f"b[{i}]") for i, x in enumerate(b)]
    return LinearSystem.from_rows(rows, rhs)


def _piece_from_json(index: int, data) -> MeasurePiece:
    if not isinstance(data, dict) or "extent" not in data or "codim" not in data:
        raise SchemaError(f'piece {index}: expected an object with "extent" and "codim"')
    known = {"extent", "codim", "width_points", "resolution"}
    unknown = set(data) - known
    if unknown:
        raise SchemaError(f"piece {index}: unknown keys {sorted(unknown)}")
    try:
        return MeasurePiece(
            extent=_rational_field(data["extent"], f"piece {index}: extent"),
            codim=_int_field(data["codim"], f"piece {index}: codim", 0),
            width_points=_int_field(
                data.get("width_points", 1), f"piece {index}: width_points", 1
            ),
            resolution=_int_field(data.get("resolution", 1), f"piece {index}: resolution", 1),
        )
    except ValueError as exc:
        raise SchemaError(f"piece {index}: {exc}") from exc

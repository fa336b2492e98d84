"""Command line: reduce, evaluate, print the operator matrix of, or compare linear quaternion functions.

    python -m src.main reduce "i*q*j"
    python -m src.main eval "f=q*i; f(f(q))" --at "(1,0,0,0)"
    python -m src.main matrix "k*q*i"
    python -m src.main equiv "q*i*i" "-q"

Results go to stdout, diagnostics to stderr. Exit codes: 0 ok / equivalent, 1 not equivalent,
2 usage or parse error, 3 the two reduction methods disagree.
"""
import argparse
import json
import logging
import math
import sys

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from . import config
from .expr import ExprError, reduce_program
from .forms import CanonicalForm, equivalent, evaluate, form_to_json, format_tuple
from .matrix_rep import format_matrix, matrix_to_json, operator_matrix
from .quaternion import format_quaternion, format_real, parse_quaternion, quaternion_to_json

logging.basicConfig(
    level=config.LOG_LEVEL,
    format="%(asctime)s | %(message)s",
    datefmt="%H:%M:%S",
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3

COMMANDS = ("reduce", "eval", "matrix", "equiv")
# Keep in sync with build_parser
VALUE_OPTIONS = ("--method", "--tol", "--at")
FLAG_OPTIONS = ("--json", "--pretty", "-h", "--help")


class MethodDisagreement(Exception):
    def __init__(self, by_matrix: CanonicalForm, by_involution: CanonicalForm, tol: float):
        super().__init__(
            f"matrix method gave {format_tuple(by_matrix)} but involution method gave "
            f"{format_tuple(by_involution)} (tolerance {tol})"
        )


def _stderr() -> Console:
    return Console(stderr=True, highlight=False, soft_wrap=True)


def _report_expr_error(src: str, err: ExprError) -> None:
    console = _stderr()
    console.print(f"[bold red]error:[/] {escape(str(err))}")
    lines = src.splitlines()
    if 1 <= err.line <= len(lines):
        console.print("  " + escape(lines[err.line - 1]))
        console.print("  " + " " * max(0, err.column - 1) + "[bold red]^[/]")


def _require_finite(values, what: str) -> None:
    if not all(math.isfinite(x) for x in values):
        raise ArithmeticError(f"{what} is not finite (overflow)")


def _reduce_finite(src: str, method: str) -> CanonicalForm:
    _, form = reduce_program(src, method)
    _require_finite([x for c in form for x in c], "reduced form")
    return form


def reduce_source(src: str, method: str, tol: float) -> CanonicalForm:
    """Reduce a program; with method 'both' run both reductions and insist they agree."""
    if method != "both":
        return _reduce_finite(src, method)
    form = _reduce_finite(src, "matrix")
    by_involution = _reduce_finite(src, "involution")
    if not equivalent(form, by_involution, tol):
        raise MethodDisagreement(form, by_involution, tol)
    logger.debug("Both reduction methods agree within %s.", tol)
    return form


def _read_expression(text: str, stdin_used: list) -> str:
    if text != "-":
        return text
    if stdin_used:
        raise ValueError("stdin ('-') can only be used for one expression")
    stdin_used.append(True)
    return sys.stdin.read()


def _render_matrix(r, pretty: bool) -> None:
    if not pretty:
        print(format_matrix(r))
        return
    table = Table(show_header=False, box=box.SQUARE)
    for _ in range(4):
        table.add_column(justify="right")
    for row in r.tolist():
        table.add_row(*(format_real(x) for x in row))
    Console(highlight=False).print(table)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--method",
        choices=config.METHODS,
        default=config.DEFAULT_METHOD,
        help="Reduction method (default %s; 'both' fails on disagreement)" % config.DEFAULT_METHOD,
    )
    common.add_argument("--tol", type=float, default=config.TOLERANCE, help="Tolerance (default %s)" % config.TOLERANCE)
    common.add_argument("--json", action="store_true", help="JSON output")

    parser = argparse.ArgumentParser(prog="python -m src.main", description="Linear quaternion function reducer")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("reduce", parents=[common], help="Print the canonical tuple {A; B; C; D}")
    p.add_argument("expression", help="Program text, or - for stdin")
    p = sub.add_parser("eval", parents=[common], help="Evaluate the function at a quaternion")
    p.add_argument("expression", help="Program text, or - for stdin")
    p.add_argument("--at", required=True, help="Quaternion literal, (a,b,c,d) or a+bi+cj+dk")
    p = sub.add_parser("matrix", parents=[common], help="Print the 4x4 operator matrix")
    p.add_argument("expression", help="Program text, or - for stdin")
    p.add_argument("--pretty", action="store_true", help="Render as a table")
    p = sub.add_parser("equiv", parents=[common], help="Check two programs denote the same function")
    p.add_argument("expression", help="First program, or - for stdin")
    p.add_argument("other", help="Second program, or - for stdin")
    return parser


def run(args: argparse.Namespace) -> int:
    """Execute a parsed invocation and return the exit code."""
    stdin_used = []
    src = ""
    try:
        src = _read_expression(args.expression, stdin_used)
        form = reduce_source(src, args.method, args.tol)
        if args.command == "reduce":
            print(json.dumps(form_to_json(form)) if args.json else format_tuple(form))
            return EXIT_OK
        if args.command == "eval":
            value = evaluate(form, parse_quaternion(args.at))
            _require_finite(value, "value")
            print(json.dumps(quaternion_to_json(value)) if args.json else format_quaternion(value))
            return EXIT_OK
        if args.command == "matrix":
            r = operator_matrix(form)
            if args.json:
                print(json.dumps(matrix_to_json(r)))
            else:
                _render_matrix(r, args.pretty)
            return EXIT_OK
        src = _read_expression(args.other, stdin_used)
        other = reduce_source(src, args.method, args.tol)
        same = equivalent(form, other, args.tol)
        if args.json:
            print(json.dumps({"equivalent": same, "tolerance": args.tol}))
        else:
            print("equivalent" if same else "not equivalent")
        return EXIT_OK if same else EXIT_NOT_EQUIVALENT
    except ExprError as e:
        _report_expr_error(src, e)
        return EXIT_USAGE
    except MethodDisagreement as e:
        logger.error("Reduction methods disagree: %s", e)
        return EXIT_DISAGREEMENT
    except (ValueError, ArithmeticError) as e:
        _stderr().print(f"[bold red]error:[/] {escape(str(e))}")
        return EXIT_USAGE


def separate_positionals(argv: list[str]) -> list[str]:
    """Move a command's options ahead of '--' so expressions like "-q" stay positional.
    Option values are attached with '=', so "--at -i" keeps its value too.
    """
    if not argv or argv[0] not in COMMANDS or "--" in argv:
        return argv
    options, positionals = [], []
    rest = iter(argv[1:])
    for token in rest:
        name = token.split("=", 1)[0]
        if name in VALUE_OPTIONS:
            value = None if "=" in token else next(rest, None)
            options.append(token if value is None else f"{token}={value}")
        elif token in FLAG_OPTIONS:
            options.append(token)
        else:
            positionals.append(token)
    return [argv[0], *options, "--", *positionals]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(separate_positionals(list(argv)))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.tol < 0:
        _stderr().print("[bold red]error:[/] --tol must be >= 0")
        return EXIT_USAGE
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: eval (expressions over grainy literals), table (notation
table of a universe), laws (exhaustive law report), hasse (covering
relations as a dot graph), fuzzy (operations on fuzzy-set files).

Exit codes: 0 success, 1 verification/domain failure, 2 usage or parse
error. Inside expressions the degree mark may be typed as a single
quote (1'3' for 1°3°) since '*' already means multiplication.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass

from . import fuzzy, lawcheck
from .core import GrainyNumber, add, mul, supplement
from .notation import NotationError, parse as parse_number, render, render_bitstring, render_tuple

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

CAP_ENV_VAR = "GRAINY_MAXLEN_CAP"
DEFAULT_CAPS = {"table": 10, "laws": 6, "hasse": 5}


# --- expression parsing ----------------------------------------------------

class ExpressionError(ValueError):
    """Bad expression text; `position` is the 1-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Lit:
    value: GrainyNumber


@dataclass(frozen=True)
class BinOp:
    op: str  # "+" or "*"
    left: object
    right: object


@dataclass(frozen=True)
class SuppCall:
    value: object
    mask: object


@dataclass(frozen=True)
class Cmp:
    left: object
    right: object


# A literal is 0, k-degree terms with optional (n), or a lone flat (n).
_LITERAL_RE = re.compile(r"(?:\d+[°'])+(?:\(\d+\))?|\(\d+\)|0(?!\d)")

_TOKEN_SPEC = (
    (">=", "geq"),
    ("⊕", "+"),  # circled plus, alias for +
    ("⊗", "*"),  # circled times, alias for *
    ("+", "+"),
    ("*", "*"),
    (",", ","),
    (")", ")"),
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        if text.startswith("supp", i):
            tokens.append(("supp", None, i + 1))
            i += 4
            continue
        m = _LITERAL_RE.match(text, i)
        if m:
            literal = m.group().replace("'", "°")
            try:
                value = parse_number(literal)
            except NotationError as exc:
                # the quote-to-degree rewrite is 1:1, so columns line up
                raise ExpressionError(f"bad literal: {exc}", i + exc.position) from exc
            tokens.append(("lit", value, i + 1))
            i = m.end()
            continue
        for spelling, kind in _TOKEN_SPEC:
            if text.startswith(spelling, i):
                tokens.append((kind, None, i + 1))
                i += len(spelling)
                break
        else:
            if text[i] == "(":
                tokens.append(("(", None, i + 1))
                i += 1
            elif text[i].isdigit():
                raise ExpressionError(
                    "bare integer: write k° (or k') for a ONE position, "
                    "(n) for a flat", i + 1)
            else:
                raise ExpressionError(f"unexpected character {text[i]!r}", i + 1)
    tokens.append(("end", None, n + 1))
    return tokens


def parse_expression(text: str):
    """Parse to an AST; '*' binds tighter than '+', '>=' only at top level."""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str:
        return tokens[pos][0]

    def take(kind: str, what: str) -> tuple:
        nonlocal pos
        if tokens[pos][0] != kind:
            raise ExpressionError(f"expected {what}", tokens[pos][2])
        tok = tokens[pos]
        pos += 1
        return tok

    def atom():
        nonlocal pos
        kind, value, col = tokens[pos]
        if kind == "lit":
            pos += 1
            return Lit(value)
        if kind == "supp":
            pos += 1
            take("(", "'(' after supp")
            first = summation()
            take(",", "',' between supp arguments")
            second = summation()
            take(")", "')'")
            return SuppCall(first, second)
        if kind == "(":
            pos += 1
            inner = summation()
            take(")", "')'")
            return inner
        raise ExpressionError("expected a grainy literal, 'supp', or '('", col)

    def term():
        node = atom()
        while peek() == "*":
            col = tokens[pos][2]
            take("*", "'*'")
            node = BinOp("*", node, atom())
        return node

    def summation():
        node = term()
        while peek() == "+":
            take("+", "'+'")
            node = BinOp("+", node, term())
        return node

    node = summation()
    if peek() == "geq":
        take("geq", "'>='")
        node = Cmp(node, summation())
    if peek() != "end":
        raise ExpressionError("unexpected trailing text", tokens[pos][2])
    return node


def evaluate(node):
    """Reduce an AST to a GrainyNumber, or a bool for a comparison."""
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, BinOp):
        left, right = evaluate(node.left), evaluate(node.right)
        return add(left, right) if node.op == "+" else mul(left, right)
    if isinstance(node, SuppCall):
        return supplement(evaluate(node.value), evaluate(node.mask))
    if isinstance(node, Cmp):
        from .core import geq
        return geq(evaluate(node.left), evaluate(node.right))
    raise TypeError(f"not an expression node: {node!r}")


# --- helpers ---------------------------------------------------------------

def _emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _check_cap(command: str, max_len: int, force: bool = False) -> int | None:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is not None:
        try:
            cap = int(raw)
        except ValueError:
            return _usage_error(f"{CAP_ENV_VAR} must be an integer, got {raw!r}")
    else:
        cap = DEFAULT_CAPS[command]
    if max_len < 0:
        return _usage_error("max_len must be >= 0")
    if max_len > cap and not force:
        return _usage_error(
            f"max_len {max_len} exceeds the {command} cap of {cap} "
            f"(set {CAP_ENV_VAR} to raise it)"
        )
    return None


def _parse_literal_arg(text: str, what: str) -> GrainyNumber:
    try:
        return parse_number(text.replace("'", "°"))
    except NotationError as exc:
        raise ExpressionError(f"bad {what}: {exc}", 1) from exc


def _load_set(path: str) -> fuzzy.GrainyFuzzySet:
    with open(path, encoding="utf-8") as fh:
        return fuzzy.load(fh.read())


# --- subcommands -----------------------------------------------------------

def cmd_eval(args) -> int:
    try:
        node = parse_expression(args.expression)
        result = evaluate(node)
    except ExpressionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {args.expression}", file=sys.stderr)
        print(f"  {' ' * (exc.position - 1)}^", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, bool):
        _emit(("true" if result else "false") + "\n", args)
    else:
        _emit(render(result) + "\n", args)
    return EXIT_OK


def cmd_table(args) -> int:
    failed = _check_cap("table", args.max_len)
    if failed is not None:
        return failed
    members = lawcheck.enumerate_universe(args.max_len).members
    rows = [(render_tuple(x), render_bitstring(x), render(x)) for x in members]
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    lines = [f"{t:<{w0}} | {b:<{w1}} | {c}" for t, b, c in rows]
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_laws(args) -> int:
    failed = _check_cap("laws", args.max_len, force=args.force)
    if failed is not None:
        return failed
    report = lawcheck.check_laws(args.max_len)
    text = report.to_machine() if args.format == "machine" else report.to_text()
    _emit(text, args)
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def cmd_hasse(args) -> int:
    failed = _check_cap("hasse", args.max_len)
    if failed is not None:
        return failed
    members = lawcheck.enumerate_universe(args.max_len).members
    covers = lawcheck.covering_pairs(args.max_len)
    lines = ["digraph grainy_order {", "  rankdir=TB;"]
    lines.extend(f'  "{render(x)}";' for x in members)
    lines.extend(f'  "{render(upper)}" -> "{render(lower)}";' for upper, lower in covers)
    lines.append("}")
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_fuzzy_show(args) -> int:
    a = _load_set(args.set)
    width = max((len(label) for label in a.domain), default=0)
    lines = [f"set {a.name}"]
    lines.extend(f"{label:<{width}}  {render(a.membership[label])}" for label in a.domain)
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_fuzzy_op(args) -> int:
    a = _load_set(args.left)
    b = _load_set(args.right)
    op = fuzzy.pointwise_add if args.op == "add" else fuzzy.pointwise_mul
    try:
        result = op(a, b)
    except fuzzy.DomainMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(fuzzy.store(result), args)
    return EXIT_OK


def cmd_fuzzy_supp(args) -> int:
    a = _load_set(args.set)
    mask = _parse_literal_arg(args.mask, "mask literal")
    _emit(fuzzy.store(fuzzy.supplement_set(a, mask)), args)
    return EXIT_OK


def cmd_fuzzy_check_supp(args) -> int:
    a = _load_set(args.set)
    b = _load_set(args.expected)
    mask = _parse_literal_arg(args.mask, "mask literal")
    try:
        fuzzy._require_same_domain(a, b)
    except fuzzy.DomainMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    supped = fuzzy.supplement_set(a, mask)
    if supped == b:
        _emit(f"PASS: {b.name} = supp({a.name}, {render(mask)})\n", args)
        return EXIT_OK
    for label in a.domain:
        if supped.membership[label] != b.membership[label]:
            _emit(
                f"FAIL: at label {label!r}: supp({a.name}, {render(mask)}) gives "
                f"{render(supped.membership[label])}, {b.name} has "
                f"{render(b.membership[label])}\n",
                args,
            )
            break
    return EXIT_VERIFY


def _wrap_fuzzy(args) -> int:
    handler = {
        "show": cmd_fuzzy_show,
        "op": cmd_fuzzy_op,
        "supp": cmd_fuzzy_supp,
        "check-supp": cmd_fuzzy_check_supp,
    }[args.fuzzy_command]
    try:
        return handler(args)
    except FileNotFoundError as exc:
        return _usage_error(f"cannot read {exc.filename!r}")
    except fuzzy.FuzzySetFormatError as exc:
        return _usage_error(str(exc))
    except ExpressionError as exc:
        return _usage_error(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grainy",
        description="Grainy numbers: evaluate expressions, inspect the "
                    "lattice, and operate on grainy fuzzy sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval",
        help="evaluate an expression over grainy literals",
        description="Operators: + (addition), * (multiplication), supp(x, k), "
                    "and >= at top level. Literals use canonical notation; "
                    "the degree mark may be typed as ' (e.g. 1'3' for 1°3°).",
    )
    p_eval.add_argument("expression")
    p_eval.add_argument("--output", metavar="FILE")
    p_eval.set_defaults(func=cmd_eval)

    p_table = sub.add_parser("table", help="notation table of a bounded universe")
    p_table.add_argument("max_len", type=int)
    p_table.add_argument("--output", metavar="FILE")
    p_table.set_defaults(func=cmd_table)

    p_laws = sub.add_parser("laws", help="exhaustive law report over a bounded universe")
    p_laws.add_argument("max_len", type=int)
    p_laws.add_argument("--format", choices=("text", "machine"), default="text")
    p_laws.add_argument("--force", action="store_true",
                        help="allow max_len beyond the safety cap")
    p_laws.add_argument("--output", metavar="FILE")
    p_laws.set_defaults(func=cmd_laws)

    p_hasse = sub.add_parser("hasse", help="covering relations as a dot graph")
    p_hasse.add_argument("max_len", type=int)
    p_hasse.add_argument("--output", metavar="FILE")
    p_hasse.set_defaults(func=cmd_hasse)

    p_fuzzy = sub.add_parser("fuzzy", help="operate on fuzzy-set files")
    fsub = p_fuzzy.add_subparsers(dest="fuzzy_command", required=True)

    p_show = fsub.add_parser("show", help="render a set as a table")
    p_show.add_argument("set")
    p_show.add_argument("--output", metavar="FILE")

    p_op = fsub.add_parser("op", help="pointwise addition or multiplication")
    p_op.add_argument("op", choices=("add", "mul"))
    p_op.add_argument("left")
    p_op.add_argument("right")
    p_op.add_argument("--output", metavar="FILE")

    p_supp = fsub.add_parser("supp", help="supplement a set along a mask")
    p_supp.add_argument("set")
    p_supp.add_argument("mask")
    p_supp.add_argument("--output", metavar="FILE")

    p_check = fsub.add_parser("check-supp",
                              help="verify one set is the supplement of another")
    p_check.add_argument("set")
    p_check.add_argument("expected")
    p_check.add_argument("mask")
    p_check.add_argument("--output", metavar="FILE")

    p_fuzzy.set_defaults(func=_wrap_fuzzy)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: ``tekum <subcommand> ...``.

Exit codes: 0 success, 1 property failure, 2 usage or parse error,
3 unsupported width, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from . import metrics, oracle
from .codec import decode, decode_fields, encode
from .errors import (
    InvalidCharacter,
    OddLength,
    SpecialOnly,
    UnsupportedLength,
    WidthTooLarge,
)
from .tables import COLUMNS, decode_table, paint, render_text, split_anchor
from .ternary import TritString
from .values import TekumValue, parse_value, to_decimal, total_compare

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WIDTH, EXIT_IO = range(5)
MAX_TEXT_TABLE_WIDTH = 8


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def use_colour(mode: str, stream=None) -> bool:
    if mode == "always":
        return True
    if mode == "never":
        return False
    stream = stream or sys.stdout
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _parse_trits(text: str) -> TritString:
    try:
        return TritString.parse(text)
    except InvalidCharacter as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {output}: {exc}", EXIT_IO) from None


# -- subcommands --------------------------------------------------------------

def cmd_decode(args) -> int:
    t = _parse_trits(args.trits)
    n = len(t)
    try:
        fields = decode_fields(t)
    except (UnsupportedLength, OddLength) as exc:
        raise CliError(str(exc), EXIT_WIDTH) from None
    colour = use_colour(args.color)
    lines = [("t", str(t)), ("iota", str(int(t)))]
    if isinstance(fields, TekumValue):
        lines += [("value", str(fields)), ("decimal", to_decimal(fields))]
    else:
        reg, exp, frac = split_anchor(fields, n)
        if colour:
            anchor_text = paint(reg, "regime") + paint(exp, "exponent") + paint(frac, "fraction")
        else:
            anchor_text = reg + exp + frac
        value = TekumValue.of(fields.value)
        lines += [
            ("s", str(fields.s)),
            ("anchor", anchor_text),
            ("regime", paint(str(fields.regime_trits), "regime") if colour else str(fields.regime_trits)),
            ("exponent", paint(str(fields.exponent_trits), "exponent") if colour else str(fields.exponent_trits)),
            ("fraction", paint(str(fields.fraction_trits), "fraction") if colour else str(fields.fraction_trits)),
            ("r", str(fields.r)),
            ("c", str(fields.c)),
            ("p", str(fields.p)),
            ("b", str(fields.b)),
            ("e", str(fields.e)),
            ("f", str(fields.f)),
            ("value", str(fields.value)),
            ("decimal", to_decimal(value)),
        ]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([k for k, _ in lines])
        w.writerow([v for _, v in lines])
        _emit(buf.getvalue(), None)
    else:
        _emit("\n".join(f"{k:<9}{v}" for k, v in lines), None)
    return EXIT_OK


def cmd_encode(args) -> int:
    try:
        v = parse_value(args.value)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    try:
        t = encode(v, args.n)
    except (UnsupportedLength, SpecialOnly) as exc:
        raise CliError(str(exc), EXIT_WIDTH) from None
    got = decode(t)
    if v.is_special or got.is_special:
        error = "0" if total_compare(v, got) == 0 else "undefined"
    else:
        error = str(got.as_fraction() - v.as_fraction())
    _emit(f"{t}\nvalue    {got}\ndecimal  {to_decimal(got, args.digits)}\nerror    {error}", None)
    return EXIT_OK


def cmd_table(args) -> int:
    n = args.n
    if n != 1 and (n < 2 or n % 2):
        raise CliError(f"unsupported width {n}: tekums need an even width", EXIT_WIDTH)
    limit = MAX_TEXT_TABLE_WIDTH if args.format == "text" else oracle.MAX_ENUM_WIDTH
    if n > limit:
        raise CliError(f"width {n} too large for {args.format} output (max {limit})", EXIT_WIDTH)
    rows = decode_table(n, positive_only=args.positive_only)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = render_text(rows, colour=use_colour(args.color) and args.output is None)
    _emit(text, args.output)
    return EXIT_OK


def cmd_mappings(args) -> int:
    if (args.format or "csv") == "csv":
        _emit(metrics.mappings_csv(), args.output)
        return EXIT_OK
    lines = []
    for fam in metrics.builtin_families():
        lines.append(f"{fam.label}")
        for row in metrics.range_table(fam):
            lines.append(
                f"  |r|={row.abs_r} c={row.c} b={row.b} e={row.e_min}..{row.e_max} "
                f"lg={metrics.lg_label(row.lg_min)}..{metrics.lg_label(row.lg_max)}"
            )
    _emit("\n".join(lines), args.output)
    return EXIT_OK


def cmd_dynrange(args) -> int:
    if args.max_n < 2:
        raise CliError("--max-n must be at least 2", EXIT_WIDTH)
    _emit(metrics.dynrange_csv(args.max_n), args.output)
    return EXIT_OK


def cmd_overhead(args) -> int:
    try:
        text = metrics.overhead_csv(args.n)
    except UnsupportedLength as exc:
        raise CliError(str(exc), EXIT_WIDTH) from None
    _emit(text, args.output)
    return EXIT_OK


def _parse_width_spec(spec: str) -> tuple[list[int], list[tuple[int, int]]]:
    widths, pairs = [], []
    try:
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            if ":" in item:
                a, b = item.split(":")
                pairs.append((int(a), int(b)))
            else:
                widths.append(int(item))
    except ValueError:
        raise CliError(f"bad width list {spec!r}", EXIT_USAGE) from None
    return widths, pairs


def _truncation_pairs(widths, pairs):
    if pairs:
        return pairs
    ws = sorted(set(widths))
    return [(n, m) for n in ws for m in ws if 4 <= m < n]


def _run_checks(name: str, widths, pairs, seed: int) -> list[oracle.PropertyReport]:
    plain = widths or sorted({n for n, _ in pairs})
    reports = []
    names = oracle.PROPERTIES if name == "all" else (name,)
    for prop in names:
        if prop in ("uniqueness", "negation", "monotonicity", "roundtrip"):
            reports.append(oracle.check_property(prop, plain))
        elif prop == "truncation":
            tp = _truncation_pairs(widths, pairs)
            if tp:
                reports.append(oracle.check_truncation(tp))
        elif prop == "encode_nearest":
            reports.append(oracle.check_encode_nearest(plain, seed=seed))
        elif prop == "double_rounding":
            reports.append(oracle.check_double_rounding())
        elif prop == "divisibility":
            reports.append(oracle.check_divisibility(200))
    return reports


def cmd_check(args) -> int:
    widths, pairs = _parse_width_spec(args.n)
    for n in widths + [w for p in pairs for w in p]:
        if n < 2 or n % 2:
            raise CliError(f"unsupported width {n}", EXIT_WIDTH)
    try:
        reports = _run_checks(args.property, widths, pairs, args.seed)
    except (WidthTooLarge, UnsupportedLength) as exc:
        raise CliError(str(exc), EXIT_WIDTH) from None
    for rep in reports:
        _emit(rep.to_text(args.max_failures), None)
        for key, val in rep.notes.items():
            print(f"# {rep.name}: {key}={val}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--color", "--colour", dest="color", default="auto",
                        choices=("auto", "always", "never"))
    common.add_argument("--format", default=None, choices=("text", "csv"),
                        help="output format (default: csv for mappings, text otherwise)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="tekum", description="Balanced ternary tekum tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", parents=[common], help="decode a trit string")
    p.add_argument("trits")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", parents=[common], help="round a value to n trits")
    p.add_argument("value", help="decimal, p/q, NaR, Inf or 0")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--digits", type=int, default=2)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("table", parents=[common], help="full decoding table")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--positive-only", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("mappings", parents=[common], help="regime mapping families")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mappings)

    p = sub.add_parser("dynrange", parents=[common], help="dynamic range per width (CSV)")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dynrange)

    p = sub.add_parser("overhead", parents=[common], help="non-fraction overhead per exponent (CSV)")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_overhead)

    p = sub.add_parser("check", parents=[common], help="run property checks")
    p.add_argument("--property", default="all", choices=("all",) + oracle.PROPERTIES)
    p.add_argument("--n", default="4,6,8", help="widths 'a,b,c' or pairs 'n:m'")
    p.add_argument("--max-failures", type=int, default=None)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None and args.command != "mappings":
        args.format = "text"
    try:
        return args.func(args)
    except CliError as exc:
        print(f"tekum: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

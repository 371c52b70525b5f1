"""Full decoding tables, one row per trit string, plus truecolor field highlighting."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .codec import TekumFields, decode_fields
from .ternary import TritString, max_magnitude
from .values import TekumValue, to_decimal

OVERLINE = "̅"

# truecolor sRGB of the regime / exponent / fraction fields
COLOURS = {
    "regime": (0x04, 0x6F, 0x87),
    "exponent": (0x83, 0x4F, 0x78),
    "fraction": (0x63, 0x63, 0x63),
}
COLUMNS = ("t", "iota", "s", "anchor", "regime", "r", "c", "exponent", "b", "e",
           "p", "fraction", "f", "one_plus_f", "value")
HEADERS = ("t", "ι(t)", "s", "anchor(t)", "r", "r", "o", "e", "b", "e", "p", "f",
           "f", "1+f", "tekum(t)")


def paint(text: str, field: str) -> str:
    if not text:
        return text
    r, g, b = COLOURS[field]
    return f"\x1b[38;2;{r};{g};{b}m{text}\x1b[0m"


def short_decimal(q: Fraction) -> str:
    """One decimal place, half-to-even; an overline marks an inexact (repeating) value.

    ``-1/3`` prints as ``-0.3̄`` and ``2/3`` as ``0.7̄``.
    """
    tenths = q * 10
    rounded = round(tenths)
    sign = "-" if rounded < 0 or (rounded == 0 and q < 0) else ""
    whole, frac = divmod(abs(rounded), 10)
    text = f"{sign}{whole}.{frac}"
    if tenths != rounded:
        text += OVERLINE
    return text


def value_label(v: TekumValue, digits: int = 2) -> str:
    if v.is_infinite:
        return "∞"
    return to_decimal(v, digits)


class TableRow(NamedTuple):
    t: str
    iota: str
    s: str
    anchor: str
    regime: str
    r: str
    c: str
    exponent: str
    b: str
    e: str
    p: str
    fraction: str
    f: str
    one_plus_f: str
    value: str


def table_row(t: TritString) -> TableRow:
    fields = decode_fields(t)
    if isinstance(fields, TekumValue):
        blank = [""] * 12
        return TableRow(str(t), str(int(t)), *blank, value_label(fields))
    return TableRow(
        str(t),
        str(int(t)),
        str(fields.s),
        str(fields.anchor),
        str(fields.regime_trits),
        str(fields.r),
        str(fields.c),
        str(fields.exponent_trits),
        str(fields.b),
        str(fields.e),
        str(fields.p),
        str(fields.fraction_trits),
        short_decimal(fields.f),
        short_decimal(1 + fields.f),
        value_label(TekumValue.of(fields.value)),
    )


def decode_table(n: int, positive_only: bool = False) -> list[TableRow]:
    """One row per ``n``-trit string in increasing order.

    ``positive_only`` keeps integer values from -1 upward: the positive half
    plus the string just below zero.
    """
    h = max_magnitude(n)
    start = -1 if positive_only else -h
    return [table_row(TritString.from_int(v, n)) for v in range(max(start, -h), h + 1)]


def split_anchor(fields: TekumFields, n: int) -> tuple[str, str, str]:
    """Regime, exponent and fraction segments of the stored (unextended) anchor."""
    a = str(fields.anchor)
    ce = min(fields.c, max(0, n - 3))
    return a[:3], a[3:3 + ce], a[3 + ce:]


def render_text(rows: list[TableRow], colour: bool = False) -> str:
    cells = [list(HEADERS)] + [list(r) for r in rows]
    widths = [max(len(_visible(c[i])) for c in cells) for i in range(len(HEADERS))]
    coloured = {"regime": 4, "exponent": 7, "fraction": 11}
    out = []
    for k, row in enumerate(cells):
        parts = []
        for i, cell in enumerate(row):
            pad = " " * (widths[i] - len(_visible(cell)))
            if colour and k > 0:
                for fname, idx in coloured.items():
                    if i == idx:
                        cell = paint(cell, fname)
                if i == 3 and cell:
                    cell = _paint_anchor(rows[k - 1])
            parts.append(cell + pad)
        out.append("  ".join(parts).rstrip())
    return "\n".join(out)


def _visible(text: str) -> str:
    return text.replace(OVERLINE, "")


def _paint_anchor(row: TableRow) -> str:
    a = row.anchor
    ce = min(int(row.c), max(0, len(a) - 3))
    return paint(a[:3], "regime") + paint(a[3:3 + ce], "exponent") + paint(a[3 + ce:], "fraction")

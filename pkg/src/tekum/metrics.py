"""Design-space analysis: regime mapping families, exponent ranges, dynamic
range per width, non-fraction overhead, and a few scalar helpers.

CSV helpers emit the ``mappings``, ``dynrange`` and ``overhead`` schemas used
by the command line tool.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .codec import check_width, decode, decode_fields
from .errors import DomainError, UnsupportedLength
from .ternary import TritString, max_magnitude

LOG10_3 = math.log10(3)
LOG2_3 = math.log2(3)


def _half_span(c: int) -> int:
    return (3**c - 1) // 2


def _alternating(c: int) -> TritString:
    """``T1T1...`` of length ``c``: the exponent trits of the largest anchor."""
    return TritString((-1 if i % 2 == 0 else 1) for i in range(c))


@dataclass(frozen=True)
class MappingFamily:
    """Exponent trit counts per regime magnitude ``|r| = 0..7``."""

    name: str
    counts: tuple[int, ...]
    label: str = ""
    biases: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        c = tuple(self.counts)
        if len(c) != 8 or c[0] != 0:
            raise ValueError(f"{self.name}: need 8 counts starting at 0")
        if any(b - a not in (0, 1) for a, b in zip(c, c[1:])):
            raise ValueError(f"{self.name}: consecutive counts must differ by 0 or 1")
        biases = [0]
        for k in range(1, 8):
            biases.append(biases[-1] + _half_span(c[k - 1]) + _half_span(c[k]) + 1)
        object.__setattr__(self, "counts", c)
        object.__setattr__(self, "biases", tuple(biases))


_BUILTIN = (
    MappingFamily("absr", (0, 1, 2, 3, 4, 5, 6, 7), "|r|"),
    MappingFamily("max0r1", (0, 0, 1, 2, 3, 4, 5, 6), "max(0,|r|-1)"),
    MappingFamily("alpha", (0, 0, 1, 1, 2, 3, 4, 5), "alpha"),
    MappingFamily("max0r2", (0, 0, 0, 1, 2, 3, 4, 5), "max(0,|r|-2)"),
    MappingFamily("beta", (0, 0, 0, 1, 1, 2, 3, 4), "beta"),
    MappingFamily("max0r3", (0, 0, 0, 0, 1, 2, 3, 4), "max(0,|r|-3)"),
    MappingFamily("gamma", (0, 0, 0, 0, 1, 1, 2, 3), "gamma"),
)


def builtin_families() -> list[MappingFamily]:
    return list(_BUILTIN)


def family(name: str) -> MappingFamily:
    for fam in _BUILTIN:
        if fam.name == name:
            return fam
    raise KeyError(name)


class RangeRow(NamedTuple):
    abs_r: int
    c: int
    b: int
    e_min: int
    e_max: int
    lg_min: float
    lg_max: float
    e_min_trits: str
    e_max_trits: str


def range_table(fam: MappingFamily | str) -> list[RangeRow]:
    """Exponent range for each ``|r|``; ``fam`` may be a family or its name.

    The top regime is capped by the largest finite anchor ``1T1T...1T01``,
    whose exponent trits read ``T1T1...`` once the width is large enough.
    """
    if isinstance(fam, str):
        fam = family(fam)
    rows = []
    for k, (c, b) in enumerate(zip(fam.counts, fam.biases)):
        lo_trits = TritString((-1,) * c)
        hi_trits = _alternating(c) if k == 7 else TritString((1,) * c)
        e_min, e_max = b + int(lo_trits), b + int(hi_trits)
        rows.append(
            RangeRow(k, c, b, e_min, e_max, e_min * LOG10_3, e_max * LOG10_3,
                     str(lo_trits), str(hi_trits))
        )
    return rows


def lg_label(x: float) -> str:
    """Short label for a decimal logarithm: one decimal below 10, integer above."""
    if x == 0:
        return "0"
    if abs(x) < 10:
        return f"{x:.1f}"
    return f"{x:.0f}"


def max_exponent(fam: MappingFamily) -> int:
    return range_table(fam)[-1].e_max


def dynamic_range(n: int) -> tuple[Fraction, Fraction]:
    """Smallest positive and largest finite value of ``n``-trit tekums."""
    check_width(n, allow_one=False)
    h = max_magnitude(n)
    lo = decode(TritString.from_int(1, n)).as_fraction()
    hi = decode(TritString.from_int(h - 1, n)).as_fraction()
    return lo, hi


def dynamic_range_exponents(n: int) -> tuple[int, int]:
    check_width(n, allow_one=False)
    h = max_magnitude(n)
    return (decode_fields(TritString.from_int(1, n)).e,
            decode_fields(TritString.from_int(h - 1, n)).e)


def log10_fraction(q: Fraction) -> float:
    q = abs(q)
    return math.log10(q.numerator) - math.log10(q.denominator)


def regime_of_exponent(e: int) -> int:
    """Regime value whose exponent range contains ``e`` (standard mapping)."""
    for row in range_table(family("max0r2")):
        if row.b - _half_span(row.c) <= abs(e) <= row.b + _half_span(row.c):
            return row.abs_r if e >= 0 else -row.abs_r
    raise ValueError(f"exponent {e} is outside every regime")


class OverheadRow(NamedTuple):
    e: int
    log10_lo: float
    log10_hi: float
    trits: int
    bits: float


def overhead_profile(n: int) -> list[OverheadRow]:
    """Non-fraction trits (regime plus exponent) for every exponent at width ``n``.

    Row ``e`` covers ``|x|`` in ``[0.5 * 3**e, 1.5 * 3**e)``.
    """
    if n < 8 or n % 2:
        raise UnsupportedLength(f"overhead profile needs an even width >= 8, got {n}")
    e_lo, e_hi = dynamic_range_exponents(n)
    base = math.log10(0.5)
    rows = []
    for e in range(e_lo, e_hi + 1):
        trits = 3 + max(0, abs(regime_of_exponent(e)) - 2)
        rows.append(OverheadRow(e, base + e * LOG10_3, base + (e + 1) * LOG10_3,
                                trits, trits * LOG2_3))
    return rows


def trits_to_bits(n: float) -> float:
    return n * LOG2_3


def radix_economy(b, n: int):
    """Digits needed to write ``n`` in base ``b``, times ``b``."""
    if not b > 1:
        raise DomainError(f"base must exceed 1, got {b}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    digits, power = 1, b
    while power <= n:
        digits += 1
        power *= b
    return digits * b


@dataclass(frozen=True)
class DivisibilityResult:
    n_max: int
    counterexamples: tuple[tuple[str, int], ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def divisibility_check(n_max: int) -> DivisibilityResult:
    """Check ``4 | 3**(2k) - 5`` and ``4 ∤ 3**k - 4`` for ``1 <= k <= n_max``."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    bad = []
    for k in range(1, n_max + 1):
        if (3 ** (2 * k) - 5) % 4 != 0:
            bad.append(("4 | 3^(2k)-5", k))
        if (3**k - 4) % 4 == 0:
            bad.append(("4 !| 3^k-4", k))
    return DivisibilityResult(n_max, tuple(bad))


# -- CSV emitters -------------------------------------------------------------

def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _f(x: float) -> str:
    return f"{x:.6f}"


def mappings_csv(families: Sequence[MappingFamily] | None = None) -> str:
    rows = []
    for fam in families or builtin_families():
        for row in range_table(fam):
            rows.append([fam.name, row.abs_r, row.c, row.b, row.e_min, row.e_max,
                         _f(row.lg_min), _f(row.lg_max)])
    return _csv(["family", "abs_r", "c", "b", "e_min", "e_max", "lg_min", "lg_max"], rows)


def dynrange_csv(max_n: int, min_n: int = 2) -> str:
    rows = []
    for n in range(max(2, min_n + min_n % 2), max_n + 1, 2):
        lo, hi = dynamic_range(n)
        rows.append([n, _f(log10_fraction(lo)), _f(log10_fraction(hi))])
    return _csv(["n", "min_pos_log10", "max_log10"], rows)


def overhead_csv(n: int) -> str:
    rows = [[r.e, _f(r.log10_lo), _f(r.log10_hi), r.trits, _f(r.bits)]
            for r in overhead_profile(n)]
    return _csv(["e", "log10_lo", "log10_hi", "trits", "bits"], rows)

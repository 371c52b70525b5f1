"""Brute-force ground truth and exhaustive property checks.

The nearest-value oracle is a plain linear scan over every encoding of a
width. It shares nothing with :func:`tekum.codec.encode` except ``decode``.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import codec
from .codec import anchor_offset, decode, encode, extend, truncate_round
from .errors import UnsupportedLength, WidthTooLarge
from .metrics import divisibility_check
from .ternary import TritString, max_magnitude
from .values import TekumValue, total_compare

MAX_ENUM_WIDTH = 12
PROPERTIES = (
    "uniqueness",
    "negation",
    "monotonicity",
    "roundtrip",
    "truncation",
    "encode_nearest",
    "double_rounding",
    "divisibility",
)


def _check_enum_width(n: int) -> None:
    if n > MAX_ENUM_WIDTH:
        raise WidthTooLarge(f"refusing to enumerate 3**{n} strings (cap is {MAX_ENUM_WIDTH})")
    if n < 2 or n % 2:
        raise UnsupportedLength(f"enumeration needs an even width >= 2, got {n}")


def enumerate_width(n: int) -> list[tuple[TritString, TekumValue]]:
    """All ``3**n`` strings in increasing integer order, with decoded values."""
    _check_enum_width(n)
    h = max_magnitude(n)
    out = []
    for v in range(-h, h + 1):
        t = TritString.from_int(v, n)
        out.append((t, decode(t)))
    return out


@functools.lru_cache(maxsize=None)
def _scan_table(n: int) -> tuple[int, tuple[tuple[int, int, int], ...]]:
    """(common denominator, ((numerator, integer value, anchor integer), ...))."""
    entries = [(t, x.as_fraction()) for t, x in enumerate_width(n) if x.is_finite]
    den = max(q.denominator for _, q in entries)
    k = anchor_offset(n)
    rows = tuple((q.numerator * (den // q.denominator), int(t), abs(int(t)) - k)
                 for t, q in entries)
    return den, rows


def nearest_by_search(x, n: int) -> TritString:
    """Nearest finite nonzero ``n``-trit tekum to ``x`` by exhaustive scan.

    Ties go to the even anchor integer. ``x == 0`` maps to the zero encoding.
    """
    _check_enum_width(n)
    q = Fraction(x)
    if q == 0:
        return TritString.zeros(n)
    den, rows = _scan_table(n)
    # |q - N/den| ordered like |q.num * den - q.den * N|
    target = q.numerator * den
    scale = q.denominator
    best_d = best_v = best_a = None
    for num, v, a in rows:
        d = abs(target - scale * num)
        if best_d is None or d < best_d or (d == best_d and a % 2 == 0 and best_a % 2):
            best_d, best_v, best_a = d, v, a
    return TritString.from_int(best_v, n)


def random_rationals(count: int, seed: int = 0) -> list[Fraction]:
    """Signed rationals with log-uniform magnitude, spanning and exceeding the tekum range."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        e = rng.randint(-200, 200)
        num = rng.randint(1, 3 ** rng.randint(1, 20))
        den = rng.randint(1, 3 ** rng.randint(1, 20))
        q = Fraction(num, den) * Fraction(3) ** e
        out.append(-q if rng.random() < 0.5 else q)
    return out


@dataclass
class PropertyReport:
    name: str
    widths: str
    cases: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, inp, expected, actual) -> None:
        self.failures.append((str(inp), str(expected), str(actual)))

    def to_text(self, max_failures: int | None = None) -> str:
        verdict = "pass" if self.passed else "fail"
        lines = [f"PROP {self.name} n={self.widths} cases={self.cases} verdict={verdict}"]
        shown = self.failures if max_failures is None else self.failures[:max_failures]
        lines += [f"FAIL {i} expected={e} actual={a}" for i, e, a in shown]
        return "\n".join(lines)


def _strings(n: int) -> Iterable[TritString]:
    h = max_magnitude(n)
    return (TritString.from_int(v, n) for v in range(-h, h + 1))


def _is_special(t: TritString) -> bool:
    return decode(t).is_special


def check_uniqueness(widths: Sequence[int]) -> PropertyReport:
    rep = PropertyReport("uniqueness", ",".join(map(str, widths)))
    for n in widths:
        seen: dict[TekumValue, TritString] = {}
        for t, x in enumerate_width(n):
            rep.cases += 1
            if x in seen:
                rep.fail(t, f"unique value {x}", f"also encoded by {seen[x]}")
            seen[x] = t
    return rep


def check_negation(widths: Sequence[int]) -> PropertyReport:
    rep = PropertyReport("negation", ",".join(map(str, widths)))
    for n in widths:
        for t, x in enumerate_width(n):
            if x.is_nar or x.is_infinite:
                continue
            rep.cases += 1
            got = decode(-t)
            if got != -x:
                rep.fail(t, -x, got)
    return rep


def check_monotonicity(widths: Sequence[int]) -> PropertyReport:
    rep = PropertyReport("monotonicity", ",".join(map(str, widths)))
    for n in widths:
        table = enumerate_width(n)
        for (t, x), (u, y) in zip(table, table[1:]):
            rep.cases += 1
            if total_compare(x, y) >= 0:
                rep.fail(f"{t}<{u}", f"{x} < {y}", "not increasing")
    return rep


def check_roundtrip(widths: Sequence[int]) -> PropertyReport:
    rep = PropertyReport("roundtrip", ",".join(map(str, widths)))
    for n in widths:
        for t, x in enumerate_width(n):
            rep.cases += 1
            back = encode(x, n)
            if back != t:
                rep.fail(t, t, back)
    return rep


def check_truncation(pairs: Sequence[tuple[int, int]]) -> PropertyReport:
    """Anchor truncation against the brute-force nearest shorter tekum.

    Also counts exact ties met by the oracle (``notes['ties']``).
    """
    rep = PropertyReport("truncation", ",".join(f"{n}:{m}" for n, m in pairs))
    ties = 0
    for n, m in pairs:
        _check_enum_width(n)
        for t, x in enumerate_width(n):
            if x.is_special:
                continue
            rep.cases += 1
            got = truncate_round(t, m)
            want = nearest_by_search(x.value, m)
            if _is_tie(x.value, m, want):
                ties += 1
            if got != want:
                rep.fail(t, want, got)
    rep.notes["ties"] = ties
    return rep


def _is_tie(q: Fraction, m: int, chosen: TritString) -> bool:
    v = int(chosen)
    d = abs(q - decode(chosen).value)
    h = max_magnitude(m)
    for w in (v - 1, v + 1):
        if 0 < abs(w) < h and abs(q - codec.value_of_int(w, m).value) == d:
            return True
    return False


def check_encode_nearest(widths: Sequence[int], seed: int = 0,
                         samples: int = 10_000, source_width: int = 8) -> PropertyReport:
    """``encode`` against the linear-scan oracle.

    Inputs: every finite value of ``source_width`` trits (widths below it), or
    every finite value of the width itself, plus ``samples`` seeded random
    rationals per width.
    """
    rep = PropertyReport("encode_nearest", ",".join(map(str, widths)))
    for n in widths:
        src = source_width if n < source_width else n
        exact = [x.value for _, x in enumerate_width(src) if x.is_finite]
        for q in exact + random_rationals(samples, seed + n):
            rep.cases += 1
            got = encode(TekumValue.of(q), n)
            want = nearest_by_search(q, n)
            if got != want:
                rep.fail(q, want, got)
    return rep


def check_double_rounding(n: int = 10, steps: Sequence[int] = (8, 4)) -> PropertyReport:
    """Stepwise anchor truncation equals direct truncation, for every ``n``-trit input."""
    rep = PropertyReport("double_rounding", "->".join(map(str, (n, *steps))))
    h = max_magnitude(n)
    for v in range(-h + 1, h):
        if v == 0:
            continue
        t = TritString.from_int(v, n)
        rep.cases += 1
        stepwise = t
        for m in steps:
            stepwise = truncate_round(stepwise, m)
        direct = truncate_round(t, steps[-1])
        if stepwise != direct:
            rep.fail(t, direct, stepwise)
    return rep


def check_extend_truncate(widths: Sequence[int]) -> PropertyReport:
    rep = PropertyReport("extend_truncate", ",".join(map(str, widths)))
    for n in widths:
        for t, x in enumerate_width(n):
            if x.is_special:
                continue
            rep.cases += 1
            wide = extend(t, n + 2)
            back = truncate_round(wide, n)
            if back != t or decode(wide) != x:
                rep.fail(t, t, back)
    return rep


def check_divisibility(n_max: int = 200) -> PropertyReport:
    res = divisibility_check(n_max)
    rep = PropertyReport("divisibility", f"1..{n_max}", cases=n_max)
    for claim, k in res.counterexamples:
        rep.fail(f"k={k}", claim, "violated")
    return rep


def check_property(name: str, widths: Sequence = (), seed: int = 0) -> PropertyReport:
    """Run one named check. ``widths`` holds ints, or ``(n, m)`` pairs for truncation."""
    if name == "uniqueness":
        return check_uniqueness(widths)
    if name == "negation":
        return check_negation(widths)
    if name == "monotonicity":
        return check_monotonicity(widths)
    if name == "roundtrip":
        return check_roundtrip(widths)
    if name == "truncation":
        return check_truncation(widths)
    if name == "encode_nearest":
        return check_encode_nearest(widths, seed=seed)
    if name == "double_rounding":
        return check_double_rounding()
    if name == "divisibility":
        return check_divisibility(max(widths) if widths else 200)
    raise KeyError(f"unknown property {name!r}")

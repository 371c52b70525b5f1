"""Extended-real values produced by tekum decoding, with a total order."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class Kind(enum.IntEnum):
    # ordinal order doubles as the coarse total order (finite/zero refined by value)
    NAR = 0
    ZERO = 1
    FINITE = 2
    INFINITY = 3


@functools.total_ordering
@dataclass(frozen=True)
class TekumValue:
    """Tagged value: NaR, zero, (projective) infinity, or a nonzero exact rational."""

    kind: Kind
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind is Kind.FINITE:
            if self.value is None or self.value == 0:
                raise ValueError("finite tekum values must be nonzero rationals")
            if not isinstance(self.value, Fraction):
                object.__setattr__(self, "value", Fraction(self.value))
        elif self.value is not None:
            raise ValueError(f"{self.kind.name} carries no value")

    @classmethod
    def of(cls, x) -> "TekumValue":
        """Build a value from a rational (``0`` becomes :data:`ZERO`) or a special name."""
        if isinstance(x, TekumValue):
            return x
        if isinstance(x, str):
            return parse_value(x)
        if isinstance(x, float):
            if x != x:
                return NAR
            if x in (float("inf"), float("-inf")):
                return INF
        if not isinstance(x, (Rational, float)):
            x = Fraction(x)
        q = Fraction(x)
        return ZERO if q == 0 else cls(Kind.FINITE, q)

    @property
    def is_nar(self) -> bool:
        return self.kind is Kind.NAR

    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.ZERO

    @property
    def is_infinite(self) -> bool:
        return self.kind is Kind.INFINITY

    @property
    def is_finite(self) -> bool:
        return self.kind is Kind.FINITE

    @property
    def is_special(self) -> bool:
        return self.kind is not Kind.FINITE

    def as_fraction(self) -> Fraction:
        if self.kind is Kind.ZERO:
            return Fraction(0)
        if self.kind is Kind.FINITE:
            return self.value
        raise ValueError(f"{self.kind.name} has no rational value")

    def __neg__(self) -> "TekumValue":
        if self.kind is Kind.FINITE:
            return TekumValue(Kind.FINITE, -self.value)
        return self

    def __lt__(self, other) -> bool:
        if not isinstance(other, TekumValue):
            return NotImplemented
        return total_compare(self, other) < 0

    def __float__(self) -> float:
        if self.kind is Kind.NAR:
            return float("nan")
        if self.kind is Kind.INFINITY:
            return float("inf")
        return float(self.as_fraction())

    def __str__(self) -> str:
        if self.kind is Kind.FINITE:
            return str(self.value)
        return {Kind.NAR: "NaR", Kind.ZERO: "0", Kind.INFINITY: "Inf"}[self.kind]


NAR = TekumValue(Kind.NAR)
ZERO = TekumValue(Kind.ZERO)
INF = TekumValue(Kind.INFINITY)


def _rank(v: TekumValue) -> tuple[int, Fraction]:
    if v.kind is Kind.NAR:
        return (0, Fraction(0))
    if v.kind is Kind.INFINITY:
        return (2, Fraction(0))
    return (1, v.as_fraction())


def total_compare(a: TekumValue, b: TekumValue) -> int:
    """-1, 0 or 1. NaR is below everything, infinity above everything else."""
    ra, rb = _rank(a), _rank(b)
    return (ra > rb) - (ra < rb)


_SPECIAL_NAMES = {
    "nar": NAR,
    "nan": NAR,
    "inf": INF,
    "+inf": INF,
    "-inf": INF,
    "infinity": INF,
    "∞": INF,
}


def parse_value(text: str) -> TekumValue:
    """Parse ``NaR``, ``Inf``, a decimal such as ``-1.5e3``, or a ratio ``p/q``."""
    s = text.strip()
    special = _SPECIAL_NAMES.get(s.lower())
    if special is not None:
        return special
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse value {text!r}") from exc
    return TekumValue.of(q)


def _floor_log10(q: Fraction) -> int:
    """Exact floor(log10(q)) for q > 0."""
    k = (q.numerator.bit_length() - q.denominator.bit_length()) * 30103 // 100000
    while True:
        lo = Fraction(10) ** k
        if q < lo:
            k -= 1
        elif q >= lo * 10:
            k += 1
        else:
            return k


def to_decimal(v: TekumValue, significant_digits: int = 2) -> str:
    """Scientific notation rounded half-to-even, e.g. ``9.9e-53``."""
    if significant_digits < 1:
        raise ValueError("need at least one significant digit")
    if v.kind is not Kind.FINITE:
        return str(v)
    q = v.value
    sign = "-" if q < 0 else ""
    q = abs(q)
    k = _floor_log10(q)
    scaled = q / Fraction(10) ** (k - significant_digits + 1)
    m = round(scaled)  # Fraction.__round__ is half-to-even
    if m == 10**significant_digits:
        m //= 10
        k += 1
    digits = str(m)
    body = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
    return f"{sign}{body}e{k}"

"""Tekum encoding: anchor function, field decoding, rounding encoder.

An ``n``-trit tekum ``t`` (``n`` even) is decoded through its *anchor*
``|t| - 1T...1T``. The anchor is zero-extended to at least 8 trits and split
into 3 regime trits, ``c = max(0, |r| - 2)`` exponent trits and the remaining
fraction trits. The value is ``s * (1 + f) * 3**e``. The raw strings
``T...T``, ``0...0`` and ``1...1`` are NaR, zero and infinity.

All arithmetic is exact (Python integers and :class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadWidth,
    NotRepresentable,
    OddLength,
    SpecialInput,
    SpecialOnly,
    UnsupportedLength,
)
from .ternary import TritString, balanced_divmod, max_magnitude
from .values import INF, NAR, ZERO, Kind, TekumValue

REGIME_TRITS = 3
FIELD_WIDTH = 8
BIAS = (0, 1, 2, 4, 10, 28, 82, 244)
MIN_EXPONENT = -183
MAX_EXPONENT = 183


def anchor_offset(n: int) -> int:
    """Integer value of the alternating string ``1T1T...1T`` of length ``n``."""
    return (3**n - 1) // 4


def check_width(n: int, *, allow_one: bool = True) -> None:
    if n == 1 and allow_one:
        return
    if n < 2 or n % 2:
        raise UnsupportedLength(f"tekums need an even width >= 2, got {n}")


def exponent_bias(r: int) -> int:
    if not -7 <= r <= 7:
        raise ValueError(f"regime value out of range: {r}")
    return BIAS[r] if r >= 0 else -BIAS[-r]


def regime_trit_count(r: int) -> int:
    return max(0, abs(r) - 2)


# -- integer-level kernels (hot paths of the exhaustive sweeps) ---------------

def _special_of(v: int, n: int) -> TekumValue | None:
    h = max_magnitude(n)
    if v == 0:
        return ZERO
    if v == h:
        return INF
    if v == -h:
        return NAR
    return None


def _split(v: int, n: int) -> tuple[int, int, int, int, int, int]:
    """(sign, regime, c, full fraction width, exponent-trit int, fraction-trit int)."""
    s = 1 if v > 0 else -1
    w = max(n, FIELD_WIDTH)
    a = (abs(v) - anchor_offset(n)) * 3 ** (w - n)
    r, rest = balanced_divmod(a, 3 ** (w - REGIME_TRITS))
    c = max(0, abs(r) - 2)
    pf = w - REGIME_TRITS - c
    ei, fi = balanced_divmod(rest, 3**pf)
    return s, r, c, pf, ei, fi


def _finite_value(v: int, n: int) -> Fraction:
    s, r, _, pf, ei, fi = _split(v, n)
    e = ei + exponent_bias(r)
    num = s * (3**pf + fi)
    den = 3**pf
    if e >= 0:
        num *= 3**e
    else:
        den *= 3 ** (-e)
    return Fraction(num, den)


def value_of_int(v: int, n: int) -> TekumValue:
    """Decode the ``n``-trit tekum whose integer value is ``v``."""
    special = _special_of(v, n)
    if special is not None:
        return special
    return TekumValue(Kind.FINITE, _finite_value(v, n))


# -- anchor ---------------------------------------------------------------------

def anchor(t: TritString) -> TritString:
    """``|t| - 1T...1T``; defined for even lengths."""
    n = len(t)
    if n % 2:
        raise OddLength(f"anchor needs an even length, got {n}")
    return TritString.from_int(abs(int(t)) - anchor_offset(n), n)


def unanchor(sign: int, a: TritString) -> TritString:
    """Inverse of :func:`anchor` for a given sign of the result."""
    n = len(a)
    if n % 2:
        raise OddLength(f"anchor needs an even length, got {n}")
    if sign == 0:
        return TritString.zeros(n)
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1, 0 or 1, got {sign}")
    mag = int(a) + anchor_offset(n)
    if not 0 < mag <= max_magnitude(n):
        raise NotRepresentable(f"anchor {a} has no {n}-trit preimage with sign {sign}")
    return TritString.from_int(sign * mag, n)


# -- decoding -------------------------------------------------------------------

@dataclass(frozen=True)
class TekumFields:
    """Intermediate quantities of a non-special tekum decode."""

    s: int
    r: int
    c: int
    p: int
    b: int
    e: int
    f: Fraction
    anchor: TritString
    regime_trits: TritString
    exponent_trits: TritString
    fraction_trits: TritString

    @property
    def value(self) -> Fraction:
        return self.s * (1 + self.f) * Fraction(3) ** self.e


def decode_fields(t: TritString) -> TekumFields | TekumValue:
    """Split ``t`` into its fields, or return the special value it encodes.

    ``p`` is the number of fraction trits actually present in ``t``; the
    exponent trits include any zero extension used for widths below 8.
    """
    n = len(t)
    check_width(n)
    v = int(t)
    special = _special_of(v, n)
    if special is not None:
        return special
    s, r, c, pf, ei, fi = _split(v, n)
    p = max(0, n - REGIME_TRITS - c)
    b = exponent_bias(r)
    # fraction trits beyond the stored width are the zero extension
    f_int = fi // 3 ** (pf - p)
    return TekumFields(
        s=s,
        r=r,
        c=c,
        p=p,
        b=b,
        e=ei + b,
        f=Fraction(f_int, 3**p),
        anchor=anchor(t),
        regime_trits=TritString.from_int(r, REGIME_TRITS),
        exponent_trits=TritString.from_int(ei, c),
        fraction_trits=TritString.from_int(f_int, p),
    )


def decode(t: TritString) -> TekumValue:
    n = len(t)
    check_width(n)
    return value_of_int(int(t), n)


# -- encoding -------------------------------------------------------------------

def _encode_positive(x: Fraction, n: int) -> int:
    """Integer value of the nearest positive non-special ``n``-trit tekum."""
    lo, hi = 1, max_magnitude(n) - 1
    if x <= _finite_value(lo, n):
        return lo
    if x >= _finite_value(hi, n):
        return hi
    # invariant: value(lo) < x < value(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        vm = _finite_value(mid, n)
        if vm == x:
            return mid
        if vm < x:
            lo = mid
        else:
            hi = mid
    below = x - _finite_value(lo, n)
    above = _finite_value(hi, n) - x
    if below != above:
        return lo if below < above else hi
    # tie: prefer the even anchor integer
    return lo if (lo - anchor_offset(n)) % 2 == 0 else hi


def encode(v, n: int) -> TritString:
    """Round ``v`` to the nearest ``n``-trit tekum.

    Ties go to the even anchor integer. Finite nonzero inputs saturate at the
    extreme finite tekums and never become zero, infinity or NaR.
    """
    check_width(n)
    v = TekumValue.of(v)
    h = max_magnitude(n)
    if v.kind is Kind.NAR:
        return TritString.from_int(-h, n)
    if v.kind is Kind.ZERO:
        return TritString.zeros(n)
    if v.kind is Kind.INFINITY:
        return TritString.from_int(h, n)
    if n == 1:
        raise SpecialOnly("1-trit tekums only encode NaR, 0 and infinity")
    x = v.value
    u = _encode_positive(abs(x), n)
    return TritString.from_int(u if x > 0 else -u, n)


# -- precision changes ------------------------------------------------------------

def _clamp_anchor(a: int, m: int) -> int:
    # the extreme anchors belong to zero and infinity
    lim = anchor_offset(m) - 1
    return max(-lim, min(lim, a))


def truncate_round(t: TritString, m: int) -> TritString:
    """Shorten ``t`` to ``m`` trits by dropping trailing anchor trits.

    Dropping balanced ternary digits rounds the anchor integer to nearest.
    Results that would land on the zero or infinity encodings are clamped to
    the extreme finite tekum of the same sign.
    """
    n = len(t)
    check_width(n, allow_one=False)
    if m == n:
        return t
    if m % 2 or m < 4 or m > n:
        raise BadWidth(f"cannot truncate {n} trits to {m}")
    v = int(t)
    if _special_of(v, n) is not None:
        raise SpecialInput(f"{t} is a special value; re-encode it directly")
    a = abs(v) - anchor_offset(n)
    q, _ = balanced_divmod(a, 3 ** (n - m))
    q = _clamp_anchor(q, m)
    mag = q + anchor_offset(m)
    return TritString.from_int(mag if v > 0 else -mag, m)


def extend(t: TritString, m: int) -> TritString:
    """Widen ``t`` to ``m`` trits without changing its value."""
    n = len(t)
    check_width(n)
    if m % 2 or m <= n:
        raise BadWidth(f"cannot extend {n} trits to {m}")
    v = int(t)
    special = _special_of(v, n)
    if special is not None:
        return encode(special, m)
    a = (abs(v) - anchor_offset(n)) * 3 ** (m - n)
    mag = a + anchor_offset(m)
    return TritString.from_int(mag if v > 0 else -mag, m)

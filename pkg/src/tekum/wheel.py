"""Exact wheel arithmetic on tekum values and correctly rounded tekum operations.

The value set is the real wheel: rationals plus a single projective infinity
(``1/0``) and the absorbing bottom element NaR (``0/0``). Every operation is
total. Division is multiplication by the reciprocal, and subtraction is
addition of the negation, so the infinity rules follow from those of ``+``,
``*`` and ``inv``.
"""

from __future__ import annotations

import enum

from .codec import decode, encode
from .errors import LengthMismatch
from .ternary import TritString
from .values import INF, NAR, ZERO, Kind, TekumValue


class WheelOp(enum.Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    INV = "inv"
    NEG = "neg"

    @property
    def unary(self) -> bool:
        return self in (WheelOp.INV, WheelOp.NEG)


def _add(a: TekumValue, b: TekumValue) -> TekumValue:
    if a.is_nar or b.is_nar:
        return NAR
    if a.is_infinite and b.is_infinite:
        return NAR
    if a.is_infinite or b.is_infinite:
        return INF
    return TekumValue.of(a.as_fraction() + b.as_fraction())


def _mul(a: TekumValue, b: TekumValue) -> TekumValue:
    if a.is_nar or b.is_nar:
        return NAR
    if a.is_infinite or b.is_infinite:
        return NAR if (a.is_zero or b.is_zero) else INF
    return TekumValue.of(a.as_fraction() * b.as_fraction())


def _inv(a: TekumValue) -> TekumValue:
    if a.kind is Kind.ZERO:
        return INF
    if a.kind is Kind.INFINITY:
        return ZERO
    if a.kind is Kind.NAR:
        return NAR
    return TekumValue.of(1 / a.value)


def wheel_apply(op, a: TekumValue, b: TekumValue | None = None) -> TekumValue:
    """Apply ``op`` exactly. ``b`` is ignored by the unary ops ``inv`` and ``neg``."""
    op = WheelOp(op)
    a = TekumValue.of(a)
    if op is WheelOp.NEG:
        return -a
    if op is WheelOp.INV:
        return _inv(a)
    b = TekumValue.of(b)
    if op is WheelOp.ADD:
        return _add(a, b)
    if op is WheelOp.SUB:
        return _add(a, -b)
    if op is WheelOp.MUL:
        return _mul(a, b)
    return _mul(a, _inv(b))


def rounded_apply(op, t: TritString, u: TritString | None, n: int) -> TritString:
    """Exact wheel operation on two tekums followed by a single rounding to ``n`` trits."""
    op = WheelOp(op)
    for operand in (t, u):
        if operand is not None and len(operand) != n:
            raise LengthMismatch(f"operand {operand} is not {n} trits wide")
    a = decode(t)
    b = decode(u) if u is not None else ZERO
    return encode(wheel_apply(op, a, b), n)

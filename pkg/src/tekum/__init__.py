"""Balanced ternary tapered-precision arithmetic (tekums).

Quick start::

    >>> from tekum import parse, decode, encode
    >>> decode(parse("1T11")).value
    Fraction(2, 1)
    >>> str(encode(5, 4))
    '10T0'
"""

from .codec import (
    TekumFields,
    anchor,
    decode,
    decode_fields,
    encode,
    exponent_bias,
    extend,
    truncate_round,
    unanchor,
)
from .errors import TekumError
from .ternary import (
    TritString,
    add_wrapping,
    compare,
    concat,
    from_integer,
    integer_value,
    modulus,
    negate,
    parse,
    sub_wrapping,
    to_text,
)
from .values import INF, NAR, ZERO, Kind, TekumValue, to_decimal, total_compare
from .wheel import WheelOp, rounded_apply, wheel_apply

__all__ = [
    "INF", "NAR", "ZERO", "Kind", "TekumError", "TekumFields", "TekumValue",
    "TritString", "WheelOp", "add_wrapping", "anchor", "compare", "concat",
    "decode", "decode_fields", "encode", "exponent_bias", "extend",
    "from_integer", "integer_value", "modulus", "negate", "parse",
    "rounded_apply", "sub_wrapping", "to_decimal", "to_text", "total_compare",
    "truncate_round", "unanchor", "wheel_apply",
]

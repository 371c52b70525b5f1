"""Fixed-width balanced ternary strings.

A :class:`TritString` is an immutable sequence of trits in ``{-1, 0, 1}``,
stored and printed most-significant first (``"1T"`` is ``1*3 + (-1)*1 = 2``).
Addition is fixed-width: sums that overflow are folded back into range.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidCharacter, LengthMismatch, OutOfRange

_FROM_CHAR = {"T": -1, "t": -1, "0": 0, "1": 1}
_TO_CHAR = {-1: "T", 0: "0", 1: "1"}


def max_magnitude(n: int) -> int:
    """Largest integer representable with ``n`` trits, ``(3**n - 1) // 2``."""
    return (3**n - 1) // 2


def balanced_divmod(v: int, m: int) -> tuple[int, int]:
    """Divide by an odd modulus so that the remainder lies in ``[-(m-1)/2, (m-1)/2]``."""
    h = (m - 1) // 2
    q = (v + h) // m
    return q, v - q * m


def _digits(v: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        v, r = balanced_divmod(v, 3)
        out[i] = r
    return tuple(out)


class TritString:
    """Immutable balanced ternary string of explicit length.

    Indexing follows Python order, so ``t[0]`` is the most significant trit.
    ``len(t)`` is never normalised: ``"001"`` and ``"1"`` are different strings.
    """

    __slots__ = ("_trits",)

    def __init__(self, trits: Iterable[int] = ()):
        t = tuple(trits)
        for x in t:
            if x not in (-1, 0, 1):
                raise OutOfRange(f"trit out of range: {x!r}")
        object.__setattr__(self, "_trits", t)

    def __setattr__(self, name, value):
        raise AttributeError("TritString is immutable")

    @classmethod
    def _raw(cls, trits: tuple[int, ...]) -> "TritString":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_trits", trits)
        return obj

    @classmethod
    def parse(cls, text: str) -> "TritString":
        trits = []
        for i, ch in enumerate(text):
            try:
                trits.append(_FROM_CHAR[ch])
            except KeyError:
                raise InvalidCharacter(i, ch) from None
        return cls._raw(tuple(trits))

    @classmethod
    def from_int(cls, v: int, n: int) -> "TritString":
        if abs(v) > max_magnitude(n):
            raise OutOfRange(f"{v} does not fit in {n} trits")
        return cls._raw(_digits(v, n))

    @classmethod
    def zeros(cls, n: int) -> "TritString":
        return cls._raw((0,) * n)

    @classmethod
    def fill(cls, trit: int, n: int) -> "TritString":
        return cls((trit,) * n)

    @property
    def trits(self) -> tuple[int, ...]:
        return self._trits

    def __len__(self) -> int:
        return len(self._trits)

    def __iter__(self) -> Iterator[int]:
        return iter(self._trits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return TritString._raw(self._trits[index])
        return self._trits[index]

    def __int__(self) -> int:
        v = 0
        for x in self._trits:
            v = 3 * v + x
        return v

    def __index__(self) -> int:
        return int(self)

    def __str__(self) -> str:
        return "".join(_TO_CHAR[x] for x in self._trits)

    def __repr__(self) -> str:
        return f"TritString('{self}')"

    def __eq__(self, other) -> bool:
        if isinstance(other, TritString):
            return self._trits == other._trits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._trits)

    def __neg__(self) -> "TritString":
        return TritString._raw(tuple(-x for x in self._trits))

    def __abs__(self) -> "TritString":
        return modulus(self)

    def __add__(self, other: "TritString") -> "TritString":
        return add_wrapping(self, other)

    def __sub__(self, other: "TritString") -> "TritString":
        return sub_wrapping(self, other)

    def __lt__(self, other: "TritString") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "TritString") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "TritString") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "TritString") -> bool:
        return compare(self, other) >= 0

    def concat(self, other: "TritString") -> "TritString":
        return concat(self, other)


def parse(text: str) -> TritString:
    """Parse ``'T'``/``'t'``/``'0'``/``'1'`` characters, most significant first."""
    return TritString.parse(text)


def to_text(t: TritString) -> str:
    return str(t)


def integer_value(t: TritString) -> int:
    return int(t)


def from_integer(v: int, n: int) -> TritString:
    """Inverse integer mapping; raises :class:`OutOfRange` if ``|v| > (3**n - 1)/2``."""
    return TritString.from_int(v, n)


def negate(t: TritString) -> TritString:
    return -t


def _check_lengths(t: TritString, u: TritString) -> int:
    if len(t) != len(u):
        raise LengthMismatch(f"lengths differ: {len(t)} vs {len(u)}")
    return len(t)


def add_wrapping(t: TritString, u: TritString) -> TritString:
    """Fixed-width sum of two equal-length strings.

    Out-of-range sums are folded back by ``(3**n + 1) / 2``, which is the
    documented case split for this format. Note this is not reduction modulo
    ``3**n``; sums that stay in range are exact.
    """
    n = _check_lengths(t, u)
    s = int(t) + int(u)
    h = max_magnitude(n)
    if s < -h:
        s += (3**n + 1) // 2
    elif s > h:
        s -= (3**n + 1) // 2
    return TritString.from_int(s, n)


def sub_wrapping(t: TritString, u: TritString) -> TritString:
    return add_wrapping(t, -u)


def modulus(t: TritString) -> TritString:
    return -t if int(t) < 0 else t


def concat(t: TritString, u: TritString) -> TritString:
    return TritString._raw(t.trits + u.trits)


def compare(t: TritString, u: TritString) -> int:
    """Three-way comparison of the integer values: -1, 0 or 1.

    Lexicographic order with ``T < 0 < 1`` coincides with integer order for
    equal lengths.
    """
    _check_lengths(t, u)
    a, b = t.trits, u.trits
    return (a > b) - (a < b)

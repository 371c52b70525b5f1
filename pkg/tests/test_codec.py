from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tekum.codec import (
    MAX_EXPONENT,
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
from tekum.errors import (
    BadWidth,
    NotRepresentable,
    OddLength,
    SpecialInput,
    SpecialOnly,
    UnsupportedLength,
)
from tekum.oracle import enumerate_width, nearest_by_search
from tekum.ternary import TritString, max_magnitude, negate, parse
from tekum.values import INF, NAR, ZERO, TekumValue

WORKED = "10TTT1TT"


def fields(text) -> TekumFields:
    out = decode_fields(parse(text))
    assert isinstance(out, TekumFields)
    return out


# -- anchor -------------------------------------------------------------------

@pytest.mark.parametrize("t, a", [("0001", "T10T"), ("1T1T", "0000"), (WORKED, "001T1110")])
def test_anchor(t, a):
    assert str(anchor(parse(t))) == a


def test_anchor_is_sign_invariant():
    for v in range(-40, 41):
        t = TritString.from_int(v, 4)
        assert anchor(t) == anchor(negate(t))


def test_anchor_odd_length():
    with pytest.raises(OddLength):
        anchor(parse("101"))


@pytest.mark.parametrize("s, a, t", [(1, "001T", "1T11"), (0, "001T", "0000"), (-1, "0000", "T1T1")])
def test_unanchor(s, a, t):
    assert str(unanchor(s, parse(a))) == t


def test_unanchor_inverts_anchor():
    for v in range(-40, 41):
        if v == 0:
            continue
        t = TritString.from_int(v, 4)
        assert unanchor(1 if v > 0 else -1, anchor(t)) == t
    assert str(anchor(parse("T1T1"))) == "0000"


def test_unanchor_not_representable():
    # anchor -41 would need |t| = -21
    with pytest.raises(NotRepresentable):
        unanchor(1, TritString.fill(-1, 4))


# -- decode_fields ------------------------------------------------------------

def test_fields_0101():
    f = fields("0101")
    assert (f.s, f.r, f.c, str(f.exponent_trits), f.b, f.e, f.p, f.f) == (1, -3, 1, "T", -4, -5, 0, 0)


def test_fields_1T10():
    f = fields("1T10")
    assert (f.s, f.r, f.c, f.p, str(f.fraction_trits), f.f) == (1, 0, 0, 1, "1", Fraction(1, 3))


def test_fields_worked_example():
    f = fields(WORKED)
    assert (f.s, f.r, f.c, f.p, f.b, f.e) == (1, 1, 0, 5, 1, 1)
    assert f.f == Fraction(-42, 243)
    assert f.value == (1 - Fraction(42, 243)) * 3


def test_short_width_zero_extends_exponent():
    f = fields("0001")
    assert str(f.exponent_trits) == "T000" and f.e == -109


@pytest.mark.parametrize("t, special", [("TTTT", NAR), ("0000", ZERO), ("1111", INF),
                                        ("T", NAR), ("0", ZERO), ("1", INF)])
def test_specials_on_raw_string(t, special):
    assert decode_fields(parse(t)) == special
    assert decode(parse(t)) == special


def test_odd_width_rejected():
    with pytest.raises(UnsupportedLength):
        decode(parse("101"))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_field_invariants_exhaustive(n):
    table = (0, 1, 2, 4, 10, 28, 82, 244)
    for t, x in enumerate_width(n):
        out = decode_fields(t)
        if isinstance(out, TekumValue):
            continue
        assert -7 <= out.r <= 7
        assert out.c == max(0, abs(out.r) - 2)
        assert out.b == ((out.r > 0) - (out.r < 0)) * table[abs(out.r)]
        assert out.e == int(out.exponent_trits) + out.b
        assert -MAX_EXPONENT <= out.e <= MAX_EXPONENT
        assert out.p == max(0, n - out.c - 3)
        assert abs(out.f) < Fraction(1, 2)
        assert out.f == Fraction(int(out.fraction_trits), 3 ** len(out.fraction_trits))
        assert Fraction(1, 2) * Fraction(3) ** -183 < abs(x.value) < Fraction(3, 2) * Fraction(3) ** 183


# -- decode -------------------------------------------------------------------

def test_decode_examples():
    assert decode(parse("0001")).value == Fraction(1, 3**109)
    assert decode(parse("1T10")).value == Fraction(4, 3)
    assert decode(parse("0111")).value == Fraction(2, 27)


def test_decoded_rationals_are_canonical():
    q = decode(parse("0111")).value
    assert (q.numerator, q.denominator) == (2, 27)


@pytest.mark.parametrize("r, b", [(0, 0), (-6, -82), (7, 244), (3, 4), (-1, -1)])
def test_exponent_bias(r, b):
    assert exponent_bias(r) == b


# -- encode -------------------------------------------------------------------

@pytest.mark.parametrize("x, t", [(1, "1T1T"), (2, "1T11"), (5, "10T0"), (10**60, "1110"),
                                  (-(10**60), "TTT0"), (Fraction(1, 10**60), "0001")])
def test_encode_examples(x, t):
    assert str(encode(x, 4)) == t


def test_encode_tie_is_a_true_midpoint():
    lo, hi = decode(parse("10T0")).value, decode(parse("10T1")).value
    assert (lo, hi) == (4, 6)
    assert int(anchor(parse("10T0"))) % 2 == 0


def test_encode_specials():
    assert str(encode(NAR, 8)) == "TTTTTTTT"
    assert str(encode(ZERO, 4)) == "0000"
    assert str(encode(INF, 2)) == "11"
    assert str(encode(NAR, 1)) == "T"


def test_encode_single_trit_finite():
    with pytest.raises(SpecialOnly):
        encode(1, 1)


@pytest.mark.parametrize("n", [3, 0, -2])
def test_encode_bad_width(n):
    with pytest.raises(UnsupportedLength):
        encode(1, n)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_round_trip_exhaustive(n):
    for t, x in enumerate_width(n):
        assert encode(x, n) == t


@settings(max_examples=300, deadline=None)
@given(st.fractions(min_value=Fraction(-10**6), max_value=Fraction(10**6)).filter(lambda q: q != 0))
def test_encode_matches_linear_scan(q):
    assert encode(q, 6) == nearest_by_search(q, 6)


@settings(max_examples=200, deadline=None)
@given(st.integers(-(3**20 // 2), 3**20 // 2))
def test_encode_never_hits_specials_for_finite_input(v):
    q = Fraction(v, 7) or Fraction(1)
    t = encode(q, 6)
    assert not decode(t).is_special
    assert encode(-q, 6) == negate(t)


# -- precision changes ----------------------------------------------------------

def test_truncate_worked_example():
    t = truncate_round(parse(WORKED), 4)
    assert str(t) == "1T11" and decode(t).value == 2


def test_truncate_negated_worked_example():
    neg = negate(parse(WORKED))
    assert str(neg) == "T0111T11"
    assert str(truncate_round(neg, 4)) == "T1TT"
    assert nearest_by_search(decode(neg).value, 4) == parse("T1TT")


def test_truncate_same_width_is_identity():
    assert truncate_round(parse(WORKED), 8) == parse(WORKED)


def test_truncate_specials_rejected():
    for text in ("TTTTTT", "000000", "111111"):
        with pytest.raises(SpecialInput):
            truncate_round(parse(text), 4)


@pytest.mark.parametrize("m", [2, 5, 10])
def test_truncate_bad_width(m):
    with pytest.raises(BadWidth):
        truncate_round(parse(WORKED), m)


def test_truncate_never_produces_specials():
    h = max_magnitude(6)
    for v in range(-h + 1, h):
        if v:
            assert not decode(truncate_round(TritString.from_int(v, 6), 4)).is_special


def test_truncate_can_miss_nearest_across_regime_boundary():
    # 14/9 sits just above the boundary 1.5 between exponents 0 and 1. The
    # shortened anchor keeps exponent 1 and rounds up to 2, while 4/3 on the
    # other side of the boundary is twice as close.
    t = parse("1T11T1")
    assert decode(t).value == Fraction(14, 9)
    assert str(truncate_round(t, 4)) == "1T11"
    assert str(nearest_by_search(Fraction(14, 9), 4)) == "1T10"


def test_extend_examples():
    wide = extend(parse("1T1T"), 8)
    assert str(anchor(wide)) == "00000000" and decode(wide).value == 1
    assert str(extend(parse("TTTT"), 8)) == "TTTTTTTT"
    low = extend(parse("0001"), 8)
    assert str(anchor(low)) == "T10T0000" and decode(low).value == Fraction(1, 3**109)


@pytest.mark.parametrize("m", [4, 2, 7])
def test_extend_bad_width(m):
    with pytest.raises(BadWidth):
        extend(parse("1T1T"), m)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_extend_preserves_value_and_truncates_back(n):
    for t, x in enumerate_width(n):
        wide = extend(t, n + 2)
        assert decode(wide) == x
        if not x.is_special and n >= 4:
            assert truncate_round(wide, n) == t

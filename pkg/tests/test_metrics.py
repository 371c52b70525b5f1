import math
from fractions import Fraction

import pytest
from golden import TABLE1, TABLE1_MISPRINTS

from tekum.codec import decode_fields
from tekum.errors import DomainError, UnsupportedLength
from tekum.metrics import (
    LOG10_3,
    MappingFamily,
    builtin_families,
    divisibility_check,
    dynamic_range,
    dynamic_range_exponents,
    dynrange_csv,
    family,
    lg_label,
    log10_fraction,
    mappings_csv,
    overhead_csv,
    overhead_profile,
    radix_economy,
    range_table,
    trits_to_bits,
)
from tekum.oracle import enumerate_width


def test_seven_families_in_order():
    assert [f.name for f in builtin_families()] == list(TABLE1)


@pytest.mark.parametrize("name", list(TABLE1))
def test_counts_and_biases(name):
    counts, biases, *_ = TABLE1[name]
    fam = family(name)
    assert fam.counts == counts
    assert fam.biases == biases


@pytest.mark.parametrize("name", list(TABLE1))
def test_exponent_ranges(name):
    _, _, ranges, _, cap = TABLE1[name]
    rows = range_table(name)
    assert [(r.e_min, r.e_max) for r in rows] == list(ranges)
    assert rows[7].e_max_trits == cap


@pytest.mark.parametrize("name", list(TABLE1))
def test_lg_labels(name):
    *_, labels, _ = TABLE1[name]
    for row, (lo, hi) in zip(range_table(name), labels):
        for end, printed, x in (("min", lo, row.lg_min), ("max", hi, row.lg_max)):
            got = lg_label(x)
            if (name, row.abs_r, end) in TABLE1_MISPRINTS:
                misprint, correct = TABLE1_MISPRINTS[(name, row.abs_r, end)]
                assert printed == misprint and got == correct
            else:
                assert got == printed


def test_misprinted_cell_is_really_7_2():
    assert round(15 * LOG10_3, 3) == 7.157


@pytest.mark.parametrize("fam", builtin_families(), ids=lambda f: f.name)
def test_ranges_are_contiguous(fam):
    rows = range_table(fam)
    for a, b in zip(rows, rows[1:]):
        assert b.e_min == a.e_max + 1


def test_family_validation():
    with pytest.raises(ValueError):
        MappingFamily("bad", (0, 2, 2, 2, 2, 2, 2, 2))
    with pytest.raises(ValueError):
        MappingFamily("short", (0, 1))


def test_gamma_biases():
    assert family("gamma").biases == (0, 1, 2, 3, 5, 8, 14, 32)


def test_max0r2_top_row():
    row = range_table("max0r2")[7]
    assert (row.e_min, row.e_max) == (123, 183)
    assert abs(row.lg_min - 59) < 0.5 and abs(row.lg_max - 87) < 0.5
    assert range_table("max0r2")[0][3:5] == (0, 0)


# -- dynamic range --------------------------------------------------------------

def test_dynamic_range_examples():
    assert dynamic_range(4) == (Fraction(1, 3**109), Fraction(3**109))
    assert dynamic_range(8) == (Fraction(1, 3**182), Fraction(3**182))
    assert dynamic_range(10)[1] == Fraction(10, 9) * 3**183


@pytest.mark.parametrize("n", [4, 6, 8])
def test_dynamic_range_matches_enumeration(n):
    finite = [abs(x.value) for _, x in enumerate_width(n) if x.is_finite]
    assert dynamic_range(n) == (min(finite), max(finite))


def test_dynamic_range_saturates():
    prev = -1
    for n in range(2, 41, 2):
        e_lo, e_hi = dynamic_range_exponents(n)
        assert e_hi >= prev
        prev = e_hi
        if n >= 10:
            assert (e_lo, e_hi) == (-183, 183)
            assert abs(e_hi * LOG10_3 - 87.3) < 0.1
            assert log10_fraction(dynamic_range(n)[1]) < math.log10(1.5) + e_hi * LOG10_3


def test_dynamic_range_bad_width():
    with pytest.raises(UnsupportedLength):
        dynamic_range(5)


def test_dynrange_csv():
    text = dynrange_csv(40)
    lines = text.splitlines()
    assert lines[0] == "n,min_pos_log10,max_log10"
    assert [int(line.split(",")[0]) for line in lines[1:]] == list(range(2, 41, 2))
    assert text == dynrange_csv(40)


# -- overhead -------------------------------------------------------------------

def test_overhead_examples():
    rows = {r.e: r for r in overhead_profile(10)}
    assert rows[0].trits == 3 and math.isclose(rows[0].bits, 4.755, abs_tol=1e-3)
    assert rows[183].trits == 8 and math.isclose(rows[183].bits, 12.68, abs_tol=1e-2)
    assert rows[1].trits == 3
    assert len(rows) == 367


def test_overhead_tiles_the_range():
    rows = overhead_profile(12)
    for a, b in zip(rows, rows[1:]):
        assert b.e == a.e + 1
        assert math.isclose(a.log10_hi, b.log10_lo, abs_tol=1e-9)
    assert math.isclose(rows[0].log10_lo, math.log10(0.5) - 183 * LOG10_3)
    assert math.isclose(rows[-1].log10_hi, math.log10(1.5) + 183 * LOG10_3)


def test_overhead_matches_decoded_fields():
    # non-fraction trits = 3 + c for every exponent an 8-trit tekum can carry
    seen = {}
    for t, x in enumerate_width(8):
        f = decode_fields(t)
        if x.is_finite:
            seen[f.e] = 3 + f.c
    rows = {r.e: r.trits for r in overhead_profile(8)}
    assert rows == seen


def test_overhead_width_8_rows():
    assert len(overhead_profile(8)) == 365


def test_overhead_bad_width():
    with pytest.raises(UnsupportedLength):
        overhead_profile(6)


def test_overhead_csv_header():
    lines = overhead_csv(10).splitlines()
    assert lines[0] == "e,log10_lo,log10_hi,trits,bits"
    assert len(lines) == 368


def test_mappings_csv():
    lines = mappings_csv().splitlines()
    assert lines[0] == "family,abs_r,c,b,e_min,e_max,lg_min,lg_max"
    assert len(lines) == 57
    assert lines[-1].startswith("gamma,7,3,32,19,25,")


# -- scalar helpers ---------------------------------------------------------------

def test_trits_to_bits():
    assert trits_to_bits(0) == 0
    assert math.isclose(trits_to_bits(1), 1.585, abs_tol=1e-3)
    assert math.isclose(trits_to_bits(40), 63.4, abs_tol=0.05)


@pytest.mark.parametrize("b, n, out", [(3, 1, 3), (2, 8, 8), (10, 100, 30), (10, 99, 20), (2, 7, 6)])
def test_radix_economy(b, n, out):
    assert radix_economy(b, n) == out


@pytest.mark.parametrize("b, n", [(1, 5), (0.5, 5), (3, 0)])
def test_radix_economy_domain(b, n):
    with pytest.raises(DomainError):
        radix_economy(b, n)


def test_divisibility():
    assert (3**2 - 5) % 4 == 0
    assert (3**2 - 4) % 4 != 0
    res = divisibility_check(200)
    assert res.ok and res.n_max == 200


def test_divisibility_domain():
    with pytest.raises(DomainError):
        divisibility_check(0)

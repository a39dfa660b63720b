import json
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from countable.numbers import (
    DecimalFormatError,
    DecimalStream,
    approximation_sequence,
    decimal_prefix_equal,
    rational_to_decimal,
    sqrt_decimal,
)


def brute_sqrt_scaled(n, k):
    """Largest t with t*t <= n * 100**k, by bisection on exact squares."""
    target = n * 100**k
    lo, hi = 0, 1
    while hi * hi <= target:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= target:
            lo = mid
        else:
            hi = mid
    return lo


@pytest.mark.parametrize(
    "r, k, text",
    [
        (Fraction(1, 3), 5, "0.33333"),
        (Fraction(5), 5, "5.00000"),
        (Fraction(-6, 5), 5, "-1.20000"),
        (Fraction(1, 2), 4, "0.5000"),
        (Fraction(-1, 2), 3, "-0.500"),
        (Fraction(0), 2, "0.00"),
        (Fraction(1, 7), 12, "0.142857142857"),
    ],
)
def test_rational_to_decimal(r, k, text):
    assert rational_to_decimal(r).format(k) == text


def test_negative_sign_magnitude():
    s = rational_to_decimal(Fraction(-6, 5))
    assert s.integer_part == -1
    assert s.negative and s.whole == 1
    assert s.prefix(3) == (2, 0, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4), st.integers(0, 40))
def test_truncation_error_below_one_ulp(p, q, k):
    r = Fraction(p, q)
    assert abs(r - rational_to_decimal(r).truncation(k)) < Fraction(1, 10**k)


def test_no_nines_tail_for_small_denominators():
    for q in range(1, 10**4 + 1, 7):
        for p in (1, q - 1, 3 * q + 1):
            digits = rational_to_decimal(Fraction(p, q)).prefix(200)
            assert digits[-50:] != (9,) * 50, (p, q)


@pytest.mark.parametrize("q", [1, 2, 4, 5, 8, 16, 20, 25, 125, 1024, 3125, 10**4])
def test_terminating_expansions_end_in_zeros(q):
    for p in (1, 3, q - 1 or 1):
        r = Fraction(p, q)
        s = rational_to_decimal(r)
        digits = s.prefix(60)
        assert Fraction(s.truncation(20)) == r
        assert digits[20:] == (0,) * 40


def test_sqrt_two_prefix():
    assert sqrt_decimal(2).format(5) == "1.41421"


def test_sqrt_perfect_square_has_zero_tail():
    s = sqrt_decimal(4)
    assert s.integer_part == 2
    assert s.prefix(30) == (0,) * 30


def test_sqrt_three_against_brute_force():
    # largest 5-digit t with t^2 <= 3 * 10^8 is 17320
    assert brute_sqrt_scaled(3, 4) == 17320
    assert sqrt_decimal(3).format(4) == "1.7320"


@given(st.integers(0, 10**12), st.integers(0, 30))
def test_sqrt_matches_bisection(n, k):
    s = sqrt_decimal(n)
    t = s.whole * 10**k + int("".join(map(str, s.prefix(k))) or "0")
    assert t == brute_sqrt_scaled(n, k)


def test_sqrt_prefix_property_exhaustive_small():
    for n in range(0, 10**4 + 1, 37):
        s = sqrt_decimal(n)
        for k in range(21):
            t = s.truncation(k)
            assert t * t <= n < (t + Fraction(1, 10**k)) ** 2


def test_approximation_sequence_sqrt2():
    assert approximation_sequence(sqrt_decimal(2), 5) == [
        Fraction(1),
        Fraction(7, 5),
        Fraction(141, 100),
        Fraction(707, 500),
        Fraction(7071, 5000),
    ]
    assert approximation_sequence(sqrt_decimal(2), 1) == [1]


def test_approximation_sequence_half():
    assert approximation_sequence(rational_to_decimal(Fraction(1, 2)), 3) == [0, Fraction(1, 2), Fraction(1, 2)]


def test_approximation_sequence_needs_count():
    with pytest.raises(ValueError):
        approximation_sequence(sqrt_decimal(2), 0)


@given(st.integers(0, 10**6), st.integers(1, 25))
def test_approximation_error_bound(n, count):
    s = sqrt_decimal(n)
    for k, a in enumerate(approximation_sequence(s, count), start=1):
        upper = a + Fraction(1, 10 ** (k - 1))
        assert a * a <= n < upper * upper


def test_prefix_equal():
    third = rational_to_decimal(Fraction(1, 3))
    assert decimal_prefix_equal(third, rational_to_decimal(Fraction(1, 3)), 4)
    assert not decimal_prefix_equal(DecimalStream.parse("0.4581"), DecimalStream.parse("0.3333"), 1)
    assert decimal_prefix_equal(rational_to_decimal(Fraction(1, 2)), DecimalStream.parse("0.5"), 10)
    assert not decimal_prefix_equal(DecimalStream.parse("1.5"), DecimalStream.parse("-1.5"), 3)
    assert decimal_prefix_equal(DecimalStream.parse("0.12"), DecimalStream.parse("0.13"), 1)


@pytest.mark.parametrize(
    "text, k, shown",
    [
        ("0.3333…", 4, "0.3333"),
        ("0,5432...", 6, "0.543200"),
        ("-1.2", 3, "-1.200"),
        ("-0.5", 1, "-0.5"),
        ("-0.000", 2, "0.00"),
        ("7", 2, "7.00"),
        ("+3.14", 2, "3.14"),
    ],
)
def test_parse_text(text, k, shown):
    assert DecimalStream.parse(text).format(k) == shown


@pytest.mark.parametrize("bad", ["", "abc", "1.2.3", "--1", "1.x", ". 5"])
def test_parse_rejects(bad):
    with pytest.raises(DecimalFormatError):
        DecimalStream.parse(bad)


@given(st.booleans(), st.integers(0, 10**30), st.text("0123456789", max_size=40))
def test_json_round_trip(negative, whole, digits):
    s = DecimalStream.from_digits(whole, digits, negative)
    obj = json.loads(json.dumps(s.to_json(len(digits))))
    back = DecimalStream.from_json(obj)
    assert decimal_prefix_equal(s, back, len(digits) + 5)


def test_json_schema():
    assert rational_to_decimal(Fraction(-1, 2)).to_json(3) == {"int": "-0", "digits": "500"}
    with pytest.raises(DecimalFormatError):
        DecimalStream.from_json({"int": "x", "digits": "1"})
    with pytest.raises(DecimalFormatError):
        DecimalStream.from_json({"digits": "1"})


def test_digits_are_memoized():
    calls = []

    def digit(k):
        calls.append(k)
        return k % 10

    s = DecimalStream(0, digit)
    assert s.prefix(5) == (1, 2, 3, 4, 5)
    assert s.prefix(5) == (1, 2, 3, 4, 5)
    assert s.digit(3) == 3
    assert calls == [1, 2, 3, 4, 5]


def test_invalid_digit_rejected():
    s = DecimalStream(0, lambda k: 10)
    with pytest.raises(ValueError, match="invalid digit"):
        s.digit(1)


def test_concurrent_readers_agree():
    s = rational_to_decimal(Fraction(22, 7))
    results = []

    def read():
        results.append(s.prefix(2000))

    threads = [threading.Thread(target=read) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1

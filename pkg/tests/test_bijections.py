import pytest
from hypothesis import given, strategies as st

from countable.bijections import (
    BUILTINS,
    DOUBLE,
    PRED,
    TO_ODD,
    ZIGZAG,
    CompositionError,
    DomainError,
    SetTag,
    Tail,
    compose,
    enumerate_set,
    even_to_nat,
    int_to_nat,
    lookup,
    nat0_to_nat,
    nat_to_even,
    nat_to_int,
    nat_to_nat0,
    nat_to_odd,
    odd_to_nat,
    shift_bijection,
)


@pytest.mark.parametrize(
    "fn, x, y",
    [
        (nat_to_even, 1, 2),
        (nat_to_even, 9, 18),
        (even_to_nat, 10, 5),
        (nat_to_nat0, 1, 0),
        (nat_to_nat0, 9, 8),
        (nat0_to_nat, 0, 1),
        (nat_to_int, 9, -4),
        (nat_to_int, 4, 2),
        (nat_to_int, 1, 0),
        (int_to_nat, 0, 1),
        (int_to_nat, -4, 9),
        (int_to_nat, 2, 4),
        (nat_to_odd, 1, 1),
        (nat_to_odd, 5, 9),
        (odd_to_nat, 7, 4),
    ],
)
def test_golden_values(fn, x, y):
    assert fn(x) == y


def test_nat_to_odd_matches_listing_of_odds():
    odds = [m for m in range(1, 200) if m % 2 == 1]
    assert [nat_to_odd(n) for n in range(1, 101)] == odds


@pytest.mark.parametrize(
    "fn, bad",
    [
        (nat_to_even, 0),
        (even_to_nat, 3),
        (even_to_nat, 0),
        (nat_to_int, -1),
        (nat0_to_nat, -1),
        (odd_to_nat, 4),
        (nat_to_even, True),
        (nat_to_even, 2.0),
    ],
)
def test_domain_errors(fn, bad):
    with pytest.raises(DomainError):
        fn(bad)


def test_shift():
    b = shift_bijection(19)
    assert b(20) == 1
    assert b.inverse(1) == 20
    assert b.domain == Tail(20)
    with pytest.raises(DomainError):
        b(19)
    big = shift_bijection(10**6)
    assert big(10**6 + 7) == 7
    ident = shift_bijection(0)
    assert [ident(n) for n in range(1, 6)] == [1, 2, 3, 4, 5]
    assert ident.domain == SetTag.NAT


def test_compose_round_trip_is_identity():
    ident = compose(PRED, PRED.inverted())
    assert [ident(n) for n in range(1, 50)] == list(range(1, 50))
    assert [ident.inverse(n) for n in range(1, 50)] == list(range(1, 50))


def test_compose_domain_mismatch():
    with pytest.raises(CompositionError):
        compose(DOUBLE, ZIGZAG)


def test_double_twice():
    assert DOUBLE(DOUBLE(3)) == 12
    # doubling is a map out of NAT, not out of EVEN, so chaining it as a bijection is refused
    with pytest.raises(CompositionError):
        compose(DOUBLE, DOUBLE)
    assert compose(compose(DOUBLE, DOUBLE.inverted()), DOUBLE)(3) == 6


def test_shift_then_pred():
    f = compose(shift_bijection(5), PRED)
    assert f(6) == 0
    assert f.inverse(0) == 6
    assert f.domain == Tail(6) and f.codomain == SetTag.NAT0


@pytest.mark.parametrize(
    "tag, count, expected",
    [
        (SetTag.INT, 9, [0, 1, -1, 2, -2, 3, -3, 4, -4]),
        (SetTag.EVEN, 4, [2, 4, 6, 8]),
        (SetTag.NAT0, 3, [0, 1, 2]),
        (SetTag.ODD, 3, [1, 3, 5]),
        (SetTag.NAT, 3, [1, 2, 3]),
        (SetTag.INT, 0, []),
        (SetTag.EVEN, 0, []),
    ],
)
def test_enumerate(tag, count, expected):
    assert enumerate_set(tag, count) == expected


@pytest.mark.parametrize("b", [DOUBLE, PRED, ZIGZAG, TO_ODD, shift_bijection(0), shift_bijection(19)])
def test_round_trip_prefix(b):
    n = 10**4
    outputs = [b(b.domain.nth(i)) for i in range(1, n + 1)]
    assert len(set(outputs)) == n
    assert all(b.inverse(y) == b.domain.nth(i) for i, y in enumerate(outputs, 1))
    for i in range(1, n + 1):
        y = b.codomain.nth(i)
        assert b(b.inverse(y)) == y


def test_prefix_surjectivity():
    N = 500
    assert set(map(nat_to_int, range(1, 2 * N + 2))) == set(range(-N, N + 1))
    assert {nat_to_even(n) for n in range(1, N + 1)} == set(range(2, 2 * N + 1, 2))


@pytest.mark.parametrize("tag", list(SetTag))
def test_listing_hits_members_once(tag):
    listing = enumerate_set(tag, 2000)
    assert len(set(listing)) == len(listing)
    assert all(tag.contains(x) for x in listing)
    members = [x for x in range(-300, 301) if tag.contains(x)]
    assert set(members) <= set(listing)


@pytest.mark.parametrize(
    "tag, b",
    [(SetTag.EVEN, DOUBLE), (SetTag.NAT0, PRED), (SetTag.INT, ZIGZAG), (SetTag.ODD, TO_ODD)],
)
def test_order_consistency(tag, b):
    listing = enumerate_set(tag, 300)
    assert listing == [b(k + 1) for k in range(300)]


@given(st.integers())
def test_zigzag_inverse_total_on_integers(z):
    assert nat_to_int(int_to_nat(z)) == z


def test_lookup():
    assert set(BUILTINS) == {"double", "pred", "zigzag", "to-odd"}
    assert lookup("shift:3")(4) == 1
    for bad in ("shift:", "shift:-1", "triple"):
        with pytest.raises(KeyError):
            lookup(bad)

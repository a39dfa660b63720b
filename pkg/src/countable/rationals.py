"""Listing the rationals by walking the p/q grid diagonal by diagonal.

Cell ``(p, q)`` sits in row ``p`` and column ``q`` and holds ``p/q``; it lies
on diagonal ``p + q - 1``.  Even diagonals are read with ``p`` rising
(1/4, 2/3, 3/2, 4/1), odd ones with ``p`` falling (3/1, 2/2, 1/3), which
gives the snake through the grid.  Cells not in lowest terms repeat an
earlier value and are skipped.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import count, islice
from math import gcd
from typing import Iterator, NamedTuple, Union

from .numbers import check_natural


class NonCanonicalError(ValueError):
    """A fraction was given that is not in lowest terms or not positive."""


class GridPosition(NamedTuple):
    row: int
    col: int

    @property
    def diagonal(self) -> int:
        return self.row + self.col - 1

    def value(self) -> Fraction:
        return Fraction(self.row, self.col)


def diagonal_cells(d: int) -> list[GridPosition]:
    """The cells of diagonal ``d`` in visiting order."""
    check_natural(d, 1)
    rows = range(1, d + 1) if d % 2 == 0 else range(d, 0, -1)
    return [GridPosition(p, d + 1 - p) for p in rows]


def iter_grid() -> Iterator[GridPosition]:
    for d in count(1):
        yield from diagonal_cells(d)


def traverse_grid(count: int) -> list[GridPosition]:
    """The first ``count`` grid cells in snake order, repeats included."""
    check_natural(count)
    return list(islice(iter_grid(), count))


def iter_positive_rationals() -> Iterator[Fraction]:
    for cell in iter_grid():
        if gcd(cell.row, cell.col) == 1:
            yield cell.value()


def iter_positive_rationals_seen() -> Iterator[Fraction]:
    """Same listing, but skipping by remembering every value emitted so far."""
    seen = set()
    for cell in iter_grid():
        v = cell.value()
        if v not in seen:
            seen.add(v)
            yield v


@lru_cache(maxsize=None)
def _emitted_on(d: int) -> int:
    # cells on diagonal d are (p, d + 1 - p), and gcd(p, d + 1 - p) == gcd(p, d + 1)
    return sum(1 for p in range(1, d + 1) if gcd(p, d + 1) == 1)


@lru_cache(maxsize=None)
def _emitted_before(d: int) -> int:
    total = 0
    for e in range(1, d):
        total += _emitted_on(e)
    return total


def _locate(n: int) -> tuple[int, int]:
    """Diagonal holding the ``n``-th emission and its rank within that diagonal."""
    d, before = 1, 0
    while before + _emitted_on(d) < n:
        before += _emitted_on(d)
        d += 1
    return d, n - before


def nat_to_positive_rational(n: int) -> Fraction:
    check_natural(n, 1)
    d, rank = _locate(n)
    for cell in diagonal_cells(d):
        if gcd(cell.row, cell.col) == 1:
            rank -= 1
            if rank == 0:
                return cell.value()
    raise AssertionError("unreachable: diagonal emission count out of sync")


RationalLike = Union[Fraction, int, tuple]


def _as_positive_canonical(r: RationalLike) -> tuple[int, int]:
    if isinstance(r, tuple):
        p, q = r
        if q <= 0 or p <= 0:
            raise NonCanonicalError(f"{p}/{q} is not a positive fraction")
        if gcd(p, q) != 1:
            raise NonCanonicalError(f"{p}/{q} is not in lowest terms")
        return p, q
    r = Fraction(r)
    if r <= 0:
        raise NonCanonicalError(f"{r} is not positive")
    return r.numerator, r.denominator


def positive_rational_to_nat(r: RationalLike) -> int:
    """Position of ``r`` in the listing.

    ``r`` may be a :class:`~fractions.Fraction` or a raw ``(p, q)`` pair;
    raw pairs must already be in lowest terms.
    """
    p, q = _as_positive_canonical(r)
    d = p + q - 1
    n = _emitted_before(d)
    for cell in diagonal_cells(d):
        if gcd(cell.row, cell.col) == 1:
            n += 1
            if cell == (p, q):
                return n
    raise AssertionError("unreachable: cell not on its own diagonal")


def nat_to_rational(n: int) -> Fraction:
    """All of Q: 1 goes to 0, even ``n`` to the ``n/2``-th positive rational, odd to its negative."""
    check_natural(n, 1)
    if n == 1:
        return Fraction(0)
    if n % 2 == 0:
        return nat_to_positive_rational(n // 2)
    return -nat_to_positive_rational((n - 1) // 2)


def rational_to_nat(r: RationalLike) -> int:
    if isinstance(r, tuple):
        p, q = r
        if q <= 0 or gcd(p, q) != 1:
            raise NonCanonicalError(f"{p}/{q} is not in lowest terms")
        r = Fraction(p, q)
    r = Fraction(r)
    if r == 0:
        return 1
    if r > 0:
        return 2 * positive_rational_to_nat(r)
    return 2 * positive_rational_to_nat(-r) + 1

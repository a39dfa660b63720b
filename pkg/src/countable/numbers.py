"""Exact numbers and lazy decimal expansions.

Naturals and integers are plain Python ``int`` (arbitrary precision already);
rationals are :class:`fractions.Fraction`, which keeps ``p/q`` in lowest
terms with a positive denominator.  The interesting type here is
:class:`DecimalStream`: a real number given digit by digit.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from itertools import count
from math import isqrt
from typing import Callable, Iterable, Iterator, Union

Rational = Fraction

DigitSource = Union[Iterable[int], Callable[[int], int]]

_TEXT_RE = re.compile(r"^\s*([+-]?)(\d+)(?:[.,](\d*))?\s*(?:…|\.\.\.)?\s*$")


class DecimalFormatError(ValueError):
    """Raised when text or JSON cannot be read as a decimal expansion."""


def check_natural(n, minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an integer, got {n!r}")
    if n < minimum:
        raise ValueError(f"expected an integer >= {minimum}, got {n}")
    return n


class DecimalStream:
    """A signed integer part followed by an infinite, lazily computed digit sequence.

    Sign and magnitude are stored separately (``-1.2`` is ``negative=True``,
    ``whole=1``, digits ``2, 0, 0, ...``) so that ``-0.5`` is representable.
    Digits are pulled on demand and cached; access is guarded by a lock, so
    a stream may be read from several threads.

    ``digits`` is either an iterable yielding the fractional digits in order
    (it must not run dry) or a function mapping position ``k >= 1`` to the
    ``k``-th digit.
    """

    __slots__ = ("negative", "whole", "_source", "_cache", "_lock")

    def __init__(self, whole: int, digits: DigitSource, negative: bool = False):
        check_natural(whole)
        self.whole = whole
        self.negative = bool(negative)
        if callable(digits):
            self._source: Iterator[int] = (digits(k) for k in count(1))
        else:
            self._source = iter(digits)
        self._cache: list[int] = []
        self._lock = threading.Lock()

    @classmethod
    def from_digits(cls, whole: int, digits: Iterable[int] | str, negative: bool = False) -> DecimalStream:
        """A terminating expansion: the given digits, then zeros forever."""
        prefix = [int(d) for d in digits]
        if negative and whole == 0 and not any(prefix):
            negative = False

        def source():
            yield from prefix
            while True:
                yield 0

        return cls(whole, source(), negative)

    @property
    def integer_part(self) -> int:
        return -self.whole if self.negative else self.whole

    def _fill(self, k: int) -> None:
        with self._lock:
            while len(self._cache) < k:
                try:
                    d = next(self._source)
                except StopIteration:
                    raise ValueError(
                        f"digit source ended after {len(self._cache)} digits"
                    ) from None
                if isinstance(d, bool) or not isinstance(d, int) or not 0 <= d <= 9:
                    raise ValueError(f"invalid digit {d!r} at position {len(self._cache) + 1}")
                self._cache.append(d)

    def digit(self, k: int) -> int:
        """The ``k``-th fractional digit, counting from 1."""
        check_natural(k, 1)
        self._fill(k)
        return self._cache[k - 1]

    def prefix(self, k: int) -> tuple[int, ...]:
        check_natural(k)
        self._fill(k)
        return tuple(self._cache[:k])

    def truncation(self, k: int) -> Fraction:
        """The value of the expansion cut off after ``k`` fractional digits."""
        digits = self.prefix(k)
        scaled = self.whole * 10**k + int("".join(map(str, digits)) or "0")
        value = Fraction(scaled, 10**k)
        return -value if self.negative else value

    def format(self, k: int, ellipsis: bool = False) -> str:
        sign = "-" if self.negative else ""
        text = f"{sign}{self.whole}"
        if k:
            text += "." + "".join(map(str, self.prefix(k)))
        return text + ("…" if ellipsis else "")

    def to_json(self, k: int) -> dict:
        sign = "-" if self.negative else ""
        return {"int": f"{sign}{self.whole}", "digits": "".join(map(str, self.prefix(k)))}

    @classmethod
    def from_json(cls, obj: dict) -> DecimalStream:
        try:
            whole_text, digits = obj["int"], obj["digits"]
        except (KeyError, TypeError):
            raise DecimalFormatError(f"expected an object with 'int' and 'digits', got {obj!r}") from None
        if not isinstance(whole_text, str) or not re.fullmatch(r"[+-]?\d+", whole_text):
            raise DecimalFormatError(f"bad integer part {whole_text!r}")
        if not isinstance(digits, str) or not re.fullmatch(r"\d*", digits):
            raise DecimalFormatError(f"bad digit string {digits!r}")
        return cls.from_digits(abs(int(whole_text)), digits, whole_text.startswith("-"))

    @classmethod
    def parse(cls, text: str) -> DecimalStream:
        """Read ``[sign]int[.digits][…]``; digits past the written ones are zero.

        A decimal comma is accepted as well as a point, and a trailing
        ``...`` counts as the ellipsis marker.
        """
        m = _TEXT_RE.match(text)
        if m is None:
            raise DecimalFormatError(f"not a decimal expansion: {text!r}")
        sign, whole, digits = m.groups()
        return cls.from_digits(int(whole), digits or "", sign == "-")

    def __repr__(self) -> str:
        return f"DecimalStream({self.format(len(self._cache), ellipsis=True)!r})"


def rational_to_decimal(r: Fraction) -> DecimalStream:
    """Long-division expansion of ``r``.

    Terminating fractions come out with a zero tail, never a tail of nines.
    """
    r = Fraction(r)
    p, q = abs(r.numerator), r.denominator
    whole, rem = divmod(p, q)

    def long_division():
        nonlocal rem
        while True:
            d, rem = divmod(rem * 10, q)
            yield d

    return DecimalStream(whole, long_division(), negative=r < 0)


def sqrt_decimal(n: int) -> DecimalStream:
    """Digits of the square root of ``n`` by the schoolbook pairs-of-digits method.

    After ``k`` digits the running root ``t`` is ``floor(sqrt(n) * 10**k)``
    and ``remainder == n * 100**k - t**2`` holds exactly.
    """
    check_natural(n)
    root = isqrt(n)

    def digits():
        t = root
        remainder = n - root * root
        while True:
            remainder *= 100
            d = 9
            while (20 * t + d) * d > remainder:
                d -= 1
            remainder -= (20 * t + d) * d
            t = 10 * t + d
            yield d

    return DecimalStream(root, digits())


def approximation_sequence(s: DecimalStream, count: int) -> list[Fraction]:
    """Truncations of ``s`` with 0, 1, ..., count-1 fractional digits."""
    check_natural(count, 1)
    return [s.truncation(k) for k in range(count)]


def decimal_prefix_equal(a: DecimalStream, b: DecimalStream, k: int) -> bool:
    check_natural(k)
    return (
        a.negative == b.negative
        and a.whole == b.whole
        and a.prefix(k) == b.prefix(k)
    )


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"

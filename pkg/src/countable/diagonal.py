"""Building a decimal that is missing from a given list of decimals.

Digit ``k`` of the witness is a changed copy of digit ``k`` of entry ``k``,
so the witness disagrees with every entry somewhere.  Disagreeing digit
strings can still name the same real (0.4999... and 0.5000...); the
:func:`safe_rule` only ever writes 4s and 5s, which rules that out.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .numbers import DecimalStream, check_natural


class FixedPointError(ValueError):
    """A digit rule leaves some digit unchanged."""


@dataclass(frozen=True)
class DiagonalRule:
    name: str
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 10 or any(not 0 <= d <= 9 for d in self.table):
            raise ValueError(f"digit table must map 0..9 into 0..9, got {self.table!r}")
        fixed = [d for d in range(10) if self.table[d] == d]
        if fixed:
            raise FixedPointError(f"rule {self.name!r} leaves digit(s) {fixed} unchanged")

    def __call__(self, d: int) -> int:
        return self.table[d]


def paper_rule() -> DiagonalRule:
    """Add one; 9 wraps to 0."""
    return DiagonalRule("paper", tuple((d + 1) % 10 for d in range(10)))


def safe_rule() -> DiagonalRule:
    """Write 5, or 4 where the entry already has a 5."""
    return DiagonalRule("safe", tuple(4 if d == 5 else 5 for d in range(10)))


RULES = {"paper": paper_rule, "safe": safe_rule}


class Enumeration:
    """Entries indexed from 1, either a finite list or a lazily pulled iterable.

    A lazy source is read strictly in order and only as far as requested;
    reads are serialized by a lock.
    """

    def __init__(self, entries: Sequence[DecimalStream] | Iterable[DecimalStream], finite: Optional[bool] = None):
        if finite is None:
            finite = isinstance(entries, (list, tuple))
        self.finite = finite
        if finite:
            self._cache = list(entries)
            self._source = None
        else:
            self._cache = []
            self._source = iter(entries)
        self._lock = threading.Lock()

    def __len__(self) -> int:
        if not self.finite:
            raise TypeError("a lazy enumeration has no length")
        return len(self._cache)

    def __getitem__(self, k: int) -> DecimalStream:
        check_natural(k, 1)
        with self._lock:
            while self._source is not None and len(self._cache) < k:
                try:
                    self._cache.append(next(self._source))
                except StopIteration:
                    self._source = None
                    self.finite = True
        if k > len(self._cache):
            raise IndexError(f"enumeration has only {len(self._cache)} entries")
        return self._cache[k - 1]


def _as_enumeration(e) -> Enumeration:
    return e if isinstance(e, Enumeration) else Enumeration(e)


def diagonal_witness(e, rule: Optional[DiagonalRule] = None) -> DecimalStream:
    """The diagonal number of ``e``: ``0.d1 d2 d3 ...`` with ``dk = rule(entry k, digit k)``.

    Past the end of a finite enumeration the witness continues with zeros.
    """
    e = _as_enumeration(e)
    rule = rule or paper_rule()
    if e.finite and len(e) == 0:
        raise ValueError("cannot diagonalize an empty enumeration")

    def digit(k: int) -> int:
        try:
            entry = e[k]
        except IndexError:
            return 0
        return rule(entry.digit(k))

    return DecimalStream(0, digit)


@dataclass
class WitnessReport:
    checked: int
    # entry index -> fractional position where the witness differs from it, or None
    differences: dict[int, Optional[int]] = field(default_factory=dict)
    truncated: bool = False

    @property
    def all_differ(self) -> bool:
        return all(pos is not None for pos in self.differences.values())

    @property
    def failures(self) -> list[int]:
        return [k for k, pos in self.differences.items() if pos is None]

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "differences": {str(k): pos for k, pos in self.differences.items()},
            "truncated": self.truncated,
            "all_differ": self.all_differ,
        }


def verify_witness(e, w: DecimalStream, upto: int) -> WitnessReport:
    """Check that ``w`` differs from entry ``k`` at fractional digit ``k`` for every ``k <= upto``."""
    check_natural(upto, 1)
    e = _as_enumeration(e)
    report = WitnessReport(checked=0)
    for k in range(1, upto + 1):
        try:
            entry = e[k]
        except IndexError:
            report.truncated = True
            break
        report.differences[k] = k if w.digit(k) != entry.digit(k) else None
        report.checked = k
    return report

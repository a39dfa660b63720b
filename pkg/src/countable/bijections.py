"""Pairing rules between the classic countable sets of integers.

Every set here comes with a canonical listing, ``nth(1), nth(2), ...``,
and the inverse ``index``.  A :class:`Bijection` bundles a forward map with
its inverse; both are total on their stated domains and refuse anything
outside them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Union

from .numbers import check_natural


class DomainError(ValueError):
    """An argument lies outside the domain of a map."""


class CompositionError(ValueError):
    """Two bijections were chained whose codomain and domain differ."""


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _require(x, domain) -> None:
    if not domain.contains(x):
        raise DomainError(f"{x!r} is not in {domain}")


# The five rules the sets are listed by.  Each forward map takes n >= 1.

def nat_to_even(n: int) -> int:
    _require(n, SetTag.NAT)
    return 2 * n


def even_to_nat(m: int) -> int:
    _require(m, SetTag.EVEN)
    return m // 2


def nat_to_nat0(n: int) -> int:
    _require(n, SetTag.NAT)
    return n - 1


def nat0_to_nat(m: int) -> int:
    _require(m, SetTag.NAT0)
    return m + 1


def nat_to_int(n: int) -> int:
    """Halve even numbers; for odd ``n`` return ``-(n - 1) / 2``.  1 goes to 0."""
    _require(n, SetTag.NAT)
    if n % 2 == 0:
        return n // 2
    return -((n - 1) // 2)


def int_to_nat(z: int) -> int:
    _require(z, SetTag.INT)
    if z > 0:
        return 2 * z
    return 2 * -z + 1


def nat_to_odd(n: int) -> int:
    _require(n, SetTag.NAT)
    return 2 * n - 1


def odd_to_nat(m: int) -> int:
    _require(m, SetTag.ODD)
    return (m + 1) // 2


def _nat_identity(n: int) -> int:
    _require(n, SetTag.NAT)
    return n


class SetTag(enum.Enum):
    NAT = "nat"
    NAT0 = "nat0"
    EVEN = "even"
    ODD = "odd"
    INT = "int"

    def contains(self, x) -> bool:
        if not _is_int(x):
            return False
        if self is SetTag.NAT:
            return x >= 1
        if self is SetTag.NAT0:
            return x >= 0
        if self is SetTag.EVEN:
            return x >= 2 and x % 2 == 0
        if self is SetTag.ODD:
            return x >= 1 and x % 2 == 1
        return True

    def nth(self, i: int) -> int:
        """The ``i``-th member (from 1) in canonical order."""
        return _LISTING[self][0](i)

    def index(self, x: int) -> int:
        return _LISTING[self][1](x)

    def __str__(self) -> str:
        return self.name


_LISTING: dict[SetTag, tuple[Callable[[int], int], Callable[[int], int]]] = {
    SetTag.NAT: (_nat_identity, _nat_identity),
    SetTag.NAT0: (nat_to_nat0, nat0_to_nat),
    SetTag.EVEN: (nat_to_even, even_to_nat),
    SetTag.ODD: (nat_to_odd, odd_to_nat),
    SetTag.INT: (nat_to_int, int_to_nat),
}


@dataclass(frozen=True)
class Tail:
    """The naturals from ``start`` on: ``{start, start + 1, ...}``."""

    start: int

    def contains(self, x) -> bool:
        return _is_int(x) and x >= self.start

    def nth(self, i: int) -> int:
        _require(i, SetTag.NAT)
        return self.start + i - 1

    def index(self, x: int) -> int:
        _require(x, self)
        return x - self.start + 1

    def __str__(self) -> str:
        return f"{{{self.start}, {self.start + 1}, ...}}"


Domain = Union[SetTag, Tail]


@dataclass(frozen=True)
class Bijection:
    name: str
    domain: Domain
    codomain: Domain
    forward: Callable[[int], int]
    inverse: Callable[[int], int]

    def __call__(self, x: int) -> int:
        return self.forward(x)

    def inverted(self) -> Bijection:
        return Bijection(f"{self.name}^-1", self.codomain, self.domain, self.inverse, self.forward)


def shift_bijection(k: int) -> Bijection:
    """``n -> n - k`` from ``{k + 1, k + 2, ...}`` onto the naturals."""
    check_natural(k)
    if k == 0:
        return Bijection("shift:0", SetTag.NAT, SetTag.NAT, SetTag.NAT.nth, SetTag.NAT.index)
    domain = Tail(k + 1)

    def forward(n: int) -> int:
        _require(n, domain)
        return n - k

    def inverse(m: int) -> int:
        _require(m, SetTag.NAT)
        return m + k

    return Bijection(f"shift:{k}", domain, SetTag.NAT, forward, inverse)


def compose(f: Bijection, g: Bijection) -> Bijection:
    """``g`` after ``f``."""
    if f.codomain != g.domain:
        raise CompositionError(
            f"cannot compose {f.name} (into {f.codomain}) with {g.name} (from {g.domain})"
        )
    return Bijection(
        f"{g.name}.{f.name}",
        f.domain,
        g.codomain,
        lambda x: g.forward(f.forward(x)),
        lambda y: f.inverse(g.inverse(y)),
    )


DOUBLE = Bijection("double", SetTag.NAT, SetTag.EVEN, nat_to_even, even_to_nat)
PRED = Bijection("pred", SetTag.NAT, SetTag.NAT0, nat_to_nat0, nat0_to_nat)
ZIGZAG = Bijection("zigzag", SetTag.NAT, SetTag.INT, nat_to_int, int_to_nat)
TO_ODD = Bijection("to-odd", SetTag.NAT, SetTag.ODD, nat_to_odd, odd_to_nat)

BUILTINS = {b.name: b for b in (DOUBLE, PRED, ZIGZAG, TO_ODD)}


def lookup(name: str) -> Bijection:
    """Resolve a CLI name: ``double``, ``pred``, ``zigzag``, ``to-odd`` or ``shift:<k>``."""
    if name in BUILTINS:
        return BUILTINS[name]
    if name.startswith("shift:"):
        arg = name[len("shift:"):]
        if arg.isdigit():
            return shift_bijection(int(arg))
    raise KeyError(f"unknown bijection {name!r}")


def enumerate_set(tag: SetTag, count: int) -> list[int]:
    """The first ``count`` members of ``tag`` in canonical order (integers go 0, 1, -1, 2, -2, ...)."""
    check_natural(count)
    return [tag.nth(i) for i in range(1, count + 1)]

"""A small language for pairing rules, and checkers for them.

Grammar (one variable, ``n``)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := INT | 'n' | '-' factor | '(' expr ')'
            | 'if' 'even' 'then' expr 'else' expr

``/`` is exact division: a remainder is an error, never rounded away.
``if even`` asks whether ``n`` itself is even.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Optional, Sequence, Union

from .bijections import SetTag
from .numbers import check_natural


class RuleSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RuleEvaluationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class IfEven:
    then: Expr
    otherwise: Expr


Expr = Union[Num, Var, Neg, BinOp, IfEven]

KEYWORDS = {"if", "even", "then", "else"}

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_]\w*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            word = m.group(2)
            if word == "n" or word in KEYWORDS:
                tokens.append((word, word, m.start(2)))
            else:
                raise RuleSyntaxError(f"unknown variable {word!r} (only 'n' is allowed)", m.start(2))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/()":
                raise RuleSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        if self.kind != kind:
            self.fail(f"expected {kind!r}")
        return self.advance()

    def fail(self, message: str):
        _, text, pos = self.tokens[self.i]
        found = f"{text!r}" if text else "end of input"
        raise RuleSyntaxError(f"{message}, found {found}", pos)

    def expr(self) -> Expr:
        node = self.term()
        while self.kind in ("+", "-"):
            op = self.advance()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.kind in ("*", "/"):
            op = self.advance()[0]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        kind = self.kind
        if kind == "int":
            return Num(int(self.advance()[1]))
        if kind == "n":
            self.advance()
            return Var()
        if kind == "-":
            self.advance()
            return Neg(self.factor())
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "if":
            self.advance()
            self.expect("even")
            self.expect("then")
            then = self.expr()
            self.expect("else")
            return IfEven(then, self.expr())
        self.fail("expected a number, 'n', '-', '(' or 'if'")


def parse_rule(text: str) -> Expr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.kind != "end":
        parser.fail("unexpected token")
    return node


def format_rule(node: Expr) -> str:
    """Print ``node`` so that :func:`parse_rule` reads back the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return "n"
    if isinstance(node, Neg):
        return "-" + format_rule(node.operand)
    if isinstance(node, BinOp):
        return f"({format_rule(node.left)} {node.op} {format_rule(node.right)})"
    return f"(if even then {format_rule(node.then)} else {format_rule(node.otherwise)})"


def eval_rule(node: Expr, n: int) -> int:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return n
    if isinstance(node, Neg):
        return -eval_rule(node.operand, n)
    if isinstance(node, IfEven):
        return eval_rule(node.then if n % 2 == 0 else node.otherwise, n)
    a = eval_rule(node.left, n)
    b = eval_rule(node.right, n)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if b == 0:
        raise RuleEvaluationError(f"division by zero at n={n}")
    q, r = divmod(a, b)
    if r:
        raise RuleEvaluationError(f"{a}/{b} is not exact at n={n}")
    return q


BIJECTION_ON_PREFIX = "bijection-on-prefix"
NOT_INJECTIVE = "not-injective"
NOT_SURJECTIVE = "not-surjective-on-prefix"
OUT_OF_CODOMAIN = "out-of-codomain"

MAX_COUNTEREXAMPLES = 10


@dataclass
class CheckReport:
    verdict: str
    bound: int
    codomain: SetTag
    # (n, value or None, reason) for inputs that failed to land in the codomain
    out_of_codomain: list[tuple[int, Optional[int], str]] = field(default_factory=list)
    collision: Optional[tuple[int, int]] = None
    missed: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == BIJECTION_ON_PREFIX

    @property
    def counterexamples(self) -> list:
        if self.verdict == OUT_OF_CODOMAIN:
            return [n for n, _, _ in self.out_of_codomain]
        if self.verdict == NOT_INJECTIVE:
            return list(self.collision)
        if self.verdict == NOT_SURJECTIVE:
            return list(self.missed)
        return []

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "bound": self.bound,
            "codomain": self.codomain.value,
            "counterexamples": self.counterexamples,
            "out_of_codomain": [
                {"n": n, "value": v, "reason": why} for n, v, why in self.out_of_codomain
            ],
            "collision": list(self.collision) if self.collision else None,
            "missed": self.missed,
        }


def check_pairing(rule: Expr | str, codomain: SetTag, bound: int) -> CheckReport:
    """Test ``rule`` as a pairing of ``1..bound`` with ``codomain``.

    Three checks: every value lies in ``codomain``; no two inputs share a
    value; every codomain member among the first ``bound // 2`` of its
    canonical listing is hit.  The factor 2 is slack for rules that list
    the codomain in a different order than the canonical one.  A finite
    check can refute a pairing but never prove one.
    """
    check_natural(bound, 1)
    if isinstance(rule, str):
        rule = parse_rule(rule)
    report = CheckReport(BIJECTION_ON_PREFIX, bound, codomain)
    first_seen: dict[int, int] = {}
    for n in range(1, bound + 1):
        try:
            v = eval_rule(rule, n)
        except RuleEvaluationError as exc:
            report.out_of_codomain.append((n, None, str(exc)))
            continue
        if not codomain.contains(v):
            report.out_of_codomain.append((n, v, f"{v} is not in {codomain}"))
            continue
        if v in first_seen:
            pair = (first_seen[v], n)
            if report.collision is None or pair < report.collision:
                report.collision = pair
        else:
            first_seen[v] = n
    for i in range(1, bound // 2 + 1):
        target = codomain.nth(i)
        if target not in first_seen:
            report.missed.append(target)
    del report.out_of_codomain[MAX_COUNTEREXAMPLES:]
    del report.missed[MAX_COUNTEREXAMPLES:]
    if report.out_of_codomain:
        report.verdict = OUT_OF_CODOMAIN
    elif report.collision:
        report.verdict = NOT_INJECTIVE
    elif report.missed:
        report.verdict = NOT_SURJECTIVE
    return report


MAX_FINITE = 9


class FiniteSetTooLarge(ValueError):
    pass


@dataclass
class ComparisonReport:
    size_a: int
    size_b: int
    pairings: int
    without_remainder: bool
    # which side is left with unpaired elements in every pairing: "a", "b" or None
    leftover_side: Optional[str]
    leftover_counts: set[int]

    @property
    def verdict(self) -> str:
        if self.without_remainder:
            return "|A| = |B|"
        return "|A| < |B|" if self.leftover_side == "b" else "|A| > |B|"

    def to_json(self) -> dict:
        return {
            "size_a": self.size_a,
            "size_b": self.size_b,
            "pairings": self.pairings,
            "without_remainder": self.without_remainder,
            "leftover_side": self.leftover_side,
            "leftover_counts": sorted(self.leftover_counts),
            "verdict": self.verdict,
        }


def maximal_pairings(a: Sequence, b: Sequence):
    """Every way to pair all of the smaller list with distinct members of the larger.

    Yields ``(pairs, leftover_a, leftover_b)``.
    """
    if len(a) <= len(b):
        for image in permutations(b, len(a)):
            used = set(image)
            yield list(zip(a, image)), [], [y for y in b if y not in used]
    else:
        for image in permutations(a, len(b)):
            used = set(image)
            yield list(zip(image, b)), [x for x in a if x not in used], []


def compare_finite(a: Sequence, b: Sequence) -> ComparisonReport:
    """Compare two small finite sets by trying every maximal pairing."""
    for name, xs in (("A", a), ("B", b)):
        if len(xs) > MAX_FINITE:
            raise FiniteSetTooLarge(
                f"set {name} has {len(xs)} elements; at most {MAX_FINITE} are allowed, "
                f"since all {factorial(len(xs))}+ pairings are enumerated"
            )
        if len(set(xs)) != len(xs):
            raise ValueError(f"set {name} lists an element twice")
    count = 0
    sides = set()
    leftover_counts = set()
    any_clean = False
    for _, left_a, left_b in maximal_pairings(a, b):
        count += 1
        leftover_counts.add(len(left_a) + len(left_b))
        if not left_a and not left_b:
            any_clean = True
        if left_a:
            sides.add("a")
        if left_b:
            sides.add("b")
    side = sides.pop() if len(sides) == 1 else None
    return ComparisonReport(len(a), len(b), count, any_clean, side, leftover_counts)

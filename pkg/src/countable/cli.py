"""Command-line entry point: ``countable <command> ...``.

Exit status is 0 on success, 1 for usage errors and 2 for bad input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import bijections, diagonal, dsl, hotel, rationals
from .numbers import DecimalFormatError, DecimalStream, format_rational

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class DataError(Exception):
    """Input that parsed as a command but cannot be processed."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="countable", description="Executable countability arguments.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="command")
    sub.required = True

    p = sub.add_parser("enumerate", help="list the first members of nat, nat0, even, odd or int")
    p.add_argument("set", choices=[t.value for t in bijections.SetTag])
    p.add_argument("count", type=_natural)
    _add_json(p)

    p = sub.add_parser("map", help="apply a bijection: double, pred, shift:<k>, zigzag, to-odd")
    p.add_argument("bijection")
    p.add_argument("values", nargs="+", type=int)
    p.add_argument("--inverse", action="store_true", help="apply the inverse map")
    _add_json(p)

    p = sub.add_parser(
        "rationals",
        help="the diagonal listing of the rationals",
        description="With --signed the listing covers all of Q: position 1 is 0, "
        "even positions 2m hold the m-th positive rational, odd positions 2m+1 its negative.",
    )
    rsub = p.add_subparsers(dest="action", parser_class=_Parser, metavar="action")
    rsub.required = True
    for name, arg, kind, help_text in (
        ("list", "count", _natural, "first COUNT rationals"),
        ("at", "n", _positive_int, "the rational at position N"),
        ("index", "fraction", str, "position of P/Q (must be in lowest terms)"),
    ):
        rp = rsub.add_parser(name, help=help_text)
        rp.add_argument(arg, type=kind)
        rp.add_argument("--signed", action="store_true", help="use the listing of all of Q")
        _add_json(rp)

    p = sub.add_parser("diagonalize", help="build a decimal missing from a list of decimals")
    p.add_argument("file", help="one decimal expansion per line")
    p.add_argument("--rule", choices=sorted(diagonal.RULES), default="paper")
    p.add_argument("--digits", type=_natural, help="digits to print (default: number of entries)")
    p.add_argument("--verify", action="store_true", help="report where the witness differs from each entry")
    _add_json(p)

    p = sub.add_parser("hotel", help="run a Hilbert's hotel script")
    hsub = p.add_subparsers(dest="action", parser_class=_Parser, metavar="action")
    hsub.required = True
    hp = hsub.add_parser("run", help="execute a script of arrive/where/who/audit lines")
    hp.add_argument("script")
    _add_json(hp)

    p = sub.add_parser("check", help="test a pairing rule written in the rule language")
    p.add_argument("--rule", required=True)
    p.add_argument("--codomain", required=True, choices=["even", "nat", "nat0", "int", "odd"])
    p.add_argument("--bound", type=_positive_int, default=1000)
    _add_json(p)

    p = sub.add_parser("compare", help="compare two small finite sets by exhaustive pairing")
    p.add_argument("--a", required=True, help="comma-separated elements")
    p.add_argument("--b", required=True, help="comma-separated elements")
    _add_json(p)
    return parser


def _emit(out: TextIO, args, text: str, obj) -> None:
    if args.json:
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(text + "\n")


def _cmd_enumerate(args, out):
    tag = bijections.SetTag(args.set)
    members = bijections.enumerate_set(tag, args.count)
    _emit(out, args, " ".join(map(str, members)), {"set": tag.value, "members": members})


def _cmd_map(args, out):
    try:
        b = bijections.lookup(args.bijection)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    fn = b.inverse if args.inverse else b.forward
    try:
        results = [fn(v) for v in args.values]
    except bijections.DomainError as exc:
        raise DataError(str(exc)) from None
    _emit(
        out,
        args,
        " ".join(map(str, results)),
        {
            "bijection": b.name,
            "inverse": args.inverse,
            "results": [{"input": v, "output": r} for v, r in zip(args.values, results)],
        },
    )


def _parse_fraction(text: str) -> tuple[int, int]:
    try:
        if "/" in text:
            p, q = text.split("/")
            return int(p), int(q)
        return int(text), 1
    except ValueError:
        raise DataError(f"not a fraction: {text!r}") from None


def _cmd_rationals(args, out):
    at = rationals.nat_to_rational if args.signed else rationals.nat_to_positive_rational
    if args.action == "list":
        values = [format_rational(at(n)) for n in range(1, args.count + 1)]
        _emit(out, args, " ".join(values), {"signed": args.signed, "rationals": values})
    elif args.action == "at":
        r = format_rational(at(args.n))
        _emit(out, args, r, {"signed": args.signed, "n": args.n, "rational": r})
    else:
        pair = _parse_fraction(args.fraction)
        try:
            if args.signed:
                n = rationals.rational_to_nat(pair)
            else:
                n = rationals.positive_rational_to_nat(pair)
        except (rationals.NonCanonicalError, ZeroDivisionError) as exc:
            raise DataError(str(exc)) from None
        r = format_rational(Fraction(*pair))
        _emit(out, args, str(n), {"signed": args.signed, "rational": r, "n": n})


def _read_lines(path: str) -> list[tuple[int, str]]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise DataError(f"{path} is not UTF-8 text") from None
    return [
        (no, line.strip())
        for no, line in enumerate(lines, 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]


def _cmd_diagonalize(args, out):
    entries = []
    for no, line in _read_lines(args.file):
        try:
            entries.append(DecimalStream.parse(line))
        except DecimalFormatError as exc:
            raise DataError(f"{args.file}:{no}: {exc}") from None
    if not entries:
        raise DataError(f"{args.file} lists no decimals")
    rule = diagonal.RULES[args.rule]()
    witness = diagonal.diagonal_witness(entries, rule)
    k = len(entries) if args.digits is None else args.digits
    report = diagonal.verify_witness(entries, witness, len(entries)) if args.verify else None
    if args.json:
        obj = {"rule": rule.name, "witness": witness.to_json(k)}
        if report is not None:
            obj["verify"] = report.to_json()
        _emit(out, args, "", obj)
        return
    out.write(witness.format(k) + "\n")
    if report is not None:
        for entry, pos in report.differences.items():
            if pos is None:
                out.write(f"entry {entry}: agrees at position {entry}\n")
            else:
                out.write(f"entry {entry}: differs at position {pos}\n")
        failures = report.failures
        out.write("verdict: all-differ\n" if not failures else f"verdict: fails at k={failures[0]}\n")


def _hotel_event(state: hotel.HotelState, words: list[str]):
    """Apply one script line; return the new state, trace text and JSON record."""
    cmd, rest = words[0], words[1:]
    if len(rest) != 1:
        raise ValueError(f"{cmd} takes exactly one argument")
    arg = rest[0]
    if cmd == "arrive":
        if arg == "inf":
            state = hotel.check_in_countably_many(state)
            c = state.newest_cohort()
            return state, f"arrive inf: double, cohort {c} takes the odd rooms", {
                "event": "arrive", "guests": "inf", "move": "double", "cohort": c}
        k = int(arg)
        if k < 1:
            raise ValueError("arrive needs a positive count or 'inf'")
        state = hotel.check_in_finite(state, k)
        c = state.newest_cohort()
        return state, f"arrive {k}: shift {k}, cohort {c} takes rooms 1..{k}", {
            "event": "arrive", "guests": k, "move": f"shift {k}", "cohort": c}
    if cmd == "where":
        cohort, _, index = arg.partition(":")
        guest = hotel.Guest(int(cohort), int(index))
        room = state.room_of(guest)
        return state, f"where {guest} -> room {room}", {
            "event": "where", "guest": str(guest), "room": room}
    if cmd == "who":
        room = int(arg)
        guest = state.guest_in(room)
        shown = "vacant" if guest is None else str(guest)
        return state, f"who {room} -> {shown}", {
            "event": "who", "room": room, "guest": None if guest is None else str(guest)}
    if cmd == "audit":
        sample = int(arg)
        report = hotel.audit(state, sample)
        parts = [f"{len(r)} in cohort {c}" for c, r in sorted(report.occupancy.items())]
        parts.append(f"{len(report.vacant)} vacant")
        status = "ok" if report.ok else "FAILED"
        text = f"audit {sample}: {status}, " + ", ".join(parts)
        if report.collisions:
            a, b, room = report.collisions[0]
            text += f"; {a} and {b} share room {room}"
        return state, text, {"event": "audit", "ok": report.ok, **report.to_json()}
    raise ValueError(f"unknown event {cmd!r}")


def _cmd_hotel(args, out):
    state = hotel.new_full_hotel()
    for no, line in _read_lines(args.script):
        try:
            state, text, obj = _hotel_event(state, line.split())
        except (ValueError, hotel.UnknownGuestError) as exc:
            raise DataError(f"{args.script}:{no}: {exc}") from None
        _emit(out, args, text, obj)


def _cmd_check(args, out):
    try:
        rule = dsl.parse_rule(args.rule)
    except dsl.RuleSyntaxError as exc:
        raise DataError(str(exc)) from None
    report = dsl.check_pairing(rule, bijections.SetTag(args.codomain), args.bound)
    lines = [f"verdict: {report.verdict}", f"bound: {report.bound}"]
    if report.verdict == dsl.OUT_OF_CODOMAIN:
        lines += [f"n={n}: {why}" for n, _, why in report.out_of_codomain]
    elif report.verdict == dsl.NOT_INJECTIVE:
        i, j = report.collision
        lines.append(f"collision: n={i} and n={j}")
    elif report.verdict == dsl.NOT_SURJECTIVE:
        lines.append("missed: " + " ".join(map(str, report.missed)))
    _emit(out, args, "\n".join(lines), report.to_json())


def _split(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _cmd_compare(args, out):
    try:
        report = dsl.compare_finite(_split(args.a), _split(args.b))
    except ValueError as exc:
        raise DataError(str(exc)) from None
    side = {"a": "A", "b": "B", None: "none"}[report.leftover_side]
    text = "\n".join([
        f"pairings: {report.pairings}",
        f"without remainder: {'yes' if report.without_remainder else 'no'}",
        f"leftover side: {side}",
        f"verdict: {report.verdict}",
    ])
    _emit(out, args, text, report.to_json())


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "rationals": _cmd_rationals,
    "diagonalize": _cmd_diagonalize,
    "hotel": _cmd_hotel,
    "check": _cmd_check,
    "compare": _cmd_compare,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except DataError as exc:
        err.write(f"countable: {exc}\n")
        return EXIT_DATA
    except SystemExit as exc:
        # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

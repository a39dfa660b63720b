"""Hilbert's hotel with countably many rooms, all of them taken.

Nothing infinite is stored.  A state is the list of room moves made so far
(``Shift(k)``: r -> r + k, or ``Double``: r -> 2r) plus a record of which
group of guests ("cohort") arrived after which move.  Where a guest is now
is computed by pushing their first room through every later move; who is
in a room is computed by undoing the moves newest first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .bijections import nat_to_odd
from .numbers import check_natural


class UnknownGuestError(LookupError):
    pass


@dataclass(frozen=True)
class Shift:
    k: int

    def __post_init__(self):
        check_natural(self.k, 1)

    def apply(self, room: int) -> int:
        return room + self.k

    def undo(self, room: int) -> Optional[int]:
        """The room that moved into ``room``, or None if ``room`` was freed."""
        return room - self.k if room > self.k else None

    def __str__(self) -> str:
        return f"shift {self.k}"


@dataclass(frozen=True)
class Double:
    def apply(self, room: int) -> int:
        return 2 * room

    def undo(self, room: int) -> Optional[int]:
        return room // 2 if room % 2 == 0 else None

    def __str__(self) -> str:
        return "double"


Move = Union[Shift, Double]


class Guest(NamedTuple):
    cohort: int
    index: int

    def __str__(self) -> str:
        return f"{self.cohort}:{self.index}"


@dataclass(frozen=True)
class Cohort:
    """Guests that arrived together right after move number ``arrived_after``.

    Guest ``i`` starts in room ``i``, or in the ``i``-th odd room when
    ``odd`` is set.  ``size`` is None for countably many guests.
    """

    arrived_after: int
    size: Optional[int]
    odd: bool = False

    def first_room(self, index: int) -> int:
        return nat_to_odd(index) if self.odd else index

    def index_of_room(self, room: int) -> Optional[int]:
        if self.odd:
            return (room + 1) // 2 if room % 2 == 1 else None
        return room if self.size is None or room <= self.size else None

    def has_guest(self, index: int) -> bool:
        return index >= 1 and (self.size is None or index <= self.size)


@dataclass(frozen=True)
class HotelState:
    moves: tuple[Move, ...] = ()
    cohorts: tuple[Cohort, ...] = (Cohort(0, None),)

    def _arrive(self, move: Move, size: Optional[int]) -> HotelState:
        moves = self.moves + (move,)
        return HotelState(moves, self.cohorts + (Cohort(len(moves), size, odd=size is None),))

    def reassign(self, move: Move) -> HotelState:
        """Move every guest without letting anyone new in; freed rooms stay empty."""
        return HotelState(self.moves + (move,), self.cohorts)

    def room_of(self, guest: Guest) -> int:
        cohort_id, index = guest
        if not 0 <= cohort_id < len(self.cohorts) or not self.cohorts[cohort_id].has_guest(index):
            raise UnknownGuestError(f"no guest {cohort_id}:{index}")
        cohort = self.cohorts[cohort_id]
        room = cohort.first_room(index)
        for move in self.moves[cohort.arrived_after:]:
            room = move.apply(room)
        return room

    def guest_in(self, room: int) -> Optional[Guest]:
        check_natural(room, 1)
        arrivals = {c.arrived_after: i for i, c in enumerate(self.cohorts)}
        for step in range(len(self.moves), -1, -1):
            if step in arrivals:
                cohort_id = arrivals[step]
                index = self.cohorts[cohort_id].index_of_room(room)
                if index is not None:
                    return Guest(cohort_id, index)
            if step == 0:
                break
            room = self.moves[step - 1].undo(room)
            if room is None:
                return None
        return None

    def newest_cohort(self) -> int:
        return len(self.cohorts) - 1


def new_full_hotel() -> HotelState:
    """Cohort 0 fills the hotel: guest ``i`` in room ``i``."""
    return HotelState()


def check_in_finite(s: HotelState, k: int) -> HotelState:
    check_natural(k, 1)
    return s._arrive(Shift(k), k)


def check_in_one(s: HotelState) -> HotelState:
    return check_in_finite(s, 1)


def check_in_countably_many(s: HotelState) -> HotelState:
    return s._arrive(Double(), None)


def room_of(s: HotelState, guest: Guest | tuple[int, int]) -> int:
    return s.room_of(Guest(*guest))


def guest_in(s: HotelState, room: int) -> Optional[Guest]:
    return s.guest_in(room)


@dataclass
class AuditReport:
    sample: int
    occupancy: dict[int, list[int]] = field(default_factory=dict)
    vacant: list[int] = field(default_factory=list)
    collisions: list[tuple[Guest, Guest, int]] = field(default_factory=list)
    round_trip_failures: list[Guest] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return not self.collisions

    @property
    def consistent(self) -> bool:
        return not self.round_trip_failures

    @property
    def ok(self) -> bool:
        return self.injective and self.consistent

    def to_json(self) -> dict:
        return {
            "sample": self.sample,
            "injective": self.injective,
            "consistent": self.consistent,
            "occupied": sum(len(r) for r in self.occupancy.values()),
            "vacant": self.vacant,
            "occupancy": {str(c): rooms for c, rooms in self.occupancy.items()},
            "collisions": [[str(a), str(b), room] for a, b, room in self.collisions],
            "round_trip_failures": [str(g) for g in self.round_trip_failures],
        }


def audit(s: HotelState, sample: int) -> AuditReport:
    """Check rooms ``1..sample`` from both directions.

    Forward: list every guest whose room is ``<= sample`` (rooms grow with the
    guest index, so each cohort is scanned until it leaves the range) and look
    for two guests sharing a room.  Backward: ask who is in each room and
    confirm that guest's room is that room.
    """
    check_natural(sample, 1)
    report = AuditReport(sample)
    holder: dict[int, Guest] = {}
    for cohort_id, cohort in enumerate(s.cohorts):
        index = 1
        while cohort.has_guest(index):
            guest = Guest(cohort_id, index)
            room = s.room_of(guest)
            if room > sample:
                break
            if room in holder:
                report.collisions.append((holder[room], guest, room))
            else:
                holder[room] = guest
            index += 1
    for room in range(1, sample + 1):
        guest = s.guest_in(room)
        if guest is None:
            report.vacant.append(room)
            if room in holder:
                report.round_trip_failures.append(holder[room])
            continue
        if s.room_of(guest) != room or holder.get(room) != guest:
            report.round_trip_failures.append(guest)
        report.occupancy.setdefault(guest.cohort, []).append(room)
    return report

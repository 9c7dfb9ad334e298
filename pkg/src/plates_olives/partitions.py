"""Partition states and the legal moves of the game of plates and olives.

A table configuration is recorded as an integer partition: a plate carrying
c olives contributes a part of size c + 1, so an empty plate is a part of
size 1 and the empty table is the empty partition.  The weight of the
partition (sum of parts) is therefore plates plus olives.

Six kinds of move act on a configuration.  Their tokens form a small
grammar that is shared by the whole package and is parsed and printed
bit for bit:

    P+         put a new empty plate on the table
    O+f        put an olive on some empty plate
    O+l:i      put an olive on a plate already carrying i >= 1 olives
    O-:i       take an olive off a plate carrying i >= 1 olives
    P-s        remove an empty plate
    P-c:i,j    combine two plates carrying i and j olives (i <= j, both
               >= 1) onto one plate and remove the emptied plate

Moves are identified by what they consume, not by which physical plate is
touched, so two plates with the same olive count are interchangeable and
each token names at most one legal transition.  Adding moves (P+, O+f,
O+l) raise the weight by one; the removing moves lower it by one.

Partitions print with parts nonincreasing and comma-separated inside
angle brackets, "<3,2,1>", and the empty partition prints as "<>".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Iterable, Iterator

from .errors import IllegalMove, ResourceLimit

DEFAULT_STATE_LIMIT = 10_000_000


def w_cap(t: int) -> int:
    """Largest t' >= 1 with t'(t'-1)/2 <= t.

    A configuration of weight t has at most w_cap(t) distinct part sizes,
    since k distinct sizes already weigh at least 1 + 2 + ... + k.  The
    per-state move capacities below are all controlled by this quantity.
    """
    if t < 0:
        raise ValueError("weight must be nonnegative")
    return (1 + isqrt(1 + 8 * t)) // 2


class MoveKind(Enum):
    PLATE_ADD = "P+"
    OLIVE_ADD_FIRST = "O+f"
    OLIVE_ADD_LATER = "O+l"
    OLIVE_REMOVE = "O-"
    PLATE_REMOVE_SIMPLE = "P-s"
    PLATE_REMOVE_COMPLEX = "P-c"

    @property
    def is_addition(self) -> bool:
        return self in (
            MoveKind.PLATE_ADD,
            MoveKind.OLIVE_ADD_FIRST,
            MoveKind.OLIVE_ADD_LATER,
        )


@dataclass(frozen=True, slots=True)
class Move:
    """One move token.

    ``i`` holds the olive count named by O+l:i / O-:i, and ``i``, ``j``
    hold the unordered pair (stored with i <= j) named by P-c:i,j.  The
    parameterless kinds leave both fields as None.
    """

    kind: MoveKind
    i: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        kind = self.kind
        if kind in (MoveKind.OLIVE_ADD_LATER, MoveKind.OLIVE_REMOVE):
            if self.i is None or self.i < 1 or self.j is not None:
                raise ValueError(f"{kind.value} takes a single olive count >= 1")
        elif kind is MoveKind.PLATE_REMOVE_COMPLEX:
            if self.i is None or self.j is None or self.i < 1 or self.j < 1:
                raise ValueError("P-c takes an unordered pair of counts >= 1")
            if self.i > self.j:
                # the pair is unordered; store it canonically as i <= j
                lo, hi = self.j, self.i
                object.__setattr__(self, "i", lo)
                object.__setattr__(self, "j", hi)
        elif self.i is not None or self.j is not None:
            raise ValueError(f"{kind.value} takes no parameters")

    @property
    def weight_delta(self) -> int:
        return 1 if self.kind.is_addition else -1

    def token(self) -> str:
        kind = self.kind
        if kind is MoveKind.OLIVE_ADD_LATER or kind is MoveKind.OLIVE_REMOVE:
            return f"{kind.value}:{self.i}"
        if kind is MoveKind.PLATE_REMOVE_COMPLEX:
            return f"{kind.value}:{self.i},{self.j}"
        return kind.value

    def __str__(self) -> str:
        return self.token()

    @classmethod
    def parse(cls, token: str) -> "Move":
        head, sep, tail = token.partition(":")
        kind = _KIND_BY_PREFIX.get(head)
        if kind is None:
            raise ValueError(f"unknown move token {token!r}")
        if not sep:
            if kind in _PARAMETERLESS:
                return cls(kind)
            raise ValueError(f"move token {token!r} is missing its parameters")
        if kind in _PARAMETERLESS:
            raise ValueError(f"move token {token!r} takes no parameters")
        try:
            if kind is MoveKind.PLATE_REMOVE_COMPLEX:
                a, b = tail.split(",")
                lo, hi = int(a), int(b)
                if lo > hi:
                    raise ValueError("pair must print with i <= j")
                return cls(kind, i=lo, j=hi)
            return cls(kind, i=int(tail))
        except ValueError as exc:
            raise ValueError(f"malformed move token {token!r}") from exc


_KIND_BY_PREFIX = {kind.value: kind for kind in MoveKind}
_PARAMETERLESS = frozenset(
    {MoveKind.PLATE_ADD, MoveKind.OLIVE_ADD_FIRST, MoveKind.PLATE_REMOVE_SIMPLE}
)


@dataclass(frozen=True, slots=True)
class Partition:
    """A table state in canonical form: a nonincreasing tuple of parts >= 1."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError("parts must be integers >= 1")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            parts = tuple(sorted(parts, reverse=True))
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def plate_count(self) -> int:
        return len(self.parts)

    @property
    def olive_count(self) -> int:
        return self.weight - self.plate_count

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def has_empty_plate(self) -> bool:
        # parts are nonincreasing, so any part 1 sits at the end
        return bool(self.parts) and self.parts[-1] == 1

    def occupancy(self) -> dict[int, int]:
        """Map olive count -> number of plates carrying exactly that many."""
        return dict(Counter(part - 1 for part in self.parts))

    def __str__(self) -> str:
        return "<" + ",".join(str(p) for p in self.parts) + ">"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        if len(text) < 2 or text[0] != "<" or text[-1] != ">":
            raise ValueError(f"malformed partition literal {text!r}")
        body = text[1:-1]
        if not body:
            return cls()
        try:
            parts = tuple(int(piece) for piece in body.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition literal {text!r}") from exc
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts are not nonincreasing in {text!r}")
        return cls(parts)


EMPTY = Partition()
SINGLE_PLATE = Partition((1,))


def _replaced(parts: tuple[int, ...], old: int, new: int | None) -> Partition:
    lst = list(parts)
    lst.remove(old)
    if new is not None:
        lst.append(new)
    return Partition(tuple(sorted(lst, reverse=True)))


def legal_moves(
    state: Partition, allow_complex: bool = True
) -> list[tuple[Move, Partition]]:
    """All legal (move, successor) pairs at ``state``, sorted by move token.

    ``allow_complex=False`` drops the P-c moves; what remains are exactly
    the single-box moves of Young's lattice plus the constraint that O+f,
    P-s need an empty plate on the table.
    """
    occ = state.occupancy()
    held = sorted(c for c in occ if c >= 1)
    out: list[tuple[Move, Partition]] = [
        (Move(MoveKind.PLATE_ADD), Partition(state.parts + (1,)))
    ]
    if occ.get(0):
        out.append((Move(MoveKind.OLIVE_ADD_FIRST), _replaced(state.parts, 1, 2)))
        out.append((Move(MoveKind.PLATE_REMOVE_SIMPLE), _replaced(state.parts, 1, None)))
    for c in held:
        out.append(
            (Move(MoveKind.OLIVE_ADD_LATER, i=c), _replaced(state.parts, c + 1, c + 2))
        )
        out.append((Move(MoveKind.OLIVE_REMOVE, i=c), _replaced(state.parts, c + 1, c)))
    if allow_complex:
        for a, ci in enumerate(held):
            for cj in held[a:]:
                if ci == cj and occ[ci] < 2:
                    continue
                lst = list(state.parts)
                lst.remove(ci + 1)
                lst.remove(cj + 1)
                lst.append(ci + cj + 1)
                move = Move(MoveKind.PLATE_REMOVE_COMPLEX, i=ci, j=cj)
                out.append((move, Partition(tuple(sorted(lst, reverse=True)))))
    out.sort(key=lambda pair: pair[0].token())
    return out


def apply_move(state: Partition, move: Move) -> Partition:
    """Apply one move, raising IllegalMove when its preconditions fail."""
    occ = state.occupancy()
    kind = move.kind
    if kind is MoveKind.PLATE_ADD:
        return Partition(state.parts + (1,))
    if kind is MoveKind.OLIVE_ADD_FIRST:
        if not occ.get(0):
            raise IllegalMove(f"O+f needs an empty plate at {state}")
        return _replaced(state.parts, 1, 2)
    if kind is MoveKind.PLATE_REMOVE_SIMPLE:
        if not occ.get(0):
            raise IllegalMove(f"P-s needs an empty plate at {state}")
        return _replaced(state.parts, 1, None)
    if kind is MoveKind.OLIVE_ADD_LATER:
        if not occ.get(move.i):
            raise IllegalMove(f"{move} needs a plate with {move.i} olives at {state}")
        return _replaced(state.parts, move.i + 1, move.i + 2)
    if kind is MoveKind.OLIVE_REMOVE:
        if not occ.get(move.i):
            raise IllegalMove(f"{move} needs a plate with {move.i} olives at {state}")
        return _replaced(state.parts, move.i + 1, move.i)
    # P-c: needs two distinct plates holding i and j olives
    ci, cj = move.i, move.j
    enough = occ.get(ci, 0) >= 2 if ci == cj else occ.get(ci) and occ.get(cj)
    if not enough:
        raise IllegalMove(f"{move} needs plates with {ci} and {cj} olives at {state}")
    lst = list(state.parts)
    lst.remove(ci + 1)
    lst.remove(cj + 1)
    lst.append(ci + cj + 1)
    return Partition(tuple(sorted(lst, reverse=True)))


def move_capacity_profile(state: Partition) -> dict[MoveKind, int]:
    """Number of legal moves of each kind, computed from the occupancy map.

    With t the olive count and w = w_cap(t) the counts obey O+l <= w,
    O- <= w - 1, P-c <= w*w, and P+, O+f, P-s are each at most 1.
    """
    occ = state.occupancy()
    d = sum(1 for c in occ if c >= 1)
    has_empty = 1 if occ.get(0) else 0
    doubled = sum(1 for c, k in occ.items() if c >= 1 and k >= 2)
    return {
        MoveKind.PLATE_ADD: 1,
        MoveKind.OLIVE_ADD_FIRST: has_empty,
        MoveKind.OLIVE_ADD_LATER: d,
        MoveKind.OLIVE_REMOVE: d,
        MoveKind.PLATE_REMOVE_SIMPLE: has_empty,
        MoveKind.PLATE_REMOVE_COMPLEX: d * (d - 1) // 2 + doubled,
    }


def partitions_of_weight(weight: int) -> Iterator[Partition]:
    """All partitions of ``weight`` in descending lexicographic part order."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    yield from rec(weight, weight, [])


def partitions_up_to_weight(max_weight: int) -> Iterator[Partition]:
    for w in range(max_weight + 1):
        yield from partitions_of_weight(w)


class PartitionInterner:
    """Bijective ids for the partitions seen by a counting run.

    Ids are handed out in first-seen order, so a deterministic caller gets
    deterministic ids.  ``max_weight`` rejects states a correct caller
    can never produce; ``max_states`` turns runaway growth into a
    ResourceLimit instead of memory exhaustion.
    """

    def __init__(self, max_weight: int, max_states: int = DEFAULT_STATE_LIMIT) -> None:
        if max_weight < 0:
            raise ValueError("max_weight must be nonnegative")
        if max_states < 1:
            raise ValueError("max_states must be positive")
        self.max_weight = max_weight
        self.max_states = max_states
        self._ids: dict[Partition, int] = {}
        self._states: list[Partition] = []

    def __len__(self) -> int:
        return len(self._states)

    def __contains__(self, state: Partition) -> bool:
        return state in self._ids

    def intern(self, state: Partition) -> int:
        found = self._ids.get(state)
        if found is not None:
            return found
        if state.weight > self.max_weight:
            raise ValueError(
                f"state {state} exceeds interner weight bound {self.max_weight}"
            )
        if len(self._states) >= self.max_states:
            raise ResourceLimit(
                f"more than {self.max_states} distinct states; "
                "raise max_states to continue"
            )
        new_id = len(self._states)
        self._ids[state] = new_id
        self._states.append(state)
        return new_id

    def lookup(self, state: Partition) -> int | None:
        return self._ids.get(state)

    def partition_of(self, state_id: int) -> Partition:
        return self._states[state_id]

    def states(self) -> Iterable[Partition]:
        return tuple(self._states)

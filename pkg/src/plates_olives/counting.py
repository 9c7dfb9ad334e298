"""Exact counting of games and walks by layered dynamic programming.

Counting games of length n does not need the games themselves.  A game of
length n is forced to open with P+ and close with P-s, so dropping those
two moves leaves a walk of length 2n on the move graph that starts and
ends at <1> and never touches the empty partition.  ``WalkCounter``
propagates exact integer counts one step at a time over interned states,
so one pass to 2n reads off every shorter count along the way.

Two relatives of the game count share all of this machinery.  Closed
walks from the empty partition back to itself (empty revisits allowed)
count a coarser equivalence, and walks restricted to single-box moves are
exactly the closed walks in Young's lattice, counted by the double
factorial (2n - 1)!!.  Each Young walk lifts to a game by keeping one
extra empty plate on the table throughout, which is how the double
factorial becomes a lower bound for the game count.

Everything here returns plain Python integers, so results are exact at
any size.
"""

from __future__ import annotations

from itertools import permutations
from math import comb
from typing import Iterator, Sequence

from collections import Counter

from .errors import InvalidWalk
from .games import Game, validate_game
from .partitions import (
    DEFAULT_STATE_LIMIT,
    EMPTY,
    SINGLE_PLATE,
    Move,
    MoveKind,
    Partition,
    legal_moves,
)


class WalkCounter:
    """Layer-by-layer walk counts on the move graph.

    The counter starts with mass 1 on ``start`` and each ``advance()``
    pushes the whole layer through the legal moves.  Options:

    ``end``
        Intended endpoint; with ``prune=True`` states too heavy to reach
        ``end`` in the remaining steps are discarded as they arise, which
        keeps the live state set small without changing any count that
        can still reach the endpoint in time.
    ``allow_complex``
        When False the P-c moves are dropped and the graph becomes
        Young's lattice plus empty-plate bookkeeping.
    ``allow_interim_empty``
        When False the empty partition is forbidden except as the final
        state of the full walk (and then only when it is the endpoint).
    """

    def __init__(
        self,
        start: Partition,
        total_steps: int,
        end: Partition | None = None,
        allow_complex: bool = True,
        allow_interim_empty: bool = True,
        prune: bool = True,
        max_states: int = DEFAULT_STATE_LIMIT,
    ) -> None:
        if total_steps < 0:
            raise ValueError("total_steps must be nonnegative")
        self.start = start
        self.end = end
        self.total_steps = total_steps
        self.allow_complex = allow_complex
        self.allow_interim_empty = allow_interim_empty
        self.prune = prune and end is not None
        if self.prune:
            ew = end.weight
            # heaviest weight any surviving layer can hold
            self.max_weight = max(
                min(start.weight + k, ew + total_steps - k)
                for k in range(total_steps + 1)
            )
        else:
            self.max_weight = start.weight + total_steps
        from .partitions import PartitionInterner

        self._interner = PartitionInterner(self.max_weight, max_states=max_states)
        self._succ: dict[int, list[tuple[int, int]]] = {}
        self.step_index = 0
        self.layer: dict[int, int] = {self._interner.intern(start): 1}

    def _successors(self, sid: int) -> list[tuple[int, int]]:
        cached = self._succ.get(sid)
        if cached is None:
            state = self._interner.partition_of(sid)
            cached = []
            for _, nxt in legal_moves(state, allow_complex=self.allow_complex):
                if nxt.weight > self.max_weight:
                    continue
                cached.append((self._interner.intern(nxt), nxt.weight))
            self._succ[sid] = cached
        return cached

    def _weight_cap(self, k: int) -> int:
        if not self.prune:
            return self.start.weight + k
        return min(self.start.weight + k, self.end.weight + self.total_steps - k)

    def advance(self) -> None:
        if self.step_index >= self.total_steps:
            raise ValueError("walk already advanced to its full length")
        k = self.step_index + 1
        cap = self._weight_cap(k)
        empty_ok = self.allow_interim_empty or (
            k == self.total_steps and self.end is not None and self.end.is_empty
        )
        nxt: dict[int, int] = {}
        for sid, ways in self.layer.items():
            for tid, w in self._successors(sid):
                if w > cap:
                    continue
                if w == 0 and not empty_ok:
                    continue
                if tid in nxt:
                    nxt[tid] += ways
                else:
                    nxt[tid] = ways
        self.layer = nxt
        self.step_index = k

    def run(self) -> int:
        """Advance to the full length and return the count at ``end``."""
        if self.end is None:
            raise ValueError("run() needs an endpoint")
        while self.step_index < self.total_steps:
            self.advance()
        return self.count_of(self.end)

    def count_of(self, state: Partition) -> int:
        sid = self._interner.lookup(state)
        if sid is None:
            return 0
        return self.layer.get(sid, 0)

    def support(self) -> list[tuple[Partition, int]]:
        """Current layer as (state, count) pairs, in state-id order."""
        return [
            (self._interner.partition_of(sid), ways)
            for sid, ways in sorted(self.layer.items())
        ]


def count_games_through(max_n: int, max_states: int = DEFAULT_STATE_LIMIT) -> list[int]:
    """Game counts for every n from 0 to ``max_n`` out of a single pass.

    The count for n sits at layer 2n of the <1> to <1> walk; the weight
    prune for the longest walk keeps every state a shorter walk could
    use, so the intermediate layers are read off exactly.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    counter = WalkCounter(
        start=SINGLE_PLATE,
        end=SINGLE_PLATE,
        total_steps=2 * max_n,
        allow_interim_empty=False,
        max_states=max_states,
    )
    counts = [counter.count_of(SINGLE_PLATE)]
    for step in range(1, 2 * max_n + 1):
        counter.advance()
        if step % 2 == 0:
            counts.append(counter.count_of(SINGLE_PLATE))
    return counts


def count_games(n: int, max_states: int = DEFAULT_STATE_LIMIT) -> int:
    """Number of games of length n, computed without enumerating them."""
    return count_games_through(n, max_states=max_states)[n]


def count_closed_walks_through(
    max_n: int, allow_complex: bool = True, max_states: int = DEFAULT_STATE_LIMIT
) -> list[int]:
    """Closed-walk counts (length 2n + 2 from the empty table, interim
    empties allowed) for every n from 0 to ``max_n``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    counter = WalkCounter(
        start=EMPTY,
        end=EMPTY,
        total_steps=2 * max_n + 2,
        allow_complex=allow_complex,
        max_states=max_states,
    )
    counts = []
    for step in range(1, 2 * max_n + 3):
        counter.advance()
        if step % 2 == 0:
            counts.append(counter.count_of(EMPTY))
    return counts


def count_closed_walks(
    n: int, allow_complex: bool = True, max_states: int = DEFAULT_STATE_LIMIT
) -> int:
    """Closed walks of length 2n + 2 on the full move graph.

    Unlike games these may revisit the empty table, so every game is a
    closed walk but not conversely.
    """
    return count_closed_walks_through(
        n, allow_complex=allow_complex, max_states=max_states
    )[n]


def count_young_walks_through(
    max_semilength: int, max_states: int = DEFAULT_STATE_LIMIT
) -> list[int]:
    """Young-lattice closed-walk counts for lengths 0, 2, ..., 2*max_semilength
    out of one pass."""
    if max_semilength < 0:
        raise ValueError("max_semilength must be nonnegative")
    counter = WalkCounter(
        start=EMPTY,
        end=EMPTY,
        total_steps=2 * max_semilength,
        allow_complex=False,
        max_states=max_states,
    )
    counts = [counter.count_of(EMPTY)]
    for step in range(1, 2 * max_semilength + 1):
        counter.advance()
        if step % 2 == 0:
            counts.append(counter.count_of(EMPTY))
    return counts


def count_young_walks(length: int, max_states: int = DEFAULT_STATE_LIMIT) -> int:
    """Closed walks of even ``length`` in Young's lattice from the empty
    partition, i.e. single-box moves only.  Equals (length - 1)!!."""
    if length < 0 or length % 2:
        raise ValueError("walk length must be even and nonnegative")
    counter = WalkCounter(
        start=EMPTY,
        end=EMPTY,
        total_steps=length,
        allow_complex=False,
        max_states=max_states,
    )
    return counter.run()


def young_closed_walks(length: int) -> Iterator[tuple[Partition, ...]]:
    """Every closed single-box walk of even ``length`` from the empty
    partition, as state tuples, in lexicographic move order."""
    if length < 0 or length % 2:
        raise ValueError("walk length must be even and nonnegative")
    walk: list[Partition] = [EMPTY]

    def rec(state: Partition, left: int) -> Iterator[tuple[Partition, ...]]:
        if left == 0:
            yield tuple(walk)
            return
        for _, nxt in legal_moves(state, allow_complex=False):
            if nxt.weight > left - 1:
                continue
            walk.append(nxt)
            yield from rec(nxt, left - 1)
            walk.pop()

    yield from rec(EMPTY, length)


def _single_box_move(before: Partition, after: Partition) -> Move:
    """The move taking ``before`` to ``after`` when they differ by one box."""
    gained = Counter(after.parts) - Counter(before.parts)
    lost = Counter(before.parts) - Counter(after.parts)
    if sum(gained.values()) + sum(lost.values()) > 2:
        raise InvalidWalk(f"{before} -> {after} is not a single-box step")
    if not lost and list(gained.items()) == [(1, 1)]:
        return Move(MoveKind.PLATE_ADD)
    if not gained and list(lost.items()) == [(1, 1)]:
        return Move(MoveKind.PLATE_REMOVE_SIMPLE)
    if len(gained) == 1 and len(lost) == 1:
        (g, gk), (l, lk) = gained.popitem(), lost.popitem()
        if gk == lk == 1 and g == l + 1:
            return (
                Move(MoveKind.OLIVE_ADD_FIRST)
                if l == 1
                else Move(MoveKind.OLIVE_ADD_LATER, i=l - 1)
            )
        if gk == lk == 1 and g == l - 1 and g >= 1:
            return Move(MoveKind.OLIVE_REMOVE, i=g)
    raise InvalidWalk(f"{before} -> {after} is not a single-box step")


def lift_young_walk(walk: Sequence[Partition]) -> Game:
    """Turn a closed Young walk into a game by parking one empty plate.

    The walk must start and end empty and move one box at a time.  The
    lifted game opens with P+ for the parked plate, replays the walk's
    moves (each one stays legal with the extra plate present, and O+f
    becomes legal exactly because of it), and closes with P-s.  Distinct
    walks lift to distinct games, which bounds the game count from below
    by the number of walks.
    """
    states = tuple(walk)
    if len(states) % 2 == 0:
        raise InvalidWalk("a closed walk has an odd number of states")
    if not states[0].is_empty or not states[-1].is_empty:
        raise InvalidWalk("walk must start and end at the empty partition")
    moves = [Move(MoveKind.PLATE_ADD)]
    for before, after in zip(states, states[1:]):
        moves.append(_single_box_move(before, after))
    moves.append(Move(MoveKind.PLATE_REMOVE_SIMPLE))
    return validate_game(moves)


def double_factorial(m: int) -> int:
    """Product m(m-2)(m-4)... down to 1 or 2, with (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError("double factorial needs m >= -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def count_proper_dyck_paths(n: int) -> int:
    """Paths of length 2n + 2 that touch the axis only at their endpoints,
    counted by exhaustive generation.  Equals catalan(n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 2 * n + 2

    def rec(pos: int, h: int) -> int:
        if pos == total:
            return 1 if h == 0 else 0
        left = total - pos
        if h > left:
            return 0
        floor = 1 if pos + 1 < total else 0
        found = rec(pos + 1, h + 1)
        if h - 1 >= floor:
            found += rec(pos + 1, h - 1)
        return found

    return rec(0, 0)


def dyck_paths(semilength: int) -> Iterator[tuple[int, ...]]:
    """All Dyck paths of the given semilength as +1/-1 step tuples."""
    if semilength < 0:
        raise ValueError("semilength must be nonnegative")
    total = 2 * semilength
    steps: list[int] = []

    def rec(h: int) -> Iterator[tuple[int, ...]]:
        if len(steps) == total:
            yield tuple(steps)
            return
        if h < total - len(steps):
            steps.append(1)
            yield from rec(h + 1)
            steps.pop()
        if h > 0:
            steps.append(-1)
            yield from rec(h - 1)
            steps.pop()

    yield from rec(0)


def weighted_dyck_sum_by_enumeration(v: int) -> int:
    """Sum over Dyck paths of semilength v of the product, over up-steps,
    of one plus the height the step leaves from."""
    total = 0
    for path in dyck_paths(v):
        h = 0
        prod = 1
        for s in path:
            if s == 1:
                prod *= h + 1
                h += 1
            else:
                h -= 1
        total += prod
    return total


def weighted_dyck_sum_by_dp(v: int) -> int:
    """Same sum as the enumeration, folded over (position, height)."""
    if v < 0:
        raise ValueError("semilength must be nonnegative")
    cur = [0] * (v + 2)
    cur[0] = 1
    for pos in range(2 * v):
        nxt = [0] * (v + 2)
        for h in range(min(pos, v) + 1):
            ways = cur[h]
            if not ways:
                continue
            if h + 1 <= v:
                nxt[h + 1] += ways * (h + 1)
            if h:
                nxt[h - 1] += ways
        cur = nxt
    return cur[0]


_ENUMERATION_CEILING = 12


def weighted_dyck_sum(v: int) -> int:
    """The height-weighted Dyck sum; equals (2v - 1)!!.

    Small v goes through the literal path enumeration, larger v through
    the equivalent dynamic program.
    """
    if v < 0:
        raise ValueError("semilength must be nonnegative")
    if v <= _ENUMERATION_CEILING:
        return weighted_dyck_sum_by_enumeration(v)
    return weighted_dyck_sum_by_dp(v)


def updown_numbers(limit: int) -> list[int]:
    """Zig-zag (up-down) numbers E_0 .. E_limit by the boustrophedon
    transform of the sequence 1, 0, 0, ..."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    out = [1]
    row = [1]
    for _ in range(limit):
        prev = 0
        nxt = [0]
        for value in reversed(row):
            prev += value
            nxt.append(prev)
        row = nxt
        out.append(row[-1])
    return out


def tangent_numbers(n: int) -> int:
    """The odd-indexed zig-zag number E_{2n+1}: 1, 2, 16, 272, 7936, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return updown_numbers(2 * n + 1)[2 * n + 1]


def _is_cyclic_zigzag(perm: tuple[int, ...]) -> bool:
    # canonical representative: the minimum sits first, then values
    # alternate valley/peak around the whole cycle
    if perm[0] != 1:
        return False
    m = len(perm)
    for idx in range(m):
        here = perm[idx]
        left = perm[idx - 1]
        right = perm[(idx + 1) % m]
        if idx % 2 == 0:
            if not (here < left and here < right):
                return False
        elif not (here > left and here > right):
            return False
    return True


def count_zigzag_permutations(size: int) -> int:
    """Cyclically alternating permutations of {1..size} with the 1 first,
    counted by filtering all size! permutations.  For even size = 2n + 2
    this equals tangent_numbers(n)."""
    if size < 2 or size % 2:
        raise ValueError("size must be even and at least 2")
    hits = 0
    for perm in permutations(range(1, size + 1)):
        if _is_cyclic_zigzag(perm):
            hits += 1
    return hits


GEOMETRIC_CLASS_COUNTS: tuple[tuple[int, int], ...] = (
    (0, 1),
    (1, 2),
    (2, 19),
    (3, 428),
    (4, 17746),
)


def geometric_class_reference() -> tuple[tuple[int, int], ...]:
    """Reference counts of geometric equivalence classes of excellent Morse
    functions on the sphere, for cross-reading against the game counts.

    These classify up to homeomorphisms of both sphere and target, a finer
    relation than the topological one the games count, so they are carried
    as a fixed table and not computed here.
    """
    return GEOMETRIC_CLASS_COUNTS

"""Games: closed move sequences that leave and return to the empty table.

A game of length n is a sequence of 2n + 2 moves that starts at the empty
table, never revisits it in between, and ends back at it.  The first move
is forced to be P+ and the last to be P-s.  Exactly n of the remaining
moves raise the weight and n lower it, so games pair off additions with
removals the way balanced bracket sequences do.

Games print as their move tokens separated by single spaces, one game per
line, and the printed order of ``enumerate_games`` is lexicographic in
those token sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CeilingExceeded, NotClosed, PrematureEmpty
from .partitions import EMPTY, Move, MoveKind, Partition, legal_moves, apply_move

# Exhaustive enumeration grows like the game counts themselves; past this
# point callers must opt in explicitly.
DEFAULT_ORACLE_CEILING = 6


@dataclass(frozen=True)
class Game:
    """A validated game: its moves plus the full state trace.

    ``trace`` has one more entry than ``moves`` and starts and ends at the
    empty partition.
    """

    moves: tuple[Move, ...]
    trace: tuple[Partition, ...]

    @property
    def n(self) -> int:
        return (len(self.moves) - 2) // 2

    @property
    def text(self) -> str:
        return " ".join(m.token() for m in self.moves)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Skeleton:
    """The move-kind sequence of a game, forgetting the parameters."""

    labels: tuple[str, ...]

    @property
    def text(self) -> str:
        return " ".join(self.labels)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class GameStats:
    """Per-kind move counts of a game.

    v_f and v_l count O+f and O+l moves; p_c counts P-c moves; p_s counts
    P-s moves excluding the forced final one.  Splitting the 2n + 2 moves
    into n + 1 additions and n + 1 removals then gives v + p = n, where
    v = v_f + v_l and p = p_s + p_c.
    """

    v_f: int
    v_l: int
    p_s: int
    p_c: int

    @property
    def v(self) -> int:
        return self.v_f + self.v_l

    @property
    def p(self) -> int:
        return self.p_s + self.p_c

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v_f, self.v_l, self.p_s, self.p_c)


@dataclass(frozen=True)
class DyckPath:
    """A lattice path of +1/-1 steps that stays nonnegative and ends at 0."""

    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        h = 0
        for s in self.steps:
            if s not in (1, -1):
                raise ValueError("steps must be +1 or -1")
            h += s
            if h < 0:
                raise ValueError("path dips below the axis")
        if h != 0:
            raise ValueError("path does not end at height 0")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> tuple[int, ...]:
        """Heights after 0, 1, ..., len(steps) steps."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return tuple(out)

    def step_heights(self) -> tuple[int, ...]:
        """Per step, the y-coordinate of its lower end."""
        out = []
        h = 0
        for s in self.steps:
            out.append(h if s == 1 else h - 1)
            h += s
        return tuple(out)


def validate_game(moves: Iterable[Move]) -> Game:
    """Replay ``moves`` from the empty table and certify the game shape.

    Raises IllegalMove when a move cannot be applied, PrematureEmpty when
    the table clears before the final move, and NotClosed when the
    sequence is empty or fails to end on the empty table.
    """
    seq = tuple(moves)
    if not seq:
        raise NotClosed("a game has at least two moves")
    state = EMPTY
    trace = [state]
    last = len(seq) - 1
    for idx, move in enumerate(seq):
        state = apply_move(state, move)
        if state.is_empty and idx < last:
            raise PrematureEmpty(f"empty table after move {idx + 1} of {len(seq)}")
        trace.append(state)
    if not state.is_empty:
        raise NotClosed(f"sequence ends at {state}, not at the empty table")
    return Game(moves=seq, trace=tuple(trace))


def parse_game(text: str) -> Game:
    """Parse one game from whitespace-separated move tokens and validate it."""
    return validate_game(Move.parse(tok) for tok in text.split())


def enumerate_games(n: int, ceiling: int = DEFAULT_ORACLE_CEILING) -> Iterator[Game]:
    """Yield every game of length ``n`` in lexicographic token order.

    The moves at each state are explored in token order, which makes the
    emitted sequence lexicographic.  ``ceiling`` guards against requests
    that cannot finish at desk scale; pass a larger value to go further.
    """
    if n < 0:
        raise ValueError("game length must be nonnegative")
    if n > ceiling:
        raise CeilingExceeded(
            f"exhaustive enumeration at n={n} exceeds the ceiling {ceiling}"
        )
    total = 2 * n + 2
    succ_cache: dict[Partition, list[tuple[Move, Partition]]] = {}

    def succ(state: Partition) -> list[tuple[Move, Partition]]:
        cached = succ_cache.get(state)
        if cached is None:
            cached = legal_moves(state)
            succ_cache[state] = cached
        return cached

    moves: list[Move] = []
    trace: list[Partition] = [EMPTY]

    def walk(state: Partition, done: int) -> Iterator[Game]:
        if done == total:
            yield Game(moves=tuple(moves), trace=tuple(trace))
            return
        remaining = total - done
        for move, nxt in succ(state):
            w = nxt.weight
            # must be able to drain back to weight 0 in the steps left
            if w > remaining - 1:
                continue
            if w == 0 and remaining != 1:
                continue
            moves.append(move)
            trace.append(nxt)
            yield from walk(nxt, done + 1)
            moves.pop()
            trace.pop()

    yield from walk(EMPTY, 0)


def skeleton(game: Game) -> Skeleton:
    return Skeleton(labels=tuple(m.kind.value for m in game.moves))


def game_stats(game: Game) -> GameStats:
    counts = {kind: 0 for kind in MoveKind}
    for m in game.moves:
        counts[m.kind] += 1
    return GameStats(
        v_f=counts[MoveKind.OLIVE_ADD_FIRST],
        v_l=counts[MoveKind.OLIVE_ADD_LATER],
        # the closing P-s is forced, so it is not part of the tally
        p_s=counts[MoveKind.PLATE_REMOVE_SIMPLE] - 1,
        p_c=counts[MoveKind.PLATE_REMOVE_COMPLEX],
    )


def olive_dyck_path(game: Game) -> DyckPath:
    """Project a game onto olive moves only: +1 per olive added, -1 removed.

    Olives can never go negative and a game ends oliveless, so the result
    is a Dyck path of semilength v.
    """
    steps = []
    for m in game.moves:
        if m.kind in (MoveKind.OLIVE_ADD_FIRST, MoveKind.OLIVE_ADD_LATER):
            steps.append(1)
        elif m.kind is MoveKind.OLIVE_REMOVE:
            steps.append(-1)
        # P+, P-s, P-c leave the olive total unchanged: no step
    return DyckPath(steps=tuple(steps))


def stats_histogram(
    n: int, ceiling: int = DEFAULT_ORACLE_CEILING
) -> dict[tuple[int, int, int, int], int]:
    """Histogram of (v_f, v_l, p_s, p_c) over all games of length ``n``."""
    out: dict[tuple[int, int, int, int], int] = {}
    for game in enumerate_games(n, ceiling=ceiling):
        key = game_stats(game).as_tuple()
        out[key] = out.get(key, 0) + 1
    return out

"""Counting DP against independent brute-force oracles and identities."""

from __future__ import annotations

import pytest

from plates_olives.counting import (
    WalkCounter,
    catalan,
    count_closed_walks,
    count_closed_walks_through,
    count_games,
    count_games_through,
    count_proper_dyck_paths,
    count_young_walks,
    count_young_walks_through,
    count_zigzag_permutations,
    double_factorial,
    dyck_paths,
    geometric_class_reference,
    lift_young_walk,
    tangent_numbers,
    updown_numbers,
    weighted_dyck_sum,
    weighted_dyck_sum_by_dp,
    weighted_dyck_sum_by_enumeration,
    young_closed_walks,
)
from plates_olives.errors import InvalidWalk, ResourceLimit
from plates_olives.games import enumerate_games, validate_game
from plates_olives.partitions import EMPTY, SINGLE_PLATE, Partition, legal_moves

GOLDEN_COUNTS = (1, 2, 10, 76, 772)

# Interim-returns walk counts, frozen after cross-checking three ways:
# the layered DP, the literal recursion below, and the renewal identity
# over the certified game counts.  A value of 981 once circulated for
# n = 4; it matches neither variant.
CLOSED_WITH_MERGES = (1, 3, 15, 107, 1015)
CLOSED_WITHOUT_MERGES = (1, 3, 15, 105, 945)


def brute_closed_walks(n: int, allow_complex: bool = True) -> int:
    """Literal recursion over all walks; independent of WalkCounter."""
    total = 2 * n + 2

    def rec(state: Partition, done: int) -> int:
        if done == total:
            return 1 if state.is_empty else 0
        return sum(
            rec(nxt, done + 1) for _, nxt in legal_moves(state, allow_complex)
        )

    return rec(EMPTY, 0)


class TestGameCounts:
    def test_golden_sequence(self):
        assert tuple(count_games_through(4)) == GOLDEN_COUNTS

    def test_single_value_calls(self):
        assert count_games(0) == 1
        assert count_games(4) == 772

    def test_matches_enumeration_oracle(self):
        for n in range(6):
            assert count_games(n) == sum(1 for _ in enumerate_games(n))

    def test_value_at_five(self):
        # 9856 was additionally confirmed by a prune-free search over all
        # move sequences; kept as a regression tripwire
        assert count_games(5) == 9856

    def test_through_is_consistent_with_pointwise(self):
        through = count_games_through(8)
        assert [count_games(n) for n in range(9)] == through

    def test_first_return_reduction(self):
        # counting directly as empty-to-empty walks that avoid interim
        # empties must agree with the forced-endpoint reduction
        for n in range(6):
            counter = WalkCounter(
                start=EMPTY,
                end=EMPTY,
                total_steps=2 * n + 2,
                allow_interim_empty=False,
            )
            assert counter.run() == count_games(n)

    def test_prune_soundness(self):
        for n in range(9):
            unpruned = WalkCounter(
                start=SINGLE_PLATE,
                end=SINGLE_PLATE,
                total_steps=2 * n,
                allow_interim_empty=False,
                prune=False,
            )
            assert unpruned.run() == count_games(n)

    def test_determinism(self):
        assert str(count_games(12)) == str(count_games(12))
        a = [str(c) for c in count_games_through(12)]
        b = [str(c) for c in count_games_through(12)]
        assert a == b

    def test_state_budget_enforced(self):
        with pytest.raises(ResourceLimit):
            count_games(10, max_states=20)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            count_games(-1)


class TestWalkCounter:
    def test_layer_weight_support(self):
        # every live state at layer k weighs at most min(1+k, 1+(S-k))
        total = 12
        counter = WalkCounter(
            start=SINGLE_PLATE,
            end=SINGLE_PLATE,
            total_steps=total,
            allow_interim_empty=False,
        )
        for k in range(1, total + 1):
            counter.advance()
            cap = min(1 + k, 1 + total - k)
            for state, ways in counter.support():
                assert state.weight <= cap
                assert ways > 0

    def test_advance_past_end_rejected(self):
        counter = WalkCounter(start=EMPTY, end=EMPTY, total_steps=0)
        with pytest.raises(ValueError):
            counter.advance()

    def test_count_of_unseen_state(self):
        counter = WalkCounter(start=EMPTY, end=EMPTY, total_steps=2)
        assert counter.count_of(Partition((5,))) == 0


class TestClosedWalks:
    def test_frozen_values(self):
        assert tuple(count_closed_walks_through(4)) == CLOSED_WITH_MERGES
        assert (
            tuple(count_closed_walks_through(4, allow_complex=False))
            == CLOSED_WITHOUT_MERGES
        )

    def test_brute_force_oracle(self):
        for n in range(4):
            assert count_closed_walks(n) == brute_closed_walks(n)
            assert count_closed_walks(n, allow_complex=False) == brute_closed_walks(
                n, allow_complex=False
            )

    def test_renewal_identity(self):
        # closed walks split at empty-table visits into first-return
        # segments, so they are determined by the game counts
        games = count_games_through(4)
        by_len = [0] * 11
        by_len[0] = 1
        for length in range(2, 11, 2):
            by_len[length] = sum(
                games[(seg - 2) // 2] * by_len[length - seg]
                for seg in range(2, length + 1, 2)
            )
        assert [by_len[2 * n + 2] for n in range(5)] == list(CLOSED_WITH_MERGES)

    def test_dominates_first_return(self):
        games = count_games_through(8)
        closed = count_closed_walks_through(8)
        for n in range(9):
            assert closed[n] >= games[n]


class TestYoungWalks:
    def test_small_values(self):
        assert count_young_walks(0) == 1
        assert count_young_walks(2) == 1
        assert count_young_walks(4) == 3

    def test_odd_length_rejected(self):
        with pytest.raises(ValueError):
            count_young_walks(3)

    def test_double_factorial_identity(self):
        for n in range(11):
            assert count_young_walks(2 * n) == double_factorial(2 * n - 1)

    def test_through_variant(self):
        assert count_young_walks_through(6) == [
            count_young_walks(2 * n) for n in range(7)
        ]

    def test_enumeration_agrees(self):
        for length in range(0, 11, 2):
            walks = list(young_closed_walks(length))
            assert len(walks) == count_young_walks(length)
            assert len(set(walks)) == len(walks)
            for walk in walks:
                assert walk[0] == EMPTY and walk[-1] == EMPTY
                assert len(walk) == length + 1


class TestLiftYoungWalk:
    def test_length_two_walk(self):
        game = lift_young_walk((EMPTY, SINGLE_PLATE, EMPTY))
        assert game.text == "P+ P+ P-s P-s"

    def test_length_four_walk_with_olive(self):
        walk = tuple(
            Partition.parse(s) for s in ("<>", "<1>", "<2>", "<1>", "<>")
        )
        game = lift_young_walk(walk)
        assert game.n == 2
        assert [str(p) for p in game.trace] == [
            "<>",
            "<1>",
            "<1,1>",
            "<2,1>",
            "<1,1>",
            "<1>",
            "<>",
        ]

    def test_all_length_four_walks(self):
        games = [lift_young_walk(w) for w in young_closed_walks(4)]
        assert len(games) == 3
        assert len({g.text for g in games}) == 3
        for game in games:
            assert game.n == 2

    def test_injective_through_n3(self):
        for n in range(4):
            lifted = {lift_young_walk(w).text for w in young_closed_walks(2 * n)}
            assert len(lifted) == double_factorial(2 * n - 1)

    @pytest.mark.parametrize(
        "states",
        [
            ("<>", "<1>"),  # even number of states
            ("<1>", "<1,1>", "<1>"),  # endpoints not empty
            ("<>", "<2>", "<>"),  # two boxes in one step
            ("<>", "<1>", "<1>", "<1>", "<>"),  # no-op step
            ("<>", "<1>", "<3>", "<1>", "<>"),  # jump
        ],
    )
    def test_invalid_walks_rejected(self, states):
        walk = tuple(Partition.parse(s) for s in states)
        with pytest.raises(InvalidWalk):
            lift_young_walk(walk)

    def test_interim_empty_is_fine_after_lift(self):
        # raw walks may revisit the empty partition; the parked plate
        # keeps the lifted game away from the empty table
        walk = tuple(Partition.parse(s) for s in ("<>", "<1>", "<>", "<1>", "<>"))
        game = lift_young_walk(walk)
        assert game.n == 2
        assert validate_game(game.moves) == game


class TestWeightedDyckSum:
    def test_tiny_cases(self):
        assert weighted_dyck_sum(0) == 1
        assert weighted_dyck_sum(1) == 1
        # semilength 2: UUDD weighs 1*2, UDUD weighs 1*1
        assert weighted_dyck_sum(2) == 3

    def test_value_at_eight(self):
        assert weighted_dyck_sum_by_enumeration(8) == 2027025 == double_factorial(15)

    def test_routes_agree(self):
        for v in range(10):
            assert weighted_dyck_sum_by_enumeration(v) == weighted_dyck_sum_by_dp(v)

    def test_double_factorial_identity_dp(self):
        for v in range(60):
            assert weighted_dyck_sum_by_dp(v) == double_factorial(2 * v - 1)

    def test_crossover_dispatch(self):
        assert weighted_dyck_sum(12) == double_factorial(23)
        assert weighted_dyck_sum(13) == double_factorial(25)

    def test_path_generator(self):
        assert list(dyck_paths(0)) == [()]
        assert sorted(dyck_paths(2)) == [(1, -1, 1, -1), (1, 1, -1, -1)]
        for v in range(7):
            paths = list(dyck_paths(v))
            assert len(paths) == catalan(v)
            assert len(set(paths)) == len(paths)


class TestCatalan:
    def test_golden_values(self):
        assert [catalan(n) for n in range(5)] == [1, 1, 2, 5, 14]

    def test_proper_paths_semilength_one(self):
        assert count_proper_dyck_paths(0) == 1

    def test_brute_force_matches_formula(self):
        for n in range(9):
            assert count_proper_dyck_paths(n) == catalan(n)


class TestTangent:
    def test_golden_values(self):
        assert [tangent_numbers(n) for n in range(5)] == [1, 2, 16, 272, 7936]

    def test_updown_prefix(self):
        # zig-zag numbers E_0..E_9
        assert updown_numbers(9) == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]

    def test_brute_force_filter(self):
        assert count_zigzag_permutations(4) == 2
        assert count_zigzag_permutations(6) == 16
        for n in range(3):
            assert count_zigzag_permutations(2 * n + 2) == tangent_numbers(n)

    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            count_zigzag_permutations(5)


def test_geometric_class_reference():
    table = geometric_class_reference()
    assert table == ((0, 1), (1, 2), (2, 19), (3, 428), (4, 17746))
    assert dict(table)[2] == 19


class TestDoubleFactorial:
    def test_examples(self):
        assert double_factorial(-1) == 1
        assert double_factorial(5) == 15

    def test_recurrence(self):
        for m in range(1, 36):
            assert double_factorial(m) == m * double_factorial(m - 2)

    def test_below_range_rejected(self):
        with pytest.raises(ValueError):
            double_factorial(-3)


def test_counts_dominate_double_factorial():
    counts = count_games_through(12)
    for n in range(1, 13):
        assert counts[n] >= double_factorial(2 * n - 1)

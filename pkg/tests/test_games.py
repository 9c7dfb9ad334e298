"""Game validation, enumeration order, skeletons, stats, Dyck projection."""

from __future__ import annotations

from collections import Counter

import pytest

from plates_olives.errors import (
    CeilingExceeded,
    IllegalMove,
    NotClosed,
    PrematureEmpty,
)
from plates_olives.games import (
    DyckPath,
    enumerate_games,
    game_stats,
    olive_dyck_path,
    parse_game,
    skeleton,
    stats_histogram,
    validate_game,
)
from plates_olives.partitions import EMPTY, Move, MoveKind

# the two games of length 1: all plates, and one olive in and out
TWO_PLATES = "P+ P+ P-s P-s"
ONE_OLIVE = "P+ O+f O-:1 P-s"

GOLDEN_COUNTS = (1, 2, 10, 76, 772)


class TestValidateGame:
    def test_two_plate_game(self):
        game = parse_game(TWO_PLATES)
        assert game.n == 1
        assert [str(p) for p in game.trace] == ["<>", "<1>", "<1,1>", "<1>", "<>"]
        assert game.text == TWO_PLATES

    def test_one_olive_game(self):
        game = parse_game(ONE_OLIVE)
        assert game.n == 1
        assert [str(p) for p in game.trace] == ["<>", "<1>", "<2>", "<1>", "<>"]

    def test_premature_empty(self):
        with pytest.raises(PrematureEmpty):
            parse_game("P+ P-s P+ P-s")

    def test_not_closed(self):
        with pytest.raises(NotClosed):
            parse_game("P+ P+ P-s")
        with pytest.raises(NotClosed):
            parse_game("P+ O+f")
        with pytest.raises(NotClosed):
            validate_game(())

    def test_illegal_move_in_replay(self):
        with pytest.raises(IllegalMove):
            parse_game("P-s P+")
        # olive-add classification is checked against the state, not the token
        with pytest.raises(IllegalMove):
            parse_game("P+ O+l:1 O-:2 P-s")
        with pytest.raises(IllegalMove):
            parse_game("P+ O+f O+f O-:1 O-:1 P-s")

    def test_game_shape_invariants(self):
        for n in range(4):
            for game in enumerate_games(n):
                assert game.moves[0] == Move(MoveKind.PLATE_ADD)
                assert game.moves[-1] == Move(MoveKind.PLATE_REMOVE_SIMPLE)
                assert len(game.moves) == 2 * n + 2
                assert len(game.trace) == 2 * n + 3
                assert game.trace[0] == EMPTY and game.trace[-1] == EMPTY
                assert not any(p.is_empty for p in game.trace[1:-1])
                adds = sum(1 for m in game.moves if m.weight_delta == 1)
                assert adds - 1 == n


class TestEnumerate:
    @pytest.mark.parametrize("n, expected", list(enumerate(GOLDEN_COUNTS)))
    def test_golden_counts(self, n, expected):
        assert sum(1 for _ in enumerate_games(n)) == expected

    def test_zero_length_game(self):
        games = list(enumerate_games(0))
        assert [g.text for g in games] == ["P+ P-s"]

    def test_lexicographic_order(self):
        for n in range(4):
            texts = [g.text for g in enumerate_games(n)]
            assert texts == sorted(texts)
            assert len(set(texts)) == len(texts)

    def test_ceiling(self):
        with pytest.raises(CeilingExceeded):
            next(enumerate_games(7))
        # opting in raises the ceiling
        assert next(enumerate_games(7, ceiling=7)).n == 7

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            next(enumerate_games(-1))

    def test_round_trip_text(self):
        for game in enumerate_games(3):
            assert parse_game(game.text).moves == game.moves


class TestSkeleton:
    def test_examples(self):
        assert skeleton(parse_game(TWO_PLATES)).labels == ("P+", "P+", "P-s", "P-s")
        assert skeleton(parse_game(ONE_OLIVE)).labels == ("P+", "O+f", "O-", "P-s")

    def test_endpoints_forced(self):
        for n in range(4):
            for game in enumerate_games(n):
                labels = skeleton(game).labels
                assert labels[0] == "P+" and labels[-1] == "P-s"

    def test_skeletons_consistent_with_stats(self):
        for n in range(4):
            distinct = set()
            count = 0
            for game in enumerate_games(n):
                labels = skeleton(game).labels
                distinct.add(labels)
                count += 1
                tally = Counter(labels)
                stats = game_stats(game)
                assert tally["O+f"] == stats.v_f
                assert tally["O+l"] == stats.v_l
                assert tally["O-"] == stats.v
                assert tally["P-s"] == stats.p_s + 1
                assert tally["P-c"] == stats.p_c
            assert len(distinct) <= count


class TestGameStats:
    def test_examples(self):
        assert game_stats(parse_game(TWO_PLATES)).as_tuple() == (0, 0, 1, 0)
        assert game_stats(parse_game(ONE_OLIVE)).as_tuple() == (1, 0, 0, 0)

    def test_identities_exhaustive(self):
        # v + p = n always; complex removals never outnumber first olive-adds
        for n in range(5):
            for game in enumerate_games(n):
                stats = game_stats(game)
                assert stats.v + stats.p == n
                assert stats.p_c <= stats.v_f


class TestDyckPath:
    def test_validation(self):
        with pytest.raises(ValueError):
            DyckPath((1, -1, -1, 1))
        with pytest.raises(ValueError):
            DyckPath((1, 1))
        with pytest.raises(ValueError):
            DyckPath((2, -2))

    def test_heights(self):
        path = DyckPath((1, 1, -1, -1))
        assert path.heights() == (0, 1, 2, 1, 0)
        assert path.step_heights() == (0, 1, 1, 0)
        assert path.semilength == 2
        assert DyckPath(()).heights() == (0,)

    def test_projection_examples(self):
        assert olive_dyck_path(parse_game(ONE_OLIVE)).steps == (1, -1)
        assert olive_dyck_path(parse_game(TWO_PLATES)).steps == ()

    def test_heights_track_olive_counts(self):
        olive_kinds = (
            MoveKind.OLIVE_ADD_FIRST,
            MoveKind.OLIVE_ADD_LATER,
            MoveKind.OLIVE_REMOVE,
        )
        for n in range(5):
            for game in enumerate_games(n):
                path = olive_dyck_path(game)
                assert path.semilength == game_stats(game).v
                # path heights are the olive totals sampled at olive moves
                sampled = [0]
                for move, state in zip(game.moves, game.trace[1:]):
                    if move.kind in olive_kinds:
                        sampled.append(state.olive_count)
                assert list(path.heights()) == sampled


class TestHistogram:
    def test_length_one(self):
        assert stats_histogram(1) == {(0, 0, 1, 0): 1, (1, 0, 0, 0): 1}

    @pytest.mark.parametrize("n", [2, 3])
    def test_total_mass(self, n):
        histogram = stats_histogram(n)
        assert sum(histogram.values()) == GOLDEN_COUNTS[n]

    def test_ceiling_respected(self):
        with pytest.raises(CeilingExceeded):
            stats_histogram(9)

"""Exact enumeration and counting for the game of plates and olives.

The game tracks a table of plates, each carrying some olives, through
moves that add or remove a plate or an olive one at a time (with a
combine-two-plates move as the only compound step).  Games that start
and end with the empty table, never clearing it in between, are in
bijection with topological equivalence classes of excellent Morse
functions on the 2-sphere, indexed by their number of saddle points.

The package computes the exact game counts, enumerates the games
themselves at small n, checks the combinatorial identities behind the
known lower bound, and reports the growth-ratio statistics.
"""

from .analysis import (
    BoundReport,
    RatioReport,
    bound_table,
    nth_root_ratio,
    ratio_table,
)
from .counting import (
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
from .errors import (
    CeilingExceeded,
    IllegalMove,
    InvalidWalk,
    NotClosed,
    PlatesOlivesError,
    PrematureEmpty,
    ResourceLimit,
)
from .games import (
    DEFAULT_ORACLE_CEILING,
    DyckPath,
    Game,
    GameStats,
    Skeleton,
    enumerate_games,
    game_stats,
    olive_dyck_path,
    parse_game,
    skeleton,
    stats_histogram,
    validate_game,
)
from .partitions import (
    DEFAULT_STATE_LIMIT,
    EMPTY,
    SINGLE_PLATE,
    Move,
    MoveKind,
    Partition,
    PartitionInterner,
    apply_move,
    legal_moves,
    move_capacity_profile,
    partitions_of_weight,
    partitions_up_to_weight,
    w_cap,
)

__version__ = "1.0.0"

__all__ = [
    "BoundReport",
    "CeilingExceeded",
    "DEFAULT_ORACLE_CEILING",
    "DEFAULT_STATE_LIMIT",
    "DyckPath",
    "EMPTY",
    "Game",
    "GameStats",
    "IllegalMove",
    "InvalidWalk",
    "Move",
    "MoveKind",
    "NotClosed",
    "Partition",
    "PartitionInterner",
    "PlatesOlivesError",
    "PrematureEmpty",
    "RatioReport",
    "ResourceLimit",
    "SINGLE_PLATE",
    "Skeleton",
    "WalkCounter",
    "apply_move",
    "bound_table",
    "catalan",
    "count_closed_walks",
    "count_closed_walks_through",
    "count_games",
    "count_games_through",
    "count_proper_dyck_paths",
    "count_young_walks",
    "count_young_walks_through",
    "count_zigzag_permutations",
    "double_factorial",
    "dyck_paths",
    "enumerate_games",
    "game_stats",
    "geometric_class_reference",
    "legal_moves",
    "lift_young_walk",
    "move_capacity_profile",
    "nth_root_ratio",
    "olive_dyck_path",
    "parse_game",
    "partitions_of_weight",
    "partitions_up_to_weight",
    "ratio_table",
    "skeleton",
    "stats_histogram",
    "tangent_numbers",
    "updown_numbers",
    "validate_game",
    "w_cap",
    "weighted_dyck_sum",
    "weighted_dyck_sum_by_dp",
    "weighted_dyck_sum_by_enumeration",
    "young_closed_walks",
]

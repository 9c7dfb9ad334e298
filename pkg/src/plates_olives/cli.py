"""Command-line interface: count, enumerate, verify, ratio, bounds.

Output formats, pinned bit for bit:

table
    Header row, then one row per record; columns separated by two
    spaces, numeric columns right-aligned to the column width.
csv
    Same columns, comma-separated, one header line.
json
    One JSON object per line.  Counts are exact decimal strings with no
    exponent; ratios and envelope constants are quantized to six decimal
    places; large envelope values use scientific notation with six
    significant digits.

Count rows for ``--variant young`` give the walks of length 2n, so the
``n`` column means semilength for that variant.  Histograms are always
CSV with the header ``v_f,v_l,p_s,p_c,count``.

A cache path set by ``--cache`` or the OLIVE_CACHE environment variable
stores computed counts keyed by variant and n in a versioned JSON file;
a version mismatch or unreadable file invalidates the whole cache.  The
``--self-check`` flag recomputes cached values and fails on any drift.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from decimal import Decimal, ROUND_HALF_EVEN
from pathlib import Path
from typing import IO, Sequence

from . import analysis, counting, games, verify
from .errors import PlatesOlivesError
from .partitions import DEFAULT_STATE_LIMIT

CACHE_VERSION = "1"
VARIANTS = ("first-return", "closed", "young")
_SIX_PLACES = Decimal("0.000001")


def _six(value: Decimal) -> str:
    return str(value.quantize(_SIX_PLACES, rounding=ROUND_HALF_EVEN))


def _sci(value: Decimal) -> str:
    return format(value, ".6E")


class CacheFile:
    """Versioned JSON store of computed counts, keyed by (variant, n)."""

    def __init__(self, path: Path) -> None:
        self.path = path
        self.counts: dict[str, dict[int, int]] = {v: {} for v in VARIANTS}
        self._load()

    def _load(self) -> None:
        try:
            raw = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return
        if not isinstance(raw, dict) or raw.get("version") != CACHE_VERSION:
            return
        table = raw.get("counts")
        if not isinstance(table, dict):
            return
        loaded: dict[str, dict[int, int]] = {v: {} for v in VARIANTS}
        try:
            for variant, rows in table.items():
                if variant not in VARIANTS:
                    return
                for key, value in rows.items():
                    loaded[variant][int(key)] = int(value)
        except (TypeError, ValueError, AttributeError):
            return
        self.counts = loaded

    def get(self, variant: str, n: int) -> int | None:
        return self.counts[variant].get(n)

    def put(self, variant: str, n: int, count: int) -> None:
        self.counts[variant][n] = count

    def save(self) -> None:
        payload = {
            "version": CACHE_VERSION,
            "counts": {
                variant: {str(n): str(c) for n, c in sorted(rows.items())}
                for variant, rows in self.counts.items()
                if rows
            },
        }
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name)
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(payload, handle, indent=1, sort_keys=True)
                handle.write("\n")
            os.replace(tmp, self.path)
        except BaseException:
            os.unlink(tmp)
            raise


def _compute_counts(variant: str, max_n: int, max_states: int) -> list[int]:
    if variant == "first-return":
        return counting.count_games_through(max_n, max_states=max_states)
    if variant == "closed":
        return counting.count_closed_walks_through(max_n, max_states=max_states)
    return counting.count_young_walks_through(max_n, max_states=max_states)


def _resolve_counts(
    variant: str,
    max_n: int,
    max_states: int,
    cache: CacheFile | None,
    self_check: bool = False,
) -> list[int]:
    if cache is not None:
        hits = [cache.get(variant, n) for n in range(max_n + 1)]
        if all(h is not None for h in hits):
            if self_check:
                fresh = _compute_counts(variant, max_n, max_states)
                if fresh != hits:
                    raise PlatesOlivesError(
                        f"cache self-check failed for {variant}: "
                        f"cached {hits} != recomputed {fresh}"
                    )
            return hits
    counts = _compute_counts(variant, max_n, max_states)
    if cache is not None:
        for n, count in enumerate(counts):
            cache.put(variant, n, count)
        cache.save()
    return counts


def _emit_rows(
    headers: Sequence[str],
    rows: Sequence[Sequence[str]],
    fmt: str,
    json_records: Sequence[dict] | None,
    out: IO[str],
) -> None:
    if fmt == "json":
        assert json_records is not None
        for record in json_records:
            out.write(json.dumps(record) + "\n")
        return
    if fmt == "csv":
        out.write(",".join(headers) + "\n")
        for row in rows:
            out.write(",".join(row) + "\n")
        return
    widths = [
        max(len(headers[col]), max((len(r[col]) for r in rows), default=0))
        for col in range(len(headers))
    ]
    out.write("  ".join(h.rjust(widths[i]) for i, h in enumerate(headers)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(c.rjust(widths[i]) for i, c in enumerate(row)).rstrip() + "\n")


def _open_cache(args: argparse.Namespace) -> CacheFile | None:
    path = args.cache or os.environ.get("OLIVE_CACHE")
    return CacheFile(Path(path)) if path else None


def cmd_count(args: argparse.Namespace, out: IO[str]) -> int:
    counts = _resolve_counts(
        args.variant, args.max_n, args.max_states, _open_cache(args), args.self_check
    )
    rows = [(str(n), str(c)) for n, c in enumerate(counts)]
    records = [
        {"n": n, "count": str(c), "variant": args.variant}
        for n, c in enumerate(counts)
    ]
    _emit_rows(("n", "count"), rows, args.format, records, out)
    return 0


def cmd_enumerate(args: argparse.Namespace, out: IO[str]) -> int:
    stream = games.enumerate_games(args.n, ceiling=args.oracle_ceiling)
    if args.emit == "games":
        for game in stream:
            out.write(game.text + "\n")
    elif args.emit == "skeletons":
        seen = set()
        for game in stream:
            text = games.skeleton(game).text
            if text not in seen:
                seen.add(text)
                out.write(text + "\n")
    else:
        histogram = games.stats_histogram(args.n, ceiling=args.oracle_ceiling)
        out.write("v_f,v_l,p_s,p_c,count\n")
        for key in sorted(histogram):
            out.write(",".join(str(x) for x in key) + f",{histogram[key]}\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    options = verify.SuiteOptions(
        ceiling=args.oracle_ceiling, max_states=args.max_states
    )
    failures = 0
    for suite, check in verify.run_suites(names, options):
        if check.ok:
            out.write(f"PASS [{suite}] {check.name}\n")
        else:
            failures += 1
            out.write(f"FAIL [{suite}] {check.name}: {check.detail}\n")
    out.write(f"{'FAIL' if failures else 'OK'}: {failures} failed\n")
    return 1 if failures else 0


def cmd_ratio(args: argparse.Namespace, out: IO[str]) -> int:
    counts = _resolve_counts(
        "first-return", args.max_n, args.max_states, _open_cache(args)
    )
    table = analysis.ratio_table(args.max_n, counts=counts)
    rows = [
        (
            str(r.n),
            str(r.count),
            _six(r.ratio),
            _six(r.lower_envelope),
            _six(r.upper_envelope),
            str(r.monotone_violation).lower(),
        )
        for r in table
    ]
    records = [
        {
            "n": r.n,
            "count": str(r.count),
            "ratio": _six(r.ratio),
            "lower_envelope": _six(r.lower_envelope),
            "upper_envelope": _six(r.upper_envelope),
            "monotone_violation": r.monotone_violation,
        }
        for r in table
    ]
    headers = (
        "n",
        "count",
        "ratio",
        "lower_envelope",
        "upper_envelope",
        "monotone_violation",
    )
    _emit_rows(headers, rows, args.format, records, out)
    return 0


def cmd_bounds(args: argparse.Namespace, out: IO[str]) -> int:
    counts = _resolve_counts(
        "first-return", args.max_n, args.max_states, _open_cache(args)
    )
    table = analysis.bound_table(args.max_n, counts=counts)
    rows = [
        (
            str(r.n),
            str(r.count),
            str(r.double_factorial_lower),
            _sci(r.envelope_lower),
            _sci(r.envelope_upper),
            str(r.crude_envelope),
        )
        for r in table
    ]
    records = [
        {
            "n": r.n,
            "count": str(r.count),
            "double_factorial_lower": str(r.double_factorial_lower),
            "envelope_lower": _sci(r.envelope_lower),
            "envelope_upper": _sci(r.envelope_upper),
            "crude_envelope": str(r.crude_envelope),
        }
        for r in table
    ]
    headers = (
        "n",
        "count",
        "double_factorial_lower",
        "envelope_lower",
        "envelope_upper",
        "crude_envelope",
    )
    _emit_rows(headers, rows, args.format, records, out)
    return 0


def _add_common(parser: argparse.ArgumentParser, cache: bool = True) -> None:
    parser.add_argument(
        "--format", choices=("table", "csv", "json"), default="table",
        help="output format (default table)",
    )
    parser.add_argument(
        "--max-states", type=int, default=DEFAULT_STATE_LIMIT,
        help="abort counting beyond this many distinct states",
    )
    if cache:
        parser.add_argument(
            "--cache", metavar="PATH", default=None,
            help="counts cache file (falls back to $OLIVE_CACHE)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plates-olives",
        description="Exact counts and enumeration for the game of plates and olives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="exact counts for n = 0..max-n")
    p_count.add_argument("--max-n", type=int, required=True)
    p_count.add_argument("--variant", choices=VARIANTS, default="first-return")
    p_count.add_argument(
        "--self-check", action="store_true",
        help="recompute cache hits and fail on drift",
    )
    _add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="list games, skeletons, or a histogram")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument(
        "--emit", choices=("games", "skeletons", "histogram"), default="games"
    )
    p_enum.add_argument(
        "--oracle-ceiling", type=int, default=games.DEFAULT_ORACLE_CEILING,
        help="largest n enumeration will attempt",
    )
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run a named check suite")
    p_verify.add_argument(
        "--suite", choices=tuple(verify.SUITES) + ("all",), default="all"
    )
    p_verify.add_argument(
        "--oracle-ceiling", type=int, default=games.DEFAULT_ORACLE_CEILING
    )
    p_verify.add_argument("--max-states", type=int, default=DEFAULT_STATE_LIMIT)
    p_verify.set_defaults(func=cmd_verify)

    p_ratio = sub.add_parser("ratio", help="growth-ratio table r_n = M_n^(1/n)/n")
    p_ratio.add_argument("--max-n", type=int, required=True)
    _add_common(p_ratio)
    p_ratio.set_defaults(func=cmd_ratio)

    p_bounds = sub.add_parser("bounds", help="counts against bounds and envelopes")
    p_bounds.add_argument("--max-n", type=int, required=True)
    _add_common(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except PlatesOlivesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

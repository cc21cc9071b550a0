"""Census tables: how far the symmetric-diagram crossing count sits above the
crossing number, tallied over all two-bridge knots of each crossing number.

Knots with crossing number c are enumerated through the compositions of c
whose last part is >= 2: each such composition is the canonical positive
expansion of a slope, and keeping the odd numerators and canonicalizing
dedupes the census.  Rows can be cached one file per crossing number, keyed
by an algorithm version that must be bumped whenever any result-affecting
rule changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .contfrac import _eval_entries
from .knot import TwoBridgeKnot, _knot_key
from .solver import C2Result, global_c2_map, solve_many

__all__ = [
    "ALGORITHM_VERSION",
    "TableRow",
    "CrossCheckError",
    "enumerate_knots",
    "table_row",
    "build_table",
]

ALGORITHM_VERSION = 1


class CrossCheckError(Exception):
    """Raised when the stepwise solver and the global sweep disagree."""

    def __init__(self, knot: TwoBridgeKnot, direct: int, oracle: int):
        self.knot = knot
        self.direct = direct
        self.oracle = oracle
        super().__init__(
            f"cross-check failed for {knot}: stepwise {direct}, global sweep {oracle}"
        )


@dataclass(frozen=True, eq=True)
class TableRow:
    """One census row: counts of knots by offset value - c."""

    c: int
    two_bridge_count: int
    offsets: dict[int, int]

    def __post_init__(self) -> None:
        if 0 not in self.offsets or any(j < 0 for j in self.offsets):
            raise ValueError(f"offsets must be >= 0 and include 0: {self.offsets}")
        if sum(self.offsets.values()) != self.two_bridge_count:
            raise ValueError(
                f"offsets {self.offsets} do not sum to count {self.two_bridge_count}"
            )

    def to_json_dict(self) -> dict:
        return {
            "c": self.c,
            "count": self.two_bridge_count,
            "offsets": {str(j): self.offsets[j] for j in sorted(self.offsets)},
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TableRow":
        return cls(
            c=int(d["c"]),
            two_bridge_count=int(d["count"]),
            offsets={int(j): int(n) for j, n in d["offsets"].items()},
        )


def _compositions_last_ge2(total: int) -> Iterator[tuple[int, ...]]:
    # All (a_1, ..., a_n) with a_i >= 1 and a_n >= 2 summing to total.
    def rec(rem: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if rem >= 2:
            yield prefix + (rem,)
        for a in range(1, rem - 1):
            yield from rec(rem - a, prefix + (a,))

    yield from rec(total, ())


def enumerate_knots(c: int) -> set[TwoBridgeKnot]:
    """All two-bridge knots with crossing number c, canonical and deduplicated."""
    if c < 3:
        raise ValueError(f"two-bridge knots need c >= 3, got {c}")
    keys = set()
    for comp in _compositions_last_ge2(c):
        key = _knot_key(*_eval_entries(comp))
        if key is not None:
            keys.add(key)
    return {TwoBridgeKnot(p, q) for p, q in keys}


def _tally(c: int, results: dict[TwoBridgeKnot, C2Result]) -> TableRow:
    offsets: dict[int, int] = {0: 0}
    for res in results.values():
        j = res.value - res.base_crossing
        offsets[j] = offsets.get(j, 0) + 1
    return TableRow(c, len(results), offsets)


def table_row(c: int) -> TableRow:
    """Census row for one crossing number (no caching, no cross-check)."""
    return _tally(c, solve_many(enumerate_knots(c)))


def _cache_path(cache_dir: str | Path, c: int) -> Path:
    return Path(cache_dir) / f"c{c}.v{ALGORITHM_VERSION}.json"


def _read_cached_row(cache_dir: str | Path, c: int) -> TableRow | None:
    path = _cache_path(cache_dir, c)
    try:
        row = TableRow.from_json_dict(json.loads(path.read_text(encoding="utf-8")))
    except (OSError, ValueError, KeyError, TypeError):
        return None
    return row if row.c == c else None


def _write_cached_row(cache_dir: str | Path, row: TableRow) -> None:
    path = _cache_path(cache_dir, row.c)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(row.to_json_dict(), indent=2) + "\n", encoding="utf-8")


def build_table(
    c_min: int,
    c_max: int,
    *,
    cross_check: bool = False,
    cache_dir: str | Path | None = None,
) -> list[TableRow]:
    """Rows for c_min..c_max inclusive.

    With cross_check, every per-knot value is recomputed fresh (cache rows are
    not trusted) and compared against the independent global sweep; the first
    disagreement raises CrossCheckError.
    """
    if not 3 <= c_min <= c_max:
        raise ValueError(f"need 3 <= c_min <= c_max, got {c_min}..{c_max}")
    oracle = global_c2_map(c_max) if cross_check else None
    rows = []
    for c in range(c_min, c_max + 1):
        row = None
        if cache_dir is not None and not cross_check:
            row = _read_cached_row(cache_dir, c)
        if row is None:
            results = solve_many(enumerate_knots(c))
            if oracle is not None:
                for k, res in sorted(results.items()):
                    if oracle[k][0] != res.value:
                        raise CrossCheckError(k, res.value, oracle[k][0])
            row = _tally(c, results)
            if cache_dir is not None:
                _write_cached_row(cache_dir, row)
        rows.append(row)
    return rows

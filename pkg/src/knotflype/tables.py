"""Bundled table of prime alternating knots up to 9 crossings.

Each entry is one knot (chiral pairs identified), represented by the
DT code of one reduced alternating diagram.  The table is generated by
scripts/generate_knot_table.py, which enumerates alternating DT
pairings, realizes them, and merges diagrams of the same knot through
their flype graphs; entries are named n_k in canonical-code order,
which need not match historical numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from importlib import resources

from .diagram import Diagram, parse_dt

EXPECTED_COUNTS = {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 18, 9: 41}


@dataclass(frozen=True)
class TableEntry:
    name: str
    crossings: int
    dt: tuple[int, ...]

    @property
    def diagram(self) -> Diagram:
        return parse_dt(" ".join(str(x) for x in self.dt))


@cache
def load_table() -> tuple[TableEntry, ...]:
    text = (
        resources.files("knotflype.data")
        .joinpath("alternating_knots_up_to_9.txt")
        .read_text()
    )
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, *nums = line.split()
        dt = tuple(int(x) for x in nums)
        entries.append(TableEntry(name, len(dt), dt))
    counts = {}
    for e in entries:
        counts[e.crossings] = counts.get(e.crossings, 0) + 1
    if counts != EXPECTED_COUNTS:
        raise ValueError(f"table counts {counts} != expected {EXPECTED_COUNTS}")
    return tuple(entries)


def entries_up_to(max_crossings: int) -> tuple[TableEntry, ...]:
    return tuple(e for e in load_table() if e.crossings <= max_crossings)

"""Named systems and positions used throughout the tests and the CLI."""

from __future__ import annotations

from functools import lru_cache

from .errors import UnknownName
from .sts import SteinerTripleSystem, from_cyclic_base_blocks, validate_sts

# Affine plane AG(2,3), 1-based as usually printed; shifted to 0-based below.
STS9_ONE_BASED_BLOCKS = [
    (1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 4, 7), (2, 5, 8), (3, 6, 9),
    (1, 5, 9), (2, 6, 7), (3, 4, 8), (1, 6, 8), (2, 4, 9), (3, 5, 7),
]

CYCLIC_13_BASE = [(0, 3, 4), (0, 5, 7)]

# The non-cyclic STS(13): output of hill_climb_sts(13) via generate_distinct(13, 2,
# seed=1), kept because its certificate differs from the cyclic system's. Its
# automorphism group has 4 point orbits.
STS13_OTHER_BLOCKS = [
    (0, 1, 8), (0, 2, 9), (0, 3, 4), (0, 5, 10), (0, 6, 7), (0, 11, 12),
    (1, 2, 10), (1, 3, 7), (1, 4, 9), (1, 5, 11), (1, 6, 12), (2, 3, 12),
    (2, 4, 5), (2, 6, 11), (2, 7, 8), (3, 5, 8), (3, 6, 10), (3, 9, 11),
    (4, 6, 8), (4, 7, 11), (4, 10, 12), (5, 6, 9), (5, 7, 12), (7, 9, 10),
    (8, 9, 12), (8, 10, 11),
]

# STS(15) carrying the nim-value 3 graph, played points {0, 2, 7, 12}.
STS15_GRUNDY3_ROWS = {
    "PPU": [(0, 2, 1), (0, 7, 8), (0, 12, 11), (2, 7, 13), (2, 12, 10), (7, 12, 5)],
    "PAA": [(0, 3, 4), (2, 3, 6), (7, 6, 14), (12, 6, 9)],
    "PAU": [
        (0, 6, 5), (0, 9, 10), (0, 14, 13), (7, 9, 1),
        (12, 14, 1), (2, 4, 5), (2, 9, 8), (2, 14, 11),
        (7, 3, 10), (12, 3, 13), (7, 4, 11), (12, 4, 8),
    ],
    "PUU": [],
    "AAA": [],
    "AAU": [(4, 6, 1), (3, 14, 8), (3, 9, 11), (4, 9, 13), (4, 14, 10), (9, 14, 5)],
    "AUU": [(3, 1, 5), (6, 8, 13), (6, 10, 11)],
    "UUU": [(1, 8, 11), (1, 10, 13), (5, 8, 10), (5, 11, 13)],
}
STS15_GRUNDY3_PLAYED = frozenset({0, 2, 7, 12})
# Graph left on the available points {3, 4, 6, 9, 14}.
STS15_GRUNDY3_GRAPH_EDGES = [(6, 3), (3, 4), (6, 9), (6, 14)]

# STS(15) carrying a nim-value 4 available hypergraph, played points {0, 7, 11}.
STS15_GRUNDY4_ROWS = {
    "PPU": [(0, 7, 8), (0, 11, 12), (7, 11, 4)],
    "PAA": [
        (0, 1, 2), (0, 5, 6), (0, 9, 10), (0, 13, 14),
        (7, 1, 9), (7, 2, 13), (11, 2, 14), (7, 3, 10),
        (11, 3, 9), (11, 5, 13), (7, 6, 14), (11, 6, 10),
    ],
    "PAU": [(0, 3, 4), (11, 1, 8), (7, 5, 12)],
    "PUU": [],
    "AAA": [(1, 3, 5), (1, 10, 13), (2, 3, 6), (5, 9, 14)],
    "AAU": [
        (1, 6, 4), (1, 14, 12), (2, 5, 4), (2, 9, 8),
        (2, 10, 12), (3, 14, 8), (3, 13, 12), (9, 13, 4),
        (10, 14, 4), (5, 10, 8), (6, 13, 8), (6, 9, 12),
    ],
    "AUU": [],
    "UUU": [(4, 8, 12)],
}
STS15_GRUNDY4_PLAYED = frozenset({0, 7, 11})

# played sets the CLI uses when none is given
DEFAULT_PLAYED = {
    "STS15_GRUNDY3": STS15_GRUNDY3_PLAYED,
    "STS15_GRUNDY4": STS15_GRUNDY4_PLAYED,
}

BUILTIN_NAMES = (
    "STS7",
    "STS9",
    "STS13_CYCLIC",
    "STS13_OTHER",
    "STS15_GRUNDY3",
    "STS15_GRUNDY4",
)


def from_one_based(points) -> frozenset[int]:
    """Shift 1-based point labels (as the STS(9) blocks above are printed) to 0-based."""
    return frozenset(x - 1 for x in points)


def _rows_to_blocks(rows):
    return [b for blocks in rows.values() for b in blocks]


@lru_cache(maxsize=None)
def builtin_sts(name: str) -> SteinerTripleSystem:
    key = name.upper()
    if key == "STS7":
        return from_cyclic_base_blocks(7, [(0, 1, 3)])
    if key == "STS9":
        return validate_sts(9, [tuple(x - 1 for x in b) for b in STS9_ONE_BASED_BLOCKS])
    if key == "STS13_CYCLIC":
        return from_cyclic_base_blocks(13, CYCLIC_13_BASE)
    if key == "STS13_OTHER":
        return validate_sts(13, STS13_OTHER_BLOCKS)
    if key == "STS15_GRUNDY3":
        return validate_sts(15, _rows_to_blocks(STS15_GRUNDY3_ROWS))
    if key == "STS15_GRUNDY4":
        return validate_sts(15, _rows_to_blocks(STS15_GRUNDY4_ROWS))
    raise UnknownName(f"unknown builtin system {name!r}; choose from {', '.join(BUILTIN_NAMES)}")

"""NOFIL positions: played / available / unplayable points, moves, census."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import FilledBlock, IllegalMove
from .sts import SteinerTripleSystem

CENSUS_TYPES = ("PPU", "PAA", "PAU", "PUU", "AAA", "AAU", "AUU", "UUU")


@dataclass(frozen=True, eq=False)
class Position:
    """A NOFIL position. U and A are derived from P, so equality uses (sts, P)."""

    sts: SteinerTripleSystem
    played: frozenset[int]
    unplayable: frozenset[int] = field(default=frozenset())
    available: frozenset[int] = field(default=frozenset())

    def __eq__(self, other):
        if not isinstance(other, Position):
            return NotImplemented
        return self.played == other.played and (self.sts is other.sts or self.sts == other.sts)

    def __hash__(self):
        return hash((self.sts.v, self.sts.blocks, self.played))

    @property
    def is_terminal(self) -> bool:
        return not self.available


def unplayable_points(sts: SteinerTripleSystem, played: Iterable[int]) -> frozenset[int]:
    """Recompute U from scratch: points completing a block with two played points."""
    played = sorted(set(played))
    third = sts.third
    out = set()
    for i, x in enumerate(played):
        for y in played[i + 1:]:
            out.add(third[x][y])
    return frozenset(out)


def position_from_played(sts: SteinerTripleSystem, played: Iterable[int]) -> Position:
    played = frozenset(played)
    for x in played:
        if not 0 <= x < sts.v:
            raise IllegalMove(f"point {x} out of range for STS({sts.v})")
    unplayable = unplayable_points(sts, played)
    if unplayable & played:
        bad = sorted(unplayable & played)
        raise FilledBlock(f"played points complete a block through {bad}")
    available = frozenset(range(sts.v)) - played - unplayable
    return Position(sts, played, unplayable, available)


def initial_position(sts: SteinerTripleSystem) -> Position:
    return Position(sts, frozenset(), frozenset(), frozenset(range(sts.v)))


def legal_moves(pos: Position) -> frozenset[int]:
    return pos.available


def apply_move(pos: Position, x: int) -> Position:
    """Play ``x``. Only blocks through ``x`` can create new unplayable points."""
    if x not in pos.available:
        raise IllegalMove(f"point {x} is not available")
    third = pos.sts.third
    fresh = {third[x][p] for p in pos.played}
    unplayable = pos.unplayable | fresh
    available = pos.available - fresh - {x}
    return Position(pos.sts, pos.played | {x}, unplayable, available)


def reachable_positions(start: Position) -> Iterator[Position]:
    """Every position reachable from ``start`` (itself included), each once."""
    seen = {start.played}
    frontier = [start]
    while frontier:
        nxt = []
        for pos in frontier:
            yield pos
            for x in sorted(pos.available):
                child = apply_move(pos, x)
                if child.played not in seen:
                    seen.add(child.played)
                    nxt.append(child)
        frontier = nxt


@dataclass(frozen=True)
class AvailableHypergraph:
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]

    @classmethod
    def build(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "AvailableHypergraph":
        return cls(frozenset(vertices), frozenset(frozenset(e) for e in edges))

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def edges_of_size(self, k: int) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges if len(e) == k)

    def __str__(self) -> str:
        parts = [" ".join(map(str, e)) for e in sorted(tuple(sorted(e)) for e in self.edges)]
        return f"V={sorted(self.vertices)} E=[{', '.join(parts)}]"


def available_hypergraph(pos: Position) -> AvailableHypergraph:
    """3-edges: all-available blocks. 2-edges: available pairs whose block has a played point."""
    avail = pos.available
    edges = []
    for b in pos.sts.blocks:
        inside = [x for x in b if x in avail]
        if len(inside) == 3:
            edges.append(frozenset(b))
        elif len(inside) == 2:
            other = next(x for x in b if x not in avail)
            if other in pos.played:
                edges.append(frozenset(inside))
    return AvailableHypergraph(avail, frozenset(edges))


@dataclass(frozen=True)
class BlockCensus:
    blocks: dict[str, tuple[tuple[int, int, int], ...]]

    @property
    def counts(self) -> dict[str, int]:
        return {t: len(self.blocks[t]) for t in CENSUS_TYPES}

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(len(self.blocks[t]) for t in CENSUS_TYPES)

    @property
    def total(self) -> int:
        return sum(len(b) for b in self.blocks.values())


def census(sts: SteinerTripleSystem, played: Iterable[int]) -> BlockCensus:
    """Classify every block by how many of its points are played/available/unplayable."""
    pos = position_from_played(sts, played)
    role = {}
    for x in range(sts.v):
        role[x] = "P" if x in pos.played else ("U" if x in pos.unplayable else "A")
    out: dict[str, list] = {t: [] for t in CENSUS_TYPES}
    for b in sts.blocks:
        kind = "".join(sorted((role[x] for x in b), key="PAU".index))
        if kind == "PPP":
            raise FilledBlock(f"block {b} is completely played")
        # a block with two played points always has its third point unplayable
        assert kind != "PPA", kind
        out[kind].append(b)
    return BlockCensus({t: tuple(out[t]) for t in CENSUS_TYPES})

"""Node Kayles on simple graphs, plus the graph text format."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ParseError
from .game import AvailableHypergraph
from .solver import mex, state_key


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 0..n-1 and a set of edges ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, n: int, edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        clean = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {(i, j)} outside 0..{n - 1}")
            clean.add((min(i, j), max(i, j)))
        return cls(n, frozenset(clean))

    @property
    def e(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(
            self.n, frozenset(p for p in combinations(range(self.n), 2) if p not in self.edges)
        )

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        shifted = {(i + self.n, j + self.n) for i, j in other.edges}
        return SimpleGraph(self.n + other.n, self.edges | shifted)

    def relabel(self, perm) -> "SimpleGraph":
        return SimpleGraph.build(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def empty_graph(n: int = 0) -> SimpleGraph:
    return SimpleGraph(n, frozenset())


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.build(n, combinations(range(n), 2))


def from_hypergraph(h: AvailableHypergraph) -> tuple[SimpleGraph, list[int]]:
    """Relabel a hypergraph without 3-edges to 0..k-1; also return the old labels."""
    if not h.is_graph:
        raise ValueError("hypergraph still has 3-edges")
    verts = sorted(h.vertices)
    index = {x: i for i, x in enumerate(verts)}
    return SimpleGraph.build(len(verts), [[index[x] for x in e] for e in h.edges]), verts


def to_hypergraph(g: SimpleGraph) -> AvailableHypergraph:
    return AvailableHypergraph.build(range(g.n), g.edges)


def graph_key(g: SimpleGraph) -> bytes:
    """Canonical key shared with the NOFIL solver's hypergraph keys."""
    e2 = frozenset((1 << i) | (1 << j) for i, j in g.edges)
    return state_key(((1 << g.n) - 1, e2, frozenset()))


# -- solving ----------------------------------------------------------------------


class KaylesSolver:
    """Memoized Node Kayles; components are keyed by canonical form."""

    def __init__(self):
        self.table: dict[bytes, int] = {}

    def grundy(self, g: SimpleGraph) -> int:
        adj = g.adjacency()
        closed = [adj[x] | (1 << x) for x in range(g.n)]
        return self._value(adj, closed, (1 << g.n) - 1)

    def _value(self, adj, closed, mask: int) -> int:
        g = 0
        while mask:
            start = mask & -mask
            comp = start
            frontier = start
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                grow = adj[low.bit_length() - 1] & mask & ~comp
                comp |= grow
                frontier |= grow
            mask &= ~comp
            if comp == start:
                g ^= 1
            else:
                g ^= self._component(adj, closed, comp)
        return g

    def _component(self, adj, closed, comp: int) -> int:
        e2 = set()
        m = comp
        while m:
            low = m & -m
            m ^= low
            x = low.bit_length() - 1
            nb = adj[x] & comp
            while nb:
                lb = nb & -nb
                nb ^= lb
                if lb > low:
                    e2.add(low | lb)
        key = state_key((comp, frozenset(e2), frozenset()))
        got = self.table.get(key)
        if got is None:
            options = set()
            m = comp
            while m:
                low = m & -m
                m ^= low
                options.add(self._value(adj, closed, comp & ~closed[low.bit_length() - 1]))
            got = mex(options)
            self.table[key] = got
        return got


_default = KaylesSolver()


def kayles_grundy(g: SimpleGraph, solver: KaylesSolver | None = None) -> int:
    return (solver or _default).grundy(g)


def kayles_bruteforce(g: SimpleGraph) -> int:
    """Plain recursion: playing x deletes x and its neighbours."""
    adj = g.adjacency()

    def rec(mask: int) -> int:
        seen = set()
        m = mask
        while m:
            low = m & -m
            m ^= low
            x = low.bit_length() - 1
            seen.add(rec(mask & ~(adj[x] | low)))
        return mex(seen)

    return rec((1 << g.n) - 1)


# -- text format ------------------------------------------------------------------


def dumps_graph(g: SimpleGraph) -> str:
    lines = [f"n {g.n}"] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> SimpleGraph:
    """Parse ``n <count>`` followed by one ``i j`` edge per line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected 'n <count>', got {line!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            continue
        if len(parts) != 2:
            raise ParseError(f"edge needs 2 vertices, got {len(parts)}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"invalid edge {i} {j}", lineno)
        edges.append((i, j))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return SimpleGraph.build(n, edges)


def load_graph(path) -> SimpleGraph:
    with open(path) as fh:
        return loads_graph(fh.read())

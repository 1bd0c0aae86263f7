"""Sprague-Grundy values of NOFIL positions and of available hypergraphs.

Internally a hypergraph is ``(vmask, e2, e3)``: a vertex bitmask plus frozensets
of 2-edge and 3-edge bitmasks. Playing x removes x, kills the other end of
every 2-edge at x, and shrinks every 3-edge at x to a 2-edge. Values are XORed
over connected components; each component is memoized under its canonical key.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import canon
from .errors import BudgetExceeded
from .game import AvailableHypergraph, Position, apply_move, available_hypergraph

State = tuple[int, frozenset, frozenset]

DEFAULT_CACHE_ENTRIES = 1 << 22


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer not in ``values``."""
    present = set(values)
    k = 0
    while k in present:
        k += 1
    return k


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(points: Iterable[int]) -> int:
    m = 0
    for x in points:
        m |= 1 << x
    return m


def to_state(h: AvailableHypergraph) -> State:
    e2 = frozenset(_mask(e) for e in h.edges if len(e) == 2)
    e3 = frozenset(_mask(e) for e in h.edges if len(e) == 3)
    other = [e for e in h.edges if len(e) not in (2, 3)]
    if other:
        raise ValueError(f"edges must have size 2 or 3, got {sorted(map(sorted, other))}")
    return _mask(h.vertices), e2, e3


def from_state(state: State) -> AvailableHypergraph:
    vmask, e2, e3 = state
    edges = [frozenset(_bits(e)) for e in e2 | e3]
    return AvailableHypergraph(frozenset(_bits(vmask)), frozenset(edges))


def play(state: State, x: int) -> State:
    vmask, e2, e3 = state
    xb = 1 << x
    kill = xb
    for e in e2:
        if e & xb:
            kill |= e
    ne2 = {e for e in e2 if not e & kill}
    ne3 = set()
    others = kill ^ xb
    for e in e3:
        if e & kill:
            if e & xb and not e & others:
                ne2.add(e ^ xb)
        else:
            ne3.add(e)
    return vmask & ~kill, frozenset(ne2), frozenset(ne3)


def split(state: State) -> tuple[int, list[State]]:
    """Return (number of isolated vertices, connected components with edges)."""
    vmask, e2, e3 = state
    comps: list[int] = []
    covered = 0
    for e in e2 | e3:
        covered |= e
        m = e
        rest = []
        for c in comps:
            if c & m:
                m |= c
            else:
                rest.append(c)
        rest.append(m)
        comps = rest
    isolated = bin(vmask & ~covered).count("1")
    if len(comps) == 1:
        return isolated, [(comps[0], e2, e3)]
    parts = []
    for c in sorted(comps):
        parts.append(
            (c, frozenset(e for e in e2 if e & c), frozenset(e for e in e3 if e & c))
        )
    return isolated, parts


def state_key(state: State) -> bytes:
    vmask, e2, e3 = state
    verts = list(_bits(vmask))
    index = {x: i for i, x in enumerate(verts)}
    edges = [tuple(index[x] for x in _bits(e)) for e in e2]
    edges += [tuple(index[x] for x in _bits(e)) for e in e3]
    return canon.canonical_key(len(verts), edges)


def canonical_key(h: AvailableHypergraph) -> bytes:
    """Equal for two hypergraphs exactly when they are isomorphic."""
    return state_key(to_state(h))


def components(h: AvailableHypergraph) -> list[AvailableHypergraph]:
    """Connected components; all isolated vertices form one final component."""
    state = to_state(h)
    _, parts = split(state)
    out = [from_state(p) for p in parts]
    lonely = state[0]
    for p in parts:
        lonely &= ~p[0]
    if lonely:
        out.append(AvailableHypergraph(frozenset(_bits(lonely)), frozenset()))
    return out


@dataclass
class Solver:
    """Grundy evaluator with a transposition table keyed by canonical form.

    ``exact`` is a label-dependent front cache that avoids recomputing the
    canonical key of a component seen before with identical labels. ``table``
    is the canonical table, bounded with least-recently-used eviction.
    """

    max_entries: int = DEFAULT_CACHE_ENTRIES
    table: OrderedDict = field(default_factory=OrderedDict)
    exact: dict = field(default_factory=dict)
    hits: int = 0
    misses: int = 0

    def value(self, state: State) -> int:
        isolated, parts = split(state)
        g = isolated & 1
        for part in parts:
            g ^= self._component(part)
        return g

    def _component(self, part: State) -> int:
        got = self.exact.get(part)
        if got is not None:
            return got
        key = state_key(part)
        got = self.table.get(key)
        if got is not None:
            self.hits += 1
            self.table.move_to_end(key)
        else:
            self.misses += 1
            got = mex({self.value(play(part, x)) for x in _bits(part[0])})
            self.table[key] = got
            if len(self.table) > self.max_entries:
                self.table.popitem(last=False)
        if len(self.exact) >= self.max_entries:
            self.exact.clear()
        self.exact[part] = got
        return got

    def hypergraph(self, h: AvailableHypergraph) -> int:
        return self.value(to_state(h))

    def position(self, pos: Position) -> int:
        return self.hypergraph(available_hypergraph(pos))


_default = Solver()


def default_solver() -> Solver:
    return _default


def grundy_hypergraph(h: AvailableHypergraph, solver: Solver | None = None) -> int:
    return (solver or _default).hypergraph(h)


def grundy(pos: Position, solver: Solver | None = None) -> int:
    return (solver or _default).position(pos)


def outcome(pos: Position, solver: Solver | None = None) -> str:
    """'P' if the previous player wins (value 0), else 'N'."""
    return "P" if grundy(pos, solver) == 0 else "N"


def best_moves(pos: Position, solver: Solver | None = None) -> frozenset[int]:
    """Moves to a zero position; empty exactly when the position itself is zero."""
    return frozenset(
        x for x in sorted(pos.available) if grundy(apply_move(pos, x), solver) == 0
    )


# -- brute-force oracles ------------------------------------------------------


def _brute_points(third, played: tuple[int, ...], available: frozenset[int]) -> int:
    seen = set()
    for x in available:
        fresh = {third[x][p] for p in played}
        seen.add(_brute_points(third, played + (x,), available - fresh - {x}))
    return mex(seen)


def _brute_hyper(vertices: frozenset, edges: frozenset) -> int:
    seen = set()
    for x in vertices:
        dead = {x}
        for e in edges:
            if len(e) == 2 and x in e:
                dead |= e
        rest = set()
        for e in edges:
            if e & dead:
                if x in e and len(e) == 3 and not (e - {x}) & dead:
                    rest.add(e - {x})
            else:
                rest.add(e)
        seen.add(_brute_hyper(vertices - dead, frozenset(rest)))
    return mex(seen)


def grundy_bruteforce(game: Position | AvailableHypergraph) -> int:
    """Unmemoized mex recursion straight from the rules; an oracle for tests."""
    if isinstance(game, Position):
        return _brute_points(game.sts.third, tuple(sorted(game.played)), game.available)
    return _brute_hyper(frozenset(game.vertices), frozenset(frozenset(e) for e in game.edges))


# -- game trees -----------------------------------------------------------------


@dataclass
class GameTree:
    played: frozenset[int]
    value: int
    move: int | None = None
    merged: int = 1
    children: list["GameTree"] = field(default_factory=list)

    def iter_nodes(self, depth: int = 0):
        yield self, depth
        for c in self.children:
            yield from c.iter_nodes(depth + 1)

    def node_count(self) -> int:
        return sum(1 for _ in self.iter_nodes())

    def leaf_depths(self) -> set[int]:
        return {d for n, d in self.iter_nodes() if not n.children}


DEFAULT_TREE_NODES = 1_000_000


def game_tree(
    pos: Position,
    max_depth: int | None = None,
    iso_reduce: bool = False,
    max_nodes: int = DEFAULT_TREE_NODES,
    solver: Solver | None = None,
) -> GameTree:
    """Expand options to ``max_depth`` (None for the whole game).

    With ``iso_reduce`` children whose available hypergraphs are isomorphic
    are merged; the representative is the smallest move and ``merged`` counts
    the class.
    """
    solver = solver or _default
    count = [0]

    def build(p: Position, move: int | None, depth: int) -> GameTree:
        count[0] += 1
        if count[0] > max_nodes:
            raise BudgetExceeded(f"game tree exceeds {max_nodes} nodes")
        node = GameTree(p.played, grundy(p, solver), move)
        if max_depth is not None and depth >= max_depth:
            return node
        moves = sorted(p.available)
        if iso_reduce:
            classes: dict[bytes, list[int]] = {}
            for x in moves:
                key = canonical_key(available_hypergraph(apply_move(p, x)))
                classes.setdefault(key, []).append(x)
            groups = sorted(classes.values())
        else:
            groups = [[x] for x in moves]
        for group in groups:
            child = build(apply_move(p, group[0]), group[0], depth + 1)
            child.merged = len(group)
            node.children.append(child)
        return node

    return build(pos, None, 0)


def to_dot(tree: GameTree, name: str = "nofil") -> str:
    lines = [f"digraph {name} {{"]
    ids: dict[int, str] = {}
    for i, (node, _) in enumerate(tree.iter_nodes()):
        ids[id(node)] = f"n{i}"
        lines.append(f'  n{i} [label="{node.value}"];')

    def edges(node: GameTree) -> None:
        for c in node.children:
            label = str(c.move) if c.merged == 1 else f"{c.move} (x{c.merged})"
            lines.append(f'  {ids[id(node)]} -> {ids[id(c)]} [label="{label}"];')
            edges(c)

    edges(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def vertex_transitive_shortcut(h: AvailableHypergraph, solver: Solver | None = None) -> int | None:
    """0 or 1 via a single option when Aut(h) is vertex-transitive, else None."""
    verts = sorted(h.vertices)
    if not verts:
        return None
    index = {x: i for i, x in enumerate(verts)}
    edges = [tuple(index[x] for x in e) for e in h.edges]
    if len(canon.vertex_orbits(len(verts), edges)) != 1:
        return None
    child = play(to_state(h), verts[0])
    return 1 if (solver or _default).value(child) == 0 else 0

"""Proper edge colorings: backtracking search, chromatic index, equitable K_p colorings."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import Infeasible, SizeLimit
from .kayles import SimpleGraph

EXACT_VERTEX_CAP = 12
Coloring = dict[tuple[int, int], int]


def _search(edges, palette: int, injective: bool, max_nodes: int | None) -> Coloring | None:
    at: dict[int, set[int]] = {}
    for i, j in edges:
        at.setdefault(i, set())
        at.setdefault(j, set())
    coloring: Coloring = {}
    used_anywhere: set[int] = set()
    nodes = [0]

    def rec(k: int) -> bool:
        if k == len(edges):
            return True
        nodes[0] += 1
        if max_nodes is not None and nodes[0] > max_nodes:
            raise Infeasible("search budget exhausted")
        i, j = edges[k]
        fresh_tried = False
        for c in range(palette):
            if c in at[i] or c in at[j]:
                continue
            if injective and c in used_anywhere:
                continue
            if c not in used_anywhere:
                # untouched colors are interchangeable: try just one
                if fresh_tried:
                    continue
                fresh_tried = True
            coloring[(i, j)] = c
            at[i].add(c)
            at[j].add(c)
            new = c not in used_anywhere
            if new:
                used_anywhere.add(c)
            if rec(k + 1):
                return True
            at[i].discard(c)
            at[j].discard(c)
            if new:
                used_anywhere.discard(c)
            del coloring[(i, j)]
        return False

    return coloring if rec(0) else None


def _ordered_edges(g: SimpleGraph, rng: random.Random | None) -> list[tuple[int, int]]:
    deg = g.degrees()
    edges = g.sorted_edges()
    if rng is not None:
        rng.shuffle(edges)
        return edges
    # high-degree edges first, then grow outward so constraints bite early
    return sorted(edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))


def proper_edge_coloring(
    g: SimpleGraph,
    palette_size: int,
    injective: bool = False,
    rng: random.Random | None = None,
    max_nodes: int | None = None,
) -> Coloring:
    """Color edges with colors 0..palette_size-1 so adjacent edges differ.

    ``injective`` forces every edge to get its own color. Raises
    :class:`Infeasible` when no such coloring exists.
    """
    if injective and palette_size < g.e:
        raise Infeasible(f"{g.e} edges cannot get distinct colors from {palette_size}")
    if g.e and palette_size < g.max_degree():
        raise Infeasible(f"palette {palette_size} below maximum degree {g.max_degree()}")
    result = _search(_ordered_edges(g, rng), palette_size, injective, max_nodes)
    if result is None:
        raise Infeasible(f"no proper edge coloring with {palette_size} colors")
    return result


def is_proper(coloring: Coloring) -> bool:
    seen = set()
    for (i, j), c in coloring.items():
        if (i, c) in seen or (j, c) in seen:
            return False
        seen.add((i, c))
        seen.add((j, c))
    return True


def chromatic_index(g: SimpleGraph, mode: str = "exact"):
    """Exact chromatic index, or the Vizing interval ``(D, D+1)`` in bounds mode."""
    delta = g.max_degree()
    if mode == "bounds":
        return (delta, delta + 1) if g.e else (0, 0)
    if mode != "exact":
        raise ValueError(f"mode must be 'exact' or 'bounds', not {mode!r}")
    if g.n > EXACT_VERTEX_CAP:
        raise SizeLimit(f"exact chromatic index limited to {EXACT_VERTEX_CAP} vertices")
    if not g.e:
        return 0
    # overfull graphs need delta + 1 colors outright
    if g.e > delta * (g.n // 2):
        return delta + 1
    try:
        proper_edge_coloring(g, delta)
        return delta
    except Infeasible:
        return delta + 1


def complete_graph_chromatic_index(p: int) -> int:
    if p <= 1:
        return 0
    return p - 1 if p % 2 == 0 else p


def _round_robin(p: int) -> Coloring:
    """Proper coloring of K_p with its chromatic index many colors."""
    out: Coloring = {}
    if p % 2 == 1:
        for i, j in combinations(range(p), 2):
            out[(i, j)] = (i + j) % p
        return out
    m = p - 1
    for i, j in combinations(range(m), 2):
        out[(i, j)] = (i + j) % m
    for i in range(m):
        out[(i, m)] = (2 * i) % m
    return out


def _swap_path(coloring: Coloring, big: int, small: int) -> bool:
    """Swap colors along a component of the big/small subgraph with more big edges."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e, c in coloring.items():
        if c in (big, small):
            for x in e:
                adj.setdefault(x, []).append(e)
    seen_edges: set[tuple[int, int]] = set()
    for start in sorted(adj):
        stack = [start]
        comp_edges = []
        visited = {start}
        while stack:
            x = stack.pop()
            for e in adj[x]:
                if e in seen_edges:
                    continue
                seen_edges.add(e)
                comp_edges.append(e)
                y = e[0] if e[1] == x else e[1]
                if y not in visited:
                    visited.add(y)
                    stack.append(y)
        n_big = sum(1 for e in comp_edges if coloring[e] == big)
        if n_big > len(comp_edges) - n_big:
            for e in comp_edges:
                coloring[e] = small if coloring[e] == big else big
            return True
    return False


def equitable_surjective_coloring(p: int, u: int) -> Coloring:
    """Proper coloring of K_p using all of 0..u-1, class sizes within one of each other."""
    pairs = p * (p - 1) // 2
    if u > pairs:
        raise Infeasible(f"K_{p} has {pairs} edges, cannot use {u} colors")
    chi = complete_graph_chromatic_index(p)
    if u < chi:
        raise Infeasible(f"K_{p} needs {chi} colors, only {u} available")
    if u == 0:
        return {}
    coloring = _round_robin(p)
    while True:
        sizes = [0] * u
        for c in coloring.values():
            sizes[c] += 1
        big = max(range(u), key=lambda c: (sizes[c], -c))
        small = min(range(u), key=lambda c: (sizes[c], c))
        if sizes[big] - sizes[small] <= 1:
            return coloring
        if not _swap_path(coloring, big, small):
            raise AssertionError("no alternating path found; coloring is not proper")

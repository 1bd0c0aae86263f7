"""Canonical labeling of small vertex-colored hypergraphs.

Individualization-refinement: the vertex partition is refined until every
vertex in a cell sees the same multiset of cell-patterns through its edges,
then a vertex of the smallest non-trivial cell is individualized and the
search branches. Each discrete leaf yields a relabeled edge list; the
lexicographically least one is the canonical form. Automorphisms detected
between equal leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

Edge = tuple[int, ...]


class _Search:
    def __init__(self, n: int, edges: Sequence[Edge], colors: Sequence[Hashable] | None):
        self.n = n
        self.edges = [tuple(e) for e in edges]
        self.colors = list(colors) if colors is not None else None
        incident: list[list[Edge]] = [[] for _ in range(n)]
        for e in self.edges:
            for x in e:
                incident[x].append(tuple(y for y in e if y != x))
        self.incident = incident
        self.best: tuple | None = None
        self.best_lab: list[int] | None = None
        self.first: tuple | None = None
        self.first_lab: list[int] | None = None
        self.autos: list[list[int]] = []

    def initial_cells(self) -> list[list[int]]:
        if self.colors is None:
            return [list(range(self.n))] if self.n else []
        groups: dict = {}
        for v in range(self.n):
            groups.setdefault(self.colors[v], []).append(v)
        return [groups[c] for c in sorted(groups)]

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        incident = self.incident
        col = [0] * self.n
        while True:
            for i, cell in enumerate(cells):
                for v in cell:
                    col[v] = i
            new: list[list[int]] = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict = {}
                for v in cell:
                    sig = tuple(sorted(tuple(sorted(col[y] for y in rest)) for rest in incident[v]))
                    groups.setdefault(sig, []).append(v)
                if len(groups) == 1:
                    new.append(cell)
                    continue
                changed = True
                for sig in sorted(groups):
                    new.append(groups[sig])
            cells = new
            if not changed:
                return cells

    def encode(self, lab: list[int]) -> tuple:
        body = sorted(tuple(sorted(lab[x] for x in e)) for e in self.edges)
        return tuple(body)

    def leaf(self, cells: list[list[int]]) -> None:
        lab = [0] * self.n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        enc = self.encode(lab)
        if self.best is None:
            self.best, self.best_lab = enc, lab
            self.first, self.first_lab = enc, lab
            return
        if enc == self.best:
            self._record_auto(self.best_lab, lab)
        elif enc == self.first:
            self._record_auto(self.first_lab, lab)
        if enc < self.best:
            self.best, self.best_lab = enc, lab

    def _record_auto(self, ref: list[int], lab: list[int]) -> None:
        inv = [0] * self.n
        for v, pos in enumerate(ref):
            inv[pos] = v
        g = [inv[lab[v]] for v in range(self.n)]
        if any(g[v] != v for v in range(self.n)):
            self.autos.append(g)

    def _orbit_root(self, prefix: list[int]):
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[x] == x for x in prefix):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[a] = b
        return find

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = self.refine(cells)
        if len(cells) == self.n:
            self.leaf(cells)
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = sorted(cells[idx])
        explored: list[int] = []
        seen_autos = -1
        find = None
        for v in target:
            if explored:
                if len(self.autos) != seen_autos:
                    find = self._orbit_root(prefix)
                    seen_autos = len(self.autos)
                roots = {find(w) for w in explored}
                if find(v) in roots:
                    continue
            explored.append(v)
            rest = [w for w in cells[idx] if w != v]
            branch = cells[:idx] + [[v], rest] + cells[idx + 1:]
            self.run(branch, prefix + [v])


def canonical_form(
    n: int, edges: Iterable[Iterable[int]], colors: Sequence[Hashable] | None = None
) -> tuple[tuple, list[int], list[list[int]]]:
    """Return ``(encoding, labeling, automorphisms)`` for a hypergraph on 0..n-1.

    ``labeling[v]`` is the canonical position of vertex ``v``. The returned
    automorphisms are those discovered during search; they need not generate
    the full group.
    """
    s = _Search(n, [tuple(e) for e in edges], colors)
    if n == 0:
        return ((), [], [])
    s.run(s.initial_cells(), [])
    assert s.best is not None and s.best_lab is not None
    enc = s.best
    if colors is not None:
        order = sorted(range(n), key=lambda v: s.best_lab[v])
        enc = (tuple(colors[v] for v in order),) + enc
    return enc, s.best_lab, s.autos


def canonical_key(
    n: int, edges: Iterable[Iterable[int]], colors: Sequence[Hashable] | None = None
) -> bytes:
    enc, _, _ = canonical_form(n, edges, colors)
    return repr((n, enc)).encode()


def vertex_orbits(n: int, edges: Iterable[Iterable[int]]) -> list[list[int]]:
    """Exact orbits of the automorphism group on vertices.

    Two vertices share an orbit iff marking either one gives the same
    canonical form.
    """
    edges = [tuple(e) for e in edges]
    classes: dict[bytes, list[int]] = {}
    for x in range(n):
        colors = [0] * n
        colors[x] = 1
        classes.setdefault(canonical_key(n, edges, colors), []).append(x)
    return sorted(classes.values())

"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations


def sts_isomorphic(v, blocks1, blocks2) -> bool:
    """Search point maps one point at a time, rejecting as soon as a fully mapped block misses."""
    b1 = [tuple(b) for b in blocks1]
    target = {frozenset(b) for b in blocks2}
    if len(b1) != len(target):
        return False
    by_point = [[b for b in b1 if x in b] for x in range(v)]
    image = [-1] * v
    used = [False] * v

    def ok(x):
        for b in by_point[x]:
            if all(image[y] >= 0 for y in b):
                if frozenset(image[y] for y in b) not in target:
                    return False
        return True

    def rec(x):
        if x == v:
            return True
        for y in range(v):
            if not used[y]:
                image[x] = y
                used[y] = True
                if ok(x) and rec(x + 1):
                    return True
                used[y] = False
                image[x] = -1
        return False

    return rec(0)


def hypergraph_isomorphic(verts1, edges1, verts2, edges2) -> bool:
    """All vertex bijections; only for a handful of vertices."""
    verts1, verts2 = sorted(verts1), sorted(verts2)
    if len(verts1) != len(verts2) or len(edges1) != len(edges2):
        return False
    target = {frozenset(e) for e in edges2}
    for perm in permutations(verts2):
        m = dict(zip(verts1, perm))
        if all(frozenset(m[x] for x in e) in target for e in edges1):
            return True
    return False


def kayles_memo(n: int, edges) -> int:
    """Node Kayles by bitmask recursion with a plain memo; no components, no canonical forms."""
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    @lru_cache(maxsize=None)
    def rec(mask):
        seen = set()
        for x in range(n):
            if mask >> x & 1:
                seen.add(rec(mask & ~(adj[x] | 1 << x)))
        k = 0
        while k in seen:
            k += 1
        return k

    return rec((1 << n) - 1)


def hyper_memo(vertices, edges) -> int:
    """NOFIL on a hypergraph of 2- and 3-edges, memoized on (remaining, played) sets."""
    vertices = frozenset(vertices)
    edges = [frozenset(e) for e in edges]

    @lru_cache(maxsize=None)
    def rec(avail, played):
        seen = set()
        for x in avail:
            now = played | {x}
            dead = {x}
            for e in edges:
                if len(e - now) == 1 and len(e & now) == len(e) - 1:
                    dead |= e - now
            seen.add(rec(avail - dead, now))
        k = 0
        while k in seen:
            k += 1
        return k

    return rec(vertices, frozenset())


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if m >> i & 1]

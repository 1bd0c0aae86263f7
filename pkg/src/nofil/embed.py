"""Build a Steiner triple system in which a given graph is the available graph.

Points split into played P = 0..p-1, available A = p..p+a-1 (vertex i of G
is point p+i) and unplayable U = the rest. Three edge colourings fix the
seed triples:

* each edge xy of G, coloured by a point c of P, gives the block {x, y, c};
* each non-edge xy, coloured by a point c of U, gives {x, y, c};
* the pairs of P, coloured surjectively onto U, give the PPU blocks.

These use every P-P and A-A pair, so any completion of them to an STS
leaves G as the available graph once P has been played.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt

from .bounds import census_formulas, u_interval
from .coloring import (
    EXACT_VERTEX_CAP,
    Coloring,
    chromatic_index,
    equitable_surjective_coloring,
    proper_edge_coloring,
)
from .errors import EmbeddingFailure, Infeasible, OrderInvalid, Timeout
from .game import available_hypergraph, position_from_played
from .generate import complete_to_sts
from .kayles import SimpleGraph, graph_key, kayles_grundy
from .solver import canonical_key, grundy
from .sts import SteinerTripleSystem, admissible_order

SEEDS_PER_SPLIT = 8
COLORING_NODES = 200_000

Triple = tuple[int, int, int]


@dataclass
class SeedTriples:
    graph: SimpleGraph
    p: int
    u: int
    edge_colours: Coloring  # edges of G -> P
    non_edge_colours: Coloring  # non-edges of G -> U
    pair_colours: Coloring  # pairs of P -> U
    paa: list[Triple]
    aau: list[Triple]
    ppu: list[Triple]

    @property
    def a(self) -> int:
        return self.graph.n

    @property
    def v(self) -> int:
        return self.p + self.a + self.u

    @property
    def played(self) -> frozenset[int]:
        return frozenset(range(self.p))

    @property
    def available(self) -> frozenset[int]:
        return frozenset(range(self.p, self.p + self.a))

    @property
    def unplayable(self) -> frozenset[int]:
        return frozenset(range(self.p + self.a, self.v))

    @property
    def triples(self) -> list[Triple]:
        return self.paa + self.aau + self.ppu


def _colour(g: SimpleGraph, palette: int, rng: random.Random) -> Coloring:
    # injective colourings are preferred but not required
    if palette >= g.e:
        try:
            return proper_edge_coloring(g, palette, injective=True, rng=rng,
                                        max_nodes=COLORING_NODES)
        except Infeasible:
            pass
    return proper_edge_coloring(g, palette, rng=rng, max_nodes=COLORING_NODES)


def build_seed_triples(
    g: SimpleGraph, p: int, u: int, rng: random.Random | None = None
) -> SeedTriples:
    """Assemble the PAA, AAU and PPU triples; raises :class:`Infeasible`."""
    rng = rng or random.Random(0)
    if p < 0 or u < 0:
        raise Infeasible(f"negative part sizes p={p}, u={u}")
    a = g.n
    if p < 2 and g.e:
        raise Infeasible(f"{g.e} edges need played points to colour them, p={p}")
    comp = g.complement()
    edge_colours = _colour(g, p, rng)
    non_edge_colours = _colour(comp, u, rng)
    pair_colours = equitable_surjective_coloring(p, u)
    if len(set(pair_colours.values())) != u:
        raise Infeasible(f"pairs of {p} played points cannot reach all {u} unplayable points")

    def sort3(x, y, z):
        return tuple(sorted((x, y, z)))

    paa = [sort3(p + i, p + j, c) for (i, j), c in sorted(edge_colours.items())]
    aau = [sort3(p + i, p + j, p + a + c) for (i, j), c in sorted(non_edge_colours.items())]
    ppu = [sort3(i, j, p + a + c) for (i, j), c in sorted(pair_colours.items())]
    seeds = SeedTriples(g, p, u, edge_colours, non_edge_colours, pair_colours, paa, aau, ppu)
    used = set()
    for t in seeds.triples:
        for pair in combinations(t, 2):
            assert pair not in used, f"seed triples share {pair}"
            used.add(pair)
    return seeds


@dataclass
class EmbeddingReport:
    u_blocked: bool
    a_free: bool
    isomorphic: bool
    grundy_match: bool
    position_value: int | None
    kayles_value: int

    @property
    def ok(self) -> bool:
        return self.u_blocked and self.a_free and self.isomorphic and self.grundy_match

    def lines(self) -> list[str]:
        return [
            f"unplayable points blocked by PPU: {'pass' if self.u_blocked else 'FAIL'}",
            f"available points free: {'pass' if self.a_free else 'FAIL'}",
            f"available graph isomorphic to target: {'pass' if self.isomorphic else 'FAIL'}",
            f"nim-value {self.position_value} vs Node Kayles {self.kayles_value}: "
            f"{'pass' if self.grundy_match else 'FAIL'}",
        ]


def verify_embedding(sts: SteinerTripleSystem, played, g: SimpleGraph) -> EmbeddingReport:
    """Check that playing ``played`` on ``sts`` leaves a copy of ``g``."""
    pos = position_from_played(sts, played)
    p_set = pos.played
    unplayable_via_ppu = {
        sts.third[x][y] for x, y in combinations(sorted(p_set), 2)
    }
    u_blocked = pos.unplayable <= unplayable_via_ppu
    a_free = len(pos.available) == g.n
    h = available_hypergraph(pos)
    isomorphic = h.is_graph and a_free and canonical_key(h) == graph_key(g)
    k = kayles_grundy(g)
    value = grundy(pos) if isomorphic else None
    return EmbeddingReport(u_blocked, a_free, isomorphic, value == k, value, k)


@dataclass
class SplitAttempt:
    p: int
    u: int
    outcomes: list[str] = field(default_factory=list)


@dataclass
class Embedding:
    sts: SteinerTripleSystem
    played: frozenset[int]
    seeds: SeedTriples
    seed: int
    report: EmbeddingReport
    attempts: list[SplitAttempt]


def split_order(v: int, a: int) -> list[int]:
    """Values of p, starting at ceil(sqrt(2(v-a))) and alternating outward."""
    m = v - a
    if m < 0:
        return []
    start = isqrt(2 * m)
    if start * start < 2 * m:
        start += 1
    start = min(start, m)
    order = [start]
    for k in range(1, m + 1):
        for p in (start + k, start - k):
            if 0 <= p <= m:
                order.append(p)
    return order


def colouring_indices(g: SimpleGraph) -> tuple[int, int]:
    """Chromatic indices of G and its complement, or max degrees when too large."""
    comp = g.complement()
    if g.n <= EXACT_VERTEX_CAP:
        return chromatic_index(g), chromatic_index(comp)
    # max degree is a lower bound on the index, so the u-bounds only loosen
    return g.max_degree(), comp.max_degree()


def embed_graph(
    g: SimpleGraph,
    v: int,
    seed: int = 0,
    seeds_per_split: int = SEEDS_PER_SPLIT,
    budget: int | None = None,
) -> Embedding:
    """Find an STS(v) with a played set whose available graph is ``g``.

    Raises :class:`EmbeddingFailure` with per-split diagnostics when every
    admissible split of v - a into played and unplayable points fails.
    """
    if not admissible_order(v) or v < 3:
        raise OrderInvalid(f"no STS of order {v}")
    a = g.n
    if a < 1:
        raise EmbeddingFailure("target graph has no vertices")
    if v < a:
        raise EmbeddingFailure(f"graph on {a} vertices does not fit in {v} points")
    report = u_interval(a, g.e, v, colouring_indices(g))
    allowed = set(report.feasible_u)
    attempts: list[SplitAttempt] = []
    master = random.Random(seed)
    for p in split_order(v, a):
        u = v - a - p
        attempt = SplitAttempt(p, u)
        attempts.append(attempt)
        if u not in allowed:
            attempt.outcomes.append("u outside the feasible interval")
            continue
        for _ in range(seeds_per_split):
            sub = master.getrandbits(32)
            try:
                seeds = build_seed_triples(g, p, u, random.Random(sub))
            except Infeasible as exc:
                attempt.outcomes.append(f"seed {sub}: colouring infeasible ({exc})")
                break
            try:
                sts = complete_to_sts(v, seeds.triples, seed=sub, budget=budget)
            except Timeout:
                attempt.outcomes.append(f"seed {sub}: completion timed out")
                continue
            check = verify_embedding(sts, seeds.played, g)
            if check.ok:
                return Embedding(sts, seeds.played, seeds, sub, check, attempts)
            attempt.outcomes.append(f"seed {sub}: verification failed")
    detail = "; ".join(
        f"p={t.p},u={t.u}: {t.outcomes[-1] if t.outcomes else 'not tried'}" for t in attempts
    )
    raise EmbeddingFailure(
        f"no embedding of a graph with {a} vertices and {g.e} edges in STS({v}): {detail}",
        attempts,
    )


def census_prediction(seeds: SeedTriples) -> dict:
    """Block counts an embedding built from ``seeds`` must have."""
    return census_formulas(seeds.p, seeds.a, seeds.u, seeds.graph.e)

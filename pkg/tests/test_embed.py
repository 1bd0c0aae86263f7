import random
from itertools import combinations

import pytest

from nofil import catalog
from nofil.bounds import census_formulas, u_interval
from nofil.catalog import from_one_based
from nofil.errors import EmbeddingFailure, FilledBlock, Infeasible, OrderInvalid
from nofil.embed import (
    build_seed_triples,
    census_prediction,
    colouring_indices,
    embed_graph,
    split_order,
    verify_embedding,
)
from nofil.game import available_hypergraph, census, initial_position, reachable_positions
from nofil.kayles import SimpleGraph, complete_graph, cycle_graph, empty_graph, path_graph

P3_K1 = path_graph(3).disjoint_union(empty_graph(1))


def grundy3_graph():
    verts = sorted({x for e in catalog.STS15_GRUNDY3_GRAPH_EDGES for x in e})
    idx = {x: i for i, x in enumerate(verts)}
    return SimpleGraph.build(len(verts), [(idx[x], idx[y]) for x, y in catalog.STS15_GRUNDY3_GRAPH_EDGES])


def _pairs(triples):
    return [frozenset(p) for t in triples for p in combinations(t, 2)]


def test_seed_triples_for_p3_k1():
    seeds = build_seed_triples(P3_K1, 6, 9, random.Random(0))
    pairs = _pairs(seeds.triples)
    assert len(pairs) == len(set(pairs))
    assert len(seeds.paa) == 2 and len(seeds.aau) == 4 and len(seeds.ppu) == 15
    assert {t[2] for t in seeds.ppu} == seeds.unplayable
    # injective edge colouring: every played point on at most one PAA triple
    assert max(sum(x in t for t in seeds.paa) for x in seeds.played) <= 1


def test_seed_triples_single_vertex():
    seeds = build_seed_triples(empty_graph(1), 3, 3)
    assert seeds.paa == [] and seeds.aau == []
    assert sorted(t[2] for t in seeds.ppu) == [4, 5, 6]


def test_seed_triples_infeasible():
    with pytest.raises(Infeasible):
        build_seed_triples(empty_graph(1), 3, 0)
    with pytest.raises(Infeasible):
        build_seed_triples(complete_graph(3), 2, 3)


def test_split_order():
    assert split_order(19, 4) == [6, 7, 5, 8, 4, 9, 3, 10, 2, 11, 1, 12, 0, 13, 14, 15]
    assert split_order(3, 4) == []


def test_embed_p3_k1_in_sts19():
    emb = embed_graph(P3_K1, 19, seed=0)
    assert emb.report.ok
    assert emb.report.position_value == 3
    assert len(emb.sts.blocks) == 57
    p, u = emb.seeds.p, emb.seeds.u
    assert u in u_interval(4, 2, 19, colouring_indices(P3_K1)).feasible_u
    counts = census(emb.sts, emb.played).counts
    predicted = census_formulas(p, 4, u, 2)
    assert counts["AAA"] == 0
    assert all(counts[k] == predicted[k] for k in predicted)
    assert census_prediction(emb.seeds) == predicted
    assert set(emb.seeds.triples) <= set(emb.sts.blocks)


def test_embed_p3_k1_in_sts15_fails():
    with pytest.raises(EmbeddingFailure) as info:
        embed_graph(P3_K1, 15, seed=0)
    attempts = info.value.diagnostics
    assert len(attempts) == 12
    assert all(a.outcomes == ["u outside the feasible interval"] for a in attempts)


def test_embed_triangle_in_sts9():
    emb = embed_graph(complete_graph(3), 9, seed=0)
    assert len(emb.played) == 3
    assert emb.report.ok and emb.report.position_value == 1


@pytest.mark.parametrize("g,v", [
    (empty_graph(1), 7),
    (path_graph(2), 13),
    (path_graph(3), 13),
    (cycle_graph(4), 7),
    (path_graph(5), 15),
])
def test_embed_more_graphs(g, v):
    emb = embed_graph(g, v, seed=1)
    assert emb.report.ok
    counts = census(emb.sts, emb.played).counts
    predicted = census_prediction(emb.seeds)
    assert all(counts[k] == predicted[k] for k in predicted)


@pytest.mark.parametrize("g,v", [(path_graph(2), 9), (cycle_graph(4), 15)])
def test_exceptional_triples_have_no_split(g, v):
    report = u_interval(g.n, g.e, v, colouring_indices(g))
    assert report.empty
    with pytest.raises(EmbeddingFailure):
        embed_graph(g, v, seeds_per_split=1)


def test_two_isolated_points_never_left_in_sts13():
    # the bounds allow p=5, u=6 here, but neither STS(13) reaches it
    assert not u_interval(2, 0, 13, (0, 1)).empty
    for name in ("STS13_CYCLIC", "STS13_OTHER"):
        s = catalog.builtin_sts(name)
        for pos in reachable_positions(initial_position(s)):
            if len(pos.available) == 2:
                assert available_hypergraph(pos).edges


def test_embed_rejects_bad_order():
    with pytest.raises(OrderInvalid):
        embed_graph(P3_K1, 17)
    with pytest.raises(EmbeddingFailure):
        embed_graph(complete_graph(9), 7)


def test_verify_grundy3_position():
    s = catalog.builtin_sts("STS15_GRUNDY3")
    report = verify_embedding(s, catalog.STS15_GRUNDY3_PLAYED, grundy3_graph())
    assert report.ok and report.position_value == 3
    assert all(line.endswith("pass") for line in report.lines())
    short = set(catalog.STS15_GRUNDY3_PLAYED) - {12}
    assert not verify_embedding(s, short, grundy3_graph()).isomorphic


def test_verify_sts9_triangle():
    report = verify_embedding(catalog.builtin_sts("STS9"), from_one_based({1, 2, 6}), complete_graph(3))
    assert report.ok


def test_verify_filled_block():
    with pytest.raises(FilledBlock):
        verify_embedding(catalog.builtin_sts("STS9"), from_one_based({1, 2, 3}), complete_graph(3))

import random

import pytest

from nofil import catalog
from nofil.catalog import from_one_based as one
from nofil.errors import BudgetExceeded
from nofil.game import (
    AvailableHypergraph,
    apply_move,
    available_hypergraph,
    initial_position,
    position_from_played,
    reachable_positions,
)
from nofil.kayles import from_hypergraph, kayles_grundy
from nofil.solver import (
    Solver,
    best_moves,
    canonical_key,
    components,
    game_tree,
    grundy,
    grundy_bruteforce,
    grundy_hypergraph,
    mex,
    outcome,
    to_dot,
    vertex_transitive_shortcut,
)

from oracles import hyper_memo, hypergraph_isomorphic

GRUNDY3_GRAPH = AvailableHypergraph.build({3, 4, 6, 9, 14}, catalog.STS15_GRUNDY3_GRAPH_EDGES)


def H(vertices, edges):
    return AvailableHypergraph.build(vertices, edges)


def test_mex():
    assert mex(set()) == 0
    assert mex({0, 1, 3, 4, 5}) == 2
    assert mex({2, 7, 9}) == 0


def test_small_hypergraphs():
    assert grundy_hypergraph(GRUNDY3_GRAPH) == 3
    assert grundy_hypergraph(H({0}, [])) == 1
    assert grundy_hypergraph(H({0, 1, 2}, [(0, 1), (1, 2), (0, 2)])) == 1
    assert grundy_hypergraph(H(range(4), [(0, 1), (1, 2)])) == 3
    assert grundy_hypergraph(H((), [])) == 0


def test_builtin_values():
    expect = {"STS7": 0, "STS9": 0, "STS13_CYCLIC": 1, "STS13_OTHER": 1}
    for name, value in expect.items():
        assert grundy(initial_position(catalog.builtin_sts(name))) == value


def test_table_positions():
    s3 = catalog.builtin_sts("STS15_GRUNDY3")
    assert grundy(position_from_played(s3, catalog.STS15_GRUNDY3_PLAYED)) == 3
    s4 = catalog.builtin_sts("STS15_GRUNDY4")
    assert grundy(position_from_played(s4, catalog.STS15_GRUNDY4_PLAYED)) == 4


def test_outcomes_and_best_moves():
    s7 = initial_position(catalog.builtin_sts("STS7"))
    assert outcome(s7) == "P" and best_moves(s7) == frozenset()
    s13 = initial_position(catalog.builtin_sts("STS13_CYCLIC"))
    assert outcome(s13) == "N"
    moves = best_moves(s13)
    assert moves
    assert all(grundy(apply_move(s13, x)) == 0 for x in moves)
    terminal = position_from_played(catalog.builtin_sts("STS9"), one({1, 2, 6, 4}))
    assert outcome(terminal) == "P"


def test_best_moves_nonempty_iff_n_position():
    for pos in reachable_positions(initial_position(catalog.builtin_sts("STS9"))):
        assert bool(best_moves(pos)) == (outcome(pos) == "N")


@pytest.mark.parametrize("name", ["STS7", "STS9"])
def test_exhaustive_bruteforce_agreement(name):
    for pos in reachable_positions(initial_position(catalog.builtin_sts(name))):
        assert grundy(pos) == grundy_bruteforce(pos)
        assert grundy_bruteforce(available_hypergraph(pos)) == grundy(pos)


def test_fresh_solver_matches_default():
    s = catalog.builtin_sts("STS13_OTHER")
    fresh = Solver()
    assert fresh.position(initial_position(s)) == 1
    assert fresh.misses > 0


def test_tiny_cache_still_correct():
    s = catalog.builtin_sts("STS13_CYCLIC")
    small = Solver(max_entries=8)
    rng = random.Random(4)
    for _ in range(50):
        pos = initial_position(s)
        for _ in range(rng.randrange(4)):
            pos = apply_move(pos, rng.choice(sorted(pos.available)))
        assert small.position(pos) == grundy(pos)
    assert len(small.table) <= 8


def test_graph_positions_match_kayles():
    rng = random.Random(9)
    s = catalog.builtin_sts("STS13_OTHER")
    checked = 0
    for _ in range(200):
        pos = initial_position(s)
        while pos.available:
            h = available_hypergraph(pos)
            if h.is_graph:
                assert grundy(pos) == kayles_grundy(from_hypergraph(h)[0])
                checked += 1
            pos = apply_move(pos, rng.choice(sorted(pos.available)))
    assert checked > 100


def test_followers_of_sts13_reach_three():
    for name in ("STS13_CYCLIC", "STS13_OTHER"):
        values = {grundy(p) for p in reachable_positions(initial_position(catalog.builtin_sts(name)))}
        assert max(values) == 3


def test_components():
    parts = components(H(range(4), [(0, 1), (1, 2)]))
    assert [sorted(p.vertices) for p in parts] == [[0, 1, 2], [3]]
    assert components(H((), [])) == []
    tri = H(range(3), [(0, 1), (1, 2), (0, 2)])
    assert components(tri) == [tri]
    parts = components(H(range(6), [(0, 1, 2), (3, 4)]))
    assert [len(p.vertices) for p in parts] == [3, 2, 1]


def test_canonical_key_examples():
    a = H({4, 5, 9}, [(4, 5), (5, 9), (4, 9)])
    b = H({0, 1, 2}, [(0, 1), (1, 2), (0, 2)])
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(H(range(3), [(0, 1), (1, 2)])) != canonical_key(b)
    assert canonical_key(H(range(3), [(0, 1, 2)])) != canonical_key(b)


def test_canonical_key_agrees_with_bruteforce_on_play():
    pool = {}
    rng = random.Random(12)
    for name in ("STS7", "STS9", "STS13_CYCLIC", "STS13_OTHER"):
        s = catalog.builtin_sts(name)
        for pos in reachable_positions(initial_position(s)):
            h = available_hypergraph(pos)
            if 2 <= len(h.vertices) <= 7:
                pool.setdefault((len(h.vertices), len(h.edges)), []).append(h)
    pairs = 0
    for group in pool.values():
        sample = rng.sample(group, min(len(group), 12))
        for i, g1 in enumerate(sample):
            for g2 in sample[i + 1:]:
                same = hypergraph_isomorphic(g1.vertices, g1.edges, g2.vertices, g2.edges)
                assert (canonical_key(g1) == canonical_key(g2)) == same
                pairs += 1
    assert pairs > 200


def test_random_hypergraphs_match_memo_oracle():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(1, 8)
        edges = set()
        for _ in range(rng.randrange(0, 8)):
            k = rng.choice((2, 3)) if n >= 3 else 2
            if n >= k:
                edges.add(frozenset(rng.sample(range(n), k)))
        h = AvailableHypergraph(frozenset(range(n)), frozenset(edges))
        assert grundy_hypergraph(h) == hyper_memo(range(n), edges)


def test_game_trees_end_after_four_moves():
    for name in ("STS7", "STS9"):
        tree = game_tree(initial_position(catalog.builtin_sts(name)))
        assert tree.leaf_depths() == {4}
        assert all(n.value == 0 for n, _ in tree.iter_nodes() if not n.children)


def test_iso_reduced_sts13_tree():
    pos = initial_position(catalog.builtin_sts("STS13_CYCLIC"))
    tree = game_tree(pos, max_depth=1, iso_reduce=True)
    assert len(tree.children) == 1
    assert tree.children[0].merged == 13
    assert tree.children[0].move == 0
    assert tree.value == 1


def test_iso_reduction_preserves_values():
    pos = initial_position(catalog.builtin_sts("STS9"))
    full = game_tree(pos)
    reduced = game_tree(pos, iso_reduce=True)
    assert reduced.node_count() < full.node_count()
    assert reduced.value == full.value == 0
    assert {c.value for c in reduced.children} == {c.value for c in full.children}


def test_tree_depth_zero_and_budget():
    pos = initial_position(catalog.builtin_sts("STS9"))
    assert game_tree(pos, max_depth=0).node_count() == 1
    with pytest.raises(BudgetExceeded):
        game_tree(pos, max_nodes=50)


def test_dot_output():
    tree = game_tree(initial_position(catalog.builtin_sts("STS13_CYCLIC")), max_depth=1, iso_reduce=True)
    dot = to_dot(tree)
    assert dot.startswith("digraph")
    assert 'n0 [label="1"];' in dot
    assert 'n0 -> n1 [label="0 (x13)"];' in dot


def test_vertex_transitive_shortcut():
    h13 = available_hypergraph(initial_position(catalog.builtin_sts("STS13_CYCLIC")))
    assert vertex_transitive_shortcut(h13) == 1 == grundy_hypergraph(h13)
    h9 = available_hypergraph(initial_position(catalog.builtin_sts("STS9")))
    assert vertex_transitive_shortcut(h9) == 0
    assert vertex_transitive_shortcut(GRUNDY3_GRAPH) is None

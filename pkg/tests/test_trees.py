"""Canonical forms and enumeration against independent oracles."""

import random

import pytest
from limbforge.errors import MissingRootError, NotATreeError
from limbforge.trees import (CanonicalTree, WeightedGraph, canonicalize_free,
                             canonicalize_rooted, enumerate_free,
                             enumerate_rooted, enumerate_weighted_free,
                             enumerate_weighted_rooted, free_canonical_tree,
                             graphs_isomorphic, leaf, root_forest, to_graph)
from oracles import (prufer_free_count, prufer_rooted_count, random_unit_tree,
                     rooted_isomorphic, unit_graph, weighted_codes_by_shapes)

ROOTED_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]
FREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
# shapes-x-compositions oracle values, frozen from tests below at w <= 8
WEIGHTED_ROOTED_COUNTS = [1, 2, 5, 13, 37, 108, 332, 1042]
WEIGHTED_FREE_COUNTS = [1, 2, 3, 7, 14, 35, 85, 231]

SCHWENK_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)]


def test_single_vertex_canonical():
    g = WeightedGraph(((0, 1),), (), 0)
    assert canonicalize_rooted(g) == leaf(1)


def test_path_rooted_at_middle_has_equal_children():
    g = unit_graph([(0, 1), (1, 2)], 3, root=1)
    t = canonicalize_rooted(g)
    assert t.children[0] == t.children[1] == leaf()


def test_rooted_canonical_invariant_under_relabeling():
    rng = random.Random(42)
    base = unit_graph(SCHWENK_EDGES, 9, root=2)  # rooted at the degree-3 vertex
    expect = canonicalize_rooted(base).code
    for _ in range(100):
        perm = list(range(9))
        rng.shuffle(perm)
        relabeled = base.relabeled(dict(enumerate(perm)))
        assert canonicalize_rooted(relabeled).code == expect


def test_free_canonical_invariant_under_relabeling():
    rng = random.Random(43)
    base = unit_graph(SCHWENK_EDGES, 9)
    expect = canonicalize_free(base)
    for _ in range(100):
        perm = list(range(9))
        rng.shuffle(perm)
        assert canonicalize_free(base.relabeled(dict(enumerate(perm)))) == expect


def test_free_code_small_cases():
    p3a = unit_graph([(0, 1), (1, 2)], 3)
    p3b = unit_graph([(1, 2), (0, 2)], 3)
    assert canonicalize_free(p3a) == canonicalize_free(p3b)
    e1 = WeightedGraph(((0, 1), (1, 2)), ((0, 1),))
    e2 = WeightedGraph(((0, 2), (1, 1)), ((0, 1),))
    assert canonicalize_free(e1) == canonicalize_free(e2)


def test_not_a_tree_and_missing_root_errors():
    cyc = unit_graph([(0, 1), (1, 2), (0, 2)], 3, root=0)
    with pytest.raises(NotATreeError):
        canonicalize_rooted(cyc)
    disconnected = WeightedGraph(((0, 1), (1, 1)), ())
    with pytest.raises(NotATreeError):
        canonicalize_free(disconnected)
    with pytest.raises(MissingRootError):
        canonicalize_rooted(unit_graph([(0, 1)], 2))


def test_canonical_idempotence():
    rng = random.Random(7)
    for _ in range(50):
        g = random_unit_tree(rng, rng.randint(1, 10), max_weight=3).with_root(0)
        t = canonicalize_rooted(g)
        again = canonicalize_rooted(to_graph(t))
        assert again == t


def test_code_equality_matches_permutation_isomorphism():
    # soundness and completeness on every pair of rooted trees with <= 7 vertices
    for n in range(1, 8):
        graphs = [to_graph(t) for t in enumerate_rooted(n)]
        trees = [canonicalize_rooted(g) for g in graphs]
        for i, g1 in enumerate(graphs):
            for j, g2 in enumerate(graphs):
                assert (trees[i].code == trees[j].code) == rooted_isomorphic(g1, g2)


def test_rooted_counts_match_prufer_oracle():
    for n in range(1, 8):
        assert prufer_rooted_count(n) == ROOTED_COUNTS[n - 1]
        assert sum(1 for _ in enumerate_rooted(n)) == ROOTED_COUNTS[n - 1]


def test_free_counts_match_prufer_oracle():
    for n in range(1, 8):
        assert prufer_free_count(n) == FREE_COUNTS[n - 1]
        assert sum(1 for _ in enumerate_free(n)) == FREE_COUNTS[n - 1]


def test_free_counts_match_networkx():
    import networkx as nx

    for n in range(2, 11):
        assert sum(1 for _ in nx.nonisomorphic_trees(n)) == FREE_COUNTS[n - 1]
        assert sum(1 for _ in enumerate_free(n)) == FREE_COUNTS[n - 1]


def test_enumeration_counts_to_ten():
    assert [sum(1 for _ in enumerate_rooted(n)) for n in range(1, 11)] == ROOTED_COUNTS
    assert sum(1 for _ in enumerate_free(9)) == 47


def test_enumeration_is_duplicate_free_and_sorted():
    for n in (6, 7):
        codes = [t.code for t in enumerate_rooted(n)]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)
        assert all(t.size == n for t in enumerate_rooted(n))


def test_weighted_rooted_matches_shape_composition_oracle():
    for w in range(1, 9):
        oracle = weighted_codes_by_shapes(w)
        got = [t for t in enumerate_weighted_rooted(w)]
        assert len(oracle) == WEIGHTED_ROOTED_COUNTS[w - 1]
        assert {t.code for t in got} == oracle
        assert all(t.total_weight == w for t in got)


def test_weighted_free_matches_shape_composition_oracle():
    for w in range(1, 9):
        oracle = weighted_codes_by_shapes(w, free=True)
        got = list(enumerate_weighted_free(w))
        assert len(oracle) == WEIGHTED_FREE_COUNTS[w - 1]
        assert {free_canonical_tree(to_graph(t)).code for t in got} == oracle


def test_weighted_rooted_members_weight_two():
    members = sorted(t.code for t in enumerate_weighted_rooted(2))
    single = CanonicalTree(2)
    pair = CanonicalTree(1, [leaf(1)])
    assert members == sorted([single.code, pair.code])


def test_weighted_free_members_weight_three():
    got = {t.code for t in enumerate_weighted_free(3)}
    assert len(got) == 3  # single w=3 vertex; edge {1,2}; unit path P3


def test_weighted_rooted_counts_weakly_increase():
    counts = [sum(1 for _ in enumerate_weighted_rooted(w)) for w in range(1, 10)]
    assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_root_forest():
    assert root_forest(leaf()) == ()
    star = CanonicalTree(1, [leaf(), leaf(), leaf()])
    assert root_forest(star) == (leaf(), leaf(), leaf())
    schwenk_at_a = canonicalize_rooted(unit_graph(SCHWENK_EDGES, 9, root=1))
    sizes = sorted(t.size for t in root_forest(schwenk_at_a))
    assert sizes == [1, 7]


def test_graphs_isomorphic_on_relabelings():
    rng = random.Random(3)
    for _ in range(20):
        g = random_unit_tree(rng, rng.randint(2, 8), max_weight=2)
        perm = list(g.ids)
        rng.shuffle(perm)
        h = g.relabeled(dict(zip(g.ids, perm)))
        assert graphs_isomorphic(g, h)
    p4 = unit_graph([(0, 1), (1, 2), (2, 3)], 4)
    star = unit_graph([(0, 1), (0, 2), (0, 3)], 4)
    assert not graphs_isomorphic(p4, star)


def test_json_round_trip():
    g = WeightedGraph(((0, 1), (1, 2), (5, 1)), ((0, 1), (1, 5)), 0)
    again = WeightedGraph.from_json(g.to_json())
    assert again == g
    bare = WeightedGraph.from_json({"vertices": [{"id": 0}, {"id": 1}],
                                    "edges": [[0, 1]]})
    assert bare.weight(0) == 1 and bare.root is None

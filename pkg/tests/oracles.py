"""Independent oracles used by the test suite.

Nothing here may share an algorithm with the code it checks: labeled trees
come from Prufer sequences, isomorphism from backtracking search (no
canonical codes), weighted enumeration from shapes x weight compositions,
and small-graph enumeration from the networkx atlas.
"""

from __future__ import annotations

import heapq
import random
from itertools import permutations

from limbforge.trees import (WeightedGraph, canonicalize_free,
                             canonicalize_rooted, enumerate_rooted, to_graph)


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def all_labeled_trees(n: int):
    """Every labeled tree on vertices 0..n-1, one per Prufer sequence."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return

    def walk(seq):
        if len(seq) == n - 2:
            yield prufer_decode(tuple(seq), n)
            return
        for v in range(n):
            seq.append(v)
            yield from walk(seq)
            seq.pop()

    yield from walk([])


def unit_graph(edges: list[tuple[int, int]], n: int,
               root: int | None = None) -> WeightedGraph:
    return WeightedGraph(tuple((i, 1) for i in range(n)), tuple(edges), root)


def prufer_free_count(n: int) -> int:
    """Free-tree classes on n vertices, by exhaustive labeled generation."""
    seen = set()
    for edges in all_labeled_trees(n):
        seen.add(canonicalize_free(unit_graph(edges, n)))
    return len(seen)


def prufer_rooted_count(n: int) -> int:
    """Rooted-tree classes: every labeled tree rooted at every vertex."""
    seen = set()
    for edges in all_labeled_trees(n):
        g = unit_graph(edges, n)
        for r in range(n):
            seen.add(canonicalize_rooted(g.with_root(r)).code)
    return len(seen)


def compositions(total: int, parts: int):
    """All ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def weighted_codes_by_shapes(total_weight: int, free: bool = False) -> set:
    """Weighted tree classes from shapes x weight compositions, code-deduped."""
    seen = set()
    for m in range(1, total_weight + 1):
        for shape in enumerate_rooted(m):
            g = to_graph(shape)
            ids = g.ids
            for comp in compositions(total_weight, m):
                weighted = WeightedGraph(tuple(zip(ids, comp)), g.edges, g.root)
                if free:
                    seen.add(canonicalize_free(weighted))
                else:
                    seen.add(canonicalize_rooted(weighted).code)
    return seen


def rooted_isomorphic(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """Rooted weighted-tree isomorphism by backtracking, no canonical codes."""
    if g1.n != g2.n or g1.root is None or g2.root is None:
        return False
    adj1, adj2 = g1.adjacency(), g2.adjacency()
    w1, w2 = dict(g1.vertices), dict(g2.vertices)

    def match(u, pu, v, pv):
        if w1[u] != w2[v]:
            return False
        kids1 = [x for x in adj1[u] if x != pu]
        kids2 = [y for y in adj2[v] if y != pv]
        if len(kids1) != len(kids2):
            return False
        for perm in permutations(kids2):
            if all(match(x, u, y, v) for x, y in zip(kids1, perm)):
                return True
        return False

    return match(g1.root, None, g2.root, None)


def random_unit_tree(rng: random.Random, n: int, max_weight: int = 1) -> WeightedGraph:
    verts = tuple((i, rng.randint(1, max_weight)) for i in range(n))
    if n == 1:
        return WeightedGraph(verts, ())
    if n == 2:
        return WeightedGraph(verts, ((0, 1),))
    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    return WeightedGraph(verts, tuple(prufer_decode(seq, n)))


def atlas_graphs(max_n: int = 6) -> list[WeightedGraph]:
    """Every isomorphism class of simple graphs with 1..max_n vertices."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_n:
            break
        relabel = {v: i for i, v in enumerate(sorted(G.nodes()))}
        edges = tuple((relabel[u], relabel[v]) for u, v in G.edges())
        out.append(unit_graph(list(edges), G.number_of_nodes()))
    return out


def with_weights(g: WeightedGraph, rng: random.Random, max_weight: int = 3) -> WeightedGraph:
    verts = tuple((v, rng.randint(1, max_weight)) for v, _ in g.vertices)
    return WeightedGraph(verts, g.edges, g.root)

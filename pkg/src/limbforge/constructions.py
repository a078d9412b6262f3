"""One-vertex extensions, 1-sums, and graphs with many cospectral vertices.

The two-level construction: given a base graph F with c pairwise
cospectral components and m >= 2 vertex sets S_i (one cospectral vertex
per component), extend F once per set (apex v_i over S_i), then extend the
union over {v_1..v_m} (apex v).  The neighbors of the v_i other than v are
pairwise cospectral in the result and in the result minus v; picking the
S_i so that the F - S_i are pairwise non-isomorphic makes vertices from
different extensions non-similar.  Every added vertex gets weight 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import HypothesisViolatedError, TooLargeError, UnknownVertexError
from .spectra import (IntPolynomial, _char_poly_auto, one_sum_char_poly,
                      similarity_orbits)
from .trees import WeightedGraph, graphs_isomorphic

FIXTURE_NAMES = ("schwenk_tree", "cyclic_cospectral", "two_schwenk_seed",
                 "figure_construction")

# Fixed labelings: the 9-vertex exchange tree is the path 1..8 with 9
# pendant on 3; its non-similar cospectral pair is (2, 5).  The cyclic
# fixture is the path 1..6 with 7 adjacent to {1,2} and 8 adjacent to
# {3,4}; its pair is (2, 4).
SCHWENK_COSPECTRAL_PAIR = (2, 5)
CYCLIC_COSPECTRAL_PAIR = (2, 4)
TWO_SCHWENK_SETS = (frozenset({2, 12}), frozenset({5, 12}), frozenset({5, 15}))


def fixture(name: str) -> WeightedGraph:
    """Named graphs used throughout the construction and spectra suites."""
    if name == "schwenk_tree":
        verts = tuple((i, 1) for i in range(1, 10))
        edges = tuple((i, i + 1) for i in range(1, 8)) + ((3, 9),)
        return WeightedGraph(verts, edges)
    if name == "cyclic_cospectral":
        verts = tuple((i, 1) for i in range(1, 9))
        edges = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                 (1, 7), (2, 7), (3, 8), (4, 8))
        return WeightedGraph(verts, edges)
    if name == "two_schwenk_seed":
        one = fixture("schwenk_tree")
        two = one.relabeled({v: v + 10 for v in one.ids})
        return WeightedGraph(one.vertices + two.vertices, one.edges + two.edges)
    if name == "figure_construction":
        graph, _ = k_cospectral_construction(two_schwenk_seed())
        return graph
    raise ValueError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")


def two_schwenk_seed() -> "CospectralSeed":
    """Seed from two copies of the exchange tree; yields 6 cospectral vertices."""
    return CospectralSeed(fixture("two_schwenk_seed"), TWO_SCHWENK_SETS)


# -- elementary operations -----------------------------------------------------


def one_vertex_extension(g: WeightedGraph, attach: Iterable[int]) -> WeightedGraph:
    """Add one weight-1 vertex adjacent exactly to `attach`."""
    targets = sorted(set(attach))
    for v in targets:
        if not g.has_vertex(v):
            raise UnknownVertexError(f"no vertex {v}")
    new = (max(g.ids) + 1) if g.n else 0
    verts = g.vertices + ((new, 1),)
    edges = g.edges + tuple((v, new) for v in targets)
    return WeightedGraph(verts, edges, g.root)


def one_sum_map(h: WeightedGraph, u: int, k: WeightedGraph, v: int,
                merged_weight: int | None = None) -> tuple[WeightedGraph, dict[int, int]]:
    """1-sum identifying u in h with v in k, plus the id map for k's vertices."""
    h.weight(u)
    k.weight(v)
    w = h.weight(u) if merged_weight is None else merged_weight
    if w < 1:
        raise ValueError("merged weight must be >= 1")
    mapping: dict[int, int] = {v: u}
    nxt = max(h.ids) + 1
    for x in k.ids:
        if x != v:
            mapping[x] = nxt
            nxt += 1
    verts = tuple((i, w if i == u else wt) for i, wt in h.vertices)
    verts += tuple((mapping[x], wt) for x, wt in k.vertices if x != v)
    edges = h.edges + tuple((mapping[a], mapping[b]) for a, b in k.edges)
    return WeightedGraph(verts, edges, h.root), mapping


def one_sum(h: WeightedGraph, u: int, k: WeightedGraph, v: int,
            merged_weight: int | None = None) -> WeightedGraph:
    """Graph obtained by identifying u in h with v in k."""
    return one_sum_map(h, u, k, v, merged_weight)[0]


# -- cospectrality helpers -------------------------------------------------------


def _deleted_polys(g: WeightedGraph, vs: Sequence[int]) -> list[IntPolynomial]:
    return [_char_poly_auto(g.delete_vertices([v]), True) for v in vs]


def _all_equal(polys: Sequence[IntPolynomial]) -> bool:
    return all(p == polys[0] for p in polys[1:])


def extension_cospectral_pair(g: WeightedGraph, cospectral: Iterable[int],
                              s1: Iterable[int], s2: Iterable[int],
                              ) -> tuple[WeightedGraph, WeightedGraph]:
    """Extend g over two equal-size subsets of a cospectral set.

    Each subset may pick at most one vertex per component of g; the two
    extensions then share their characteristic polynomial (verified).
    """
    a = sorted(set(cospectral))
    set1, set2 = sorted(set(s1)), sorted(set(s2))
    if not set(set1) <= set(a) or not set(set2) <= set(a):
        raise HypothesisViolatedError("subset", "S1 and S2 must be subsets of the cospectral set")
    if len(set1) != len(set2):
        raise HypothesisViolatedError("equal size", f"|S1|={len(set1)} != |S2|={len(set2)}")
    if not _all_equal(_deleted_polys(g, a)):
        raise HypothesisViolatedError("cospectral set", "vertices are not pairwise cospectral")
    comps = g.components()
    for label, s in (("S1", set1), ("S2", set2)):
        for comp in comps:
            if sum(1 for v in s if comp.has_vertex(v)) > 1:
                raise HypothesisViolatedError(
                    "one per component", f"{label} has two vertices in one component")
    g1 = one_vertex_extension(g, set1)
    g2 = one_vertex_extension(g, set2)
    if _char_poly_auto(g1, True) != _char_poly_auto(g2, True):
        raise ArithmeticError("extensions are not cospectral; internal error")
    return g1, g2


@dataclass(frozen=True)
class CospectralSeed:
    """Base graph with pairwise cospectral components and designated vertex sets.

    Each set picks exactly one vertex per component, all picked vertices are
    pairwise cospectral in the base, and the sets are distinct.  Everything
    is verified at construction.
    """

    base: WeightedGraph
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        comps = self.base.components()
        c = len(comps)
        comp_polys = [_char_poly_auto(comp, True) for comp in comps]
        if not _all_equal(comp_polys):
            raise HypothesisViolatedError("components cospectral",
                                          "component polynomials differ")
        if len(set(sets)) != len(sets):
            raise HypothesisViolatedError("sets distinct", "duplicate vertex sets")
        for s in sets:
            if len(s) != c:
                raise HypothesisViolatedError("set size", f"|S|={len(s)}, need {c}")
            for comp in comps:
                if sum(1 for v in s if comp.has_vertex(v)) != 1:
                    raise HypothesisViolatedError("one per component",
                                                  f"set {sorted(s)} misses a component")
        picked = sorted(set().union(*sets)) if sets else []
        if picked and not _all_equal(_deleted_polys(self.base, picked)):
            raise HypothesisViolatedError("cospectral set",
                                          "designated vertices are not pairwise cospectral")

    @property
    def component_count(self) -> int:
        return len(self.base.components())


def multiset_seed(l: WeightedGraph, labels: Iterable[int], copies: int) -> CospectralSeed:
    """Seed from `copies` disjoint copies of l, sets from label multisets.

    Experimental generalization: the sets realize every size-`copies`
    multiset over the given cospectral labels of the connected graph l, one
    labeled vertex per copy; the designated-vertex count of the resulting
    construction is reported, not asserted.
    """
    labels = sorted(set(labels))
    if not l.is_connected():
        raise HypothesisViolatedError("connected", "the label graph must be connected")
    ids = sorted(l.ids)
    rank = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    verts, edges = [], []
    for i in range(copies):
        verts += [(rank[v] + i * n, w) for v, w in l.vertices]
        edges += [(rank[a] + i * n, rank[b] + i * n) for a, b in l.edges]
    base = WeightedGraph(tuple(verts), tuple(edges))
    sets = tuple(frozenset(rank[label] + i * n for i, label in enumerate(choice))
                 for choice in combinations_with_replacement(labels, copies))
    return CospectralSeed(base, sets)


def k_cospectral_construction(seed: CospectralSeed) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Two-level extension of the seed; returns the graph and its designated set.

    The designated vertices (the set images) are pairwise cospectral in the
    result G and in G minus the top apex, both verified exactly.  When the
    base-minus-set graphs are pairwise non-isomorphic, designated vertices
    coming from different extensions are verified non-similar.
    """
    m = len(seed.sets)
    if m < 2:
        raise HypothesisViolatedError("m >= 2", f"need at least 2 sets, got {m}")
    base = seed.base
    ids = sorted(base.ids)
    rank = {v: i for i, v in enumerate(ids)}
    n = len(ids)

    verts: list[tuple[int, int]] = []
    edges: list[tuple[int, int]] = []
    designated: list[int] = []
    apexes: list[int] = []
    extension_of: dict[int, int] = {}
    for i, s in enumerate(seed.sets):
        offset = i * n
        verts += [(rank[v] + offset, w) for v, w in base.vertices]
        edges += [(rank[a] + offset, rank[b] + offset) for a, b in base.edges]
        apex = m * n + i
        apexes.append(apex)
        verts.append((apex, 1))
        for v in sorted(s):
            edges.append((rank[v] + offset, apex))
            designated.append(rank[v] + offset)
            extension_of[rank[v] + offset] = i
    top = m * n + m
    verts.append((top, 1))
    edges += [(apex, top) for apex in apexes]
    graph = WeightedGraph(tuple(verts), tuple(edges))

    designated = sorted(designated)
    if not _all_equal(_deleted_polys(graph, designated)):
        raise ArithmeticError("designated vertices are not cospectral; internal error")
    without_top = graph.delete_vertices([top])
    if not _all_equal(_deleted_polys(without_top, designated)):
        raise ArithmeticError("designated vertices not cospectral after apex removal")

    remainders = [base.delete_vertices(s) for s in seed.sets]
    distinct = all(not graphs_isomorphic(remainders[i], remainders[j])
                   for i in range(m) for j in range(i + 1, m))
    if distinct:
        try:
            orbits = similarity_orbits(graph)
        except TooLargeError:
            orbits = None
        if orbits is not None:
            for u in designated:
                for w in designated:
                    if (extension_of[u] != extension_of[w]
                            and orbits.are_similar(u, w)):
                        raise ArithmeticError(
                            "cross-extension designated vertices are similar")
    return graph, tuple(designated)


def attach_preserving(g: WeightedGraph, v: int, l: WeightedGraph, r: int,
                      cospectral: Iterable[int],
                      merged_weight: int | None = None) -> WeightedGraph:
    """1-sum g at v with l at r, preserving l's designated cospectral set.

    Requires the designated vertices to be pairwise cospectral in l and in
    l minus r; they are then pairwise cospectral in the result, which is
    verified both through the 1-sum polynomial identity and directly.
    """
    targets = sorted(set(cospectral))
    if r in targets:
        raise HypothesisViolatedError("r outside set", f"r={r} is a designated vertex")
    if not _all_equal(_deleted_polys(l, targets)):
        raise HypothesisViolatedError("cospectral in l",
                                      "designated vertices differ in l")
    l_without_r = l.delete_vertices([r])
    if not _all_equal(_deleted_polys(l_without_r, targets)):
        raise HypothesisViolatedError("cospectral in l minus r",
                                      "designated vertices differ in l - r")
    merged, mapping = one_sum_map(g, v, l, r, merged_weight)
    w = merged.weight(v)
    direct = [_char_poly_auto(merged.delete_vertices([mapping[a]]), True)
              for a in targets]
    for a, poly in zip(targets, direct):
        formula = one_sum_char_poly(g, v, l.delete_vertices([a]), r, w)
        if formula != poly:
            raise ArithmeticError("1-sum identity failed; internal error")
    if not _all_equal(direct):
        raise ArithmeticError("attachment broke cospectrality; internal error")
    return merged

"""Canonical forms and exhaustive enumeration of (weighted) rooted and free trees.

A rooted weighted tree is held in canonical nested form (`CanonicalTree`):
children are sorted by a recursive byte code, so code equality is exactly
isomorphism of rooted weighted trees.  Free trees are canonicalized by
rooting at a centroid (lexicographic minimum over a bicentroid pair).
Enumerators produce one representative per isomorphism class, emitted in
canonical-code order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .errors import MissingRootError, NotATreeError, UnknownVertexError

# A canonical code is an opaque byte string; equality <=> isomorphism,
# bytewise order gives the total order used everywhere.
CanonicalCode = bytes


class CanonicalTree:
    """A rooted tree with positive integer vertex weights, in canonical form."""

    __slots__ = ("weight", "children", "code", "size", "total_weight")

    def __init__(self, weight: int = 1, children: Iterable["CanonicalTree"] = ()):
        if weight < 1:
            raise ValueError(f"vertex weight must be >= 1, got {weight}")
        kids = tuple(sorted(children, key=lambda t: t.code))
        self.weight = weight
        self.children = kids
        self.code = b"(%d" % weight + b"".join(t.code for t in kids) + b")"
        self.size = 1 + sum(t.size for t in kids)
        self.total_weight = weight + sum(t.total_weight for t in kids)

    def __eq__(self, other):
        return isinstance(other, CanonicalTree) and self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __lt__(self, other):
        return self.code < other.code

    def __repr__(self):
        return f"CanonicalTree[{self.code.decode()}]"


def leaf(weight: int = 1) -> CanonicalTree:
    return CanonicalTree(weight)


def root_forest(t: CanonicalTree) -> tuple[CanonicalTree, ...]:
    """Delete the root; return the child subtrees as a multiset."""
    return t.children


@dataclass(frozen=True)
class WeightedGraph:
    """Simple graph with positive integer vertex weights and optional root.

    `vertices` is a tuple of (id, weight) pairs; `edges` holds unordered id
    pairs.  Instances are normalized (sorted, edges as (min, max)) and
    validated on construction.  All values are immutable.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    root: int | None = None

    def __post_init__(self):
        verts = tuple(sorted((int(v), int(w)) for v, w in self.vertices))
        ids = set(v for v, _ in verts)
        if len(ids) != len(verts):
            raise ValueError("duplicate vertex ids")
        for _, w in verts:
            if w < 1:
                raise ValueError(f"vertex weight must be >= 1, got {w}")
        es = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in ids or v not in ids:
                raise UnknownVertexError(f"edge ({u}, {v}) uses an unknown vertex")
            es.append((u, v) if u < v else (v, u))
        edges = tuple(sorted(es))
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        if self.root is not None and self.root not in ids:
            raise UnknownVertexError(f"root {self.root} is not a vertex")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    # -- basic accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertices)

    @property
    def total_weight(self) -> int:
        return sum(w for _, w in self.vertices)

    def weight(self, v: int) -> int:
        w = dict(self.vertices).get(v)
        if w is None:
            raise UnknownVertexError(f"no vertex {v}")
        return w

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v, _ in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def has_vertex(self, v: int) -> bool:
        return any(v == u for u, _ in self.vertices)

    # -- derived graphs -----------------------------------------------------

    def with_root(self, root: int | None) -> "WeightedGraph":
        return WeightedGraph(self.vertices, self.edges, root)

    def delete_vertices(self, drop: Iterable[int]) -> "WeightedGraph":
        gone = set(drop)
        for v in gone:
            if not self.has_vertex(v):
                raise UnknownVertexError(f"no vertex {v}")
        verts = tuple(p for p in self.vertices if p[0] not in gone)
        edges = tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone)
        root = self.root if self.root not in gone else None
        return WeightedGraph(verts, edges, root)

    def delete_edge(self, u: int, v: int) -> "WeightedGraph":
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise UnknownVertexError(f"no edge {e}")
        return WeightedGraph(self.vertices, tuple(x for x in self.edges if x != e), self.root)

    def relabeled(self, mapping: dict[int, int]) -> "WeightedGraph":
        verts = tuple((mapping[v], w) for v, w in self.vertices)
        edges = tuple((mapping[u], mapping[v]) for u, v in self.edges)
        root = mapping[self.root] if self.root is not None else None
        return WeightedGraph(verts, edges, root)

    def components(self) -> list["WeightedGraph"]:
        adj = self.adjacency()
        seen: set[int] = set()
        out = []
        for start, _ in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            verts = tuple(p for p in self.vertices if p[0] in comp)
            edges = tuple(e for e in self.edges if e[0] in comp)
            root = self.root if self.root in comp else None
            out.append(WeightedGraph(verts, edges, root))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def is_forest(self) -> bool:
        return all(c.is_tree() for c in self.components())

    # -- JSON interchange ---------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "vertices": [{"id": v, "weight": w} for v, w in self.vertices],
            "edges": [[u, v] for u, v in self.edges],
        }
        if self.root is not None:
            out["root"] = self.root
        return out

    @classmethod
    def from_json(cls, data: dict) -> "WeightedGraph":
        verts = tuple((item["id"], item.get("weight", 1)) for item in data["vertices"])
        edges = tuple((u, v) for u, v in data.get("edges", []))
        return cls(verts, edges, data.get("root"))


def disjoint_union(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """Disjoint union; g2's ids are shifted above g1's when they collide."""
    ids1 = set(g1.ids)
    if ids1 & set(g2.ids):
        offset = (max(ids1) if ids1 else 0) + 1 - min(g2.ids)
        g2 = g2.relabeled({v: v + offset for v in g2.ids})
    return WeightedGraph(g1.vertices + g2.vertices, g1.edges + g2.edges, g1.root)


# -- canonicalization -------------------------------------------------------


def _require_tree(g: WeightedGraph) -> None:
    if not g.is_tree():
        raise NotATreeError(f"{g.n} vertices, {len(g.edges)} edges, "
                            f"{len(g.components())} component(s)")


def canonicalize_rooted(g: WeightedGraph) -> CanonicalTree:
    """Canonical nested form of a rooted tree-shaped graph."""
    if g.root is None:
        raise MissingRootError("graph has no root")
    _require_tree(g)
    adj = g.adjacency()
    weights = dict(g.vertices)

    def build(v: int, parent: int | None) -> CanonicalTree:
        return CanonicalTree(weights[v],
                             [build(u, v) for u in adj[v] if u != parent])

    return build(g.root, None)


def subtree_at(g: WeightedGraph, v: int, parent: int | None) -> CanonicalTree:
    """Canonical subtree hanging at v, looking away from `parent`."""
    adj = g.adjacency()
    weights = dict(g.vertices)
    if v not in adj:
        raise UnknownVertexError(f"no vertex {v}")

    def build(u: int, p: int | None) -> CanonicalTree:
        return CanonicalTree(weights[u], [build(w, u) for w in adj[u] if w != p])

    return build(v, parent)


def centroids(g: WeightedGraph) -> tuple[int, ...]:
    """Centroid vertex (or bicentroid pair) of a tree, by vertex counts."""
    _require_tree(g)
    adj = g.adjacency()
    n = g.n
    start = g.ids[0]
    order = []
    parent: dict[int, int | None] = {start: None}
    stack = [start]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
                stack.append(w)
    size = {v: 1 for v in g.ids}
    for u in reversed(order):
        if parent[u] is not None:
            size[parent[u]] += size[u]
    best: list[int] = []
    best_val = n + 1
    for v in g.ids:
        heaviest = n - size[v]
        for w in adj[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best_val:
            best_val, best = heaviest, [v]
        elif heaviest == best_val:
            best.append(v)
    return tuple(sorted(best))


def _rooted_code(g: WeightedGraph, root: int, mark: int | None) -> bytes:
    adj = g.adjacency()
    weights = dict(g.vertices)

    def code(v: int, parent: int | None) -> bytes:
        kids = sorted(code(u, v) for u in adj[v] if u != parent)
        star = b"*" if v == mark else b""
        return b"(" + star + b"%d" % weights[v] + b"".join(kids) + b")"

    return code(root, None)


def free_code(g: WeightedGraph, mark: int | None = None) -> CanonicalCode:
    """Isomorphism-invariant code of a free weighted tree.

    Roots at the centroid (weights play no part in centroid location); a
    bicentroid takes the lexicographic minimum over both rootings.  An
    optional marked vertex is distinguished in the code, so marked codes
    decide whether two vertices are related by an automorphism.
    """
    return min(_rooted_code(g, c, mark) for c in centroids(g))


def canonicalize_free(g: WeightedGraph) -> CanonicalCode:
    """Canonical code of a tree-shaped graph, ignoring any root."""
    return free_code(g)


def free_canonical_tree(g: WeightedGraph) -> CanonicalTree:
    """Centroid-rooted canonical representative; its code equals free_code(g)."""
    best = min((canonicalize_rooted(g.with_root(c)) for c in centroids(g)),
               key=lambda t: t.code)
    return best


def to_graph(t: CanonicalTree, first_id: int = 0, rooted: bool = True) -> WeightedGraph:
    """Expand a canonical tree into a concrete graph with ids in DFS order."""
    verts: list[tuple[int, int]] = []
    edges: list[tuple[int, int]] = []

    def place(node: CanonicalTree, parent: int | None) -> None:
        vid = first_id + len(verts)
        verts.append((vid, node.weight))
        if parent is not None:
            edges.append((parent, vid))
        for c in node.children:
            place(c, vid)

    place(t, None)
    return WeightedGraph(tuple(verts), tuple(edges), first_id if rooted else None)


def graphs_isomorphic(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """Isomorphism of weighted graphs: codes for forests, backtracking otherwise."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if sorted(w for _, w in g1.vertices) != sorted(w for _, w in g2.vertices):
        return False
    if g1.is_forest() and g2.is_forest():
        c1 = sorted(free_code(c) for c in g1.components())
        c2 = sorted(free_code(c) for c in g2.components())
        return c1 == c2
    return _iso_backtrack(g1, g2)


def _iso_backtrack(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    adj1, adj2 = g1.adjacency(), g2.adjacency()
    w1, w2 = dict(g1.vertices), dict(g2.vertices)

    def invariant(v, adj, w):
        return (w[v], len(adj[v]), tuple(sorted((w[u], len(adj[u])) for u in adj[v])))

    inv1 = {v: invariant(v, adj1, w1) for v in g1.ids}
    inv2 = {v: invariant(v, adj2, w2) for v in g2.ids}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return False
    order = sorted(g1.ids, key=lambda v: (inv1[v], v))
    used: set[int] = set()
    image: dict[int, int] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        nbrs = set(adj1[u])
        for v in g2.ids:
            if v in used or inv2[v] != inv1[u]:
                continue
            ok = True
            for a in order[:i]:
                if ((a in nbrs) != (image[a] in adj2[v])):
                    ok = False
                    break
            if ok:
                used.add(v)
                image[u] = v
                if extend(i + 1):
                    return True
                used.discard(v)
                del image[u]
        return False

    return extend(0)


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def _rooted_trees(n: int) -> tuple[CanonicalTree, ...]:
    if n == 1:
        return (CanonicalTree(1),)
    out = [CanonicalTree(1, forest) for forest in _forests(n - 1, n - 1)]
    out.sort(key=lambda t: t.code)
    return tuple(out)


def _forests(total: int, max_size: int) -> Iterator[tuple[CanonicalTree, ...]]:
    # Multisets of rooted trees with `total` vertices, components <= max_size.
    # Unique by the (largest component size, its multiset, rest) split.
    if total == 0:
        yield ()
        return
    for s in range(min(total, max_size), 0, -1):
        pool = _rooted_trees(s)
        for k in range(1, total // s + 1):
            for combo in combinations_with_replacement(pool, k):
                for rest in _forests(total - k * s, s - 1):
                    yield combo + rest


@lru_cache(maxsize=None)
def _weighted_rooted_trees(total: int) -> tuple[CanonicalTree, ...]:
    out = []
    for root_w in range(1, total + 1):
        rest = total - root_w
        for forest in _weighted_forests(rest, rest):
            out.append(CanonicalTree(root_w, forest))
    out.sort(key=lambda t: t.code)
    return tuple(out)


def _weighted_forests(total: int, max_w: int) -> Iterator[tuple[CanonicalTree, ...]]:
    if total == 0:
        yield ()
        return
    for s in range(min(total, max_w), 0, -1):
        pool = _weighted_rooted_trees(s)
        for k in range(1, total // s + 1):
            for combo in combinations_with_replacement(pool, k):
                for rest in _weighted_forests(total - k * s, s - 1):
                    yield combo + rest


@lru_cache(maxsize=None)
def _free_trees(n: int) -> tuple[CanonicalTree, ...]:
    reps: dict[bytes, CanonicalTree] = {}
    for t in _rooted_trees(n):
        rep = free_canonical_tree(to_graph(t))
        reps.setdefault(rep.code, rep)
    return tuple(sorted(reps.values(), key=lambda t: t.code))


@lru_cache(maxsize=None)
def _weighted_free_trees(total: int) -> tuple[CanonicalTree, ...]:
    reps: dict[bytes, CanonicalTree] = {}
    for t in _weighted_rooted_trees(total):
        rep = free_canonical_tree(to_graph(t))
        reps.setdefault(rep.code, rep)
    return tuple(sorted(reps.values(), key=lambda t: t.code))


def enumerate_rooted(n: int) -> Iterator[CanonicalTree]:
    """One representative per n-vertex rooted tree class, unit weights."""
    if n < 1:
        raise ValueError("n must be >= 1")
    yield from _rooted_trees(n)


def enumerate_free(n: int) -> Iterator[CanonicalTree]:
    """Free-tree representatives, each rooted at its canonical centroid."""
    if n < 1:
        raise ValueError("n must be >= 1")
    yield from _free_trees(n)


def enumerate_weighted_rooted(total_weight: int) -> Iterator[CanonicalTree]:
    """Weighted rooted trees whose vertex weights sum to total_weight."""
    if total_weight < 1:
        raise ValueError("total_weight must be >= 1")
    yield from _weighted_rooted_trees(total_weight)


def enumerate_weighted_free(total_weight: int) -> Iterator[CanonicalTree]:
    """Weighted free trees of the given total weight, centroid-rooted."""
    if total_weight < 1:
        raise ValueError("total_weight must be >= 1")
    yield from _weighted_free_trees(total_weight)

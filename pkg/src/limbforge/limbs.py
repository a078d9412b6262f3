"""Limb detection, replacement, and brute-force avoidance counting.

A branch at a vertex v is a maximal subtree in which v has degree 1 (v
included, as the branch root); a limb at v is a nonempty collection of
branches at v.  In a rooted host only branches below v count; in a free
host every component of T - v contributes one branch.  The maximal limb at
v is the whole subtree of v and its descendants.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .errors import (BadLimbSizeError, LimbforgeError, NoOccurrenceError,
                     UnknownVertexError)
from .trees import (CanonicalTree, WeightedGraph, enumerate_free,
                    enumerate_rooted, enumerate_weighted_free,
                    enumerate_weighted_rooted, subtree_at)

LIMB = "limb"
MAXIMAL = "maximal"


@dataclass(frozen=True)
class LimbSpec:
    """A forbidden pattern: a rooted weighted tree plus the matching mode."""

    pattern: CanonicalTree
    mode: str = LIMB

    def __post_init__(self):
        if self.mode not in (LIMB, MAXIMAL):
            raise ValueError(f"mode must be {LIMB!r} or {MAXIMAL!r}")
        if self.mode == LIMB and self.pattern.size < 2:
            raise BadLimbSizeError("a limb is a nonempty collection of branches; "
                                   "the pattern needs at least 2 vertices")


@dataclass(frozen=True)
class LimbOccurrence:
    """A limb match at `vertex`, recording branch codes and multiplicities."""

    vertex: int
    matched_branches: tuple[tuple[bytes, int], ...]


def _contains(available: Counter, needed: Counter) -> bool:
    return all(available[code] >= k for code, k in needed.items())


def _branch_components(g: WeightedGraph, v: int) -> list[tuple[int, frozenset[int], CanonicalTree]]:
    """(neighbor, component vertex set, component subtree) per branch at v.

    Rooted host: one entry per child of v.  Free host: one per neighbor.
    """
    adj = g.adjacency()
    if v not in adj:
        raise UnknownVertexError(f"no vertex {v}")
    if g.root is not None:
        parent: dict[int, int | None] = {g.root: None}
        stack = [g.root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    stack.append(w)
        nbrs = [u for u in adj[v] if u != parent[v]]
    else:
        nbrs = list(adj[v])
    out = []
    for u in nbrs:
        comp = {u}
        stack = [u]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b != v and b not in comp:
                    comp.add(b)
                    stack.append(b)
        out.append((u, frozenset(comp), subtree_at(g, u, v)))
    return out


def branches_at(g: WeightedGraph, v: int) -> tuple[CanonicalTree, ...]:
    """Branches at v, each including v as its degree-1 root."""
    wv = g.weight(v)
    return tuple(sorted((CanonicalTree(wv, (sub,))
                         for _, _, sub in _branch_components(g, v)),
                        key=lambda t: t.code))


def has_limb(g: WeightedGraph, spec: LimbSpec, v: int) -> bool:
    """Does the pattern occur at v (as a limb, or as the maximal limb)?"""
    subs = [sub for _, _, sub in _branch_components(g, v)]
    if spec.mode == MAXIMAL:
        return CanonicalTree(g.weight(v), subs) == spec.pattern
    if g.weight(v) != spec.pattern.weight:
        return False
    return _contains(Counter(s.code for s in subs),
                     Counter(c.code for c in spec.pattern.children))


def limb_occurrences(g: WeightedGraph, spec: LimbSpec) -> list[LimbOccurrence]:
    """All vertices carrying the pattern, with matched-branch bookkeeping."""
    out = []
    covered: set[int] = set()
    for v in g.ids:
        comps = _branch_components(g, v)
        subs = [sub for _, _, sub in comps]
        if spec.mode == MAXIMAL:
            if CanonicalTree(g.weight(v), subs) != spec.pattern:
                continue
            vertices = {v}.union(*(c for _, c, _ in comps)) if comps else {v}
            # distinct maximal-limb occurrences can never share a vertex
            if vertices & covered:
                raise LimbforgeError("maximal-limb occurrences overlap")
            covered |= vertices
            used = Counter(s.code for s in subs)
        else:
            if g.weight(v) != spec.pattern.weight:
                continue
            need = Counter(c.code for c in spec.pattern.children)
            if not _contains(Counter(s.code for s in subs), need):
                continue
            used = need
        out.append(LimbOccurrence(v, tuple(sorted(used.items()))))
    return out


def tree_has_limb(t: CanonicalTree, spec: LimbSpec) -> bool:
    """Pattern occurrence anywhere in a rooted host (downward branches only)."""
    if spec.mode == MAXIMAL:
        target = spec.pattern.code

        def walk(u: CanonicalTree) -> bool:
            return u.code == target or any(walk(c) for c in u.children)

        return walk(t)

    need = Counter(c.code for c in spec.pattern.children)
    w = spec.pattern.weight

    def walk(u: CanonicalTree) -> bool:
        if u.weight == w and _contains(Counter(c.code for c in u.children), need):
            return True
        return any(walk(c) for c in u.children)

    return walk(t)


def free_tree_has_limb(t: CanonicalTree, spec: LimbSpec) -> bool:
    """Pattern occurrence in a free host: branches at v are all components of T - v."""
    if spec.mode == MAXIMAL:
        target = spec.pattern
    else:
        need = Counter(c.code for c in spec.pattern.children)
        w = spec.pattern.weight

    def visit(node: CanonicalTree, up: CanonicalTree | None) -> bool:
        subs = list(node.children) + ([up] if up is not None else [])
        if spec.mode == MAXIMAL:
            if CanonicalTree(node.weight, subs) == target:
                return True
        elif node.weight == w and _contains(Counter(s.code for s in subs), need):
            return True
        for i, child in enumerate(node.children):
            others = node.children[:i] + node.children[i + 1:]
            new_up = CanonicalTree(node.weight,
                                   others + ((up,) if up is not None else ()))
            if visit(child, new_up):
                return True
        return False

    return visit(t, None)


def count_avoiding(n: int, spec: LimbSpec, *, weighted: bool = False,
                   free: bool = False) -> int:
    """Exhaustive count of n-vertex (or total-weight-n) trees with no occurrence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if free:
        stream = enumerate_weighted_free(n) if weighted else enumerate_free(n)
        return sum(1 for t in stream if not free_tree_has_limb(t, spec))
    stream = enumerate_weighted_rooted(n) if weighted else enumerate_rooted(n)
    return sum(1 for t in stream if not tree_has_limb(t, spec))


# -- replacement --------------------------------------------------------------


def _instantiate(node: CanonicalTree, attach_to: int, next_id: int,
                 verts: list[tuple[int, int]], edges: list[tuple[int, int]]) -> int:
    vid = next_id
    verts.append((vid, node.weight))
    edges.append((attach_to, vid))
    next_id += 1
    for c in node.children:
        next_id = _instantiate(c, vid, next_id, verts, edges)
    return next_id


def replace_limb(g: WeightedGraph, v: int, old: CanonicalTree,
                 new: CanonicalTree) -> WeightedGraph:
    """Swap one occurrence of `old` (as a limb at v) for `new`.

    The matched branches of `old` are removed and `new`'s branches attached
    at v; v takes `new`'s root weight.
    """
    LimbSpec(old, LIMB)  # validates the pattern shape
    comps = _branch_components(g, v)
    if g.weight(v) != old.weight:
        raise NoOccurrenceError(f"vertex {v} has weight {g.weight(v)}, "
                                f"the limb root has weight {old.weight}")
    need = Counter(c.code for c in old.children)
    avail = Counter(sub.code for _, _, sub in comps)
    if not _contains(avail, need):
        raise NoOccurrenceError(f"limb does not occur at vertex {v}")

    drop: set[int] = set()
    remaining = dict(need)
    for _, comp, sub in comps:
        k = remaining.get(sub.code, 0)
        if k > 0:
            drop |= comp
            remaining[sub.code] = k - 1

    verts = [(u, (new.weight if u == v else w))
             for u, w in g.vertices if u not in drop]
    edges = [e for e in g.edges if e[0] not in drop and e[1] not in drop]
    next_id = max(g.ids) + 1
    for child in new.children:
        next_id = _instantiate(child, v, next_id, verts, edges)
    root = g.root if g.root not in drop else None
    return WeightedGraph(tuple(verts), tuple(edges), root)


def normalize_by_replacement(g: WeightedGraph, old: CanonicalTree,
                             new: CanonicalTree, rng: random.Random | None = None,
                             max_rounds: int | None = None) -> WeightedGraph:
    """Replace every occurrence of `old` by `new` until none remains.

    The result is independent of the processing order; `rng` picks the
    occurrence handled next, which the confluence tests exercise.  A round
    cap guards against non-termination and raises instead of looping.
    """
    if old.size != new.size:
        raise ValueError("replacement patterns must have equal vertex counts")
    if old == new:
        raise ValueError("replacement patterns must be non-isomorphic")
    spec = LimbSpec(old, LIMB)
    if max_rounds is None:
        max_rounds = 20 * g.n + 100
    for _ in range(max_rounds):
        matches = [v for v in g.ids if has_limb(g, spec, v)]
        if not matches:
            return g
        v = rng.choice(matches) if rng is not None else matches[0]
        g = replace_limb(g, v, old, new)
    raise LimbforgeError(f"replacement did not terminate within {max_rounds} rounds")

"""Exact characteristic polynomials and cospectral-vertex machinery.

The weighted characteristic polynomial of a graph with vertex weights w(i)
is det(D(x) - A) where D(x) is diagonal with entries x^{w(i)}; all weights
1 recovers the classical det(xI - A).  Determinants are computed by
fraction-free (Bareiss) elimination over the integer-polynomial ring, with
cofactor expansion kept as an independent oracle and a leaf-recursion fast
path for trees.  Polynomial equality is coefficient-exact everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotACutEdgeError, NotATreeError, TooLargeError, UnknownVertexError
from .trees import WeightedGraph, disjoint_union, free_code


class IntPolynomial:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x_power(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls([1])

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    if d:
                        out[i + j] += c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient self / other, which must be exact over the integers."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        q = [0] * max(len(rem) - len(d) + 1, 0)
        lead = d[-1]
        for k in range(len(rem) - len(d), -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead != 0:
                raise ArithmeticError("polynomial division is not exact")
            f = c // lead
            q[k] = f
            if f:
                for i, di in enumerate(d):
                    rem[k + i] -= f * di
        if any(rem):
            raise ArithmeticError("polynomial division left a remainder")
        return IntPolynomial(q)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "IntPolynomial(0)"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "IntPolynomial(" + " + ".join(terms) + ")"


def det_bareiss(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Fraction-free determinant of a square polynomial matrix."""
    n = len(matrix)
    if n == 0:
        return IntPolynomial.one()
    m = [list(row) for row in matrix]
    sign = 1
    prev = IntPolynomial.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot is None:
                return IntPolynomial.zero()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = IntPolynomial.zero()
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_cofactor(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Cofactor-expansion determinant; the small-matrix oracle."""
    n = len(matrix)
    if n == 0:
        return IntPolynomial.one()
    if n == 1:
        return matrix[0][0]
    total = IntPolynomial.zero()
    for j in range(n):
        if matrix[0][j].is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in matrix[1:]]
        term = matrix[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _char_matrix(g: WeightedGraph, weighted: bool) -> list[list[IntPolynomial]]:
    ids = g.ids
    index = {v: i for i, v in enumerate(ids)}
    weights = dict(g.vertices)
    n = g.n
    m = [[IntPolynomial.zero() for _ in range(n)] for _ in range(n)]
    for v in ids:
        m[index[v]][index[v]] = IntPolynomial.x_power(weights[v] if weighted else 1)
    minus_one = IntPolynomial([-1])
    for u, v in g.edges:
        m[index[u]][index[v]] = minus_one
        m[index[v]][index[u]] = minus_one
    return m


def char_poly(g: WeightedGraph, weighted: bool = False) -> IntPolynomial:
    """det(D(x) - A), with D(x) = diag(x^{w(i)}) or xI in unweighted mode."""
    return det_bareiss(_char_matrix(g, weighted))


def char_poly_cofactor(g: WeightedGraph, weighted: bool = False) -> IntPolynomial:
    return det_cofactor(_char_matrix(g, weighted))


def char_poly_tree(g: WeightedGraph, weighted: bool = False) -> IntPolynomial:
    """Tree fast path via repeated cut-edge deletion; equals char_poly exactly."""
    if not g.is_tree():
        raise NotATreeError("char_poly_tree needs a tree")
    adj = g.adjacency()
    weights = dict(g.vertices)
    root = g.root if g.root is not None else g.ids[0]

    def pq(v: int, parent: int | None) -> tuple[IntPolynomial, IntPolynomial]:
        # p = polynomial of the subtree at v, q = subtree with v deleted
        kids = [u for u in adj[v] if u != parent]
        pcs, qcs = [], []
        for u in kids:
            pu, qu = pq(u, v)
            pcs.append(pu)
            qcs.append(qu)
        k = len(kids)
        prefix = [IntPolynomial.one()] * (k + 1)
        for i in range(k):
            prefix[i + 1] = prefix[i] * pcs[i]
        suffix = [IntPolynomial.one()] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] * pcs[i]
        q = prefix[k]
        p = IntPolynomial.x_power(weights[v] if weighted else 1) * q
        for i in range(k):
            p = p - qcs[i] * (prefix[i] * suffix[i + 1])
        return p, q

    return pq(root, None)[0]


_CP_CACHE: dict[tuple[bool, bytes], IntPolynomial] = {}


def _char_poly_auto(g: WeightedGraph, weighted: bool) -> IntPolynomial:
    """Product over components, trees via the fast path with memoization."""
    result = IntPolynomial.one()
    for comp in g.components():
        if comp.is_tree():
            key = (weighted, free_code(comp))
            poly = _CP_CACHE.get(key)
            if poly is None:
                poly = char_poly_tree(comp, weighted)
                _CP_CACHE[key] = poly
        else:
            poly = char_poly(comp, weighted)
        result = result * poly
    return result


# -- identity checks ----------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    lhs: IntPolynomial
    rhs: IntPolynomial

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_union_identity(g1: WeightedGraph, g2: WeightedGraph,
                         weighted: bool = False) -> IdentityCheck:
    """phi(G u H) versus phi(G) * phi(H)."""
    lhs = char_poly(disjoint_union(g1, g2), weighted)
    rhs = char_poly(g1, weighted) * char_poly(g2, weighted)
    return IdentityCheck(lhs, rhs)


def check_cut_edge_identity(g: WeightedGraph, e: tuple[int, int],
                            weighted: bool = False) -> IdentityCheck:
    """phi(G) versus phi(G - e) - phi(G - {u, v}) for a bridge e = uv."""
    u, v = e
    edge = (u, v) if u < v else (v, u)
    if edge not in g.edges:
        raise NotACutEdgeError(f"no edge {edge}")
    without = g.delete_edge(u, v)
    comp_u = next(c for c in without.components() if c.has_vertex(u))
    if comp_u.has_vertex(v):
        raise NotACutEdgeError(f"edge {edge} is not a bridge")
    lhs = char_poly(g, weighted)
    rhs = char_poly(without, weighted) - char_poly(g.delete_vertices([u, v]), weighted)
    return IdentityCheck(lhs, rhs)


def check_derivative_identity(g: WeightedGraph, weighted: bool = False) -> IdentityCheck:
    """d/dx phi(G) versus sum_i w(i) x^{w(i)-1} phi(G - i)."""
    lhs = char_poly(g, weighted).derivative()
    rhs = IntPolynomial.zero()
    for v, w in g.vertices:
        term = char_poly(g.delete_vertices([v]), weighted)
        if weighted:
            term = IntPolynomial.x_power(w - 1, w) * term
        rhs = rhs + term
    return IdentityCheck(lhs, rhs)


def one_sum_char_poly(h: WeightedGraph, u: int, k: WeightedGraph, v: int,
                      merged_weight: int | None = None) -> IntPolynomial:
    """Weighted polynomial of the 1-sum of h at u with k at v, by formula.

    phi(W) = phi(W1-v) phi(W2) + phi(W1) phi(W2-v)
             + (x^w - x^{w1} - x^{w2}) phi(W1-v) phi(W2-v),
    where w is the merged vertex's weight (defaults to u's weight in h).
    All weights 1 gives the classical 1-sum identity.
    """
    w1 = h.weight(u)
    w2 = k.weight(v)
    w = w1 if merged_weight is None else merged_weight
    if w < 1:
        raise ValueError("merged weight must be >= 1")
    h_del = _char_poly_auto(h.delete_vertices([u]), True)
    k_del = _char_poly_auto(k.delete_vertices([v]), True)
    h_full = _char_poly_auto(h, True)
    k_full = _char_poly_auto(k, True)
    cross = IntPolynomial.x_power(w) - IntPolynomial.x_power(w1) - IntPolynomial.x_power(w2)
    return h_del * k_full + h_full * k_del + cross * (h_del * k_del)


# -- cospectral vertices and similarity ---------------------------------------


@dataclass(frozen=True)
class CospectralClasses:
    """Vertex partition by deleted-vertex polynomial, with the shared polynomial."""

    classes: tuple[tuple[tuple[int, ...], IntPolynomial], ...]

    def class_of(self, v: int) -> tuple[int, ...]:
        for members, _ in self.classes:
            if v in members:
                return members
        raise UnknownVertexError(f"no vertex {v}")

    def are_cospectral(self, u: int, v: int) -> bool:
        return v in self.class_of(u)

    @property
    def partition(self) -> tuple[tuple[int, ...], ...]:
        return tuple(members for members, _ in self.classes)


def cospectral_vertices(g: WeightedGraph, weighted: bool = False) -> CospectralClasses:
    """Group vertices u, v with phi(G - u) = phi(G - v)."""
    buckets: dict[IntPolynomial, list[int]] = {}
    for v in g.ids:
        poly = _char_poly_auto(g.delete_vertices([v]), weighted)
        buckets.setdefault(poly, []).append(v)
    classes = sorted(((tuple(sorted(vs)), poly) for poly, vs in buckets.items()),
                     key=lambda item: item[0])
    return CospectralClasses(tuple(classes))


@dataclass(frozen=True)
class SimilarityOrbits:
    """Vertex partition under the automorphism group."""

    orbits: tuple[tuple[int, ...], ...]

    def orbit_of(self, v: int) -> tuple[int, ...]:
        for orbit in self.orbits:
            if v in orbit:
                return orbit
        raise UnknownVertexError(f"no vertex {v}")

    def are_similar(self, u: int, v: int) -> bool:
        return v in self.orbit_of(u)


def similarity_orbits(g: WeightedGraph) -> SimilarityOrbits:
    """Automorphism orbits: marked canonical codes for forests, search otherwise."""
    if g.is_forest():
        comps = g.components()
        plain = [free_code(c) for c in comps]
        buckets: dict[tuple, list[int]] = {}
        for i, comp in enumerate(comps):
            others = tuple(sorted(plain[:i] + plain[i + 1:]))
            for v in comp.ids:
                key = (free_code(comp, mark=v), others)
                buckets.setdefault(key, []).append(v)
        orbits = sorted(tuple(sorted(vs)) for vs in buckets.values())
        return SimilarityOrbits(tuple(orbits))
    if g.n > 30:
        raise TooLargeError(f"{g.n} vertices; automorphism search is capped at 30")
    return SimilarityOrbits(_orbits_by_search(g))


def _orbits_by_search(g: WeightedGraph) -> tuple[tuple[int, ...], ...]:
    ids = list(g.ids)
    adj = g.adjacency()
    weights = dict(g.vertices)

    def color(v: int):
        return (weights[v], len(adj[v]),
                tuple(sorted((weights[u], len(adj[u])) for u in adj[v])))

    colors = {v: color(v) for v in ids}
    parent = {v: v for v in ids}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    order = sorted(ids, key=lambda v: (colors[v], v))
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> None:
        if i == len(order):
            for a, b in image.items():
                union(a, b)
            return
        u = order[i]
        for v in ids:
            if v in used or colors[v] != colors[u]:
                continue
            ok = True
            for a in order[:i]:
                if ((a in adj[u]) != (image[a] in adj[v])):
                    ok = False
                    break
            if ok:
                image[u] = v
                used.add(v)
                extend(i + 1)
                used.discard(v)
                del image[u]

    extend(0)
    groups: dict[int, list[int]] = {}
    for v in ids:
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(vs)) for vs in groups.values()))


def schwenk_mate(t: WeightedGraph) -> WeightedGraph | None:
    """Cospectral mate of a free tree by swapping the 9-vertex exchange limb.

    Looks for the classic 9-vertex tree, rooted at one of its two special
    cospectral vertices, occurring as a limb (all limb weights 1, host
    vertex weight 1).  When found, that limb is replaced by the rooting at
    the other special vertex; the result has the same weighted
    characteristic polynomial.  Returns None when the limb is absent.
    """
    from .constructions import SCHWENK_COSPECTRAL_PAIR, fixture
    from .limbs import LIMB, LimbSpec, has_limb, replace_limb
    from .trees import canonicalize_rooted

    base = fixture("schwenk_tree")
    a, b = SCHWENK_COSPECTRAL_PAIR
    limb_a = canonicalize_rooted(base.with_root(a))
    limb_b = canonicalize_rooted(base.with_root(b))
    host = t.with_root(None)
    spec = LimbSpec(limb_a, LIMB)
    for v in host.ids:
        if host.weight(v) != 1:
            continue
        if has_limb(host, spec, v):
            mate = replace_limb(host, v, limb_a, limb_b)
            if _char_poly_auto(mate, True) != _char_poly_auto(host, True):
                raise ArithmeticError("limb swap changed the polynomial")
            return mate
    return None

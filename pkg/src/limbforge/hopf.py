"""Coproduct of the rooted-tree Hopf algebra, on weighted rooted trees.

Delta(t) sums over antichains S of V(t): the left tensor factor is the
forest of full subtrees rooted in S, the right factor is t with those
subtrees removed.  S empty gives 1 (x) t; S = {root} gives t (x) 1.  The
coproduct extends multiplicatively to forests, the counit sends every
nonempty tree to 0, and total weight is conserved term by term.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .trees import CanonicalTree

# A vertex of a CanonicalTree is addressed by its path of child indices
# from the root; () is the root itself.
Path = tuple[int, ...]
Forest = tuple[CanonicalTree, ...]


@dataclass(frozen=True)
class ForestTerm:
    """One tensor summand: coefficient * (left forest) (x) (right tree or unit)."""

    coefficient: int
    left: Forest
    right: CanonicalTree | None


def antichains(t: CanonicalTree) -> Iterator[frozenset[Path]]:
    """All vertex sets with no ancestor-descendant pair, the empty set included."""

    def below(node: CanonicalTree, path: Path) -> list[frozenset[Path]]:
        child_options = [below(c, path + (i,)) for i, c in enumerate(node.children)]
        out = [frozenset().union(*combo) if combo else frozenset()
               for combo in product(*child_options)]
        out.append(frozenset({path}))
        return out

    yield from below(t, ())


def subtree_at_path(t: CanonicalTree, path: Path) -> CanonicalTree:
    node = t
    for i in path:
        node = node.children[i]
    return node


def _without(node: CanonicalTree, cut: frozenset[Path], path: Path) -> CanonicalTree | None:
    if path in cut:
        return None
    kept = []
    for i, c in enumerate(node.children):
        sub = _without(c, cut, path + (i,))
        if sub is not None:
            kept.append(sub)
    return CanonicalTree(node.weight, kept)


def _sorted_forest(trees) -> Forest:
    return tuple(sorted(trees, key=lambda t: t.code))


def coproduct(t: CanonicalTree) -> tuple[ForestTerm, ...]:
    """Delta(t) as merged terms; equal (left, right) pairs sum their coefficients."""
    counts: Counter[tuple[Forest, CanonicalTree | None]] = Counter()
    for cut in antichains(t):
        left = _sorted_forest(subtree_at_path(t, p) for p in cut)
        right = _without(t, cut, ())
        counts[(left, right)] += 1
    terms = [ForestTerm(c, left, right) for (left, right), c in counts.items() if c]
    terms.sort(key=lambda term: (tuple(x.code for x in term.left),
                                 term.right.code if term.right else b""))
    return tuple(terms)


def _forest_coproduct(forest: Forest) -> Counter:
    """Delta on a forest (multiplicative): Counter of (left forest, right forest)."""
    acc: Counter[tuple[Forest, Forest]] = Counter({((), ()): 1})
    for tree in forest:
        nxt: Counter[tuple[Forest, Forest]] = Counter()
        for (la, ra), ca in acc.items():
            for term in coproduct(tree):
                left = _sorted_forest(la + term.left)
                right = _sorted_forest(ra + ((term.right,) if term.right else ()))
                nxt[(left, right)] += ca * term.coefficient
        acc = nxt
    return acc


def check_coassociativity(t: CanonicalTree) -> bool:
    """(Delta (x) id) Delta(t) == (id (x) Delta) Delta(t), as triple multisets."""

    def key(forest: Forest) -> tuple[bytes, ...]:
        return tuple(x.code for x in forest)

    lhs: Counter[tuple] = Counter()
    rhs: Counter[tuple] = Counter()
    for term in coproduct(t):
        right_forest: Forest = (term.right,) if term.right else ()
        for (la, lb), c in _forest_coproduct(term.left).items():
            lhs[(key(la), key(lb), key(right_forest))] += term.coefficient * c
        for (ra, rb), c in _forest_coproduct(right_forest).items():
            rhs[(key(term.left), key(ra), key(rb))] += term.coefficient * c
    return lhs == rhs


def check_counit(t: CanonicalTree) -> bool:
    """Applying the counit to either tensor leg must give back t with coefficient 1."""
    left_unit: Counter[bytes] = Counter()
    right_unit: Counter[bytes] = Counter()
    for term in coproduct(t):
        if not term.left:
            right_unit[term.right.code if term.right else b""] += term.coefficient
        if term.right is None:
            if len(term.left) == 1:
                left_unit[term.left[0].code] += term.coefficient
            else:
                return False
    return left_unit == Counter({t.code: 1}) and right_unit == Counter({t.code: 1})


def term_conserves_weight(t: CanonicalTree, term: ForestTerm) -> bool:
    left = sum(x.total_weight for x in term.left)
    right = term.right.total_weight if term.right else 0
    return left + right == t.total_weight

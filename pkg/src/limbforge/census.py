"""Exhaustive census experiments over tree families.

Fractions are exact and rows are produced one size at a time, so long
enumerations stay observable.  The census reports trends only; no
asymptotic claim is asserted here.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import TooLargeError
from .limbs import LimbSpec, free_tree_has_limb, tree_has_limb
from .spectra import cospectral_vertices, schwenk_mate
from .trees import (CanonicalTree, enumerate_free, enumerate_rooted,
                    enumerate_weighted_free, enumerate_weighted_rooted,
                    to_graph)

KINDS = ("free", "rooted", "weighted_free", "weighted_rooted")
PROPERTIES = ("has_limb", "has_cospectral_mate", "has_k_cospectral_vertices")

_SIZE_CAP = {"free": 16, "rooted": 16, "weighted_free": 10, "weighted_rooted": 10}


def worker_cap() -> int:
    """Parallelism cap from LIMBFORGE_THREADS; defaults to the machine size."""
    raw = os.environ.get("LIMBFORGE_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n >= 1 else (os.cpu_count() or 1)


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    hits: int
    property: str
    fraction: Fraction

    def to_json(self) -> dict:
        return {"n": self.n, "total": self.total, "hits": self.hits,
                "property": self.property,
                "fraction": f"{self.fraction.numerator}/{self.fraction.denominator}"}


def _stream(kind: str, n: int) -> Iterator[CanonicalTree]:
    if kind == "free":
        return enumerate_free(n)
    if kind == "rooted":
        return enumerate_rooted(n)
    if kind == "weighted_free":
        return enumerate_weighted_free(n)
    if kind == "weighted_rooted":
        return enumerate_weighted_rooted(n)
    raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")


def census(property: str, kind: str = "free", n_max: int = 12, n_min: int = 1,
           limb: LimbSpec | None = None, k: int = 2) -> Iterator[CensusRow]:
    """Fraction of trees of each size with the property, one row per size."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")
    if property not in PROPERTIES:
        raise ValueError(f"unknown property {property!r}; choose from {PROPERTIES}")
    if n_max > _SIZE_CAP[kind]:
        raise TooLargeError(f"kind {kind!r} is capped at n <= {_SIZE_CAP[kind]}")
    if property == "has_limb" and limb is None:
        raise ValueError("property 'has_limb' needs a limb spec")
    if property == "has_cospectral_mate" and kind != "free":
        raise ValueError("the mate census runs over free trees")
    weighted = kind.startswith("weighted")
    free = "free" in kind

    for n in range(n_min, n_max + 1):
        total = 0
        hits = 0
        for t in _stream(kind, n):
            total += 1
            if property == "has_limb":
                found = (free_tree_has_limb(t, limb) if free
                         else tree_has_limb(t, limb))
            elif property == "has_cospectral_mate":
                found = schwenk_mate(to_graph(t, rooted=False)) is not None
            else:
                classes = cospectral_vertices(to_graph(t, rooted=False), weighted)
                found = any(len(members) >= k for members in classes.partition)
            if found:
                hits += 1
        yield CensusRow(n, total, hits, property, Fraction(hits, max(total, 1)))

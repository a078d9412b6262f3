"""Cross-validation suite behind the `verify` CLI command.

Every identity and oracle equivalence the package relies on is re-checked
here at desk scale, one pass/fail line per check.  Output is deterministic:
fixed seeds, fixed case order.  The pytest suite runs the same checks at
full scale; this command is the quick self-contained entry point.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor

from . import constructions, hopf, limbs, series, spectra, trees
from .census import worker_cap

ROOTED_COUNTS = (1, 1, 2, 4, 9, 20, 48, 115, 286, 719)


def _random_tree(rng: random.Random, n: int, max_weight: int = 1) -> trees.WeightedGraph:
    verts = tuple((i, rng.randint(1, max_weight)) for i in range(n))
    if n == 1:
        return trees.WeightedGraph(verts, ())
    if n == 2:
        return trees.WeightedGraph(verts, ((0, 1),))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return trees.WeightedGraph(verts, tuple(_prufer_edges(seq, n)))


def _prufer_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


# -- individual checks ---------------------------------------------------------


def check_rooted_counts() -> str:
    t = series.series_rooted(10)
    for n, expect in enumerate(ROOTED_COUNTS, start=1):
        assert sum(1 for _ in trees.enumerate_rooted(n)) == expect
        assert t[n] == expect
    return f"counts 1..10 = {ROOTED_COUNTS}"


def check_weighted_rooted_counts() -> str:
    tw = series.series_weighted_rooted(7)
    got = [sum(1 for _ in trees.enumerate_weighted_rooted(w)) for w in range(1, 8)]
    assert got == [int(tw[w]) for w in range(1, 8)]
    return f"counts 1..7 = {tuple(got)}"


def check_weighted_free_counts() -> str:
    wf = series.series_weighted_free(7)
    got = [sum(1 for _ in trees.enumerate_weighted_free(w)) for w in range(1, 8)]
    assert got == [int(wf[w]) for w in range(1, 8)]
    return f"counts 1..7 = {tuple(got)}"


def _invariance(mode: str) -> str:
    for ell in (3, 4):
        patterns = list(trees.enumerate_rooted(ell))
        for n in range(1, 8):
            counts = {limbs.count_avoiding(n, limbs.LimbSpec(p, mode))
                      for p in patterns}
            assert len(counts) == 1, f"l={ell}, n={n}: {counts}"
    return "all pattern pairs agree, l in {3,4}, n <= 7"


def check_limb_invariance() -> str:
    return _invariance(limbs.LIMB)


def check_maximal_invariance() -> str:
    return _invariance(limbs.MAXIMAL)


def check_avoid_series_rooted() -> str:
    for ell in (3, 4):
        s = series.series_avoid_limb_rooted(ell, 7)
        star = trees.CanonicalTree(1, [trees.leaf()] * (ell - 1))
        for n in range(1, 8):
            assert s[n] == limbs.count_avoiding(n, limbs.LimbSpec(star, limbs.LIMB))
    return ("exponential form confirmed against brute force "
            "(the exp-free variant would already fail at n = 4)")


def check_avoid_series_weighted() -> str:
    s = series.series_avoid_limb_weighted(3, 7)
    for pattern in trees.enumerate_weighted_rooted(3):
        if pattern.size < 2:
            continue
        spec = limbs.LimbSpec(pattern, limbs.LIMB)
        for n in range(1, 8):
            assert s[n] == limbs.count_avoiding(n, spec, weighted=True)
    return "all weight-3 patterns match the series, n <= 7"


def check_avoid_series_maximal() -> str:
    for ell in (2, 3):
        s = series.series_avoid_maximal_limb(ell, 7)
        for pattern in trees.enumerate_rooted(ell):
            spec = limbs.LimbSpec(pattern, limbs.MAXIMAL)
            for n in range(1, 8):
                assert s[n] == limbs.count_avoiding(n, spec)
    return "l in {2,3}, all patterns, n <= 7"


def check_avoid_series_weighted_free() -> str:
    s = series.series_avoid_limb_weighted_free(3, 7)
    for pattern in trees.enumerate_weighted_rooted(3):
        if pattern.size < 2:
            continue
        spec = limbs.LimbSpec(pattern, limbs.LIMB)
        for n in range(1, 8):
            assert s[n] == limbs.count_avoiding(n, spec, weighted=True, free=True)
    return "all weight-3 patterns match the series, n <= 7"


def _identity_sample() -> list[trees.WeightedGraph]:
    rng = random.Random(7)
    sample = [_random_tree(rng, n, max_weight=3) for n in range(1, 7) for _ in range(3)]
    sample.append(constructions.fixture("cyclic_cospectral"))
    return sample


def check_union_identity() -> str:
    sample = _identity_sample()
    for g1, g2 in zip(sample, reversed(sample)):
        for weighted in (False, True):
            assert spectra.check_union_identity(g1, g2, weighted).holds
    return f"{len(sample)} graph pairs, both modes"


def check_cut_edge_identity() -> str:
    count = 0
    for g in _identity_sample():
        if not g.is_tree():
            continue
        for e in g.edges:
            for weighted in (False, True):
                assert spectra.check_cut_edge_identity(g, e, weighted).holds
            count += 1
    return f"{count} bridges, both modes"


def check_derivative_identity() -> str:
    sample = _identity_sample()
    for g in sample:
        for weighted in (False, True):
            assert spectra.check_derivative_identity(g, weighted).holds
    return f"{len(sample)} graphs, both modes"


def _one_sum_suite(max_weight: int) -> int:
    rng = random.Random(11 + max_weight)
    cases = 0
    for _ in range(100):
        h = _random_tree(rng, rng.randint(1, 6), max_weight)
        k = _random_tree(rng, rng.randint(1, 6), max_weight)
        u = rng.choice(h.ids)
        v = rng.choice(k.ids)
        w = rng.randint(1, max_weight)
        merged = constructions.one_sum(h, u, k, v, w)
        formula = spectra.one_sum_char_poly(h, u, k, v, w)
        assert formula == spectra.char_poly(merged, weighted=True)
        cases += 1
    return cases


def check_one_sum_unweighted() -> str:
    return f"{_one_sum_suite(1)} random 1-sums"


def check_one_sum_weighted() -> str:
    return f"{_one_sum_suite(3)} random weighted 1-sums"


def _fixture_pair(name: str, pair: tuple[int, int]) -> str:
    g = constructions.fixture(name)
    a, b = pair
    classes = spectra.cospectral_vertices(g)
    assert classes.are_cospectral(a, b)
    orbits = spectra.similarity_orbits(g)
    assert not orbits.are_similar(a, b)
    return f"vertices {a} and {b}: cospectral, not similar"


def check_schwenk_fixture() -> str:
    return _fixture_pair("schwenk_tree", constructions.SCHWENK_COSPECTRAL_PAIR)


def check_cyclic_fixture() -> str:
    return _fixture_pair("cyclic_cospectral", constructions.CYCLIC_COSPECTRAL_PAIR)


def check_two_level_construction() -> str:
    graph, designated = constructions.k_cospectral_construction(
        constructions.two_schwenk_seed())
    assert graph.is_tree()
    assert graph.n == 58
    assert len(designated) == 6
    orbits = spectra.similarity_orbits(graph)
    orbit_reps = {tuple(orbits.orbit_of(v)) for v in designated}
    assert len(orbit_reps) >= 4
    return f"58-vertex tree, 6 cospectral vertices in {len(orbit_reps)} orbits"


def check_attachment() -> str:
    graph, designated = constructions.k_cospectral_construction(
        constructions.two_schwenk_seed())
    top = max(graph.ids)
    rng = random.Random(23)
    for _ in range(20):
        host = _random_tree(rng, rng.randint(1, 6), max_weight=2)
        v = rng.choice(host.ids)
        constructions.attach_preserving(host, v, graph, top, designated)
    return "20 random hosts keep the designated set cospectral"


def check_radius_gap() -> str:
    order = 30
    t_w = series.estimate_radius(series.series_weighted_rooted(order)).value
    t = series.estimate_radius(series.series_rooted(order)).value
    for ell in (3, 4, 5):
        s_w = series.estimate_radius(series.series_avoid_limb_weighted(ell, order)).value
        s_m = series.estimate_radius(series.series_avoid_maximal_limb(ell, order),
                                     ell=ell).value
        assert s_w > t_w
        assert s_m > t
    t50 = series.estimate_radius(series.series_rooted(50)).value
    t200 = series.estimate_radius(series.series_rooted(200)).value
    assert t > t200 > 0.3383219  # decreases toward the true radius from above
    return (f"avoidance radius beats the full radius, l in 3..5; "
            f"truncated T root {t50:.4f} at N=50, {t200:.4f} at N=200, "
            f"limit 0.33832")


def check_dominating_bound() -> str:
    f = series.series_dominating_bound(30)
    tw = series.series_weighted_rooted(30)
    assert (f[1], f[2], f[3]) == (1, 2, 8)
    for n in range(1, 31):
        assert tw[n] <= f[n]
    return "T_n <= f_n termwise for n <= 30"


def check_hopf() -> str:
    rng = random.Random(5)
    pool = [t for n in range(1, 6) for t in trees.enumerate_rooted(n)]
    pool += rng.sample(list(trees.enumerate_weighted_rooted(5)), 10)
    for t in pool:
        assert hopf.check_counit(t)
        assert hopf.check_coassociativity(t)
        for term in hopf.coproduct(t):
            assert hopf.term_conserves_weight(t, term)
    return f"counit, coassociativity, grading on {len(pool)} trees"


def check_multiset_experiment() -> str:
    # Reported, not asserted: sets as label multisets over c copies.
    base = constructions.fixture("schwenk_tree")
    labels = constructions.SCHWENK_COSPECTRAL_PAIR
    c, k = 2, len(labels)
    seed = constructions.multiset_seed(base, labels, c)
    graph, designated = constructions.k_cospectral_construction(seed)
    from math import comb
    predicted = c * comb(k + c - 1, c)
    return (f"c={c}: {len(designated)} designated cospectral vertices, "
            f"c*C(k+c-1,c) = {predicted}")


CHECKS = (
    ("rooted-tree counts, enumeration vs series", check_rooted_counts),
    ("weighted rooted counts, enumeration vs series", check_weighted_rooted_counts),
    ("weighted free counts, dissimilarity identity", check_weighted_free_counts),
    ("limb-replacement count invariance, limb mode", check_limb_invariance),
    ("limb-replacement count invariance, maximal mode", check_maximal_invariance),
    ("avoidance series vs brute force, rooted limb", check_avoid_series_rooted),
    ("avoidance series vs brute force, weighted limb", check_avoid_series_weighted),
    ("avoidance series vs brute force, maximal limb", check_avoid_series_maximal),
    ("avoidance series vs brute force, weighted free limb", check_avoid_series_weighted_free),
    ("union product identity", check_union_identity),
    ("cut-edge deletion identity", check_cut_edge_identity),
    ("derivative sum identity", check_derivative_identity),
    ("1-sum identity, unweighted", check_one_sum_unweighted),
    ("1-sum identity, weighted", check_one_sum_weighted),
    ("exchange-tree fixture", check_schwenk_fixture),
    ("cyclic fixture", check_cyclic_fixture),
    ("two-level cospectral construction", check_two_level_construction),
    ("attachment preserves cospectral sets", check_attachment),
    ("radius gap for avoidance series", check_radius_gap),
    ("dominating bound on weighted counts", check_dominating_bound),
    ("coproduct counit, coassociativity, grading", check_hopf),
    ("multiset-set generalization (reported)", check_multiset_experiment),
)


def run_verify(out=None) -> bool:
    """Run every check; print one line each; True when all pass."""
    import sys

    out = out or sys.stdout
    workers = worker_cap()

    def run(item):
        name, fn = item
        try:
            return name, True, fn()
        except Exception as exc:  # noqa: BLE001 - a failing check must not stop the table
            return name, False, f"{type(exc).__name__}: {exc}"

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, CHECKS))
    else:
        results = [run(item) for item in CHECKS]

    ok = True
    for name, passed, detail in results:
        status = "PASS" if passed else "FAIL"
        ok &= passed
        print(f"{name}: {status} ({detail})", file=out)
    print(f"{'all checks passed' if ok else 'FAILURES above'}", file=out)
    return ok

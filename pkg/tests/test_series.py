"""Series fixed points against enumeration oracles and each other."""

from fractions import Fraction

import pytest
from limbforge.errors import (BadLimbSizeError, NonPositiveError,
                              NonzeroConstantTermError, NoRootError)
from limbforge.limbs import LIMB, MAXIMAL, LimbSpec, count_avoiding
from limbforge.series import (RationalSeries, estimate_radius, mset_exp,
                              series_avoid_limb_rooted,
                              series_avoid_limb_weighted,
                              series_avoid_limb_weighted_free,
                              series_avoid_maximal_limb,
                              series_dominating_bound, series_rooted,
                              series_weighted_free, series_weighted_rooted)
from limbforge.trees import (CanonicalTree, enumerate_rooted,
                             enumerate_weighted_free,
                             enumerate_weighted_rooted, leaf)

ROOTED_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def star_pattern(ell: int) -> CanonicalTree:
    return CanonicalTree(1, [leaf()] * (ell - 1))


def test_mset_exp_of_zero():
    assert mset_exp(RationalSeries.zero(6)).coeffs == (1, 0, 0, 0, 0, 0, 0)


def test_mset_exp_single_atom():
    s = RationalSeries.from_ints([0, 1], order=6)
    assert mset_exp(s).coeffs == (1,) * 7


def test_mset_exp_two_atoms():
    s = RationalSeries.from_ints([0, 1, 1], order=6)
    assert mset_exp(s).coeffs == (1, 1, 2, 2, 3, 3, 4)


def test_mset_exp_rejects_constant_term():
    with pytest.raises(NonzeroConstantTermError):
        mset_exp(RationalSeries.from_ints([1, 1], order=3))


def test_series_rooted_coefficients():
    t = series_rooted(10)
    assert t[0] == 0 and t[2] == 1
    assert [int(t[n]) for n in range(1, 11)] == ROOTED_COUNTS


def test_series_rooted_fixed_point_consistency():
    t = series_rooted(15)
    rhs = mset_exp(t)
    for n in range(1, 16):
        assert t[n] == rhs[n - 1]  # T = x * exp-transform(T)


def test_series_weighted_rooted_vs_enumeration():
    tw = series_weighted_rooted(8)
    assert [int(tw[w]) for w in (1, 2, 3)] == [1, 2, 5]
    for w in range(1, 9):
        assert tw[w] == sum(1 for _ in enumerate_weighted_rooted(w))


def test_series_weighted_rooted_fixed_point_consistency():
    tw = series_weighted_rooted(12)
    e = mset_exp(tw)
    for n in range(1, 13):
        assert tw[n] == sum(e[n - j] for j in range(1, n + 1))


def test_series_weighted_free_vs_enumeration():
    w = series_weighted_free(8)
    assert [int(w[k]) for k in (1, 2, 3)] == [1, 2, 3]
    for k in range(1, 9):
        assert w[k] == sum(1 for _ in enumerate_weighted_free(k))


def test_avoid_limb_rooted_smallest_size():
    s = series_avoid_limb_rooted(2, 8)
    assert [int(c) for c in s.coeffs] == [0, 1, 0, 0, 0, 0, 0, 0, 0]


def test_avoid_limb_rooted_vs_brute_force():
    for ell in (3, 4):
        s = series_avoid_limb_rooted(ell, 8)
        spec = LimbSpec(star_pattern(ell), LIMB)
        for n in range(1, 9):
            assert s[n] == count_avoiding(n, spec)
            if n < ell:
                assert s[n] == ROOTED_COUNTS[n - 1]  # the limb cannot fit


def test_avoid_limb_weighted_vs_brute_force():
    s = series_avoid_limb_weighted(3, 8)
    tw = series_weighted_rooted(8)
    patterns = [p for p in enumerate_weighted_rooted(3) if p.size >= 2]
    assert len(patterns) == 4
    for pattern in patterns:
        spec = LimbSpec(pattern, LIMB)
        for n in range(1, 9):
            assert s[n] == count_avoiding(n, spec, weighted=True)
    assert s[1] == 1 and s[2] == tw[2]
    assert s[3] < tw[3]  # strict at the limb weight


def test_avoid_maximal_limb_vs_brute_force():
    for ell in (1, 2, 3):
        s = series_avoid_maximal_limb(ell, 8)
        if ell == 1:
            assert all(c == 0 for c in s.coeffs)
            continue
        for pattern in enumerate_rooted(ell):
            spec = LimbSpec(pattern, MAXIMAL)
            for n in range(1, 9):
                assert s[n] == count_avoiding(n, spec)
        assert s[ell] == ROOTED_COUNTS[ell - 1] - 1


def test_avoid_limb_weighted_free_vs_brute_force():
    s = series_avoid_limb_weighted_free(3, 8)
    w = series_weighted_free(8)
    assert s[1] == 1 and s[2] == w[2]
    for pattern in enumerate_weighted_rooted(3):
        if pattern.size < 2:
            continue
        spec = LimbSpec(pattern, LIMB)
        for n in range(1, 9):
            assert s[n] == count_avoiding(n, spec, weighted=True, free=True)


def test_bad_limb_sizes_rejected():
    with pytest.raises(BadLimbSizeError):
        series_avoid_limb_rooted(1, 5)
    with pytest.raises(BadLimbSizeError):
        series_avoid_limb_weighted(2, 5)
    with pytest.raises(BadLimbSizeError):
        series_avoid_maximal_limb(0, 5)


def test_dominating_bound_recurrence():
    f = series_dominating_bound(30)
    assert (f[1], f[2], f[3]) == (1, 2, 8)
    tw = series_weighted_rooted(30)
    for n in range(1, 31):
        assert tw[n] <= f[n]


def test_avoidance_coefficients_dominated():
    tw = series_weighted_rooted(20)
    t = series_rooted(20)
    for ell in (3, 4, 5):
        sw = series_avoid_limb_weighted(ell, 20)
        sm = series_avoid_maximal_limb(ell, 20)
        for n in range(1, 21):
            assert sw[n] <= tw[n]
            assert sm[n] <= t[n]
        assert sw[ell] == tw[ell] - 1
        assert sm[ell] == t[ell] - 1


def test_ratio_estimate_geometric():
    geo = RationalSeries.from_ints([2 ** k for k in range(31)])
    r = estimate_radius(geo, method="ratio")
    assert abs(r.value - 0.5) < 0.01
    assert r.method == "ratio" and r.truncation == 30


def test_solve_unit_converges_to_the_tree_radius_from_above():
    values = [estimate_radius(series_rooted(n)).value for n in (25, 50, 100, 200)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert all(v > 0.3383219 for v in values)
    assert abs(values[1] - 0.34470) < 5e-4  # measured at N=50


def test_solve_unit_gap_weighted_vs_full():
    # avoidance radius strictly beats the full radius at every truncation level
    for order in (20, 30):
        t_w = estimate_radius(series_weighted_rooted(order)).value
        t = estimate_radius(series_rooted(order)).value
        for ell in (3, 4, 5):
            s_w = estimate_radius(series_avoid_limb_weighted(ell, order)).value
            s_m = estimate_radius(series_avoid_maximal_limb(ell, order), ell=ell).value
            assert s_w > t_w
            assert s_m > t


def test_estimate_radius_errors():
    with pytest.raises(NonPositiveError):
        estimate_radius(RationalSeries.from_ints([0, 1, -1]))
    tiny = RationalSeries(tuple(Fraction(1, 10 ** (k + 2)) for k in range(4)))
    with pytest.raises(NoRootError):
        estimate_radius(tiny)


def test_counting_series_integrality():
    for s in (series_rooted(25), series_weighted_rooted(25),
              series_weighted_free(25), series_avoid_limb_weighted(4, 25),
              series_avoid_maximal_limb(4, 25),
              series_avoid_limb_weighted_free(4, 25)):
        ints = s.integer_coefficients()
        assert all(c >= 0 for c in ints)

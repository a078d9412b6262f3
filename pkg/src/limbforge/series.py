"""Exact truncated power series for tree counting.

Every counting series here is the unique solution of an equation of the
shape  S = P(x) * exp(sum_{i>=1} S(x^i)/i) + Q(x)  with P(0) = 0, computed
degree by degree in exact rational arithmetic: coefficient n of the right
side only involves coefficients below n of S, so no iteration to
convergence is needed.  Radius-of-convergence estimates are the only place
floating point appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (BadLimbSizeError, NonPositiveError,
                     NonzeroConstantTermError, NoRootError)

DEFAULT_ORDER = 40


@dataclass(frozen=True)
class RationalSeries:
    """Truncated power series with exact rational coefficients c_0..c_N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        self._match(other)
        return RationalSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        self._match(other)
        return RationalSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        self._match(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return RationalSeries(tuple(out))

    def scale(self, c) -> "RationalSeries":
        c = Fraction(c)
        return RationalSeries(tuple(c * a for a in self.coeffs))

    def compose_power(self, i: int) -> "RationalSeries":
        """The series S(x^i), truncated at the same order."""
        out = [Fraction(0)] * (self.order + 1)
        for k, a in enumerate(self.coeffs):
            if k * i <= self.order:
                out[k * i] = a
            else:
                break
        return RationalSeries(tuple(out))

    def integer_coefficients(self) -> tuple[int, ...]:
        """Coefficients as ints; counting series must pass this check."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1 or c < 0:
                raise ArithmeticError(f"coefficient {n} is {c}, not a count")
            out.append(int(c))
        return tuple(out)

    def _match(self, other: "RationalSeries") -> None:
        if self.order != other.order:
            raise ValueError("series truncation orders differ")

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls(tuple(Fraction(0) for _ in range(order + 1)))

    @classmethod
    def from_ints(cls, values: Sequence[int], order: int | None = None) -> "RationalSeries":
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))


@dataclass(frozen=True)
class RadiusEstimate:
    """Numeric radius estimate with the method and truncation it came from."""

    value: float
    method: str
    truncation: int


# -- multiset transform and fixed points -------------------------------------


def _mset_log(s: Sequence[Fraction]) -> list[Fraction]:
    # B(x) = sum_{i>=1} S(x^i)/i, so B_k = (1/k) * sum_{d|k} d*S_d.
    n = len(s) - 1
    b = [Fraction(0)] * (n + 1)
    for d in range(1, n + 1):
        if s[d] == 0:
            continue
        term = d * s[d]
        for k in range(d, n + 1, d):
            b[k] += Fraction(term, k)
    return b


def _exp(b: Sequence[Fraction]) -> list[Fraction]:
    # E = exp(B) with B_0 = 0, via n*E_n = sum_{k=1}^{n} k*B_k*E_{n-k}.
    n = len(b) - 1
    e = [Fraction(0)] * (n + 1)
    e[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            if b[k] != 0:
                acc += k * b[k] * e[m - k]
        e[m] = acc / m
    return e


def mset_exp(s: RationalSeries) -> RationalSeries:
    """Multiset-counting transform exp(sum_{i>=1} S(x^i)/i)."""
    if s[0] != 0:
        raise NonzeroConstantTermError(f"constant term is {s[0]}")
    return RationalSeries(tuple(_exp(_mset_log(s.coeffs))))


def _solve_mset_fixed_point(p: Sequence[Fraction], q: Sequence[Fraction],
                            order: int) -> RationalSeries:
    """Solve S = P(x)*exp(sum S(x^i)/i) + Q(x) degree by degree; P(0) = 0."""
    s = [Fraction(0)] * (order + 1)
    b = [Fraction(0)] * (order + 1)
    e = [Fraction(0)] * (order + 1)
    e[0] = Fraction(1)
    s[0] = q[0] if q else Fraction(0)
    if s[0] != 0:
        raise ValueError("fixed point needs zero constant term")
    for n in range(1, order + 1):
        acc = q[n] if n < len(q) else Fraction(0)
        for j in range(1, min(n, len(p) - 1) + 1):
            if p[j] != 0:
                acc += p[j] * e[n - j]
        s[n] = acc
        bn = Fraction(0)
        for d in range(1, n + 1):
            if n % d == 0 and s[d] != 0:
                bn += d * s[d]
        b[n] = bn / n
        en = Fraction(0)
        for k in range(1, n + 1):
            if b[k] != 0:
                en += k * b[k] * e[n - k]
        e[n] = en / n
    return RationalSeries(tuple(s))


def _counting(series: RationalSeries) -> RationalSeries:
    series.integer_coefficients()
    return series


def _frac(values: Sequence[int]) -> list[Fraction]:
    return [Fraction(v) for v in values]


# -- the counting series ------------------------------------------------------


def series_rooted(order: int = DEFAULT_ORDER) -> RationalSeries:
    """Rooted trees by vertex count: T = x * exp(sum T(x^i)/i)."""
    return _counting(_solve_mset_fixed_point(_frac([0, 1]), [], order))


def series_weighted_rooted(order: int = DEFAULT_ORDER) -> RationalSeries:
    """Weighted rooted trees by total weight: prefactor x/(1-x)."""
    p = _frac([0] + [1] * order)
    return _counting(_solve_mset_fixed_point(p, [], order))


def series_avoid_limb_rooted(ell: int, order: int = DEFAULT_ORDER) -> RationalSeries:
    """Rooted trees with no ell-vertex limb: S = (x - x^ell) * exp(...)."""
    if ell < 2:
        raise BadLimbSizeError(f"limb size must be >= 2, got {ell}")
    p = [Fraction(0)] * (order + 1)
    if 1 <= order:
        p[1] = Fraction(1)
    if ell <= order:
        p[ell] -= 1
    return _counting(_solve_mset_fixed_point(p, [], order))


def series_avoid_limb_weighted(ell: int, order: int = DEFAULT_ORDER) -> RationalSeries:
    """Weighted rooted trees with no limb of total weight ell.

    Only the total weight of the forbidden limb enters; the recursion is
    S = (x/(1-x) - x^ell) * exp(sum S(x^i)/i).
    """
    if ell < 3:
        raise BadLimbSizeError(f"weighted limb size must be >= 3, got {ell}")
    p = _frac([0] + [1] * order)
    if ell <= order:
        p[ell] -= 1
    return _counting(_solve_mset_fixed_point(p, [], order))


def series_avoid_maximal_limb(ell: int, order: int = DEFAULT_ORDER) -> RationalSeries:
    """Rooted trees with no ell-vertex maximal limb: S = x*exp(...) - x^ell."""
    if ell < 1:
        raise BadLimbSizeError(f"limb size must be >= 1, got {ell}")
    q = [Fraction(0)] * (order + 1)
    if ell <= order:
        q[ell] = Fraction(-1)
    return _counting(_solve_mset_fixed_point(_frac([0, 1]), q, order))


def _dissimilarity(rooted: RationalSeries) -> RationalSeries:
    # unrooted = rooted + (rooted(x^2) - rooted(x)^2) / 2
    return rooted + (rooted.compose_power(2) - rooted * rooted).scale(Fraction(1, 2))


def series_weighted_free(order: int = DEFAULT_ORDER) -> RationalSeries:
    """Weighted free trees by total weight, via the dissimilarity identity."""
    return _counting(_dissimilarity(series_weighted_rooted(order)))


def series_avoid_limb_weighted_free(ell: int, order: int = DEFAULT_ORDER) -> RationalSeries:
    """Weighted free trees avoiding a limb of total weight ell."""
    return _counting(_dissimilarity(series_avoid_limb_weighted(ell, order)))


def series_dominating_bound(order: int = DEFAULT_ORDER) -> RationalSeries:
    """Termwise upper bound for the weighted rooted counts.

    f_1 = 1 and f_{n+1} = 2 * sum_{i=1}^{n} f_i * f_{n-i+1}; the weighted
    rooted coefficients satisfy T_n <= f_n for every n.
    """
    f = [0] * (order + 1)
    if order >= 1:
        f[1] = 1
    for n in range(1, order):
        f[n + 1] = 2 * sum(f[i] * f[n - i + 1] for i in range(1, n + 1))
    return RationalSeries(tuple(Fraction(v) for v in f))


# -- radius estimation --------------------------------------------------------


def estimate_radius(s: RationalSeries, method: str = "solve_unit",
                    ell: int | None = None) -> RadiusEstimate:
    """Numeric radius-of-convergence estimate from a truncation.

    method="ratio" returns c_{N-1}/c_N.  method="solve_unit" bisects for the
    unique x in (0, 1) with s(x) = 1, or s(x) = 1 - x^ell when `ell` is
    given (the maximal-limb variant).  Bracket tolerance 1e-9, at most 200
    bisection steps.
    """
    if method not in ("ratio", "solve_unit"):
        raise ValueError(f"unknown method {method!r}")
    n = s.order
    for k in range(1, n + 1):
        if s[k] <= 0:
            raise NonPositiveError(f"coefficient {k} is {s[k]}")

    if method == "ratio":
        return RadiusEstimate(float(s[n - 1] / s[n]), "ratio", n)

    cs = [float(c) for c in s.coeffs]

    def g(x: float) -> float:
        acc = 0.0
        for c in reversed(cs):
            acc = acc * x + c
        if ell is not None:
            acc += x ** ell
        return acc - 1.0

    lo, hi = 0.0, 1.0
    if g(lo) >= 0.0 or g(hi) <= 0.0:
        raise NoRootError("target not bracketed in (0, 1)")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-9:
            break
    return RadiusEstimate(0.5 * (lo + hi), "solve_unit", n)

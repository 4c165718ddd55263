"""Closed-form probabilistic bounds for clique minors in the paired random
graph, in two arithmetic backends.

The log-gamma backend evaluates everything in natural-log space and scales
to n around 10**6 without overflow; the exact-rational backend recomputes
the same formulas with Fractions and serves as the small-n oracle.  All
event probabilities ride on the construction facts that any fixed cross
pair is an edge with probability 3/4, and two group-disjoint vertex pairs
see no edge between them with probability (1/4)**4 = 1/256.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

LOG_3_4 = math.log(3.0) - math.log(4.0)
LOG_255_256 = math.log(255.0) - math.log(256.0)

# exp() double range: underflow to 0 below ~-745, overflow above ~709
_EXP_MIN = math.log(5e-324)
_EXP_MAX = 709.0


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: natural-log value plus a clamped linear view."""

    formula_id: str
    n: int
    parameter: int
    log_value: float

    @property
    def value(self) -> float:
        if self.log_value > _EXP_MAX:
            return math.inf
        if self.log_value < _EXP_MIN:
            return 0.0
        return math.exp(self.log_value)

    @property
    def flag(self) -> str | None:
        if self.log_value > _EXP_MAX:
            return "overflow"
        if self.log_value < _EXP_MIN:
            return "underflow"
        return None


def log_binomial(n: int, k: int) -> float:
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def simple_minor_bound(n: int, k: int) -> BoundReport:
    """Union bound on some k-set inducing a clique: C(2n,k) * (3/4)^C(k,2).

    Valid because a clique never holds both vertices of a group, so its
    C(k,2) potential edges are independent with probability 3/4 each.
    """
    if not 1 <= k <= 2 * n:
        raise ValueError("need 1 <= k <= 2n")
    log_v = log_binomial(2 * n, k) + math.comb(k, 2) * LOG_3_4
    return BoundReport("simpleMinor", n, k, log_v)


def simple_minor_bound_exact(n: int, k: int) -> Fraction:
    """Exact-rational twin of simple_minor_bound (small-n oracle)."""
    if not 1 <= k <= 2 * n:
        raise ValueError("need 1 <= k <= 2n")
    return math.comb(2 * n, k) * Fraction(3, 4) ** math.comb(k, 2)


def double_minor_bound(n: int, m: int) -> BoundReport:
    """Union bound on m group-disjoint vertex pairs mutually joined:
    (2n)^(2m) * (255/256)^C(m,2).  The first factor over-counts the pairings,
    the second is the probability all C(m,2) pair couples see an edge."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    log_v = 2 * m * math.log(2 * n) + math.comb(m, 2) * LOG_255_256
    return BoundReport("doubleMinor", n, m, log_v)


def double_minor_bound_exact(n: int, m: int) -> Fraction:
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    return Fraction(2 * n) ** (2 * m) * Fraction(255, 256) ** math.comb(m, 2)


def no_edge_between_pairs_prob() -> Fraction:
    """Probability that two group-disjoint vertex pairs have no edge between
    them: each of the four cross edges is independently absent with
    probability 1/4, so exactly (1/4)**4 = 1/256."""
    return Fraction(1, 256)


def expected_clique_count(n: int, k: int) -> Fraction:
    """Exact expected number of k-subsets inducing a clique:
    C(n,k) * 2^k * (3/4)^C(k,2) — choose k groups and one side per group;
    larger subsets hitting a group twice contribute zero."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > n:
        return Fraction(0)
    return math.comb(n, k) * 2**k * Fraction(3, 4) ** math.comb(k, 2)


def expected_quadruple_count(n: int) -> Fraction:
    """Exact expected number of rotation-distinct quadruples whose four cross
    edges are all absent: n(n-1)(n-2)(n-3)/4 events, each of probability
    (1/4)^4 since their four group pairs are distinct, hence independent."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < 4:
        return Fraction(0)
    events = n * (n - 1) * (n - 2) * (n - 3) // 4
    return Fraction(events, 256)


@dataclass(frozen=True)
class CombinedBound:
    """Union of the simple and double exclusions plus the counting cap.

    With probability at least 1 - failure_prob_bound the instance has no
    complete minor on minor_size_bound or more vertices: outside the failure
    event every model decomposes into a simple part below k_simple, a double
    part below k_double, and a triple part of at most floor(2n/3) bags.
    """

    n: int
    k_simple: int
    k_double: int
    simple: BoundReport
    double: BoundReport
    triple_cap: int

    @property
    def log_failure_bound(self) -> float:
        a, b = self.simple.log_value, self.double.log_value
        hi, lo = max(a, b), min(a, b)
        return hi + math.log1p(math.exp(lo - hi))

    @property
    def failure_prob_bound(self) -> float:
        lv = self.log_failure_bound
        if lv > _EXP_MAX:
            return math.inf
        if lv < _EXP_MIN:
            return 0.0
        return math.exp(lv)

    @property
    def minor_size_bound(self) -> int:
        return self.k_simple + self.k_double + self.triple_cap


def combined_minor_bound(n: int, k_simple: int, k_double: int) -> CombinedBound:
    simple = simple_minor_bound(n, k_simple)
    double = double_minor_bound(n, k_double)
    return CombinedBound(
        n=n,
        k_simple=k_simple,
        k_double=k_double,
        simple=simple,
        double=double,
        triple_cap=2 * n // 3,
    )


def simple_bound_scan(ns, k_of_n) -> list[BoundReport]:
    """Evaluate simple_minor_bound over a grid of n with k = k_of_n(n)."""
    return [simple_minor_bound(n, k_of_n(n)) for n in ns]


def double_bound_scan(ns, m_of_n) -> list[BoundReport]:
    return [double_minor_bound(n, m_of_n(n)) for n in ns]

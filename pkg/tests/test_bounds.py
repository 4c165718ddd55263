import math
import random
from fractions import Fraction

import pytest

from kempelab.bounds import (
    combined_minor_bound,
    double_minor_bound,
    double_minor_bound_exact,
    expected_clique_count,
    expected_quadruple_count,
    no_edge_between_pairs_prob,
    simple_minor_bound,
    simple_minor_bound_exact,
)


def log_of_fraction(f: Fraction) -> float:
    return math.log(f.numerator) - math.log(f.denominator)


class TestSimpleMinorBound:
    def test_k1_counts_vertices(self):
        for n in (1, 10, 1000):
            assert simple_minor_bound(n, 1).value == pytest.approx(2 * n, rel=1e-9)

    def test_exact_oracle_n10_k5(self):
        exact = Fraction(math.comb(20, 5)) * Fraction(3, 4) ** 10
        assert simple_minor_bound_exact(10, 5) == exact
        assert simple_minor_bound(10, 5).log_value == pytest.approx(
            log_of_fraction(exact), rel=1e-12, abs=1e-12
        )

    def test_cross_backend_agreement_grid(self):
        rng = random.Random(1)
        for _ in range(200):
            n = rng.randint(1, 100)
            k = rng.randint(1, 2 * n)
            log_exact = log_of_fraction(simple_minor_bound_exact(n, k))
            assert simple_minor_bound(n, k).log_value == pytest.approx(
                log_exact, rel=1e-9, abs=1e-9
            )

    def test_below_coarse_power_of_two_bound(self):
        # C(2n, k) <= 2^(2n), so the evaluator must sit below the coarse form
        n, k = 500, 100
        coarse = 2 * n * math.log(2) + math.comb(k, 2) * math.log(0.75)
        assert simple_minor_bound(n, k).log_value <= coarse

    def test_range_validation(self):
        with pytest.raises(ValueError):
            simple_minor_bound(5, 0)
        with pytest.raises(ValueError):
            simple_minor_bound(5, 11)

    def test_underflow_flagged_not_broken(self):
        rep = simple_minor_bound(500, 100)
        assert math.isfinite(rep.log_value)
        assert rep.value == 0.0 and rep.flag == "underflow"

    def test_huge_n_stays_finite_in_log_space(self):
        rep = simple_minor_bound(10**6, 200_000)
        assert math.isfinite(rep.log_value)


class TestDoubleMinorBound:
    def test_m1_is_2n_squared(self):
        for n in (1, 7, 300):
            assert double_minor_bound(n, 1).value == pytest.approx((2 * n) ** 2, rel=1e-12)

    def test_exact_oracle_n100_m50(self):
        exact = double_minor_bound_exact(100, 50)
        assert double_minor_bound(100, 50).log_value == pytest.approx(
            log_of_fraction(exact), rel=1e-9
        )

    def test_cross_backend_agreement_grid(self):
        rng = random.Random(2)
        for _ in range(100):
            n = rng.randint(1, 100)
            m = rng.randint(1, n)
            log_exact = log_of_fraction(double_minor_bound_exact(n, m))
            assert double_minor_bound(n, m).log_value == pytest.approx(
                log_exact, rel=1e-9, abs=1e-9
            )

    def test_eventually_decreasing_in_m(self):
        n = 5000
        logs = [double_minor_bound(n, m).log_value for m in range(4750, 5001, 50)]
        assert all(a > b for a, b in zip(logs, logs[1:]))

    def test_overflow_flagged(self):
        rep = double_minor_bound(10**6, 1000)
        assert math.isfinite(rep.log_value)
        assert rep.flag == "overflow" and rep.value == math.inf

    def test_range_validation(self):
        with pytest.raises(ValueError):
            double_minor_bound(5, 0)
        with pytest.raises(ValueError):
            double_minor_bound(5, 6)


class TestExactProbabilities:
    def test_no_edge_between_pairs(self):
        assert no_edge_between_pairs_prob() == Fraction(1, 256)
        assert 1 - no_edge_between_pairs_prob() == Fraction(255, 256)
        assert float(no_edge_between_pairs_prob()) == 1 / 256

    def test_expected_clique_count_values(self):
        assert expected_clique_count(10, 1) == 20
        assert expected_clique_count(10, 3) == 405
        assert expected_clique_count(5, 6) == 0
        assert expected_clique_count(4, 2) == Fraction(math.comb(4, 2) * 4 * 3, 4)

    def test_expected_clique_count_validation(self):
        with pytest.raises(ValueError):
            expected_clique_count(5, 0)

    def test_expected_quadruple_count_values(self):
        assert expected_quadruple_count(3) == 0
        assert expected_quadruple_count(4) == Fraction(6, 256)
        assert expected_quadruple_count(12) == Fraction(2970, 256)
        assert float(expected_quadruple_count(12)) == pytest.approx(11.6015625)
        with pytest.raises(ValueError):
            expected_quadruple_count(-1)


class TestCombinedBound:
    def test_vacuous_at_k1(self):
        rep = combined_minor_bound(20, 1, 1)
        assert rep.failure_prob_bound >= 1.0

    def test_triple_component_is_the_cap(self):
        rep = combined_minor_bound(9, 2, 2)
        assert rep.triple_cap == 6
        assert rep.minor_size_bound == 2 + 2 + 6

    def test_concrete_small_failure_small_size(self):
        # desk-scale witness of the two-thirds threshold: tiny failure bound
        # with a minor-size bound clearly below 0.75 * n
        n, ks, kd = 200_000, 200, 14_000
        rep = combined_minor_bound(n, ks, kd)
        assert rep.failure_prob_bound < 1e-6
        assert rep.minor_size_bound < 0.75 * n

    def test_log_failure_is_logsumexp_of_parts(self):
        rep = combined_minor_bound(50, 5, 5)
        expect = math.log(
            math.exp(rep.simple.log_value) + math.exp(rep.double.log_value)
        )
        assert rep.log_failure_bound == pytest.approx(expect, rel=1e-12)


class TestDecayScan:
    def test_simple_bound_scan_decreasing_and_tiny_by_500(self):
        logs = [
            simple_minor_bound(n, math.ceil(0.2 * n)).log_value
            for n in range(50, 501, 50)
        ]
        assert all(a > b for a, b in zip(logs, logs[1:]))
        assert logs[-1] < math.log(1e-6)

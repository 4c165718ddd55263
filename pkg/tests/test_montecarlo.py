import math


import pytest

from kempelab.bounds import expected_quadruple_count
from kempelab.io import canonical_dumps, estimate_to_json
from kempelab.montecarlo import DOUBLE_MINOR_N_CAP, mc_estimate


class TestDeterminism:
    def test_identical_inputs_identical_reports(self):
        a = mc_estimate("crossPairEdge", 5, 400, 7)
        b = mc_estimate("crossPairEdge", 5, 400, 7)
        assert a == b
        assert canonical_dumps(estimate_to_json(a)) == canonical_dumps(estimate_to_json(b))

    def test_parallel_matches_serial(self):
        a = mc_estimate("kCliqueCount", 8, 240, 3, k=3, jobs=1)
        b = mc_estimate("kCliqueCount", 8, 240, 3, k=3, jobs=2)
        assert a == b
        assert canonical_dumps(estimate_to_json(a)) == canonical_dumps(estimate_to_json(b))

    def test_seed_base_changes_results(self):
        a = mc_estimate("crossPairEdge", 5, 400, 1)
        b = mc_estimate("crossPairEdge", 5, 400, 2)
        assert a.successes != b.successes


class TestEvents:
    def test_quadruple_exists_impossible_below_four(self):
        rep = mc_estimate("quadrupleExists", 3, 300, 11)
        assert rep.successes == 0

    def test_cross_pair_edge_near_three_quarters(self):
        rep = mc_estimate("crossPairEdge", 5, 4000, 99)
        assert abs(rep.mean - 0.75) <= 3 * math.sqrt(0.75 * 0.25 / rep.trials)

    def test_k_clique_count_mean_near_expectation(self):
        rep = mc_estimate("kCliqueCount", 10, 2000, 1, k=3)
        assert abs(rep.mean - 405) <= 3 * rep.standard_error

    def test_no_edge_between_pairs_near_1_over_256(self):
        rep = mc_estimate("noEdgeBetweenPairs", 8, 4000, 5)
        p = 1 / 256
        se = math.sqrt(p * (1 - p) / rep.trials)
        assert abs(rep.mean - p) <= 3 * se

    def test_quadruple_count_mean_near_expectation(self):
        for n in (4, 8):
            rep = mc_estimate("quadrupleCount", n, 3000, 17)
            expect = float(expected_quadruple_count(n))
            se = max(rep.standard_error, 1e-9)
            assert abs(rep.mean - expect) <= 3 * se

    def test_clique_at_least_small_k_is_certain(self):
        rep = mc_estimate("cliqueAtLeast", 8, 200, 3, k=2)
        assert rep.successes == rep.trials  # an instance always has edges

    def test_double_minor_event_runs_and_is_deterministic(self):
        a = mc_estimate("doubleMinorAtLeast", 4, 60, 3, m=2)
        b = mc_estimate("doubleMinorAtLeast", 4, 60, 3, m=2)
        assert a == b
        assert 0 <= a.successes <= a.trials


class TestValidation:
    def test_unknown_event(self):
        with pytest.raises(ValueError):
            mc_estimate("noSuchEvent", 5, 10, 0)

    def test_trials_must_be_positive(self):
        with pytest.raises(ValueError):
            mc_estimate("crossPairEdge", 5, 0, 0)

    def test_clique_events_need_k(self):
        with pytest.raises(ValueError):
            mc_estimate("kCliqueCount", 5, 10, 0)
        with pytest.raises(ValueError):
            mc_estimate("cliqueAtLeast", 5, 10, 0)

    def test_double_minor_needs_m_and_small_n(self):
        with pytest.raises(ValueError):
            mc_estimate("doubleMinorAtLeast", 4, 10, 0)
        with pytest.raises(ValueError):
            mc_estimate("doubleMinorAtLeast", DOUBLE_MINOR_N_CAP + 1, 10, 0, m=2)

    def test_cross_pair_needs_two_groups(self):
        with pytest.raises(ValueError):
            mc_estimate("crossPairEdge", 1, 10, 0)

    def test_no_edge_event_needs_four_groups(self):
        with pytest.raises(ValueError):
            mc_estimate("noEdgeBetweenPairs", 3, 10, 0)


class TestReportShape:
    def test_interval_absent_below_100_trials(self):
        rep = mc_estimate("crossPairEdge", 5, 99, 0)
        assert rep.ci99 is None

    def test_interval_present_and_contains_mean(self):
        rep = mc_estimate("crossPairEdge", 5, 100, 0)
        lo, hi = rep.ci99
        assert lo <= rep.mean <= hi

    def test_successes_only_for_indicator_events(self):
        ind = mc_estimate("crossPairEdge", 5, 50, 0)
        cnt = mc_estimate("kCliqueCount", 5, 50, 0, k=3)
        assert ind.successes == ind.sum_values
        assert cnt.successes is None

    def test_standard_error_nonnegative_and_interval_symmetric(self):
        rep = mc_estimate("kCliqueCount", 6, 200, 9, k=3)
        assert rep.standard_error >= 0
        lo, hi = rep.ci99
        assert hi - rep.mean == pytest.approx(rep.mean - lo)

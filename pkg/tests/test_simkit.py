import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condorcet_kit import (
    EnsembleConfig,
    exact_majority_prob,
    simulate_ensemble,
    wilson_interval,
)


class TestWilsonInterval:
    def test_zero_successes(self):
        lo, hi = wilson_interval(0, 10, 1.96)
        assert lo == 0.0
        assert hi == pytest.approx(0.2775401687666166, abs=1e-12)

    def test_all_successes_mirrors_zero(self):
        lo, hi = wilson_interval(10, 10, 1.96)
        assert hi == 1.0
        assert lo == pytest.approx(1.0 - 0.2775401687666166, abs=1e-12)

    def test_zero_z_degenerates_to_point(self):
        assert wilson_interval(5, 10, 0.0) == (0.5, 0.5)

    def test_closed_form_oracle(self):
        # direct evaluation of the Wilson formula, independent of the implementation
        s, t, z = 37, 120, 2.5
        phat = s / t
        denom = 1 + z * z / t
        center = (phat + z * z / (2 * t)) / denom
        half = (z / denom) * math.sqrt(phat * (1 - phat) / t + z * z / (4 * t * t))
        lo, hi = wilson_interval(s, t, z)
        assert lo == pytest.approx(center - half, abs=1e-15)
        assert hi == pytest.approx(center + half, abs=1e-15)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            wilson_interval(11, 10, 1.96)
        with pytest.raises(ValueError):
            wilson_interval(0, 0, 1.96)

    @settings(max_examples=200)
    @given(
        trials=st.integers(min_value=1, max_value=10**6),
        frac=st.floats(min_value=0.0, max_value=1.0),
        z=st.floats(min_value=0.0, max_value=10.0),
    )
    def test_interval_contains_estimate_and_stays_in_unit(self, trials, frac, z):
        successes = min(trials, int(frac * trials))
        lo, hi = wilson_interval(successes, trials, z)
        phat = successes / trials
        assert 0.0 <= lo <= phat <= hi <= 1.0


class TestSimulateEnsemble:
    def test_perfect_classifiers(self):
        report = simulate_ensemble(EnsembleConfig(1, 1.0), 1000, seed=42)
        assert report.successes == 1000
        assert report.estimate == 1.0

    def test_always_wrong(self):
        report = simulate_ensemble(EnsembleConfig(3, 0.0), 1000, seed=42)
        assert report.estimate == 0.0

    def test_close_to_exact_value(self):
        report = simulate_ensemble(EnsembleConfig(3, 0.6), 10**6, seed=7)
        assert abs(report.estimate - 0.648) <= 4 * math.sqrt(0.648 * 0.352 / 10**6)

    def test_deterministic_for_fixed_seed(self):
        a = simulate_ensemble(EnsembleConfig(5, 0.7), 50_000, seed=123)
        b = simulate_ensemble(EnsembleConfig(5, 0.7), 50_000, seed=123)
        assert a == b

    def test_chunking_does_not_change_the_stream(self):
        # crossing the internal chunk boundary must not alter the counts the
        # monolithic draw would produce
        import numpy as np

        cfg = EnsembleConfig(3, 0.6)
        trials = (1 << 16) + 1234
        report = simulate_ensemble(cfg, trials, seed=99)
        rng = np.random.default_rng(99)
        correct = (rng.random((trials, 3)) < 0.6).sum(axis=1)
        assert report.successes == int(np.count_nonzero(correct > 1))

    def test_zero_trials_rejected(self):
        with pytest.raises(ValueError):
            simulate_ensemble(EnsembleConfig(3, 0.6), 0, seed=1)

    def test_bad_seed_rejected(self):
        with pytest.raises(ValueError):
            simulate_ensemble(EnsembleConfig(3, 0.6), 10, seed=-1)
        with pytest.raises(ValueError):
            simulate_ensemble(EnsembleConfig(3, 0.6), 10, seed=1 << 64)

    def test_report_invariants(self):
        report = simulate_ensemble(EnsembleConfig(7, 0.55), 10_000, seed=5)
        assert report.estimate == report.successes / report.trials
        assert 0.0 <= report.ci_low <= report.estimate <= report.ci_high <= 1.0

    def test_monotonicity_echo_fixed_seed(self):
        # empirical estimates at p = 0.7 rise with n within two combined
        # standard errors (regression property under a fixed seed)
        trials = 10**6
        estimates = [
            simulate_ensemble(EnsembleConfig(n, 0.7), trials, seed=2024 + n).estimate
            for n in range(1, 22, 2)
        ]
        for prev, cur in zip(estimates, estimates[1:]):
            se = math.sqrt(prev * (1 - prev) / trials) + math.sqrt(cur * (1 - cur) / trials)
            assert cur >= prev - 2 * se

    def test_exact_value_in_wide_wilson_interval(self):
        for n in (1, 5, 9):
            for p in (0.5, 0.6, 0.9):
                report = simulate_ensemble(EnsembleConfig(n, p), 10**5, seed=31 * n + int(p * 10), confidence_z=4.0)
                exact = exact_majority_prob(EnsembleConfig(n, p)).value
                assert report.ci_low <= exact <= report.ci_high, (n, p)

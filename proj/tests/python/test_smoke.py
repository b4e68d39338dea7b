"""End-to-end smoke tests for the python bindings.

These exercise the bound surface, not the numerics; the C++ test suite
owns correctness. Sizes are kept small so the whole file runs in seconds.
"""

import math

import pytest

import limitset as ls


def small_config():
    cfg = ls.PipelineConfig()
    cfg.k = 21
    cfg.m = 60
    cfg.eta_exceedances = 150
    return cfg


def test_spec_validation():
    spec = ls.CopulaSpec.logistic(0.5)
    assert spec.name() == "logistic"
    with pytest.raises(ls.ValidationError):
        ls.CopulaSpec.logistic(1.0).validate()
    assert issubclass(ls.ValidationError, ValueError)


def test_sampling_is_deterministic():
    spec = ls.CopulaSpec.gaussian(0.5)
    a = ls.sample_copula(spec, 500, 42)
    b = ls.sample_copula(spec, 500, 42)
    assert len(a) == 500
    assert a.x1 == b.x1 and a.x2 == b.x2
    c = ls.sample_copula(spec, 500, 43)
    assert a.x1 != c.x1


def test_true_boundary_sits_on_the_gauge_level_set():
    spec = ls.CopulaSpec.inverted_logistic(0.5)
    b = ls.true_boundary(spec, 101)
    assert len(b) == 101
    for x1, x2 in zip(b.x1, b.x2):
        assert ls.gauge(spec, x1, x2) == pytest.approx(1.0, abs=1e-10)


def test_true_measures_closed_forms():
    t = ls.true_measures(ls.CopulaSpec.gaussian(0.5), [0.5], [0.5])
    assert t.eta == pytest.approx(0.75)
    assert t.lambda_[0] == pytest.approx(1.0 / (2.0 * 0.75))
    assert t.alpha1 == pytest.approx(0.25)
    assert t.chi is None or t.chi == 0.0


def test_margins_rank_transform():
    raw = ls.RawSample([3.0, 1.0, 2.0], [10.0, 30.0, 20.0])
    exp = ls.to_exponential_margins(raw)
    assert len(exp) == 3
    # largest raw value gets the largest exponential score
    assert max(range(3), key=lambda i: exp.x1[i]) == 0
    assert max(range(3), key=lambda i: exp.x2[i]) == 1


def test_fit_and_summary_are_self_consistent():
    spec = ls.CopulaSpec.logistic(0.5)
    sample = ls.sample_copula(spec, 2000, 20240917)
    fit = ls.estimate(sample, small_config())
    assert fit.degree in (1, 2, 3)
    assert max(fit.g_hat.points.x1) == 1.0
    assert max(fit.g_hat.points.x2) == 1.0

    cfg = ls.SummaryConfig()
    cfg.omega_grid = [i / 10 for i in range(1, 10)]
    cfg.delta_grid = [i / 10 for i in range(1, 11)]
    summary = ls.summarize(sample, fit.g_hat.points, cfg)
    assert summary.eta == ls.eta_from_boundary(fit.g_hat.points)
    assert summary.lambda_[4] == 1.0 / (2.0 * summary.eta)
    assert summary.eta >= max(summary.alpha1, summary.alpha2)
    assert ls.consistency_violations(summary, fit.g_hat.points) == []


def test_boundary_functionals_on_a_handmade_diamond():
    b = ls.BoundaryPoints(
        [0.0, 0.25, 0.5, 0.75, 1.0],
        [0.0, 0.5, 1.0, 1.0, 1.0],
        [1.0, 1.0, 1.0, 0.5, 0.0],
    )
    assert ls.eta_from_boundary(b) == 1.0
    a1, a2 = ls.alpha_from_boundary(b)
    assert a1 == 1.0 and a2 == 1.0
    tau = ls.tau_from_boundary(b, [0.5, 1.0], 1)
    assert tau.estimable == [True, True]


def test_baselines_run_at_small_sizes():
    sample = ls.sample_copula(ls.CopulaSpec.logistic(0.4), 2000, 7)
    eta = ls.hill_eta(sample, 150)
    assert 0.0 < eta <= 1.0
    assert ls.peng_eta(sample, 150) is None or ls.peng_eta(sample, 150) <= 1.0
    lam = ls.hill_lambda(sample, [0.25, 0.5, 0.75])
    assert len(lam) == 3 and all(v <= 1.0 for v in lam)


def test_bootstrap_replicates_under_fixed_seed():
    plan = ls.BootstrapPlan()
    plan.n = 200
    plan.replicates = 3
    plan.seed = 9
    first = ls.stationary_bootstrap_indices(plan, 0)
    assert first == ls.stationary_bootstrap_indices(plan, 0)
    assert all(0 <= i < 200 for i in first)
    assert len(first) == 200


def test_study_round_trip():
    cfg = ls.StudyConfig()
    cfg.cases = [ls.CopulaSpec.inverted_logistic(0.5)]
    cfg.replicates = 2
    cfg.n = 2000
    cfg.pipeline = small_config()
    cfg.seed = 31
    cfg.omega_grid = [i / 10 for i in range(1, 10)]
    cfg.delta_grid = [i / 10 for i in range(1, 11)]
    res = ls.run_study(cfg)
    assert len(res.records) == 2
    assert not any(r.failed for r in res.records)
    agg = res.aggregates[0]
    assert agg.label == "inverted-logistic"
    assert agg.eta_g.truth == pytest.approx(math.sqrt(0.5))
    assert agg.violation_count == 0

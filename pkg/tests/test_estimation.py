import math

import numpy as np
import pytest
from scipy.stats import norm

from tverskyci import (
    ConfusionCounts,
    DegenerateSampleError,
    InvalidParameterError,
    SummaryStats,
    TverskyParams,
    asymptotic_variance,
    confidence_interval,
    fbeta_to_tversky,
    normal_cdf,
    normal_quantile,
    precision,
    recall,
    summarize,
    tversky_index,
    weighted_error_ratio,
)

F05 = TverskyParams(0.8, 0.2)
F1 = TverskyParams(0.5, 0.5)

# Summary stats of the worked retail example: n, tp_rate, index, squared-weight index.
RETAIL_STATS = SummaryStats(535, 0.535, 0.861, 0.900)

# Frozen from direct evaluation of the variance formula on RETAIL_STATS:
# (1/0.9 - 1 + (1/0.861 - 1)^2) * 0.861^4 / 0.535
RETAIL_VARIANCE = 0.14090641586915892
RETAIL_SE = 0.016228877911307057


# ---------------------------------------------------------------------------
# point estimates
# ---------------------------------------------------------------------------


def test_tversky_perfect_predictor():
    assert tversky_index(ConfusionCounts(50, 0, 0, 50), F05) == 1.0


def test_tversky_hand_value():
    # 40 / (40 + 0.5*10 + 0.5*10) = 0.8
    assert tversky_index(ConfusionCounts(40, 10, 10, 40), F1) == pytest.approx(0.8, rel=1e-15)


def test_tversky_matches_harmonic_mean():
    counts = ConfusionCounts(30, 20, 10, 40)
    prec, rec = precision(counts), recall(counts)
    assert prec == 0.75
    assert rec == 0.6
    harmonic = 2.0 / (1.0 / prec + 1.0 / rec)
    assert tversky_index(counts, F1) == pytest.approx(harmonic, rel=1e-12)
    assert tversky_index(counts, F1) == pytest.approx(2.0 / 3.0, rel=1e-12)


def test_tversky_rejects_no_true_positives():
    with pytest.raises(DegenerateSampleError):
        tversky_index(ConfusionCounts(0, 5, 5, 90), F1)


def test_precision_recall_zero_when_no_hits():
    counts = ConfusionCounts(0, 5, 5, 90)
    assert precision(counts) == 0.0
    assert recall(counts) == 0.0


def test_precision_undefined_without_positive_predictions():
    with pytest.raises(DegenerateSampleError):
        precision(ConfusionCounts(0, 5, 0, 95))


def test_recall_undefined_without_positive_labels():
    with pytest.raises(DegenerateSampleError):
        recall(ConfusionCounts(0, 0, 5, 95))


def test_counts_validation():
    with pytest.raises(InvalidParameterError):
        ConfusionCounts(-1, 0, 0, 10)
    with pytest.raises(InvalidParameterError):
        ConfusionCounts(0, 0, 0, 0)
    with pytest.raises(InvalidParameterError):
        ConfusionCounts(1.5, 0, 0, 10)  # type: ignore[arg-type]


def test_counts_accept_numpy_integers():
    cells = np.array([30, 20, 10, 40])
    counts = ConfusionCounts(cells[0], cells[1], cells[2], cells[3])
    assert counts == ConfusionCounts(30, 20, 10, 40)
    assert isinstance(counts.tp, int)


def test_params_validation():
    for a, b in ((0.0, 0.2), (-0.1, 0.2), (math.nan, 0.2), (0.8, math.inf)):
        with pytest.raises(InvalidParameterError):
            TverskyParams(a, b)


@pytest.mark.parametrize(
    "beta,expected",
    [(0.5, (0.8, 0.2)), (1.0, (0.5, 0.5)), (2.0, (0.2, 0.8))],
)
def test_fbeta_weight_mapping(beta, expected):
    params = fbeta_to_tversky(beta)
    assert (params.fp_weight, params.fn_weight) == expected


def test_fbeta_weights_sum_to_one():
    rng = np.random.default_rng(11)
    for beta in 10.0 ** rng.uniform(-2, 2, size=200):
        params = fbeta_to_tversky(float(beta))
        assert abs(params.fp_weight + params.fn_weight - 1.0) <= 2**-50
        assert 0.0 < params.fp_weight < 1.0
        assert 0.0 < params.fn_weight < 1.0


def test_fbeta_rejects_bad_beta():
    for beta in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(InvalidParameterError):
            fbeta_to_tversky(beta)


# ---------------------------------------------------------------------------
# asymptotic variance
# ---------------------------------------------------------------------------


def test_variance_retail_example():
    assert asymptotic_variance(RETAIL_STATS, F05) == pytest.approx(RETAIL_VARIANCE, rel=1e-12)
    se = math.sqrt(asymptotic_variance(RETAIL_STATS, F05) / RETAIL_STATS.n)
    assert se == pytest.approx(RETAIL_SE, rel=1e-12)


def test_variance_zero_for_perfect_predictor():
    stats = SummaryStats(100, 0.5, 1.0, 1.0)
    assert asymptotic_variance(stats, F05) == 0.0
    assert asymptotic_variance(ConfusionCounts(50, 0, 0, 50), F05) == 0.0


def test_variance_counts_path_delegates_to_exact_summary():
    counts = ConfusionCounts(30, 20, 10, 40)
    assert asymptotic_variance(counts, F1) == asymptotic_variance(summarize(counts, F1), F1)


def test_variance_requires_positive_tp_rate():
    with pytest.raises(DegenerateSampleError):
        asymptotic_variance(SummaryStats(10, 0.0, 0.5, 0.5), F1)


def test_variance_rejects_inconsistent_summary():
    # (1/0.8 - 1) / (1/0.9 - 1) = 2.25, impossible for weights capped at 0.8
    with pytest.raises(InvalidParameterError):
        asymptotic_variance(SummaryStats(100, 0.5, 0.9, 0.8), F05)
    # an error-free index forces the squared-weight index to 1 as well
    with pytest.raises(InvalidParameterError):
        asymptotic_variance(SummaryStats(100, 0.5, 1.0, 0.9), F05)


def test_variance_rejects_wrong_type():
    with pytest.raises(InvalidParameterError):
        asymptotic_variance((30, 20, 10, 40), F1)  # type: ignore[arg-type]


def test_summary_stats_validation():
    with pytest.raises(InvalidParameterError):
        SummaryStats(0, 0.5, 0.8, 0.9)
    with pytest.raises(InvalidParameterError):
        SummaryStats(10, 1.5, 0.8, 0.9)
    with pytest.raises(InvalidParameterError):
        SummaryStats(10, 0.5, 0.0, 0.9)
    with pytest.raises(InvalidParameterError):
        SummaryStats(10, 0.5, 0.8, 1.1)


# ---------------------------------------------------------------------------
# confidence intervals
# ---------------------------------------------------------------------------


def test_ci_retail_example():
    report = confidence_interval(RETAIL_STATS, F05, 0.95)
    assert report.estimate == 0.861
    assert report.se == pytest.approx(RETAIL_SE, rel=1e-12)
    # 0.861 +/- 0.032 at the printed precision
    assert report.half_width == pytest.approx(0.0318080, abs=5e-7)
    assert report.ci_lower == pytest.approx(0.861 - report.half_width, rel=1e-15)
    assert report.ci_upper == pytest.approx(0.861 + report.half_width, rel=1e-15)
    assert not report.at_boundary


def test_ci_zero_width_at_boundary():
    report = confidence_interval(ConfusionCounts(50, 0, 0, 50), F05, 0.95)
    assert (report.ci_lower, report.ci_upper) == (1.0, 1.0)
    assert report.variance == 0.0
    assert report.at_boundary


def test_ci_higher_level_nests_strictly():
    low = confidence_interval(RETAIL_STATS, F05, 0.95)
    high = confidence_interval(RETAIL_STATS, F05, 0.99)
    assert high.ci_lower < low.ci_lower
    assert high.ci_upper > low.ci_upper


def test_ci_invariants_random_counts():
    rng = np.random.default_rng(5)
    for _ in range(200):
        counts = ConfusionCounts(*(int(v) for v in rng.integers([1, 0, 0, 0], 200, size=4)))
        params = TverskyParams(*(10.0 ** rng.uniform(-1, 0.5, size=2)))
        level = float(rng.uniform(0.5, 0.999))
        report = confidence_interval(counts, params, level)
        assert 0.0 <= report.ci_lower <= report.estimate <= report.ci_upper <= 1.0
        assert report.variance >= 0.0
        z = normal_quantile(0.5 * (1.0 + level))
        assert report.half_width == pytest.approx(z * report.se, rel=1e-14)


def test_ci_level_validation():
    for level in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(InvalidParameterError):
            confidence_interval(RETAIL_STATS, F05, level)


# ---------------------------------------------------------------------------
# algebraic properties
# ---------------------------------------------------------------------------


def test_scaling_counts_leaves_index_and_variance_fixed():
    rng = np.random.default_rng(17)
    for _ in range(200):
        counts = ConfusionCounts(*(int(v) for v in rng.integers([1, 0, 0, 0], 300, size=4)))
        params = TverskyParams(*(10.0 ** rng.uniform(-1, 0.5, size=2)))
        k = int(rng.integers(2, 9))
        scaled = counts.scaled(k)
        assert tversky_index(scaled, params) == pytest.approx(
            tversky_index(counts, params), rel=1e-12
        )
        assert asymptotic_variance(scaled, params) == pytest.approx(
            asymptotic_variance(counts, params), rel=1e-12
        )
        se = math.sqrt(asymptotic_variance(counts, params) / counts.n)
        se_scaled = math.sqrt(asymptotic_variance(scaled, params) / scaled.n)
        assert se_scaled == pytest.approx(se / math.sqrt(k), rel=1e-12)


def test_equal_weight_squaring_identity():
    # error ratio at weights (a^2, a^2) is a times the ratio at (a, a)
    counts = ConfusionCounts(37, 11, 5, 47)
    for a in (0.3, 0.5, 1.0, 1.7):
        lhs = weighted_error_ratio(counts, TverskyParams(a * a, a * a))
        rhs = a * weighted_error_ratio(counts, TverskyParams(a, a))
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_squared_weight_ratio_bounded_by_max_weight():
    rng = np.random.default_rng(23)
    for _ in range(500):
        counts = ConfusionCounts(*(int(v) for v in rng.integers([1, 0, 0, 0], 300, size=4)))
        if counts.fn + counts.fp == 0:
            continue
        params = TverskyParams(*(10.0 ** rng.uniform(-1, 0.5, size=2)))
        ratio = weighted_error_ratio(counts, params.squared()) / weighted_error_ratio(
            counts, params
        )
        assert ratio <= params.max_weight * (1.0 + 1e-12)


def test_weighted_error_ratio_avoids_reciprocal_cancellation():
    # tp large enough that 1/index - 1 would lose digits to cancellation
    counts = ConfusionCounts(10**6, 1, 1, 0)
    ratio = weighted_error_ratio(counts, F05)
    assert ratio == (0.8 + 0.2) / 1e6


# ---------------------------------------------------------------------------
# standard normal quantile and CDF
# ---------------------------------------------------------------------------


def test_quantile_center_and_reference_point():
    assert normal_quantile(0.5) == 0.0
    assert normal_quantile(0.975) == pytest.approx(1.959963984540054, abs=1e-9)


@pytest.mark.parametrize("p", [0.01, 0.1, 0.3])
def test_quantile_symmetry(p):
    assert normal_quantile(p) == pytest.approx(-normal_quantile(1.0 - p), abs=1e-12)


def test_quantile_accuracy_against_scipy():
    grid = np.concatenate(
        [
            np.logspace(-10, -1, 250),
            np.linspace(0.1, 0.9, 250),
            1.0 - np.logspace(-10, -1, 250),
            [1e-10, 0.5, 1.0 - 1e-10],
        ]
    )
    worst = max(abs(normal_quantile(float(p)) - float(norm.ppf(p))) for p in grid)
    assert worst <= 1e-9


def test_quantile_domain_errors():
    for p in (0.0, 1.0, -0.1, 1.1, math.nan, "0.5"):
        with pytest.raises(InvalidParameterError):
            normal_quantile(p)  # type: ignore[arg-type]


def test_cdf_matches_scipy():
    xs = np.linspace(-8.0, 8.0, 801)
    worst = max(abs(normal_cdf(float(x)) - float(norm.cdf(x))) for x in xs)
    assert worst <= 1e-14


def test_cdf_rejects_non_finite():
    for x in (math.inf, -math.inf, math.nan):
        with pytest.raises(InvalidParameterError):
            normal_cdf(x)

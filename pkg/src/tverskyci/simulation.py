"""Monte Carlo harness and bootstrap oracle for the analytic formulas.

The synthetic data model is a two-component Gaussian score: a binary label
with prevalence ``prevalence`` and a score S ~ Normal(shift * label, 1)
thresholded into a prediction I(S > threshold). The implied joint cell
probabilities are::

    P(pred=1 | label=1) = normal_cdf(shift - threshold)
    P(pred=1 | label=0) = normal_cdf(-threshold)

Replications draw the four confusion cells directly from those
probabilities (a multinomial draw of n records has exactly the same joint
law as n latent-score draws, and every statistic here depends on the cells
only). Each replication uses its own counter-based random stream keyed on
(seed, replication index), so results are bitwise reproducible no matter
how replications are scheduled, and aggregation reads per-replication
arrays in index order.

The nonparametric bootstrap here is a verification oracle for the analytic
standard error, not an alternative product feature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSampleError, InvalidParameterError
from .estimation import (
    ConfusionCounts,
    TverskyParams,
    _require_count,
    _require_open_unit,
    confidence_interval,
    normal_cdf,
)

__all__ = [
    "ScoreModel",
    "SimulationConfig",
    "SimulationReport",
    "HistogramSummary",
    "population_index",
    "population_variance",
    "run_simulation",
    "replication_estimates",
    "bootstrap_se",
    "histogram_summary",
]

_SEED_BOUND = 2**64


def _require_seed(value: object, name: str = "seed") -> int:
    seed = _require_count(value, name)
    if seed >= _SEED_BOUND:
        raise InvalidParameterError(f"{name} must fit in 64 bits, got {seed}")
    return seed


def _stream(seed: int, index: int) -> np.random.Generator:
    # Counter-based generator keyed on (seed, replication index).
    return np.random.Generator(np.random.Philox(key=np.array([seed, index], dtype=np.uint64)))


# ---------------------------------------------------------------------------
# generative model
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ScoreModel:
    """Gaussian score model: label ~ Bernoulli(prevalence), score
    S ~ Normal(shift * label, 1), prediction = I(S > threshold)."""

    prevalence: float
    shift: float
    threshold: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "prevalence", _require_open_unit(self.prevalence, "prevalence"))
        for name in ("shift", "threshold"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def cell_probabilities(self) -> tuple[float, float, float, float]:
        """(tp, fn, fp, tn) probabilities; pairs sum exactly to the class
        masses so the four cells total 1 to within one rounding."""
        hit = normal_cdf(self.shift - self.threshold)
        false_alarm = normal_cdf(-self.threshold)
        p_tp = self.prevalence * hit
        p_fp = (1.0 - self.prevalence) * false_alarm
        return (
            p_tp,
            self.prevalence - p_tp,
            p_fp,
            (1.0 - self.prevalence) - p_fp,
        )


def population_index(model: ScoreModel, params: TverskyParams) -> float:
    """Population Tversky index implied by the model's cell probabilities.

    Closed form, so simulation baselines carry no sampling error of their
    own.
    """
    p_tp, p_fn, p_fp, _ = model.cell_probabilities
    if p_tp <= 0.0:
        raise DegenerateSampleError("model gives zero true-positive probability")
    ratio = (params.fp_weight * p_fp + params.fn_weight * p_fn) / p_tp
    return 1.0 / (1.0 + ratio)


def population_variance(model: ScoreModel, params: TverskyParams) -> float:
    """Population per-observation variance implied by the model."""
    p_tp, p_fn, p_fp, _ = model.cell_probabilities
    if p_tp <= 0.0:
        raise DegenerateSampleError("model gives zero true-positive probability")
    r1 = (params.fp_weight * p_fp + params.fn_weight * p_fn) / p_tp
    r2 = (params.fp_weight**2 * p_fp + params.fn_weight**2 * p_fn) / p_tp
    index = 1.0 / (1.0 + r1)
    return (r2 + r1 * r1) * index**4 / p_tp


# ---------------------------------------------------------------------------
# replicated experiments
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SimulationConfig:
    """One replicated experiment: draw ``replications`` datasets of ``n``
    records from ``model``, estimate with ``params``, and build level-
    ``level`` intervals. ``seed`` keys every random stream."""

    model: ScoreModel
    n: int
    replications: int
    params: TverskyParams
    level: float = 0.95
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.model, ScoreModel):
            raise InvalidParameterError("model must be a ScoreModel")
        if not isinstance(self.params, TverskyParams):
            raise InvalidParameterError("params must be a TverskyParams")
        n = _require_count(self.n, "n")
        reps = _require_count(self.replications, "replications")
        if n < 1 or reps < 1:
            raise InvalidParameterError("n and replications must be >= 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "replications", reps)
        object.__setattr__(self, "level", _require_open_unit(self.level, "level"))
        object.__setattr__(self, "seed", _require_seed(self.seed))


@dataclass(frozen=True, slots=True)
class SimulationReport:
    """Aggregates over the non-degenerate replications.

    ``coverage`` is the fraction of intervals containing ``true_value``;
    ``sd_estimates`` is the spread of the point estimates (0.0 when fewer
    than two replications survive) and ``mean_se`` the average analytic
    standard error, so their ratio measures how well the formula tracks
    the true spread. Replications with no true positives are excluded and
    counted in ``degenerate_count``.
    """

    true_value: float
    mean_estimate: float
    sd_estimates: float
    mean_se: float
    coverage: float
    degenerate_count: int


def _draw(config: SimulationConfig) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    pvals = np.array(config.model.cell_probabilities)
    true_value = population_index(config.model, config.params)
    reps = config.replications
    estimates = np.full(reps, np.nan)
    ses = np.full(reps, np.nan)
    covered = np.zeros(reps, dtype=bool)
    degenerate = np.zeros(reps, dtype=bool)
    for i in range(reps):
        cells = _stream(config.seed, i).multinomial(config.n, pvals)
        if cells[0] == 0:
            degenerate[i] = True
            continue
        counts = ConfusionCounts(int(cells[0]), int(cells[1]), int(cells[2]), int(cells[3]))
        report = confidence_interval(counts, config.params, config.level)
        estimates[i] = report.estimate
        ses[i] = report.se
        covered[i] = report.ci_lower <= true_value <= report.ci_upper
    return estimates, ses, covered, degenerate


def run_simulation(config: SimulationConfig) -> SimulationReport:
    """Run the replicated experiment and aggregate.

    Deterministic given (seed, config): replication i always draws from
    the stream keyed (seed, i), and aggregation reads the per-replication
    arrays in index order.
    """
    estimates, ses, covered, degenerate = _draw(config)
    kept = ~degenerate
    n_kept = int(kept.sum())
    if n_kept == 0:
        raise DegenerateSampleError(
            f"all {config.replications} replications were degenerate (no true positives)"
        )
    return SimulationReport(
        true_value=population_index(config.model, config.params),
        mean_estimate=float(estimates[kept].mean()),
        sd_estimates=float(estimates[kept].std(ddof=1)) if n_kept >= 2 else 0.0,
        mean_se=float(ses[kept].mean()),
        coverage=float(covered[kept].mean()),
        degenerate_count=int(degenerate.sum()),
    )


def replication_estimates(config: SimulationConfig) -> np.ndarray:
    """Point estimates of the non-degenerate replications, in replication
    order; the same draws run_simulation aggregates."""
    estimates, _, _, degenerate = _draw(config)
    return estimates[~degenerate]


# ---------------------------------------------------------------------------
# bootstrap oracle
# ---------------------------------------------------------------------------


def bootstrap_se(
    counts: ConfusionCounts,
    params: TverskyParams,
    resamples: int = 100_000,
    seed: int = 0,
) -> float:
    """Nonparametric bootstrap standard error of the index.

    Each resample redraws the four cells from a multinomial at the
    observed proportions and recomputes the index; the returned value is
    the standard deviation of the resampled indices. Resamples with no
    true positives are skipped; more than half of them degenerate is an
    error.
    """
    if not isinstance(counts, ConfusionCounts):
        raise InvalidParameterError("counts must be a ConfusionCounts")
    resamples = _require_count(resamples, "resamples")
    if resamples < 100:
        raise InvalidParameterError(f"resamples must be >= 100, got {resamples}")
    seed = _require_seed(seed)
    if counts.tp == 0:
        raise DegenerateSampleError("sample has no true positives; nothing to resample")
    n = counts.n
    pvals = np.array([counts.tp, counts.fn, counts.fp, counts.tn]) / n
    draws = np.random.default_rng(seed).multinomial(n, pvals, size=resamples)
    tp = draws[:, 0].astype(float)
    kept = tp > 0
    skipped = resamples - int(kept.sum())
    if 2 * skipped > resamples:
        raise DegenerateSampleError(
            f"{skipped} of {resamples} resamples were degenerate (no true positives)"
        )
    errors = params.fp_weight * draws[kept, 2] + params.fn_weight * draws[kept, 1]
    indices = tp[kept] / (tp[kept] + errors)
    return float(indices.std(ddof=1))


# ---------------------------------------------------------------------------
# distribution diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class HistogramSummary:
    """Equal-width bin counts plus moment diagnostics of a sample of
    estimates. Skewness and excess kurtosis are None for a constant
    sample, where they are undefined."""

    counts: tuple[int, ...]
    edges: tuple[float, ...]
    skewness: float | None
    excess_kurtosis: float | None
    n: int


def histogram_summary(estimates: object, bins: int = 30) -> HistogramSummary:
    """Bin the estimates over [min, max] and report shape diagnostics.

    An asymptotically normal estimator should show skewness and excess
    kurtosis near zero at scale.
    """
    bins = _require_count(bins, "bins")
    if bins < 1:
        raise InvalidParameterError("bins must be >= 1")
    values = np.asarray(estimates, dtype=float)
    if values.ndim != 1:
        values = values.ravel()
    if values.size < 2:
        raise InvalidParameterError("need at least 2 estimates to summarize")
    if not np.all(np.isfinite(values)):
        raise InvalidParameterError("estimates must all be finite")
    counts, edges = np.histogram(values, bins=bins)
    if values.min() == values.max():
        # A constant sample has no spread; don't let the mean's rounding
        # residue masquerade as moments.
        skewness = excess_kurtosis = None
    else:
        centered = values - values.mean()
        m2 = float(np.mean(centered**2))
        skewness = float(np.mean(centered**3)) / m2**1.5
        excess_kurtosis = float(np.mean(centered**4)) / m2**2 - 3.0
    return HistogramSummary(
        counts=tuple(int(c) for c in counts),
        edges=tuple(float(e) for e in edges),
        skewness=skewness,
        excess_kurtosis=excess_kurtosis,
        n=int(values.size),
    )

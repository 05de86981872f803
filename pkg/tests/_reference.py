"""Shared reference experiment used across test modules."""

from tverskyci import ScoreModel, SimulationConfig, TverskyParams

# Balanced labels, unit-variance Gaussian scores shifted by 2.5 for
# positives, thresholded at 1, F0.5 weights.
REFERENCE_MODEL = ScoreModel(prevalence=0.5, shift=2.5, threshold=1.0)
REFERENCE_PARAMS = TverskyParams(0.8, 0.2)
REFERENCE_CONFIG = SimulationConfig(
    model=REFERENCE_MODEL,
    n=1000,
    replications=10000,
    params=REFERENCE_PARAMS,
    level=0.95,
    seed=0,
)

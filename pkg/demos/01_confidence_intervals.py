"""How much should you trust an F-score computed on a validation set?

A walkthrough of the estimation path: confusion counts in, point estimate
with a standard error and confidence interval out. Run with:

    python demos/01_confidence_intervals.py
"""

from tverskyci import (
    ConfusionCounts,
    SummaryStats,
    confidence_interval,
    fbeta_to_tversky,
    precision,
    recall,
    tversky_index,
)

# Suppose a validation set of 535 records produced these confusion counts
# (true positives, false negatives, false positives, true negatives).
counts = ConfusionCounts(tp=286, fn=43, fp=46, tn=160)

print("validation set:", counts)
print(f"precision = {precision(counts):.4f}")
print(f"recall    = {recall(counts):.4f}")

# F0.5 leans toward precision. Its weights put 0.8 on false positives and
# 0.2 on false negatives.
params = fbeta_to_tversky(0.5)
print(f"\nF0.5 weights: fp_weight={params.fp_weight}, fn_weight={params.fn_weight}")
print(f"F0.5 point estimate = {tversky_index(counts, params):.4f}")

# The point estimate alone says nothing about sampling noise. The interval
# comes from the large-sample normal approximation; no resampling needed.
report = confidence_interval(counts, params, level=0.95)
print(f"\nstandard error = {report.se:.4f}")
print(f"95% interval   = [{report.ci_lower:.4f}, {report.ci_upper:.4f}]"
      f"   (half-width {report.half_width:.4f})")

# The same machinery runs from published summary values when the raw
# counts are gone: sample size, true-positive rate, the index, and the
# index recomputed with squared weights.
stats = SummaryStats(n=535, tp_rate=0.535, tversky=0.861, tversky_sq=0.900)
from_summary = confidence_interval(stats, params, level=0.95)
print("\nfrom summary statistics alone:")
print(f"estimate {from_summary.estimate:.3f} +/- {from_summary.half_width:.3f}")

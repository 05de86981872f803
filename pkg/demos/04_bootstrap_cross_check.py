"""Cross-check the closed-form standard error against the bootstrap.

The bootstrap needs a hundred thousand resamples to say what the formula
says instantly; here it serves as an independent oracle.

    python demos/04_bootstrap_cross_check.py
"""

import time

from tverskyci import ConfusionCounts, bootstrap_se, confidence_interval, fbeta_to_tversky

params = fbeta_to_tversky(0.5)

for counts in (
    ConfusionCounts(tp=300, fn=60, fp=40, tn=600),
    ConfusionCounts(tp=286, fn=43, fp=46, tn=160),
    ConfusionCounts(tp=90, fn=25, fp=35, tn=850),
):
    start = time.perf_counter()
    analytic = confidence_interval(counts, params).se
    analytic_time = time.perf_counter() - start

    start = time.perf_counter()
    resampled = bootstrap_se(counts, params, resamples=100_000, seed=0)
    bootstrap_time = time.perf_counter() - start

    gap = (resampled - analytic) / analytic
    print(f"{counts}")
    print(f"  analytic se  = {analytic:.6f}   ({analytic_time * 1e6:7.1f} us)")
    print(f"  bootstrap se = {resampled:.6f}   ({bootstrap_time * 1e3:7.1f} ms)")
    print(f"  relative gap = {gap:+.2%}\n")

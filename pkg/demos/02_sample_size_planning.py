"""How much validation data does the next study need?

The variance of the index estimate, scaled by the false-negative weight
and the positive-label rate, has a universal cap that depends only on the
larger of the two weights. Planning against that cap is conservative: it
holds for any prediction rule, so the next study may swap models freely.

    python demos/02_sample_size_planning.py
"""

from tverskyci import bound_table, fbeta_to_tversky, required_events, required_total

# The cap V as a function of the larger weight, at the resolution plans use.
print("planning bound:")
print("  max_weight  V")
for max_weight, value in bound_table():
    print(f"  {max_weight:<10.1f}  {value:.4f}")

# Target: a 95% interval for F0.5 no wider than +/- 0.02. The matching
# standard error target is 0.02 / 1.96, about 0.01.
params = fbeta_to_tversky(0.5)
plan = required_events(delta=0.01, params=params)
print(f"\ntarget se 0.01 with F0.5 weights (max weight {params.max_weight}):")
print(f"  need {plan.required_events} positive-label records")

# Knowing the prevalence of positive labels converts events into a total
# sample size.
plan = required_total(delta=0.01, params=params, prevalence=0.615)
print(f"  at prevalence 0.615 that is {plan.required_total} records overall")

# The cost of halving the target: four times the data.
for delta in (0.02, 0.01, 0.005):
    plan = required_events(delta=delta, params=params)
    print(f"  delta={delta:<6} -> {plan.required_events} events")

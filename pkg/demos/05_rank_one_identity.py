"""The rank-one series and its infinite-product quotient.

W(t1, t2, y, q) sums theta-weighted hooks over single Young diagrams.
Feeding it the two variable substitutions of the blow-up chart and
dividing by the plain series collapses, coefficient by coefficient, to
the partition-like product prod (1 - (yq)^n)^-1.
"""

from blowup_genera import (
    nekrasov_okounkov_rhs,
    sample_specialization,
    verify_nekrasov_okounkov,
    w_series,
)

spec = sample_specialization(1, seed=31)
print("specialization:", spec)

w = w_series(spec, 4)
print("\nW:", w)
print("\nW with (t1, t2/t1):", w_series(spec, 4, "t2/t1"))

rhs = nekrasov_okounkov_rhs(8)
print("\nproduct side:", rhs)

report = verify_nekrasov_okounkov(spec, 8)
print("\nidentity report:")
for key, value in report.items():
    print(f"  {key}: {value}")

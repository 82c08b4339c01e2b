"""Machine-checked identities with reproducible reports.

The drivers compute both sides of the blow-up identity at several seeded
specializations and compare exactly.  Reports are deterministic functions
of (parameters, seeds): run this script twice and diff the output.
"""

from blowup_genera import (
    default_seeds,
    verify_corollary,
    verify_limit_consistency,
    verify_main_theorem,
)

seeds = default_seeds(3)

rep = verify_main_theorem(2, 1, order=9, seeds=seeds)
print(rep.to_json_str())

rep = verify_corollary(2, 1, order=9, seeds=seeds[:2])
print("\ncorollary outcome:", rep.outcome)
for line in rep.details:
    print("  detail:", line)

rep = verify_limit_consistency(2, 1, order=7, seeds=seeds[:2])
print("\nlimit consistency outcome:", rep.outcome)

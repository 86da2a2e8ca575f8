"""
Certifying inequality families
==============================

Build the standard families, check the exact criterion and look at the
residual table when a candidate fails.
"""
from fractions import Fraction

from popcert import (
    InequalitySpec, Mode, Term, check_conditions, certify, cyclic_spec,
    jensen_spec, popoviciu_spec, zhao_spec,
)

# The three-point inequality
#   f(x)+f(y)+f(z) + 3 f(mean) >= 2 f((x+y)/2) + 2 f((y+z)/2) + 2 f((z+x)/2)
spec = popoviciu_spec()
print(spec.to_json())
print("certified:", bool(certify(spec)))

# whole families at once
for n in range(2, 7):
    ok = all(certify(zhao_spec(n, m)) for m in range(n + 1))
    ok &= all(certify(cyclic_spec(n, r)) for r in range(n))
    print(f"n={n}: subset and cyclic families certified: {ok}")

print("jensen(5):", bool(certify(jensen_spec(5))))

# Dropping the mean term breaks the equality rows
bad = InequalitySpec(n=3, a=(1, 1, 1), a_mean=0, terms=spec.terms)
report = check_conditions(bad, Mode.STRICT)
print("without the mean term:", bool(report))
for failure in report.failures():
    print("  ", failure)

# The relaxed mode only asks for nonnegative residuals
loose = InequalitySpec(n=2, a=(2, 2), a_mean=0, terms=(Term(1, (1, 1)),))
print("relaxed:", bool(check_conditions(loose, Mode.RELAXED)),
      "strict:", bool(check_conditions(loose, Mode.STRICT)))

"""
Evaluating instances and finding counterexamples
================================================
"""
from fractions import Fraction

from popcert import (
    ConvexFunction, Instance, InequalitySpec, Term, evaluate_instance,
    falsify, popoviciu_spec, soundness_sweep,
    verify_witness,
)

spec = popoviciu_spec()

# square at (0, 0, 3): exact rational result
print(evaluate_instance(spec, Instance.unit((0, 0, 3)), ConvexFunction.square()))

# weights are allowed; the functions here are piecewise linear
inst = Instance(x=(Fraction(-1, 2), 2, 5), w=(1, 3, Fraction(1, 4)))
print(evaluate_instance(spec, inst, ConvexFunction.abs_at(1)))

# a random search never drops below zero for a certified spec
worst, _, _ = soundness_sweep(spec, trials=500, seed=1, max_knots=5)
print("smallest value over 500 draws:", worst)

# An uncertified candidate gets a concrete witness
bad = InequalitySpec(n=2, a=(1, 1), a_mean=0, terms=(Term(3, (1, 1)),))
wit = falsify(bad)
print("violated:", wit.violated_condition)
print("x =", [str(v) for v in wit.x], "f =", wit.f.to_json())
print("LHS - RHS =", verify_witness(bad, wit))

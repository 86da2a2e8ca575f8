"""
Absolute-value interpolation of convex data
===========================================

Any convex data set is matched exactly by v*t + u + sum a_i |t - x_i|
with a_i >= 0.
"""
from fractions import Fraction

from popcert import ConvexFunction, SampleSet, check_convex_samples, interpolate_abs

square = ConvexFunction.square()
s = SampleSet.from_function(square, [0, 1, 2, Fraction(7, 2)])
it = interpolate_abs(s)
print("v =", it.v, "u =", it.u, "a =", [str(a) for a in it.a])
for x, fx in zip(s.xs, s.fs):
    print(x, fx, it(x))

# data with a concave kink is refused, and the offending sample is named
bad = SampleSet.from_pairs([(0, 0), (1, 2), (2, 2)])
print(check_convex_samples(bad))

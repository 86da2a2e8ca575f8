"""
Weighted point systems, majorization and zero-sum vectors
=========================================================
"""
from popcert import (
    ConvexFunction, Instance, WeightedPointSystem, check_symmetric_condition, decompose,
    karamata_pair_check, karamata_value, majorizes, mean_point_system,
    popoviciu_spec, recompose,
)

# (3, 0) majorizes (2, 1), so sum f(x) >= sum f(y) for convex f
x, y = (3, 0), (2, 1)
print("majorizes:", majorizes(x, y))
print("pair check:", karamata_pair_check(x, y).passed)
rev = karamata_pair_check(y, x)
print("reverse fails at t =", rev.violating_t, "with sum", rev.violating_sum)

# a system with weights summing to zero
sys = WeightedPointSystem(z=(-1, 0, 1), w=(1, -2, 1))
print("passes:", check_symmetric_condition(sys).passed)
for f in (ConvexFunction.square(), ConvexFunction.abs_at(0), ConvexFunction.abs_at(1, 3)):
    print(karamata_value(sys, f))

# certified specs carry a point system at the instance's means
cert = mean_point_system(popoviciu_spec(), Instance.unit((0, 1, 5)))
for u, z in cert.rows():
    print(f"{str(u):>6} at {z}")

# a zero-sum vector as a positive combination of e_i - e_j
v = (3, -1, 2, -4)
d = decompose(v)
print(d)
print(recompose(d, len(v)) == v)

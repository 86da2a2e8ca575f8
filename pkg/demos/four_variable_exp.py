"""
A four-variable polynomial inequality through exp
=================================================

For nonnegative a, b, c, d,

    a^4 + b^4 + c^4 + d^4 + 4abcd >= 2(a^2bc + b^2cd + c^2da + d^2ab).

Substituting x = ln a^4 and so on into the cyclic n=4, r=3 inequality
with f = exp yields twice this statement.
"""
import math
import random
from fractions import Fraction

from popcert import ConvexFunction, Instance, certify, cyclic_spec, instance_sides


def poly_gap(a, b, c, d):
    return (a**4 + b**4 + c**4 + d**4 + 4 * a * b * c * d
            - 2 * (a * a * b * c + b * b * c * d + c * c * d * a + d * d * a * b))


spec = cyclic_spec(4, 3)
print("cyclic(4, 3) certified:", bool(certify(spec)))

rng = random.Random(0)
for _ in range(5):
    vals = [Fraction(rng.randint(1, 30), rng.randint(1, 4)) for _ in range(4)]
    x = [Fraction(4 * math.log(v)) for v in vals]
    lhs, rhs = instance_sides(spec, Instance.unit(x), ConvexFunction.exp())
    print([str(v) for v in vals], "exp gap:", lhs - rhs, "2*poly gap:", float(2 * poly_gap(*vals)))

print("equality at a=b=c=d:", poly_gap(*[Fraction(5, 2)] * 4))

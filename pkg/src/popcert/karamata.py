"""Weighted Karamata checks in symmetric form.

A system of points ``z_k`` with signed weights ``w_k`` satisfies the
symmetric condition when

    sum_k w_k = 0   and   sum_k w_k |z_k - t| >= 0  for every t in {z_k}.

Every such system has ``sum_k w_k f(z_k) >= 0`` for every convex ``f``:
interpolate ``f`` on the points by an affine part plus nonnegative
multiples of ``|t - z_j|`` and the two conditions kill or sign each piece.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import LengthMismatch
from .numerics import ConvexFunction, as_rationals, eval_convex, require_exact


@dataclass(frozen=True)
class WeightedPointSystem:
    z: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "z", as_rationals(self.z, "z"))
        object.__setattr__(self, "w", as_rationals(self.w, "w"))
        if len(self.z) != len(self.w):
            raise LengthMismatch(f"z has {len(self.z)} points but w has {len(self.w)} weights")
        if not self.z:
            raise LengthMismatch("a weighted point system needs at least one point")

    def abs_sum(self, t: Fraction) -> Fraction:
        return sum((wk * abs(zk - t) for zk, wk in zip(self.z, self.w)), Fraction(0))


@dataclass(frozen=True)
class SymmetricReport:
    passed: bool
    weight_sum: Fraction
    table: tuple[tuple[Fraction, Fraction], ...]  # (t, sum_k w_k |z_k - t|) for each t in z order
    failure: str | None = None  # "weight_sum" or "abs_sum"
    violating_t: Fraction | None = None
    violating_sum: Fraction | None = None

    def __bool__(self):
        return self.passed


def check_symmetric_condition(sys: WeightedPointSystem) -> SymmetricReport:
    weight_sum = sum(sys.w, Fraction(0))
    table = tuple((t, sys.abs_sum(t)) for t in sys.z)
    if weight_sum != 0:
        return SymmetricReport(False, weight_sum, table, failure="weight_sum")
    for t, value in table:
        if value < 0:
            return SymmetricReport(False, weight_sum, table, "abs_sum", t, value)
    return SymmetricReport(True, weight_sum, table)


def karamata_value(sys: WeightedPointSystem, f: ConvexFunction) -> Fraction:
    """``sum_k w_k f(z_k)``, exactly."""
    require_exact(f)
    return sum((wk * eval_convex(f, zk) for zk, wk in zip(sys.z, sys.w)), Fraction(0))


def _same_length(x, y):
    if len(x) != len(y):
        raise LengthMismatch(f"sequences have lengths {len(x)} and {len(y)}")


def pair_system(x: Sequence, y: Sequence) -> WeightedPointSystem:
    """Points ``x + y`` with weights +1 on ``x`` and -1 on ``y``."""
    _same_length(x, y)
    if not x:
        raise LengthMismatch("need at least one point on each side")
    return WeightedPointSystem(tuple(x) + tuple(y), (1,) * len(x) + (-1,) * len(y))


def karamata_pair_check(x: Sequence, y: Sequence) -> SymmetricReport:
    """Passing certifies ``sum f(x_i) >= sum f(y_i)`` for all convex ``f``."""
    return check_symmetric_condition(pair_system(x, y))


def majorizes(x: Sequence, y: Sequence) -> bool:
    """Standard majorization: descending prefix sums of ``x`` dominate, totals agree."""
    _same_length(x, y)
    xs = sorted(as_rationals(x, "x"), reverse=True)
    ys = sorted(as_rationals(y, "y"), reverse=True)
    px = py = Fraction(0)
    for a, b in zip(xs, ys):
        px += a
        py += b
        if px < py:
            return False
    return px == py


def abs_sum_dominates(x: Sequence, y: Sequence, t) -> bool:
    _same_length(x, y)
    (t,) = as_rationals([t], "t")
    lhs = sum((abs(v - t) for v in as_rationals(x, "x")), Fraction(0))
    rhs = sum((abs(v - t) for v in as_rationals(y, "y")), Fraction(0))
    return lhs >= rhs

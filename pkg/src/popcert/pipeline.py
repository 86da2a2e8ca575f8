"""End-to-end certification, evaluation and counterexamples for specs.

For a certified spec and a concrete instance ``(x, w)`` the difference
LHS - RHS can be rewritten as ``sum_k u_k f(z_k)`` over the points
``x_1..x_n``, the global weighted mean and one mean per term. That system
satisfies the symmetric Karamata condition, which is what
:func:`mean_point_system` materialises.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .criterion import CheckReport, InequalitySpec, Mode, check_conditions
from .errors import DimensionMismatch, InvalidInstance, NotCertified, ParseError
from .karamata import WeightedPointSystem, check_symmetric_condition
from .numerics import (
    ConvexFunction,
    as_rationals,
    dot,
    eval_convex,
    random_convex,
    random_rational,
)

# relative tolerance for the floating-point exp builtin
EXP_RTOL = 1e-9


@dataclass(frozen=True)
class Instance:
    x: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", as_rationals(self.x, "x"))
        object.__setattr__(self, "w", as_rationals(self.w, "w"))
        if len(self.x) != len(self.w):
            raise DimensionMismatch(f"x has {len(self.x)} points but w has {len(self.w)} weights")
        for i, wi in enumerate(self.w):
            if wi < 0:
                raise InvalidInstance(f"w[{i}]: weight {wi} is negative")

    @classmethod
    def unit(cls, x: Sequence) -> Instance:
        return cls(tuple(x), (1,) * len(x))

    def to_json(self) -> dict:
        return {"x": [str(v) for v in self.x], "w": [str(v) for v in self.w]}

    @classmethod
    def from_json(cls, data) -> Instance:
        if not isinstance(data, dict) or "x" not in data or "w" not in data:
            raise ParseError("instance: expected an object with 'x' and 'w'")
        if not isinstance(data["x"], list) or not isinstance(data["w"], list):
            raise ParseError("instance: 'x' and 'w' must be lists")
        return cls(as_rationals(data["x"], "x"), as_rationals(data["w"], "w"))


def validate_instance(spec: InequalitySpec, inst: Instance) -> None:
    """Raise unless every weighted mean in the inequality is defined."""
    if len(inst.x) != spec.n:
        raise DimensionMismatch(f"instance has {len(inst.x)} points, spec has n = {spec.n}")
    if sum(inst.w, Fraction(0)) <= 0:
        raise InvalidInstance("w: weights sum to 0, the global mean is undefined")
    for s, term in enumerate(spec.terms):
        if dot(term.r, inst.w) <= 0:
            raise InvalidInstance(f"terms[{s}]: sum of r*w is 0, its mean is undefined")


@dataclass(frozen=True)
class KaramataCertificate:
    u: tuple[Fraction, ...]
    z: tuple[Fraction, ...]

    @property
    def system(self) -> WeightedPointSystem:
        return WeightedPointSystem(self.z, self.u)

    def rows(self):
        return list(zip(self.u, self.z))


def certify(spec: InequalitySpec) -> CheckReport:
    """Strict-criterion report; truthy iff the inequality holds for all convex f."""
    return check_conditions(spec, Mode.STRICT)


def _weights_and_points(spec: InequalitySpec, inst: Instance):
    """The ``(u_k, z_k)`` pairs: points, global mean, then one per term."""
    total = sum(inst.w, Fraction(0))
    u = [ai * wi for ai, wi in zip(spec.a, inst.w)]
    z = list(inst.x)
    u.append(spec.a_mean * total)
    z.append(dot(inst.w, inst.x) / total)
    wx = [wi * xi for wi, xi in zip(inst.w, inst.x)]
    for term in spec.terms:
        mass = dot(term.r, inst.w)
        u.append(-term.b * mass)
        z.append(dot(term.r, wx) / mass)
    return u, z


def mean_point_system(spec: InequalitySpec, inst: Instance) -> KaramataCertificate:
    validate_instance(spec, inst)
    report = certify(spec)
    if not report:
        raise NotCertified("spec fails the criterion: " + "; ".join(report.failures()))
    u, z = _weights_and_points(spec, inst)
    return KaramataCertificate(tuple(u), tuple(z))


def instance_sides(spec: InequalitySpec, inst: Instance, f: ConvexFunction):
    """Left and right hand sides of the inequality, separately."""
    validate_instance(spec, inst)
    u, z = _weights_and_points(spec, inst)
    values = [eval_convex(f, zk) for zk in z]
    lhs_parts = [uk * fk for uk, fk in zip(u, values) if uk >= 0]
    rhs_parts = [-uk * fk for uk, fk in zip(u, values) if uk < 0]
    if f.is_exact:
        return sum(lhs_parts, Fraction(0)), sum(rhs_parts, Fraction(0))
    return math.fsum(float(p) for p in lhs_parts), math.fsum(float(p) for p in rhs_parts)


def evaluate_instance(spec: InequalitySpec, inst: Instance, f: ConvexFunction):
    """LHS - RHS; a Fraction for exact ``f``, a float for ``exp``."""
    lhs, rhs = instance_sides(spec, inst, f)
    return lhs - rhs


def holds_within_tolerance(lhs: float, rhs: float, rtol: float = EXP_RTOL) -> bool:
    return lhs - rhs >= -rtol * max(abs(lhs), abs(rhs), 1.0)


@dataclass(frozen=True)
class Witness:
    f: ConvexFunction
    x: tuple[Fraction, ...]
    w: tuple[Fraction, ...]
    violated_condition: str

    @property
    def instance(self) -> Instance:
        return Instance(self.x, self.w)

    def to_json(self) -> dict:
        return {
            "f": self.f.to_json(),
            "x": [str(v) for v in self.x],
            "w": [str(v) for v in self.w],
            "violated_condition": self.violated_condition,
        }


def falsify(spec: InequalitySpec) -> Witness | None:
    """A concrete counterexample for a spec failing the strict criterion.

    Unit weights throughout. A residual ``< 0`` at ``i`` is exposed by
    ``f(t) = t`` at ``x = e_i``, a residual ``> 0`` by ``f(t) = -t``, and a
    negative pair slack ``(i, j)`` by ``f(t) = |t|`` with ``x_i = 1``,
    ``x_j = -1``.
    """
    report = certify(spec)
    if report:
        return None
    n = spec.n
    ones = (Fraction(1),) * n
    for i, res in enumerate(report.equality_residuals):
        if res != 0:
            x = tuple(Fraction(int(k == i)) for k in range(n))
            slope = 1 if res < 0 else -1
            cond = f"a_{i + 1} + a - sum_s b_s r_s,{i + 1} = {res} {'< 0' if res < 0 else '> 0'}"
            return Witness(ConvexFunction.affine(slope, 0), x, ones, cond)
    for (i, j), slack in report.pair_slacks.items():
        if slack < 0:
            x = tuple(Fraction(int(k == i) - int(k == j)) for k in range(n))
            cond = f"a_{i + 1} + a_{j + 1} - sum_s b_s |r_s,{i + 1} - r_s,{j + 1}| = {slack} < 0"
            return Witness(ConvexFunction.abs_at(0), x, ones, cond)
    raise AssertionError("rejected report without a failing condition")  # pragma: no cover


def verify_witness(spec: InequalitySpec, wit: Witness) -> Fraction:
    """Re-evaluate a witness from scratch; a genuine one is strictly negative."""
    return evaluate_instance(spec, Instance(wit.x, wit.w), wit.f)


def random_instance(rng: random.Random, n: int, coordinate_range=10) -> Instance:
    """Rational points in ``[-range, range]`` and strictly positive weights."""
    x = tuple(random_rational(rng, coordinate_range) for _ in range(n))
    w = tuple(Fraction(rng.randint(1, 30), rng.randint(1, 8)) for _ in range(n))
    return Instance(x, w)


def soundness_sweep(spec: InequalitySpec, trials: int, seed: int = 0, max_knots: int = 5):
    """Evaluate the spec on random instances and functions.

    Returns the minimum LHS - RHS seen and the arguments that produced it.
    """
    rng = random.Random(seed)
    worst = None
    for _ in range(trials):
        inst = random_instance(rng, spec.n)
        f = random_convex(rng.getrandbits(64), max_knots)
        value = evaluate_instance(spec, inst, f)
        if worst is None or value < worst[0]:
            worst = (value, inst, f)
    return worst

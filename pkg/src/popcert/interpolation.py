"""Absolute-value interpolation of convex sample data.

Given samples ``(x_1, f_1), ..., (x_n, f_n)`` of a convex function with
``x_1 < ... < x_n``, :func:`interpolate_abs` finds ``v``, ``u`` and weights
``a_i >= 0`` such that

    f_j = v * x_j + u + sum_i a_i * |x_j - x_i|      for every j.

The weights are half the jumps in consecutive secant slopes, so they are
nonnegative exactly when the data is convex.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DuplicateSample, EqualPoints, NonConvexData, ParseError, TooFewSamples
from .numerics import ConvexFunction, as_rational


def divided_difference(y, fy, z, fz) -> Fraction:
    """Slope of the secant through ``(y, fy)`` and ``(z, fz)``."""
    y, fy, z, fz = (as_rational(v) for v in (y, fy, z, fz))
    if y == z:
        raise EqualPoints(f"divided difference needs distinct points, got {y} twice")
    return (fy - fz) / (y - z)


@dataclass(frozen=True)
class SampleSet:
    """Samples sorted by strictly increasing x.

    Build with :meth:`from_pairs`, which sorts and collapses repeated
    samples.
    """

    xs: tuple[Fraction, ...]
    fs: tuple[Fraction, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> SampleSet:
        table: dict[Fraction, Fraction] = {}
        for i, (x, fx) in enumerate(pairs):
            x = as_rational(x, f"samples[{i}].x")
            fx = as_rational(fx, f"samples[{i}].f")
            if x in table and table[x] != fx:
                raise DuplicateSample(f"x = {x} has two values: {table[x]} and {fx}")
            table[x] = fx
        xs = tuple(sorted(table))
        return cls(xs, tuple(table[x] for x in xs))

    @classmethod
    def from_function(cls, f: ConvexFunction, xs: Iterable) -> SampleSet:
        return cls.from_pairs((x, f(as_rational(x))) for x in xs)

    def __len__(self):
        return len(self.xs)

    def slopes(self) -> list[Fraction]:
        return [
            divided_difference(self.xs[k + 1], self.fs[k + 1], self.xs[k], self.fs[k])
            for k in range(len(self.xs) - 1)
        ]


@dataclass(frozen=True)
class ConvexityCheck:
    convex: bool
    violation: int | None = None  # 0-based interior index of the first failure

    def __bool__(self):
        return self.convex


def check_convex_samples(s: SampleSet) -> ConvexityCheck:
    slopes = s.slopes()
    for i in range(1, len(slopes)):
        if slopes[i] < slopes[i - 1]:
            return ConvexityCheck(False, i)
    return ConvexityCheck(True)


@dataclass(frozen=True)
class Interpolant:
    v: Fraction
    u: Fraction
    a: tuple[Fraction, ...]
    xs: tuple[Fraction, ...]

    def __call__(self, t) -> Fraction:
        t = as_rational(t)
        return self.v * t + self.u + sum((ai * abs(t - xi) for ai, xi in zip(self.a, self.xs)), Fraction(0))

    def to_convex_function(self) -> ConvexFunction:
        knots = tuple((ai, xi) for ai, xi in zip(self.a, self.xs) if ai)
        return ConvexFunction(slope=self.v, intercept=self.u, knots=knots)


def interpolate_abs(s: SampleSet) -> Interpolant:
    n = len(s)
    if n < 2:
        raise TooFewSamples(f"interpolation needs at least 2 distinct samples, got {n}")
    slopes = s.slopes()
    # alpha_i = jump in secant slope at interior point i; endpoints carry none
    alpha = [Fraction(0)] * n
    for i in range(1, n - 1):
        alpha[i] = slopes[i] - slopes[i - 1]
        if alpha[i] < 0:
            raise NonConvexData(i, slopes[i - 1], slopes[i])
    half_total = sum(alpha, Fraction(0)) / 2
    v = slopes[0] + half_total
    u = s.fs[0] - slopes[0] * s.xs[0] - sum((al * x for al, x in zip(alpha, s.xs)), Fraction(0)) / 2
    return Interpolant(v=v, u=u, a=tuple(al / 2 for al in alpha), xs=s.xs)


def read_samples_csv(text: str) -> SampleSet:
    """Parse a CSV with header ``x,f`` and rational cells."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [h.strip() for h in reader.fieldnames] != ["x", "f"]:
        raise ParseError(f"samples: header must be 'x,f', got {reader.fieldnames}")
    pairs = []
    for row_no, row in enumerate(reader, start=1):
        row = {k.strip(): v for k, v in row.items()}
        if row.get("x") is None or row.get("f") is None:
            raise ParseError(f"samples row {row_no}: expected two cells")
        pairs.append((as_rational(row["x"], f"row {row_no}.x"), as_rational(row["f"], f"row {row_no}.f")))
    return SampleSet.from_pairs(pairs)

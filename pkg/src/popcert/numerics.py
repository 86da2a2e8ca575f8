"""Exact rationals and piecewise-linear convex functions.

All arithmetic runs on :class:`fractions.Fraction`, which is always kept in
lowest terms with a positive denominator, so two equal rationals compare and
hash identically.

A :class:`ConvexFunction` is stored in the absolute-value basis

    f(t) = slope * t + intercept + sum_i c_i * |t - t_i|,   c_i >= 0,

which can reproduce any convex function on a finite point set. Two builtins
(``square`` and ``exp``) cover the cases that are not piecewise linear.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import FloatFunctionNotAllowed, ParseError

RationalLike = Union[Fraction, int, str]

BUILTINS = (None, "square", "exp")


def as_rational(value, field: str = "value") -> Fraction:
    """Coerce ``value`` to a Fraction without ever going through a float.

    Accepts Fractions, ints, and strings like ``"3"``, ``"-7/2"`` or
    ``"0.25"``. Floats and bools are rejected because they would smuggle
    rounding into an exact computation.
    """
    if isinstance(value, bool):
        raise ParseError(f"{field}: expected a rational, got bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{field}: cannot parse {value!r} as a rational") from exc
    raise ParseError(f"{field}: expected a rational string or integer, got {type(value).__name__}")


def as_rationals(values: Iterable, field: str = "values") -> tuple[Fraction, ...]:
    return tuple(as_rational(v, f"{field}[{i}]") for i, v in enumerate(values))


def parse_rational_list(text: str, field: str = "list") -> tuple[Fraction, ...]:
    """Parse a comma-separated list such as ``"2,0,-1/2"``."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if parts == [""]:
        raise ParseError(f"{field}: empty list")
    return as_rationals(parts, field)


def format_rational(q, decimal: int | None = None) -> str:
    """Render ``q`` as ``"p/q"`` (or ``"p"``); floats pass through ``repr``.

    With ``decimal`` set, rationals are shown as an N-digit decimal
    approximation. This is for display only.
    """
    if isinstance(q, float):
        return repr(q) if decimal is None else f"{q:.{decimal}f}"
    q = Fraction(q)
    if decimal is None:
        return str(q)
    # round-half-away on the exact value, no float on the way
    scale = 10**decimal
    scaled = abs(q) * scale
    digits = int(scaled + Fraction(1, 2))
    sign = "-" if q < 0 and digits else ""
    whole, frac = divmod(digits, scale)
    if decimal == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{decimal}d}"


@dataclass(frozen=True)
class ConvexFunction:
    """A convex test function.

    ``knots`` is a tuple of ``(c, t)`` pairs contributing ``c * |x - t|``.
    When ``builtin`` is set the affine part and the knots are ignored.
    """

    slope: Fraction = Fraction(0)
    intercept: Fraction = Fraction(0)
    knots: tuple[tuple[Fraction, Fraction], ...] = ()
    builtin: str | None = None

    def __post_init__(self):
        if self.builtin not in BUILTINS:
            raise ParseError(f"builtin: unknown builtin {self.builtin!r}")
        object.__setattr__(self, "slope", as_rational(self.slope, "slope"))
        object.__setattr__(self, "intercept", as_rational(self.intercept, "intercept"))
        knots = []
        for i, knot in enumerate(self.knots):
            c, t = knot
            c = as_rational(c, f"knots[{i}].c")
            t = as_rational(t, f"knots[{i}].t")
            if c < 0:
                raise ParseError(f"knots[{i}].c: coefficient {c} is negative, function would not be convex")
            knots.append((c, t))
        object.__setattr__(self, "knots", tuple(knots))

    @classmethod
    def affine(cls, slope: RationalLike = 0, intercept: RationalLike = 0) -> ConvexFunction:
        return cls(slope=slope, intercept=intercept)

    @classmethod
    def abs_at(cls, t: RationalLike = 0, c: RationalLike = 1) -> ConvexFunction:
        """``c * |x - t|``."""
        return cls(knots=((c, t),))

    @classmethod
    def square(cls) -> ConvexFunction:
        return cls(builtin="square")

    @classmethod
    def exp(cls) -> ConvexFunction:
        return cls(builtin="exp")

    @property
    def is_exact(self) -> bool:
        return self.builtin != "exp"

    def __call__(self, t):
        return eval_convex(self, t)

    def to_json(self) -> dict:
        return {
            "slope": str(self.slope),
            "intercept": str(self.intercept),
            "knots": [{"c": str(c), "t": str(t)} for c, t in self.knots],
            "builtin": self.builtin,
        }

    @classmethod
    def from_json(cls, data) -> ConvexFunction:
        if not isinstance(data, dict):
            raise ParseError("function: expected a JSON object")
        knots = data.get("knots") or []
        if not isinstance(knots, list):
            raise ParseError("knots: expected a list")
        pairs = []
        for i, k in enumerate(knots):
            if not isinstance(k, dict) or "c" not in k or "t" not in k:
                raise ParseError(f"knots[{i}]: expected an object with 'c' and 't'")
            pairs.append((as_rational(k["c"], f"knots[{i}].c"), as_rational(k["t"], f"knots[{i}].t")))
        return cls(
            slope=as_rational(data.get("slope", 0), "slope"),
            intercept=as_rational(data.get("intercept", 0), "intercept"),
            knots=tuple(pairs),
            builtin=data.get("builtin"),
        )


def eval_convex(f: ConvexFunction, t):
    """Evaluate ``f`` at ``t``.

    Exact for the piecewise-linear form and for ``square``. ``exp`` returns a
    double; its argument may be a Fraction or a float.
    """
    if f.builtin == "exp":
        return math.exp(float(t))
    t = as_rational(t, "t")
    if f.builtin == "square":
        return t * t
    value = f.slope * t + f.intercept
    for c, knot in f.knots:
        value += c * abs(t - knot)
    return value


def require_exact(f: ConvexFunction) -> None:
    if not f.is_exact:
        raise FloatFunctionNotAllowed("exp builtin only evaluates in floating point; an exact function is required")


def random_rational(rng: random.Random, bound, max_den: int = 12) -> Fraction:
    """Uniform-ish rational in ``[-bound, bound]`` with denominator <= max_den."""
    bound = as_rational(bound, "bound")
    den = rng.randint(1, max_den)
    lim = math.floor(bound * den)
    return Fraction(rng.randint(-lim, lim), den)


def random_nonneg_rational(rng: random.Random, bound, max_den: int = 12) -> Fraction:
    bound = as_rational(bound, "bound")
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, math.floor(bound * den)), den)


def random_convex(seed: int, max_knots: int = 5, coordinate_range: RationalLike = 10) -> ConvexFunction:
    """Deterministic random piecewise-linear convex function.

    The number of knots is drawn from ``0..max_knots``; knot locations lie in
    ``[-coordinate_range, coordinate_range]`` and coefficients are >= 0.
    """
    if max_knots < 0:
        raise ValueError("max_knots must be >= 0")
    rng = random.Random(seed)
    bound = as_rational(coordinate_range, "coordinate_range")
    knots = tuple(
        (random_nonneg_rational(rng, 5, 6), random_rational(rng, bound))
        for _ in range(rng.randint(0, max_knots))
    )
    return ConvexFunction(
        slope=random_rational(rng, 5, 6),
        intercept=random_rational(rng, 5, 6),
        knots=knots,
    )


def basis_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(k == i)) for k in range(n))


def dot(r: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(r, y)), Fraction(0))

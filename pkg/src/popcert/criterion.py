"""Finite criterion for Popoviciu-type inequalities.

An :class:`InequalitySpec` fixes nonnegative data ``a_1..a_n``, ``a`` and
terms ``(b_s, r_s)``. For points ``x`` and nonnegative weights ``w`` it
stands for

    sum_i a_i w_i f(x_i) + a W f(mean_w x)
        >= sum_s b_s W_s f(mean_{r_s w} x)

with ``W = sum w`` and ``W_s = sum_v r_{s,v} w_v``. The inequality holds
for every convex ``f`` exactly when

    a_i + a  = sum_s b_s r_{s,i}             for every i,
    a_i + a_j >= sum_s b_s |r_{s,i} - r_{s,j}|  for every i < j.

The relaxed mode replaces the equality by ``>=``; that version only
guarantees the absolute-value form :func:`abs_form` is nonnegative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DimensionMismatch, InvalidSpec, ParseError
from .numerics import as_rational, as_rationals, basis_vector


class Mode(enum.Enum):
    """Which first condition to test: ``=`` (strict) or ``>=`` (relaxed)."""

    STRICT = "14"
    RELAXED = "13"


@dataclass(frozen=True)
class Term:
    b: Fraction
    r: tuple[Fraction, ...]


@dataclass(frozen=True)
class InequalitySpec:
    n: int
    a: tuple[Fraction, ...]
    a_mean: Fraction
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InvalidSpec(f"n: expected a positive integer, got {self.n!r}")
        a = as_rationals(self.a, "a")
        if len(a) != self.n:
            raise InvalidSpec(f"a: expected {self.n} coefficients, got {len(a)}")
        for i, ai in enumerate(a):
            if ai < 0:
                raise InvalidSpec(f"a[{i}]: coefficient {ai} is negative")
        a_mean = as_rational(self.a_mean, "a_mean")
        if a_mean < 0:
            raise InvalidSpec(f"a_mean: coefficient {a_mean} is negative")
        terms = []
        for s, term in enumerate(self.terms):
            if not isinstance(term, Term):
                term = Term(*term)
            b = as_rational(term.b, f"terms[{s}].b")
            r = as_rationals(term.r, f"terms[{s}].r")
            if b < 0:
                raise InvalidSpec(f"terms[{s}].b: coefficient {b} is negative")
            if len(r) != self.n:
                raise InvalidSpec(f"terms[{s}].r: expected {self.n} entries, got {len(r)}")
            for i, ri in enumerate(r):
                if ri < 0:
                    raise InvalidSpec(f"terms[{s}].r[{i}]: entry {ri} is negative")
            if not any(r):
                # the weighted mean of such a term is undefined for every weight vector
                raise InvalidSpec(f"terms[{s}].r: row is all zero")
            terms.append(Term(b, r))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "a_mean", a_mean)
        object.__setattr__(self, "terms", tuple(terms))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": [str(v) for v in self.a],
            "a_mean": str(self.a_mean),
            "terms": [{"b": str(t.b), "r": [str(v) for v in t.r]} for t in self.terms],
        }

    @classmethod
    def from_json(cls, data) -> InequalitySpec:
        if not isinstance(data, dict):
            raise ParseError("spec: expected a JSON object")
        for key in ("n", "a", "a_mean"):
            if key not in data:
                raise ParseError(f"{key}: missing")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError(f"n: expected an integer, got {n!r}")
        if not isinstance(data["a"], list):
            raise ParseError("a: expected a list")
        raw_terms = data.get("terms", [])
        if not isinstance(raw_terms, list):
            raise ParseError("terms: expected a list")
        terms = []
        for s, t in enumerate(raw_terms):
            if not isinstance(t, dict) or "b" not in t or "r" not in t:
                raise ParseError(f"terms[{s}]: expected an object with 'b' and 'r'")
            if not isinstance(t["r"], list):
                raise ParseError(f"terms[{s}].r: expected a list")
            terms.append(Term(as_rational(t["b"], f"terms[{s}].b"), as_rationals(t["r"], f"terms[{s}].r")))
        return cls(
            n=n,
            a=as_rationals(data["a"], "a"),
            a_mean=as_rational(data["a_mean"], "a_mean"),
            terms=tuple(terms),
        )


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    mode: Mode
    equality_residuals: tuple[Fraction, ...]
    pair_slacks: dict[tuple[int, int], Fraction]

    def __bool__(self):
        return self.passed

    def failures(self) -> list[str]:
        out = []
        for i, res in enumerate(self.equality_residuals):
            bad = res != 0 if self.mode is Mode.STRICT else res < 0
            if bad:
                out.append(f"residual_{i + 1} = {res}")
        for (i, j), slack in self.pair_slacks.items():
            if slack < 0:
                out.append(f"slack_{i + 1},{j + 1} = {slack}")
        return out


def _check_dim(spec: InequalitySpec, y: Sequence) -> tuple[Fraction, ...]:
    y = as_rationals(y, "x")
    if len(y) != spec.n:
        raise DimensionMismatch(f"vector has {len(y)} entries, spec has n = {spec.n}")
    return y


def g_value(spec: InequalitySpec, x: Sequence) -> Fraction:
    """``sum a_u |x_u| + a |sum x| - sum_s b_s |r_s . x|``."""
    x = _check_dim(spec, x)
    support = [(k, xk) for k, xk in enumerate(x) if xk]
    value = sum((spec.a[k] * abs(xk) for k, xk in support), Fraction(0))
    value += spec.a_mean * abs(sum((xk for _, xk in support), Fraction(0)))
    for term in spec.terms:
        value -= term.b * abs(sum((term.r[k] * xk for k, xk in support), Fraction(0)))
    return value


def abs_form(spec: InequalitySpec, y: Sequence) -> Fraction:
    """Absolute-value form of the spec at ``y``; nonnegative under the relaxed criterion."""
    return g_value(spec, y)


def check_conditions(spec: InequalitySpec, mode: Mode = Mode.STRICT) -> CheckReport:
    n = spec.n
    residuals = tuple(
        spec.a[i] + spec.a_mean - sum((t.b * t.r[i] for t in spec.terms), Fraction(0)) for i in range(n)
    )
    slacks = {
        (i, j): spec.a[i] + spec.a[j] - sum((t.b * abs(t.r[i] - t.r[j]) for t in spec.terms), Fraction(0))
        for i, j in combinations(range(n), 2)
    }
    # both quantities are values of g at e_i and e_i - e_j
    for i in range(n):
        assert residuals[i] == g_value(spec, basis_vector(n, i))
    for (i, j), slack in slacks.items():
        diff = tuple(Fraction(int(k == i) - int(k == j)) for k in range(n))
        assert slack == g_value(spec, diff)

    if mode is Mode.STRICT:
        first_ok = all(res == 0 for res in residuals)
    else:
        first_ok = all(res >= 0 for res in residuals)
    passed = first_ok and all(s >= 0 for s in slacks.values())
    return CheckReport(passed, mode, residuals, slacks)

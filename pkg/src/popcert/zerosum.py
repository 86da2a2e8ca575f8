"""Decomposition of zero-sum vectors into transfers ``e_i - e_j``.

Any rational vector with coordinate sum 0 is a nonnegative combination of
differences ``e_i - e_j`` with ``i`` in its positive support and ``j`` in its
negative support. :func:`decompose` builds one greedily: match the first
positive coordinate against the first negative one and move as much mass
as possible, zeroing at least one of them per step.

Indices are 0-based throughout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import IndexOutOfRange, NotZeroSum
from .numerics import as_rationals

Decomposition = dict[tuple[int, int], Fraction]


def support_sets(x: Sequence) -> tuple[frozenset[int], frozenset[int]]:
    """Indices of the strictly positive and strictly negative coordinates."""
    x = as_rationals(x, "x")
    return (
        frozenset(k for k, v in enumerate(x) if v > 0),
        frozenset(k for k, v in enumerate(x) if v < 0),
    )


def decompose(x: Sequence) -> Decomposition:
    z = list(as_rationals(x, "x"))
    total = sum(z, Fraction(0))
    if total != 0:
        raise NotZeroSum(f"coordinates sum to {total}, not 0")
    pairs: Decomposition = {}
    while True:
        u = next((k for k, v in enumerate(z) if v > 0), None)
        if u is None:
            break
        v = next(k for k, val in enumerate(z) if val < 0)
        if z[u] + z[v] >= 0:
            amount = -z[v]
        else:
            amount = z[u]
        z[u] -= amount
        z[v] += amount
        pairs[(u, v)] = pairs.get((u, v), Fraction(0)) + amount
    return pairs


def recompose(d: Mapping[tuple[int, int], Fraction], n: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * n
    for (i, j), coeff in d.items():
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) does not fit in dimension {n}")
        out[i] += coeff
        out[j] -= coeff
    return tuple(out)

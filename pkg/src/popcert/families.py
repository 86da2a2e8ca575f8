"""Generators for the named inequality families.

Each function returns an :class:`~popcert.criterion.InequalitySpec`; every
family here passes the strict criterion, which is what makes the
corresponding inequality hold for all convex functions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .criterion import InequalitySpec, Term


def binomial(p: int, q: int) -> int:
    """``C(p, q)``, zero whenever ``q < 0`` or ``q > p``."""
    if q < 0 or p < 0 or q > p:
        return 0
    return comb(p, q)


def jensen_spec(n: int) -> InequalitySpec:
    """Weighted Jensen: ``sum w_i f(x_i) >= W f(mean)``."""
    if n < 1:
        raise ValueError("jensen_spec needs n >= 1")
    ones = (Fraction(1),) * n
    return InequalitySpec(n=n, a=ones, a_mean=Fraction(0), terms=(Term(Fraction(1), ones),))


def zhao_spec(n: int, m: int) -> InequalitySpec:
    """Generalised Popoviciu over all m-element subsets of ``n`` points.

    ``a_i = C(n-2, m-1)``, ``a = C(n-2, m-2)`` and one unit term per subset
    (lexicographic order) whose row is the subset's indicator. For
    ``m <= 0`` or ``m > n`` there are no subsets and every coefficient is 0.
    """
    if n < 2:
        raise ValueError("zhao_spec needs n >= 2")
    a_i = Fraction(binomial(n - 2, m - 1))
    a_mean = Fraction(binomial(n - 2, m - 2))
    terms = ()
    if 1 <= m <= n:
        terms = tuple(
            Term(Fraction(1), tuple(Fraction(int(i in subset)) for i in range(n)))
            for subset in combinations(range(n), m)
        )
    return InequalitySpec(n=n, a=(a_i,) * n, a_mean=a_mean, terms=terms)


def popoviciu_spec() -> InequalitySpec:
    return zhao_spec(3, 2)


def cyclic_spec(n: int, r: int) -> InequalitySpec:
    """Cyclic family: ``a_i = 2``, ``a = n - 2``, one unit term per shift start.

    Row ``s`` is ``1 + [i == s] - [i == s + r mod n]``, so the ``s``-th right
    hand mean is ``mean + (x_s - x_{s+r}) / n`` for unit weights.
    """
    if n < 2:
        raise ValueError("cyclic_spec needs n >= 2")
    r %= n
    terms = tuple(
        Term(Fraction(1), tuple(Fraction(1 + (i == s) - (i == (s + r) % n)) for i in range(n)))
        for s in range(n)
    )
    return InequalitySpec(n=n, a=(Fraction(2),) * n, a_mean=Fraction(n - 2), terms=terms)

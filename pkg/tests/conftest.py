from fractions import Fraction

import pytest
from hypothesis import strategies as st

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
nonneg_rationals = st.fractions(min_value=0, max_value=10, max_denominator=12)

_CRITERIA = []


@pytest.fixture
def criterion_log():
    """Collects one PASS/FAIL line per acceptance criterion for the summary."""

    def record(number, title, passed, detail=""):
        _CRITERIA.append((number, title, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_CRITERIA):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}  {detail}".rstrip())


def direct_difference(spec, x, w, f):
    """LHS - RHS computed straight from the displayed inequality.

    Kept deliberately naive: no shared helpers with the library's
    mean-point construction.
    """
    n = spec.n
    W = sum(w, Fraction(0))
    lhs = sum(spec.a[i] * w[i] * f(x[i]) for i in range(n))
    lhs += spec.a_mean * W * f(sum(w[v] * x[v] for v in range(n)) / W)
    rhs = 0
    for term in spec.terms:
        Ws = sum(term.r[v] * w[v] for v in range(n))
        rhs += term.b * Ws * f(sum(term.r[v] * w[v] * x[v] for v in range(n)) / Ws)
    return lhs - rhs

from __future__ import annotations

import hypothesis.strategies as st
import pytest

from hecke_starnet.laurent import LaurentPoly
from hecke_starnet.perm import Interval, Perm
from hecke_starnet.starnet import StarNetwork

# criterion label -> (status, detail), filled by test_acceptance
ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        status, detail = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"{status} criterion {label}: {detail}")


@st.composite
def laurent_polys(draw, max_terms: int = 4, span: int = 6) -> LaurentPoly:
    terms = draw(st.dictionaries(st.integers(-span, span), st.integers(-5, 5), max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def perms(draw, n: int | None = None, max_n: int = 5) -> Perm:
    if n is None:
        n = draw(st.integers(1, max_n))
    return Perm(draw(st.permutations(range(1, n + 1))))


@st.composite
def intervals(draw, n: int) -> Interval:
    a = draw(st.integers(1, n))
    b = draw(st.integers(a, n))
    return Interval(a, b, n)


@st.composite
def networks(draw, n: int | None = None, max_n: int = 4, max_m: int = 3) -> StarNetwork:
    if n is None:
        n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    return StarNetwork(n, tuple(draw(intervals(n)) for _ in range(m)))


@pytest.fixture
def q() -> LaurentPoly:
    return LaurentPoly.q()

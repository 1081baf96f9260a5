from fractions import Fraction

import pytest
from hypothesis import strategies as st

from magicpos.poly import Polynomial

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, text = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _CRITERIA.get(num, (text, True))
        _CRITERIA[num] = (text, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        text, ok = _CRITERIA[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {text}")


# -- shared strategies ---------------------------------------------------------

small_ints = st.integers(min_value=-100, max_value=100)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)

nonzero_rationals = rationals.filter(lambda q: q != 0)

positive_rationals = st.builds(
    Fraction,
    st.integers(min_value=1, max_value=50),
    st.integers(min_value=1, max_value=12),
)


def polys(coeffs=small_ints, max_degree=10):
    return st.lists(coeffs, max_size=max_degree + 1).map(Polynomial)


def nonzero_polys(coeffs=rationals, max_degree=8):
    return st.lists(coeffs, min_size=1, max_size=max_degree + 1).map(Polynomial).filter(
        lambda p: not p.is_zero
    )


def positive_polys(max_degree=8):
    return st.lists(positive_rationals, min_size=1, max_size=max_degree + 1).map(Polynomial)


@pytest.fixture
def x():
    return Polynomial.x()

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from qint.polyring import Poly
from qint.rules import SeqTable

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(bound=20, max_den=6):
    return st.builds(
        Fraction, st.integers(-bound, bound), st.integers(1, max_den)
    )


def polys(max_degree=5, bound=20, max_den=6):
    return st.lists(rationals(bound, max_den), max_size=max_degree + 1).map(Poly)


def seqtables(N, max_degree=3):
    return st.lists(polys(max_degree, 5, 3), min_size=N, max_size=N).map(
        lambda ps: SeqTable(tuple(ps))
    )


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_RESULTS = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        ACCEPTANCE_RESULTS.append((marker.args[0], marker.args[1], report.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    verdicts = {}
    for number, title, passed in ACCEPTANCE_RESULTS:
        prev = verdicts.get(number, (title, True))[1]
        verdicts[number] = (title, prev and passed)
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        title, passed = verdicts[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")

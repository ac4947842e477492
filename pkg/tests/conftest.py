import pytest
from hypothesis import strategies as st

from andnot_bounds import BooleanNetwork, UpdateFunction, parse_network

FIG1_TEXT = "a, !b & c\nb, !a & !c\nc, !a\n"
FIG2_TEXT = "a, b & d\nb, a & !c\nc, d\nd, !c & d\n"


@pytest.fixture
def fig1():
    return parse_network(FIG1_TEXT)


@pytest.fixture
def fig2():
    return parse_network(FIG2_TEXT)


@st.composite
def and_not_networks(draw, min_n=1, max_n=6, const_weight=1):
    n = draw(st.integers(min_n, max_n))
    functions = []
    for _ in range(n):
        kind = draw(st.integers(0, 5 + const_weight))
        if kind < const_weight:
            functions.append(UpdateFunction.constant(draw(st.integers(0, 1))))
            continue
        inputs = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=min(n, 3), unique=True))
        signs = draw(st.lists(st.booleans(), min_size=len(inputs), max_size=len(inputs)))
        functions.append(UpdateFunction.conjunction(zip(inputs, signs)))
    return BooleanNetwork(tuple(f"v{i}" for i in range(n)), tuple(functions))


# acceptance criteria report: one line per criterion at the end of the run

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.skipped):
        if report.skipped:
            status = "SKIP"
        else:
            status = "PASS" if report.passed else "FAIL"
        _CRITERIA[number] = (status, text, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, text, duration = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {text}  ({duration:.2f}s)")

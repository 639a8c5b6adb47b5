import pytest
from hypothesis import settings

from helpers import ACCEPTANCE_LINES, graph, top

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture
def small_graphs():
    return {
        "single": graph(["A"]),
        "edge": graph(["A", "B"], ["AB"]),
        "star": graph(["A", "B", "C"], ["AB", "AC"]),
        "path": graph(["A", "B", "C"], ["AB", "BC"]),
    }


@pytest.fixture
def small_tops():
    return {
        "single": top(["A"]),
        "chain2": top(["A", "B"], ["AB"]),
        "V": top(["A", "B", "C"], ["AB", "AC"]),
        "chain3": top(["A", "B", "C"], ["AB", "BC"]),
    }

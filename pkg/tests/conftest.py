import pytest

from ragrowth import Graph

# the acceptance grid
GRID = {
    "K1": Graph.complete(1),
    "K2": Graph.complete(2),
    "K3": Graph.complete(3),
    "edge": Graph(2, [(1, 2)]),
    "E2": Graph.empty(2),
    "E3": Graph.empty(3),
    "P3": Graph.path(3),
    "C4": Graph.cycle(4),
    "C5": Graph.cycle(5),
}

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.fixture(params=sorted(GRID), ids=sorted(GRID))
def grid_graph(request):
    return request.param, GRID[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        status, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {status}  {detail}")

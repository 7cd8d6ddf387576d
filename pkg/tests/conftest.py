import numpy as np
import pytest

from influmod import Graph, parse_edge_list
from influmod.datasets import load_football, load_karate, load_polbooks

# -- acceptance reporting ---------------------------------------------------

_CRITERIA: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(label): acceptance criterion this test belongs to"
    )


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("criterion")
    if label is None:
        return
    outcome = "PASS" if report.outcome == "passed" else "FAIL"
    _CRITERIA.setdefault(label, []).append(f"{outcome}  {report.nodeid.split('::')[-1]}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split()[0])):
        results = _CRITERIA[label]
        verdict = "PASS" if all(r.startswith("PASS") for r in results) else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {label}")
        for r in results:
            terminalreporter.write_line(f"         {r}")


def pytest_collection_modifyitems(items):
    # tagged at collection so that fixture failures during setup still count
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            item.user_properties.append(("criterion", marker.args[0]))


# -- graphs -----------------------------------------------------------------

@pytest.fixture
def path2():
    return parse_edge_list("a b")


@pytest.fixture
def path3():
    return parse_edge_list("a b\nb c")


@pytest.fixture
def k4():
    a = np.ones((4, 4)) - np.eye(4)
    return Graph(a)


@pytest.fixture(scope="session")
def karate():
    return load_karate()


def _dataset(loader):
    try:
        return loader()
    except FileNotFoundError as exc:
        pytest.fail(f"dataset unavailable: {exc}", pytrace=False)


@pytest.fixture(scope="session")
def football():
    return _dataset(load_football)


@pytest.fixture(scope="session")
def polbooks():
    return _dataset(load_polbooks)


def random_graph(rng, n, p=0.3, directed=False):
    """Erdos-Renyi graph with at least one edge."""
    while True:
        a = (rng.random((n, n)) < p).astype(float)
        np.fill_diagonal(a, 0)
        if not directed:
            a = np.triu(a, 1)
            a = a + a.T
        if a.sum() > 0:
            return Graph(a, directed=directed)

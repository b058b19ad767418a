import pytest

from multifilar.graph_core import complete_bipartite, enumerate_regular, k4, petersen, prism


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    monkeypatch.setenv("MULTIFILAR_CACHE", str(tmp_path_factory.getbasetemp() / "cache"))


_FAMILIES = {}


def family(n, d=3):
    if (n, d) not in _FAMILIES:
        _FAMILIES[(n, d)] = enumerate_regular(n, d, allow_long_runs=True)
    return _FAMILIES[(n, d)]


_RECORDS = {}


def records(n, variance="biased"):
    """Analysis records for every connected cubic graph on n vertices, memoised."""
    from multifilar.pipeline import analyze_graph

    if (n, variance) not in _RECORDS:
        _RECORDS[(n, variance)] = [analyze_graph(g, variance) for g in family(n)]
    return _RECORDS[(n, variance)]


@pytest.fixture
def families():
    return family


@pytest.fixture
def named():
    return {
        "k4": k4(),
        "petersen": petersen(),
        "k33": complete_bipartite(3),
        "prism": prism(3),
    }

import os

import pytest

# console-only logging for in-process CLI runs
os.environ["DIAMCRIT_LOG_DIR"] = ""

from graphs.families import gen_complete_bipartite, gen_elementary  # noqa: E402
from graphs.graph_core import build_graph  # noqa: E402


@pytest.fixture
def c4():
    return gen_elementary("cycle", 4)


@pytest.fixture
def c5():
    return gen_elementary("cycle", 5)


@pytest.fixture
def c6():
    return gen_elementary("cycle", 6)


@pytest.fixture
def k4():
    return gen_elementary("complete", 4)


@pytest.fixture
def k23():
    return gen_complete_bipartite(2, 3)


@pytest.fixture
def k33():
    return gen_complete_bipartite(3, 3)


@pytest.fixture
def two_edges():
    return build_graph(4, [(0, 1), (2, 3)])

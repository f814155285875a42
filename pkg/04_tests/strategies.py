from itertools import combinations

from hypothesis import strategies as st

from graphs.graph_core import Graph, build_graph
from graphs.hypergraph import Hypergraph3, make_hypergraph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7) -> Graph:
    """A random spanning path order plus random extra edges, so the graph is connected."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    order = draw(st.permutations(range(n)))
    edges = [(order[i], order[i + 1]) for i in range(n - 1)]
    extra = draw(st.lists(st.sampled_from(list(combinations(range(n), 2))), unique=True))
    return build_graph(n, edges + extra)


@st.composite
def hypergraphs(draw, min_n: int = 3, max_n: int = 9) -> Hypergraph3:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    triples = list(combinations(range(n), 3))
    chosen = draw(st.lists(st.sampled_from(triples), unique=True, max_size=24))
    return make_hypergraph(n, chosen)

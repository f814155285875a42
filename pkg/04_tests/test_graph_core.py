import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from graphs.errors import InvalidEdge, InvalidVertex, MissingEdge
from graphs.families import gen_complete_bipartite, gen_elementary
from graphs.graph_core import (
    UNREACHABLE,
    EdgeRef,
    bfs_distances,
    build_graph,
    degree_square_sum,
    diameter,
    diameter_without_edge,
    distance_matrix,
    exceeds_diameter_without_edge,
)
from utils.graph_io import to_networkx

from strategies import graphs


def matrix_power_distances(graph):
    """All-pairs distances from powers of (A + I): d(u, v) is the first power reaching v."""
    n = graph.n
    adjacency = np.zeros((n, n), dtype=np.int64)
    for edge in graph.edges():
        adjacency[edge.u, edge.v] = adjacency[edge.v, edge.u] = 1
    step = adjacency + np.eye(n, dtype=np.int64)
    reach = np.eye(n, dtype=np.int64)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for hops in range(n):
        dist[(reach > 0) & (dist == UNREACHABLE)] = hops
        reach = np.minimum(reach @ step, 1)
    return dist


class TestBuildGraph:
    def test_cycle_c4(self):
        graph = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert graph.m == 4
        assert graph.neighbors(0) == (1, 3)

    def test_empty_graph(self):
        assert build_graph(3, []).m == 0

    def test_duplicates_collapse(self):
        graph = build_graph(2, [(0, 1), (1, 0), EdgeRef(0, 1)])
        assert graph.m == 1

    def test_out_of_range_vertex(self):
        with pytest.raises(InvalidVertex):
            build_graph(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(InvalidEdge):
            build_graph(3, [(1, 1)])

    def test_edge_ref_normalization(self):
        assert EdgeRef.of(4, 2) == EdgeRef(2, 4)
        assert str(EdgeRef.of(4, 2)) == "2-4"
        with pytest.raises(InvalidEdge):
            EdgeRef(3, 1)

    @given(graphs())
    def test_adjacency_is_symmetric(self, graph):
        for u in range(graph.n):
            assert u not in graph.neighbors(u)
            for v in graph.neighbors(u):
                assert graph.has_edge(v, u)
        assert 2 * graph.m == sum(graph.degrees())


class TestDistances:
    def test_bfs_c5(self, c5):
        assert bfs_distances(c5, 0).dist == (0, 1, 2, 2, 1)

    def test_bfs_p4(self):
        assert bfs_distances(gen_elementary("path", 4), 0).dist == (0, 1, 2, 3)

    def test_bfs_disconnected(self, two_edges):
        row = bfs_distances(two_edges, 0)
        assert row.dist == (0, 1, UNREACHABLE, UNREACHABLE)
        assert not row.reachable(2)

    def test_bfs_invalid_source(self, c5):
        with pytest.raises(InvalidVertex):
            bfs_distances(c5, 5)

    def test_diameters(self, k33, c6, two_edges):
        assert diameter(k33) == 2
        assert diameter(c6) == 3
        assert diameter(two_edges) == UNREACHABLE
        assert diameter(build_graph(1, [])) == 0

    def test_unreachable_compares_above_distances(self):
        assert UNREACHABLE > 10 ** 6

    @settings(max_examples=60)
    @given(graphs(max_n=8))
    def test_bfs_matches_matrix_power_oracle(self, graph):
        expected = matrix_power_distances(graph)
        assert np.array_equal(distance_matrix(graph), expected)

    @given(graphs())
    def test_diameter_is_max_eccentricity(self, graph):
        rows = [bfs_distances(graph, s).dist for s in range(graph.n)]
        flat = [d for row in rows for d in row]
        if UNREACHABLE in flat:
            assert diameter(graph) == UNREACHABLE
        else:
            assert diameter(graph) == max(flat)

    @given(graphs(min_n=2))
    def test_diameter_matches_networkx(self, graph):
        nx_graph = to_networkx(graph)
        if nx.is_connected(nx_graph):
            assert diameter(graph) == nx.diameter(nx_graph)
        else:
            assert diameter(graph) == UNREACHABLE


class TestEdgeDeletion:
    def test_c4_minus_edge_is_p4(self, c4):
        assert diameter_without_edge(c4, EdgeRef(0, 1)) == 3

    def test_k23_any_edge(self, k23):
        for edge in k23.edges():
            assert diameter_without_edge(k23, edge) == 3

    def test_p4_bridge(self):
        assert diameter_without_edge(gen_elementary("path", 4), EdgeRef(1, 2)) == UNREACHABLE

    def test_missing_edge(self, c5):
        with pytest.raises(MissingEdge):
            diameter_without_edge(c5, EdgeRef(0, 2))

    def test_graph_is_not_mutated(self, c4):
        diameter_without_edge(c4, EdgeRef(0, 1))
        assert c4.has_edge(0, 1)
        assert diameter(c4) == 2

    @given(graphs(min_n=2))
    def test_deletion_never_shrinks_diameter(self, graph):
        base = diameter(graph)
        for edge in graph.edges():
            assert diameter_without_edge(graph, edge) >= base

    @given(graphs(min_n=2))
    def test_threshold_variant_agrees(self, graph):
        for edge in graph.edges():
            value = diameter_without_edge(graph, edge)
            for k in range(1, 5):
                assert exceeds_diameter_without_edge(graph, edge, k) == (value > k)


class TestDegreeSquareSum:
    def test_values(self, c5, k33):
        assert degree_square_sum(c5) == 20
        assert degree_square_sum(k33) == 54 == k33.n * k33.m
        assert degree_square_sum(gen_complete_bipartite(1, 4)) == 20

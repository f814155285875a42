from itertools import combinations

import pytest

from graphs.criticality import is_diameter_k_critical
from graphs.errors import InvalidParams
from graphs.families import (
    GkParams,
    Matching,
    family_graph,
    gen_complete_bipartite,
    gen_elementary,
    gen_g30,
    gen_g3m,
    gen_gk,
    gk_edge_estimate,
    gk_params_for_order,
    hub_vertices,
    parse_matching,
    random_matching,
    suggested_a1,
)
from graphs.graph_core import bfs_distances, diameter


class TestElementary:
    @pytest.mark.parametrize("family,n,m", [("cycle", 5, 5), ("path", 4, 3), ("complete", 4, 6)])
    def test_edge_counts(self, family, n, m):
        assert gen_elementary(family, n).m == m

    def test_short_cycle(self):
        with pytest.raises(InvalidParams):
            gen_elementary("cycle", 2)


class TestCompleteBipartite:
    def test_k23(self, k23):
        assert k23.m == 6 == 25 // 4

    def test_k33_is_2_critical(self, k33):
        assert k33.m == 9
        assert is_diameter_k_critical(k33, 2)

    def test_k11(self):
        assert gen_complete_bipartite(1, 1).m == 1

    def test_empty_side(self):
        with pytest.raises(InvalidParams):
            gen_complete_bipartite(0, 3)


class TestGk:
    def test_k3_example(self):
        p = GkParams(k=3, a0=1, a1=2, a2=3)
        graph = gen_gk(p)
        assert (graph.n, graph.m) == (8, 10)
        assert graph.m == gk_edge_estimate(3, 8)
        assert is_diameter_k_critical(graph, 3)

    def test_k4_example(self):
        graph = gen_gk(GkParams(k=4, a0=1, a1=2, a2=2))
        assert (graph.n, graph.m) == (9, 10)
        assert is_diameter_k_critical(graph, 4)

    def test_smallest_is_p4(self):
        graph = gen_gk(GkParams(k=3, a0=1, a1=1, a2=1))
        assert (graph.n, graph.m) == (4, 3)
        assert diameter(graph) == 3

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            GkParams(k=2, a0=1, a1=1, a2=1)
        with pytest.raises(InvalidParams):
            GkParams(k=3, a0=0, a1=1, a2=1)

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    @pytest.mark.parametrize("a0", [1, 2, 3])
    @pytest.mark.parametrize("a1", [1, 2, 3])
    @pytest.mark.parametrize("a2", [1, 2, 3])
    def test_grid_is_critical(self, k, a0, a1, a2):
        p = GkParams(k=k, a0=a0, a1=a1, a2=a2)
        graph = gen_gk(p)
        assert graph.n == p.n
        assert is_diameter_k_critical(graph, k)
        left, right = hub_vertices(p)
        for hub in left:
            row = bfs_distances(graph, hub).dist
            assert all(row[other] == k for other in right)

    def test_suggested_a1_rounds_half_down(self):
        assert suggested_a1(3, 8) == 2
        # (n + 1) / 4 = 2.5 for n = 9
        assert suggested_a1(3, 9) == 2
        assert suggested_a1(3, 10) == 3

    def test_params_for_order(self):
        assert gk_params_for_order(3, 8) == GkParams(k=3, a0=1, a1=2, a2=3)
        with pytest.raises(InvalidParams):
            gk_params_for_order(5, 4)


class TestG3M:
    @pytest.mark.parametrize("n,m", [(6, 6), (8, 10), (10, 15)])
    def test_g30_edge_counts(self, n, m):
        assert gen_g30(n).m == m

    def test_g30_is_3_critical(self):
        assert is_diameter_k_critical(gen_g30(8), 3)

    def test_empty_matching_is_g30(self):
        assert gen_g3m(6, Matching()) == gen_g30(6)

    def test_examples(self):
        graph = gen_g3m(8, parse_matching("0-1"))
        assert graph.m == 10
        assert is_diameter_k_critical(graph, 3)
        graph = gen_g3m(12, parse_matching("0-1,2-3,4-5"))
        assert graph.m == 21
        assert is_diameter_k_critical(graph, 3)

    def test_matching_validation(self):
        with pytest.raises(InvalidParams):
            parse_matching("0-1,1-2")
        with pytest.raises(InvalidParams):
            gen_g3m(8, parse_matching("0-4"))
        with pytest.raises(InvalidParams):
            gen_g3m(7)

    @pytest.mark.parametrize("n", range(6, 22, 2))
    def test_edge_count_for_random_matchings(self, n):
        matchings = [Matching()] + [random_matching(n, seed) for seed in range(10)]
        for matching in matchings:
            assert gen_g3m(n, matching).m == (n * n + 2 * n) // 8

    @pytest.mark.parametrize("n", range(6, 18, 2))
    def test_random_matchings_stay_critical(self, n):
        for seed in range(5):
            assert is_diameter_k_critical(gen_g3m(n, random_matching(n, seed)), 3)

    def test_random_matching_is_reproducible(self):
        assert random_matching(16, 7) == random_matching(16, 7)
        assert len(random_matching(16, 7).pairs) <= 4

    def test_distance_case_analysis(self):
        n, half = 10, 5
        matching = parse_matching("0-1,2-3")
        graph = gen_g3m(n, matching)
        matched = {pair.as_tuple() for pair in matching.pairs}
        for u, v in combinations(range(half), 2):
            ubar, vbar = u + half, v + half
            expected = 1 if (u, v) in matched else 3
            assert bfs_distances(graph, ubar).dist[vbar] == expected
            assert bfs_distances(graph, u).dist[v] in (1, 2)
        for u in range(half):
            for vbar in range(half, n):
                assert bfs_distances(graph, u).dist[vbar] in (1, 2)


class TestFamilyDispatch:
    def test_gk_from_order(self):
        assert family_graph("gk", n=8, k=3).m == 10

    def test_bipartite_split(self):
        assert family_graph("bipartite", n=5) == gen_complete_bipartite(2, 3)

    def test_missing_parameter(self):
        with pytest.raises(InvalidParams):
            family_graph("g3m")
        with pytest.raises(InvalidParams):
            family_graph("star", n=4)

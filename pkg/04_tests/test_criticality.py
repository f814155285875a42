import json
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from graphs.criticality import (
    AnalysisConfig,
    CriticalityAnalysis,
    VerdictKind,
    analysis_report,
    associated_pairs,
    association_levels,
    check_furedi,
    check_g0_lemmas,
    check_multiplicity_count,
    compute_g0,
    critical_pairs,
    default_t,
    disj,
    is_diameter_k_critical,
    multiplicity_table,
    path_edges,
    t_edge_report,
)
from graphs.errors import InvalidParams, MissingEdge
from graphs.families import gen_complete_bipartite, gen_g3m, parse_matching
from graphs.graph_core import UNREACHABLE, EdgeRef, build_graph
from graphs.reports import AnalysisReport
from graphs.search import enumerate_graphs
from utils.graph_io import to_networkx

from instances import FAMILY_INSTANCES
from strategies import graphs


def all_pairs(nx_graph):
    lengths = dict(nx.all_pairs_shortest_path_length(nx_graph))
    return lambda x, y: lengths[x].get(y, UNREACHABLE)


def brute_force_associations(graph, k):
    """{(edge, (x, y)): levels}, by deleting each edge and recomputing every distance."""
    base_graph = to_networkx(graph)
    base = all_pairs(base_graph)
    found = {}
    for edge in graph.edges():
        reduced = base_graph.copy()
        reduced.remove_edge(edge.u, edge.v)
        after = all_pairs(reduced)
        for x in range(graph.n):
            for y in range(x + 1, graph.n):
                levels = [i for i in range(2, k + 1) if base(x, y) <= i < after(x, y)]
                if levels:
                    found[(edge, (x, y))] = levels
    return found


class TestVerdict:
    def test_c6_is_3_critical(self, c6):
        verdict = is_diameter_k_critical(c6, 3)
        assert verdict and str(verdict) == "yes"
        assert verdict.witness() is None

    def test_wrong_diameter(self, c5, k4):
        verdict = is_diameter_k_critical(c5, 3)
        assert verdict.kind is VerdictKind.WRONG_DIAMETER
        assert str(verdict) == "wrong_diameter(2)"
        assert str(is_diameter_k_critical(k4, 2)) == "wrong_diameter(1)"

    def test_disconnected(self, two_edges):
        verdict = is_diameter_k_critical(two_edges, 2)
        assert str(verdict) == "wrong_diameter(inf)"
        assert verdict.witness().diameter is None

    def test_non_critical_edge_witness(self):
        # C5 plus a chord 0-2 keeps diameter 2 when the chord is removed
        graph = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        verdict = is_diameter_k_critical(graph, 2)
        assert verdict.kind is VerdictKind.NON_CRITICAL_EDGE
        assert str(verdict) == f"non_critical_edge({verdict.edge})"
        assert verdict.witness().edge == list(verdict.edge.as_tuple())

    def test_thread_count_does_not_change_verdict(self):
        graph = gen_g3m(10, parse_matching("0-1"))
        assert is_diameter_k_critical(graph, 3, threads=2) == is_diameter_k_critical(graph, 3)


class TestAssociation:
    def test_c5(self, c5):
        assert associated_pairs(c5, EdgeRef(0, 1), 2) == {(0, 1), (1, 4), (0, 2)}

    def test_c4(self, c4):
        assert associated_pairs(c4, EdgeRef(0, 1), 2) == {(0, 1)}

    def test_k4(self, k4):
        for edge in k4.edges():
            assert associated_pairs(k4, edge, 2) == set()

    def test_missing_edge(self, c5):
        with pytest.raises(MissingEdge):
            associated_pairs(c5, EdgeRef(0, 2), 2)

    def test_levels_form_a_contiguous_range(self, c6):
        assert list(association_levels(c6, EdgeRef(0, 1), (0, 2), 3)) == [2, 3]
        assert list(association_levels(c6, EdgeRef(0, 1), (0, 3), 3)) == []

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7))
    def test_levels_match_brute_force(self, graph):
        k = 3
        expected = brute_force_associations(graph, k)
        analysis = CriticalityAnalysis(graph, k)
        for edge in graph.edges():
            for x in range(graph.n):
                for y in range(x + 1, graph.n):
                    got = list(analysis.association_levels(edge, x, y))
                    assert got == expected.get((edge, (x, y)), [])


class TestCriticalPairs:
    def test_c4(self, c4):
        records = critical_pairs(c4, 2)
        assert [r.pair for r in records] == [e.as_tuple() for e in c4.edges()]
        for record in records:
            assert record.at(2).path == record.pair

    def test_k23(self, k23):
        assert sorted(r.pair for r in critical_pairs(k23, 2)) == [e.as_tuple() for e in k23.edges()]

    def test_c6(self, c6):
        records = critical_pairs(c6, 3)
        assert len(records) == 12
        assert all(r.distance in (1, 2) and r.level_numbers == (2, 3) for r in records)
        assert (0, 3) not in {r.pair for r in records}

    def test_distance_two_pair_has_unique_path(self, c5):
        for record in critical_pairs(c5, 2):
            if record.distance == 2:
                assert len(list(nx.all_shortest_paths(to_networkx(c5), record.x, record.y))) == 1

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7))
    def test_chosen_paths_are_shortest_and_hold_associated_edges(self, graph):
        nx_graph = to_networkx(graph)
        for record in critical_pairs(graph, 3):
            shortest = [tuple(p) for p in nx.all_shortest_paths(nx_graph, record.x, record.y)]
            for entry in record.levels:
                assert entry.path[0] == record.x and entry.path[-1] == record.y
                assert entry.length == record.distance <= entry.level
                assert entry.path == min(shortest)
                for other in shortest:
                    assert set(entry.associated) <= set(path_edges(other))

    def test_critical_pairs_match_brute_force_on_small_graphs(self):
        for n in range(1, 7):
            for graph in enumerate_graphs(n):
                for k in (2, 3):
                    expected = brute_force_associations(graph, k)
                    by_pair = {}
                    for (edge, pair), levels in expected.items():
                        for level in levels:
                            by_pair.setdefault(pair, {}).setdefault(level, set()).add(edge)
                    records = critical_pairs(graph, k)
                    got = {r.pair: {e.level: set(e.associated) for e in r.levels} for r in records}
                    assert got == by_pair

                    table = multiplicity_table(graph, k)
                    for edge in graph.edges():
                        m = sum(len(levels) for (e, _), levels in expected.items() if e == edge)
                        assert table.m(edge) == m


class TestMultiplicity:
    @pytest.mark.parametrize("name,k,value", [("c4", 2, 1), ("c5", 2, 3), ("c6", 3, 6)])
    def test_cycles(self, request, name, k, value):
        graph = request.getfixturevalue(name)
        table = multiplicity_table(graph, k)
        assert set(table.multiplicities().values()) == {value}
        assert table.total() == value * graph.m <= k * (k + 1) // 2 * math.comb(graph.n, 2)
        assert table.histogram() == {value: graph.m}

    def test_every_edge_of_a_critical_graph_is_used(self):
        for name, graph, k in FAMILY_INSTANCES[:20]:
            assert min(multiplicity_table(graph, k).multiplicities().values()) >= 1, name

    def test_deterministic_across_threads(self):
        graph = gen_g3m(10, parse_matching("0-1,2-3"))
        serial = CriticalityAnalysis(graph, 3)
        parallel = CriticalityAnalysis(graph, 3, threads=2)
        assert serial.multiplicity.multiplicities() == parallel.multiplicity.multiplicities()
        cfg = AnalysisConfig(k=3, t=3)
        assert serial.t_edge_report(cfg).paths == parallel.t_edge_report(cfg).paths


class TestTEdges:
    def test_c5_all_paths_qualify(self, c5):
        report = t_edge_report(c5, AnalysisConfig(k=2, t=4))
        assert len(report.paths[2]) == 5
        assert report.t_edges == frozenset(c5.edges())

    def test_c5_threshold_too_low(self, c5):
        report = t_edge_report(c5, AnalysisConfig(k=2, t=2))
        assert report.paths[2] == [] and report.t_edges == frozenset()

    def test_k23_has_no_length_two_paths(self, k23):
        report = t_edge_report(k23, AnalysisConfig(k=2, t=2))
        assert report.paths[2] == [] and report.t_edges == frozenset()

    def test_strict_membership_is_narrower(self):
        graph = gen_g3m(8, parse_matching("0-1"))
        loose = t_edge_report(graph, AnalysisConfig(k=3, t=5))
        strict = t_edge_report(graph, AnalysisConfig(k=3, t=5, strict_p_membership=True))
        for level in (2, 3):
            assert set(strict.paths[level]) <= set(loose.paths[level])

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_n=7))
    def test_t_edges_are_light(self, graph):
        cfg = AnalysisConfig(k=3, t=3)
        mult = multiplicity_table(graph, 3).multiplicities()
        report = t_edge_report(graph, cfg)
        assert all(mult[edge] < cfg.t for edge in report.t_edges)
        for level, paths in report.paths.items():
            assert all(len(path) - 1 == level for path in paths)


class TestG0:
    def test_c5_empties(self, c5):
        assert compute_g0(c5, AnalysisConfig(k=2, t=4)).edge_count == 0

    def test_k23_keeps_everything(self, k23):
        result = compute_g0(k23, AnalysisConfig(k=2, t=2))
        assert result.g0 == k23
        assert result.removal_counts()["heavy"] == 0

    def test_t1_removes_every_edge(self, c6):
        assert compute_g0(c6, AnalysisConfig(k=3, t=1)).edge_count == 0

    def test_t0_rejected(self):
        with pytest.raises(InvalidParams):
            AnalysisConfig(k=3, t=0)

    def test_default_t(self):
        assert default_t(8) == 3
        assert default_t(9) == 3
        assert default_t(10) == 4
        assert default_t(2) == 2


class TestDisjAndFuredi:
    def test_disj(self, c5, k33):
        assert disj(c5) == {e.as_tuple() for e in c5.edges()}
        assert disj(k33) == {e.as_tuple() for e in k33.edges()}
        assert len(disj(build_graph(5, []))) == 10

    def test_furedi_examples(self, c5, k33, k4):
        assert check_furedi(c5).lhs == 10 and check_furedi(c5).holds
        assert check_furedi(k33).lhs == 18 == check_furedi(k33).bound
        assert check_furedi(k4).lhs == 6 and check_furedi(k4).holds

    @pytest.mark.parametrize("half", [2, 3, 4, 5])
    def test_furedi_equality_on_balanced_bipartite(self, half):
        check = check_furedi(gen_complete_bipartite(half, half))
        assert check.holds and check.lhs == check.bound

    def test_furedi_on_enumerated_graphs(self):
        for n in range(1, 7):
            for graph in enumerate_graphs(n):
                assert check_furedi(graph).holds

    @pytest.mark.parametrize("n", range(5, 51, 5))
    def test_furedi_on_random_graphs(self, n):
        rng = random.Random(n)
        for _ in range(1000):
            nx_graph = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
            assert check_furedi(build_graph(n, nx_graph.edges())).holds


class TestLemmaChecks:
    @pytest.mark.parametrize("t", [2, 3, 5])
    def test_multiplicity_count_on_enumerated_graphs(self, t):
        for n in range(1, 7):
            for graph in enumerate_graphs(n):
                for k in (2, 3):
                    assert check_multiplicity_count(graph, AnalysisConfig(k=k, t=t)).holds

    def test_multiplicity_count_examples(self, c5, c6):
        check = check_multiplicity_count(c5, AnalysisConfig(k=2, t=4))
        assert (check.heavy_edges, check.bound) == (0, 7.5)
        assert check_multiplicity_count(c5, AnalysisConfig(k=2, t=3)).heavy_edges == 5
        assert check_multiplicity_count(c6, AnalysisConfig(k=3, t=7)).heavy_edges == 0

    def test_c6_vacuous(self, c6):
        report = check_g0_lemmas(c6, AnalysisConfig(k=3, t=7))
        assert report.applicable and report.g0_edge_count == 0 and report.all_hold

    def test_k23(self, k23):
        report = check_g0_lemmas(k23, AnalysisConfig(k=2, t=2))
        assert report.g0_edge_count == 6 and report.all_hold

    def test_not_applicable_when_not_critical(self, c5):
        report = check_g0_lemmas(c5, AnalysisConfig(k=3, t=3))
        assert not report.applicable and report.l41 is None

    def test_g3m_example(self):
        graph = gen_g3m(8, parse_matching("0-1"))
        assert check_g0_lemmas(graph, AnalysisConfig.with_default_t(graph.n, 3)).all_hold

    @pytest.mark.parametrize("name,graph,k", FAMILY_INSTANCES, ids=[i[0] for i in FAMILY_INSTANCES])
    def test_family_instances(self, name, graph, k):
        analysis = CriticalityAnalysis(graph, k)
        for t in sorted({default_t(graph.n), 3, 5}):
            report = analysis.check_g0_lemmas(AnalysisConfig(k=k, t=t))
            assert report.all_hold, (name, t, report)


class TestReport:
    def test_schema(self):
        graph = gen_g3m(12, parse_matching("0-1,2-3"))
        report = analysis_report(graph, AnalysisConfig(k=3, t=3), source="g.g6")
        document = json.loads(report.model_dump_json())
        assert AnalysisReport.model_validate(document) == report
        assert document["is_critical"] is True
        assert document["witness"] is None
        assert set(document["lemma_checks"]) >= {"l31", "l41", "l42", "l43", "e_g0_bound"}
        assert sum(report.multiplicity_histogram.values()) == graph.m

    def test_witness_and_null_checks(self, c5):
        report = analysis_report(c5, AnalysisConfig(k=3, t=3))
        assert report.witness.kind == "wrong_diameter" and report.witness.diameter == 2
        assert report.lemma_checks.l31 is True
        assert report.lemma_checks.l41 is None

    def test_degree_square_ratio(self, k33):
        report = analysis_report(k33, AnalysisConfig(k=2, t=2))
        assert report.degree_square_ratio == 1.0

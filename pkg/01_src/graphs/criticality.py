"""
Criticality verification and the critical-pair machinery built on it:
i-associated edges, chosen critical paths, multiplicities, t-edges, G0,
Disj and the lemma-conclusion checkers.

Definitions used throughout (2 <= i <= k):
- e is i-associated with {x, y} when d_G(x, y) <= i and d_{G-e}(x, y) > i
- {x, y} is i-critical when some edge is i-associated with it
- the chosen path Q^i_xy is the lexicographically smallest shortest path,
  written from min(x, y) to max(x, y); it does not depend on i
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, partial
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import numpy as np

from utils.parallel_utils import map_in_workers

from .errors import InvalidParams
from .graph_core import (
    UNREACHABLE,
    EdgeRef,
    Graph,
    _require_edge,
    build_graph,
    degree_square_sum,
    diameter,
    distance_matrix,
    exceeds_diameter_without_edge,
    iter_pairs,
)
from .reports import AnalysisReport, LemmaChecks, Witness

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Path = Tuple[int, ...]


@dataclass(frozen=True)
class AnalysisConfig:
    """
    Attributes:
        k: Diameter parameter, levels run over 2..k
        t: Multiplicity threshold
        strict_p_membership: Require every graph edge at x or y, not just the
            path's end edges, to qualify a path for P_t^i
    """

    k: int
    t: int
    strict_p_membership: bool = False

    def __post_init__(self):
        if self.k < 2:
            raise InvalidParams(f"k must be >= 2, got {self.k}")
        # t = 1 is accepted as the degenerate threshold under which every edge is heavy
        if self.t < 1:
            raise InvalidParams(f"t must be >= 1, got {self.t}")

    @classmethod
    def with_default_t(cls, n: int, k: int, strict_p_membership: bool = False) -> "AnalysisConfig":
        return cls(k=k, t=default_t(n), strict_p_membership=strict_p_membership)


def default_t(n: int) -> int:
    """ceil(sqrt(n)), at least 2."""
    if n <= 1:
        return 2
    return max(2, math.isqrt(n - 1) + 1)


class VerdictKind(str, Enum):
    YES = "yes"
    WRONG_DIAMETER = "wrong_diameter"
    NON_CRITICAL_EDGE = "non_critical_edge"


@dataclass(frozen=True)
class CriticalityVerdict:
    kind: VerdictKind
    diameter: Optional[int] = None
    edge: Optional[EdgeRef] = None

    def __bool__(self) -> bool:
        return self.kind is VerdictKind.YES

    def witness(self) -> Optional[Witness]:
        if self.kind is VerdictKind.WRONG_DIAMETER:
            return Witness(kind=self.kind.value, diameter=None if self.diameter == UNREACHABLE else self.diameter)
        if self.kind is VerdictKind.NON_CRITICAL_EDGE:
            return Witness(kind=self.kind.value, edge=list(self.edge.as_tuple()))
        return None

    def __str__(self) -> str:
        if self.kind is VerdictKind.WRONG_DIAMETER:
            shown = "inf" if self.diameter == UNREACHABLE else self.diameter
            return f"wrong_diameter({shown})"
        if self.kind is VerdictKind.NON_CRITICAL_EDGE:
            return f"non_critical_edge({self.edge})"
        return "yes"


def _edge_keeps_diameter(graph: Graph, k: int, edge: EdgeRef) -> bool:
    return not exceeds_diameter_without_edge(graph, edge, k)


def is_diameter_k_critical(graph: Graph, k: int, threads: Optional[int] = 1) -> CriticalityVerdict:
    """
    yes iff diam(G) = k and deleting any single edge pushes the diameter past k.

    On failure the verdict carries the actual diameter or the smallest edge
    whose deletion keeps the diameter at most k.
    """
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    actual = diameter(graph)
    if actual != k:
        return CriticalityVerdict(VerdictKind.WRONG_DIAMETER, diameter=actual)
    edges = graph.edges()
    keeps = map_in_workers(partial(_edge_keeps_diameter, graph, k), edges, threads)
    for edge, kept in zip(edges, keeps):
        if kept:
            return CriticalityVerdict(VerdictKind.NON_CRITICAL_EDGE, diameter=actual, edge=edge)
    return CriticalityVerdict(VerdictKind.YES, diameter=actual)


@dataclass(frozen=True)
class CriticalLevel:
    level: int
    associated: Tuple[EdgeRef, ...]
    path: Path

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def end_edges(self) -> Tuple[EdgeRef, EdgeRef]:
        return EdgeRef.of(self.path[0], self.path[1]), EdgeRef.of(self.path[-2], self.path[-1])


@dataclass(frozen=True)
class CriticalPairRecord:
    x: int
    y: int
    distance: int
    levels: Tuple[CriticalLevel, ...]

    @property
    def pair(self) -> Pair:
        return (self.x, self.y)

    @property
    def level_numbers(self) -> Tuple[int, ...]:
        return tuple(entry.level for entry in self.levels)

    def at(self, level: int) -> Optional[CriticalLevel]:
        for entry in self.levels:
            if entry.level == level:
                return entry
        return None


@dataclass
class MultiplicityEntry:
    per_level: Dict[int, List[Path]] = field(default_factory=dict)

    @property
    def multiplicity(self) -> int:
        return sum(len(paths) for paths in self.per_level.values())


@dataclass
class MultiplicityTable:
    k: int
    entries: Dict[EdgeRef, MultiplicityEntry]

    def m(self, edge: EdgeRef) -> int:
        return self.entries[edge].multiplicity

    def multiplicities(self) -> Dict[EdgeRef, int]:
        return {edge: entry.multiplicity for edge, entry in self.entries.items()}

    def total(self) -> int:
        return sum(self.multiplicities().values())

    def histogram(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.multiplicities().values()).items()))


@dataclass
class TEdgeReport:
    t: int
    paths: Dict[int, List[Path]]
    t_edges_by_level: Dict[int, FrozenSet[EdgeRef]]

    @property
    def t_edges(self) -> FrozenSet[EdgeRef]:
        return frozenset().union(*self.t_edges_by_level.values()) if self.t_edges_by_level else frozenset()

    def counts(self) -> Dict[int, int]:
        return {level: len(paths) for level, paths in self.paths.items()}


@dataclass
class G0Result:
    g0: Graph
    removed_heavy: FrozenSet[EdgeRef]
    removed_t_edges: FrozenSet[EdgeRef]

    @property
    def edge_count(self) -> int:
        return self.g0.m

    def removal_counts(self) -> Dict[str, int]:
        return {
            "heavy": len(self.removed_heavy),
            "t_edge": len(self.removed_t_edges),
            "both": len(self.removed_heavy & self.removed_t_edges),
        }


@dataclass(frozen=True)
class FurediCheck:
    lhs: int
    bound: float
    holds: bool


@dataclass(frozen=True)
class MultiplicityCountCheck:
    heavy_edges: int
    bound: float
    holds: bool


@dataclass(frozen=True)
class G0LemmaReport:
    applicable: bool
    l41: Optional[bool] = None
    l42: Optional[bool] = None
    l43: Optional[bool] = None
    e_g0_bound: Optional[bool] = None
    matching_ok: Optional[bool] = None
    critical_pair_count: int = 0
    g0_edge_count: int = 0
    disj_g0_size: int = 0

    @property
    def all_hold(self) -> bool:
        return self.applicable and all((self.l41, self.l42, self.l43, self.e_g0_bound, self.matching_ok))


def _edge_distance_matrix(graph: Graph, edge: EdgeRef) -> np.ndarray:
    return distance_matrix(graph, skip=edge)


def chosen_path(graph: Graph, dist: np.ndarray, x: int, y: int) -> Path:
    """Lexicographically smallest shortest path from min(x, y) to max(x, y)."""
    source, target = min(x, y), max(x, y)
    path = [source]
    current = source
    while current != target:
        wanted = dist[current, target] - 1
        current = next(w for w in graph.adj[current] if dist[w, target] == wanted)
        path.append(current)
    return tuple(path)


def path_edges(path: Path) -> List[EdgeRef]:
    return [EdgeRef.of(a, b) for a, b in zip(path, path[1:])]


class CriticalityAnalysis:
    """
    All-pairs distance tables for G and every G - e, computed once and
    shared by the critical-pair, multiplicity, t-edge and G0 computations.
    """

    def __init__(self, graph: Graph, k: int, threads: Optional[int] = 1, logger: Optional[logging.Logger] = None):
        if k < 2:
            raise InvalidParams(f"k must be >= 2, got {k}")
        self.graph = graph
        self.k = k
        self.threads = threads
        self.logger = logger or logging.getLogger(__name__)
        self.edges = graph.edges()
        self.edge_index = {edge: idx for idx, edge in enumerate(self.edges)}

    @cached_property
    def dist(self) -> np.ndarray:
        return distance_matrix(self.graph)

    @cached_property
    def edge_dist(self) -> np.ndarray:
        """Stacked (m, n, n) distances of G - e, in edge order."""
        n = self.graph.n
        if not self.edges:
            return np.empty((0, n, n), dtype=np.int64)
        self.logger.debug(f"Computing deletion distance tables for {len(self.edges)} edges")
        tables = map_in_workers(partial(_edge_distance_matrix, self.graph), self.edges, self.threads)
        return np.stack(tables)

    def association_levels(self, edge: EdgeRef, x: int, y: int) -> range:
        """Levels i in 2..k at which edge is i-associated with {x, y}: [max(2, d), min(k, d') - 1 clipped]."""
        base = int(self.dist[x, y])
        if base == UNREACHABLE or base > self.k:
            return range(0)
        after = int(self.edge_dist[self.edge_index[edge], x, y])
        top = self.k if after == UNREACHABLE else min(self.k, after - 1)
        return range(max(2, base), top + 1)

    @cached_property
    def records(self) -> List[CriticalPairRecord]:
        records = []
        for x, y in iter_pairs(self.graph.n):
            record = self._pair_record(x, y)
            if record is not None:
                records.append(record)
        self.logger.debug(f"Found {len(records)} critical pairs for k={self.k}")
        return records

    def _pair_record(self, x: int, y: int) -> Optional[CriticalPairRecord]:
        base = int(self.dist[x, y])
        if base == UNREACHABLE or base > self.k or not self.edges:
            return None
        after = self.edge_dist[:, x, y]
        # the largest level any edge can reach is d_{G-e} - 1
        if int(after.max()) <= max(2, base):
            return None
        path = chosen_path(self.graph, self.dist, x, y)
        on_path = set(path_edges(path))
        levels = []
        for level in range(max(2, base), self.k + 1):
            associated = tuple(self.edges[idx] for idx in np.flatnonzero(after > level))
            if not associated:
                break
            for edge in associated:
                assert edge in on_path, f"{edge} is associated with {{{x},{y}}} but missing from {path}"
            levels.append(CriticalLevel(level=level, associated=associated, path=path))
        if not levels:
            return None
        return CriticalPairRecord(x=x, y=y, distance=base, levels=tuple(levels))

    @cached_property
    def multiplicity(self) -> MultiplicityTable:
        entries = {edge: MultiplicityEntry() for edge in self.edges}
        for record in self.records:
            for entry in record.levels:
                for edge in entry.associated:
                    entries[edge].per_level.setdefault(entry.level, []).append(entry.path)
        return MultiplicityTable(k=self.k, entries=entries)

    def associated_pairs(self, edge: EdgeRef, level: int) -> Set[Pair]:
        _require_edge(self.graph, edge)
        if level < 2:
            raise InvalidParams(f"Association level must be >= 2, got {level}")
        idx = self.edge_index[edge]
        after = self.edge_dist[idx]
        mask = (self.dist <= level) & (after > level)
        return {(int(x), int(y)) for x, y in zip(*np.nonzero(mask)) if x < y}

    def t_edge_report(self, cfg: AnalysisConfig) -> TEdgeReport:
        self._check_config(cfg)
        mult = self.multiplicity.multiplicities()
        paths: Dict[int, List[Path]] = {level: [] for level in range(2, self.k + 1)}
        t_edges: Dict[int, Set[EdgeRef]] = {level: set() for level in range(2, self.k + 1)}
        for record in self.records:
            for entry in record.levels:
                if entry.length != entry.level:
                    continue
                associated = set(entry.associated)
                if cfg.strict_p_membership:
                    required = [EdgeRef.of(v, w) for v in (record.x, record.y) for w in self.graph.adj[v]]
                else:
                    required = list(entry.end_edges())
                if all(edge in associated and mult[edge] < cfg.t for edge in required):
                    paths[entry.level].append(entry.path)
                    t_edges[entry.level].update(entry.end_edges())
        return TEdgeReport(
            t=cfg.t,
            paths=paths,
            t_edges_by_level={level: frozenset(edges) for level, edges in t_edges.items()},
        )

    def compute_g0(self, cfg: AnalysisConfig) -> G0Result:
        mult = self.multiplicity.multiplicities()
        heavy = frozenset(edge for edge, value in mult.items() if value >= cfg.t)
        t_edges = self.t_edge_report(cfg).t_edges
        kept = [edge for edge in self.edges if edge not in heavy and edge not in t_edges]
        return G0Result(g0=build_graph(self.graph.n, kept), removed_heavy=heavy, removed_t_edges=t_edges)

    def check_multiplicity_count(self, cfg: AnalysisConfig) -> MultiplicityCountCheck:
        self._check_config(cfg)
        heavy = sum(1 for value in self.multiplicity.multiplicities().values() if value >= cfg.t)
        pair_count = math.comb(self.graph.n, 2)
        numerator = self.k * (self.k + 1) * pair_count
        return MultiplicityCountCheck(
            heavy_edges=heavy,
            bound=numerator / (2 * cfg.t),
            holds=2 * cfg.t * heavy <= numerator,
        )

    def check_g0_lemmas(self, cfg: AnalysisConfig, verdict: Optional[CriticalityVerdict] = None) -> G0LemmaReport:
        self._check_config(cfg)
        g0_result = self.compute_g0(cfg)
        g0 = g0_result.g0
        pairs = {record.pair for record in self.records}
        disj_g0 = disj(g0)
        if verdict is None:
            verdict = is_diameter_k_critical(self.graph, self.k, self.threads)
        if not verdict:
            return G0LemmaReport(
                applicable=False,
                critical_pair_count=len(pairs),
                g0_edge_count=g0.m,
                disj_g0_size=len(disj_g0),
            )
        n, k, e0 = self.graph.n, self.k, g0.m
        g0_edges = set(g0.edges())

        l41 = all(
            sum(1 for edge in entry.associated if edge in g0_edges) <= 1
            for record in self.records
            for entry in record.levels
        )
        # counts distinct vertex pairs, critical at any level
        l42 = 2 * len(pairs) >= (k - 1) * (2 * e0 - n)
        l43 = pairs <= disj_g0
        bound = 2 * k * e0 <= n * n + k * n
        return G0LemmaReport(
            applicable=True,
            l41=l41,
            l42=l42,
            l43=l43,
            e_g0_bound=bound,
            matching_ok=self._short_path_edges_form_matching(g0_edges),
            critical_pair_count=len(pairs),
            g0_edge_count=e0,
            disj_g0_size=len(disj_g0),
        )

    def _short_path_edges_form_matching(self, g0_edges: Set[EdgeRef]) -> bool:
        """G0 edges whose k-associated paths all have length <= k-2 share no vertex."""
        longest: Dict[EdgeRef, int] = {}
        for record in self.records:
            entry = record.at(self.k)
            if entry is None:
                continue
            for edge in entry.associated:
                longest[edge] = max(longest.get(edge, 0), entry.length)
        short = [edge for edge in sorted(g0_edges) if edge in longest and longest[edge] <= self.k - 2]
        used: Set[int] = set()
        for edge in short:
            if edge.u in used or edge.v in used:
                return False
            used.update(edge.as_tuple())
        return True

    def _check_config(self, cfg: AnalysisConfig) -> None:
        if cfg.k != self.k:
            raise InvalidParams(f"Config k={cfg.k} does not match analysis k={self.k}")


def associated_pairs(graph: Graph, edge: EdgeRef, level: int) -> Set[Pair]:
    """All pairs {x, y} (as x < y) that edge is level-associated with."""
    return CriticalityAnalysis(graph, max(2, level)).associated_pairs(edge, level)


def association_levels(graph: Graph, edge: EdgeRef, pair: Pair, k: int) -> range:
    _require_edge(graph, edge)
    return CriticalityAnalysis(graph, k).association_levels(edge, *pair)


def critical_pairs(graph: Graph, k: int) -> List[CriticalPairRecord]:
    return CriticalityAnalysis(graph, k).records


def multiplicity_table(graph: Graph, k: int) -> MultiplicityTable:
    return CriticalityAnalysis(graph, k).multiplicity


def t_edge_report(graph: Graph, cfg: AnalysisConfig) -> TEdgeReport:
    return CriticalityAnalysis(graph, cfg.k).t_edge_report(cfg)


def compute_g0(graph: Graph, cfg: AnalysisConfig) -> G0Result:
    return CriticalityAnalysis(graph, cfg.k).compute_g0(cfg)


def check_multiplicity_count(graph: Graph, cfg: AnalysisConfig) -> MultiplicityCountCheck:
    return CriticalityAnalysis(graph, cfg.k).check_multiplicity_count(cfg)


def check_g0_lemmas(graph: Graph, cfg: AnalysisConfig) -> G0LemmaReport:
    return CriticalityAnalysis(graph, cfg.k).check_g0_lemmas(cfg)


def disj(graph: Graph) -> Set[Pair]:
    """Pairs (x < y) of distinct vertices with no common neighbor."""
    return {
        (x, y)
        for x, y in iter_pairs(graph.n)
        if not (graph._adj_sets[x] & graph._adj_sets[y])
    }


def check_furedi(graph: Graph) -> FurediCheck:
    lhs = graph.m + len(disj(graph))
    return FurediCheck(lhs=lhs, bound=graph.n * graph.n / 2, holds=2 * lhs <= graph.n * graph.n)


def analysis_report(
    graph: Graph,
    cfg: AnalysisConfig,
    source: Optional[str] = None,
    threads: Optional[int] = 1,
    analysis: Optional[CriticalityAnalysis] = None,
) -> AnalysisReport:
    """Collect verdict, multiplicities, G0 statistics and lemma checks into one report."""
    analysis = analysis or CriticalityAnalysis(graph, cfg.k, threads=threads)
    verdict = is_diameter_k_critical(graph, cfg.k, threads)
    actual = verdict.diameter
    count_check = analysis.check_multiplicity_count(cfg)
    lemmas = analysis.check_g0_lemmas(cfg, verdict=verdict)
    t_edges = analysis.t_edge_report(cfg).t_edges
    sq_sum = degree_square_sum(graph)
    denominator = graph.n * graph.m
    return AnalysisReport(
        source=source,
        n=graph.n,
        m=graph.m,
        k=cfg.k,
        t=cfg.t,
        diameter=None if actual == UNREACHABLE else actual,
        is_critical=bool(verdict),
        witness=verdict.witness(),
        critical_pair_count=len(analysis.records),
        multiplicity_histogram=analysis.multiplicity.histogram(),
        heavy_edge_count=count_check.heavy_edges,
        t_edge_count=len(t_edges),
        g0_edge_count=lemmas.g0_edge_count,
        lemma_checks=LemmaChecks(
            l31=count_check.holds,
            l41=lemmas.l41,
            l42=lemmas.l42,
            l43=lemmas.l43,
            e_g0_bound=lemmas.e_g0_bound,
            matching_ok=lemmas.matching_ok,
        ),
        degree_square_sum=sq_sum,
        degree_square_ratio=sq_sum / denominator if denominator else None,
    )

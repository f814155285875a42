"""
3-uniform hypergraphs built from critical paths, and the reduction that turns
the length-i paths of P_t^i into a linear, 3-partite, triangle-free hypergraph:

    H1 = one 3-edge {x, a, y} per path (handle x, center a)
    H2 = linearize(H1)
    H3 = extract_3partite(H2)
    H4 = largest (handle part, center part) orientation class of H3

Also: linearity and triangle tests, and the exact value of RSz(n) for tiny n
(largest triangle-free linear 3-uniform hypergraph on n vertices).
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .criticality import AnalysisConfig, CriticalityAnalysis
from .errors import InvalidParams, NonLinearInput, TooLarge
from .graph_core import Graph
from .reports import PipelineReport

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

RSZ_MAX_N = 7
RSZ_NAIVE_MAX_N = 5


class Part(IntEnum):
    UNASSIGNED = 0
    V1 = 1
    V2 = 2
    V3 = 3


PARTS = (Part.V1, Part.V2, Part.V3)


@dataclass(frozen=True)
class Annotation:
    handle: int
    center: int


@dataclass(frozen=True, eq=False)
class Hypergraph3:
    """
    Attributes:
        n: Vertex count
        edges: Sorted, duplicate-free 3-edges, each a sorted triple
        annotations: Optional handle/center per 3-edge
        partition: Optional part label per vertex
    """

    n: int
    edges: Tuple[Triple, ...] = ()
    annotations: Mapping[Triple, Annotation] = field(default_factory=dict)
    partition: Optional[Tuple[Part, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and dict(self.annotations) == dict(other.annotations)
            and self.partition == other.partition
        )

    def restricted_to(self, kept: Iterable[Triple], partition: Optional[Tuple[Part, ...]] = None) -> "Hypergraph3":
        kept = tuple(sorted(set(kept)))
        annotations = {edge: self.annotations[edge] for edge in kept if edge in self.annotations}
        return Hypergraph3(
            n=self.n,
            edges=kept,
            annotations=annotations,
            partition=partition if partition is not None else self.partition,
        )


def make_hypergraph(
    n: int,
    edges: Iterable[Sequence[int]],
    annotations: Optional[Mapping[Sequence[int], Annotation]] = None,
    partition: Optional[Sequence[int]] = None,
) -> Hypergraph3:
    """
    Build a validated hypergraph.

    Raises:
        InvalidParams: On edges that are not 3 distinct in-range vertices, or on
            annotations whose handle/center are not distinct members of the edge
    """
    normalized = set()
    for edge in edges:
        triple = tuple(sorted(int(x) for x in edge))
        if len(triple) != 3 or len(set(triple)) != 3:
            raise InvalidParams(f"3-edge {tuple(edge)} must have exactly 3 distinct vertices")
        if not all(0 <= x < n for x in triple):
            raise InvalidParams(f"3-edge {triple} has a vertex outside 0..{n - 1}")
        normalized.add(triple)
    checked: Dict[Triple, Annotation] = {}
    for edge, note in (annotations or {}).items():
        triple = tuple(sorted(edge))
        if triple not in normalized:
            raise InvalidParams(f"Annotation for unknown 3-edge {triple}")
        if note.handle == note.center or note.handle not in triple or note.center not in triple:
            raise InvalidParams(f"Handle/center {note} must be distinct vertices of {triple}")
        checked[triple] = note
    parts = None
    if partition is not None:
        if len(partition) != n:
            raise InvalidParams(f"Partition has {len(partition)} labels for {n} vertices")
        parts = tuple(Part(int(label)) for label in partition)
    return Hypergraph3(n=n, edges=tuple(sorted(normalized)), annotations=checked, partition=parts)


def _pairs_of(edge: Triple) -> Tuple[Tuple[int, int], ...]:
    a, b, c = edge
    return ((a, b), (a, c), (b, c))


def _pair_index(edges: Iterable[Triple]) -> Dict[Tuple[int, int], set]:
    index = defaultdict(set)
    for edge in edges:
        for pair in _pairs_of(edge):
            index[pair].add(edge)
    return index


def is_linear(hypergraph: Hypergraph3) -> bool:
    """Any two distinct 3-edges share at most one vertex."""
    seen = set()
    for edge in hypergraph.edges:
        for pair in _pairs_of(edge):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def _forms_triangle(e1: Triple, e2: Triple, e3: Triple) -> bool:
    s1, s2, s3 = set(e1), set(e2), set(e3)
    if len(s1 & s2) != 1 or len(s2 & s3) != 1 or len(s1 & s3) != 1:
        return False
    return len(s1 | s2 | s3) == 6


def find_triangles(hypergraph: Hypergraph3) -> List[Tuple[Triple, Triple, Triple]]:
    """
    All triples of 3-edges pairwise meeting in one vertex, with six vertices in total.

    Raises:
        NonLinearInput: If the hypergraph is not linear
    """
    if not is_linear(hypergraph):
        raise NonLinearInput("Triangle search needs a linear hypergraph")
    by_vertex = defaultdict(list)
    for edge in hypergraph.edges:
        for x in edge:
            by_vertex[x].append(edge)
    triangles = []
    for e1 in hypergraph.edges:
        touching = sorted({other for x in e1 for other in by_vertex[x] if other > e1})
        for e2, e3 in combinations(touching, 2):
            if _forms_triangle(e1, e2, e3):
                triangles.append((e1, e2, e3))
    return triangles


@dataclass
class H1Build:
    hypergraph: Hypergraph3
    path_count: int = 0
    collisions: int = 0
    dropped: int = 0


def _build_h1(graph: Graph, cfg: AnalysisConfig, level: int, analysis: Optional[CriticalityAnalysis] = None) -> H1Build:
    if not 2 <= level <= cfg.k:
        raise InvalidParams(f"Level {level} is outside 2..{cfg.k}")
    analysis = analysis or CriticalityAnalysis(graph, cfg.k)
    paths = analysis.t_edge_report(cfg).paths[level]
    annotations: Dict[Triple, Annotation] = {}
    collisions = dropped = 0
    for path in paths:
        x, y = path[0], path[-1]
        default = tuple(sorted((x, path[1], y)))
        if default not in annotations:
            annotations[default] = Annotation(handle=x, center=path[1])
            continue
        collisions += 1
        alternate = tuple(sorted((x, path[-2], y)))
        if alternate not in annotations:
            annotations[alternate] = Annotation(handle=y, center=path[-2])
        else:
            dropped += 1
    if collisions:
        logger.debug(f"H1 at level {level}: {collisions} collisions, {dropped} paths dropped")
    hypergraph = Hypergraph3(n=graph.n, edges=tuple(sorted(annotations)), annotations=annotations)
    return H1Build(hypergraph=hypergraph, path_count=len(paths), collisions=collisions, dropped=dropped)


def build_h1(graph: Graph, cfg: AnalysisConfig, level: int) -> Hypergraph3:
    """
    One 3-edge per path x a_1 ... a_{i-1} y of P_t^i (paths run from the
    smaller endpoint): {x, a_1, y} with handle x and center a_1, or on a
    collision {x, a_{i-1}, y} with handle y and center a_{i-1}. A path whose
    two triples are both taken is dropped.
    """
    return _build_h1(graph, cfg, level).hypergraph


@dataclass
class LinearizeStats:
    hypergraph: Hypergraph3
    steps: int = 0
    max_step_deletions: int = 0


def _linearize(hypergraph: Hypergraph3) -> LinearizeStats:
    index = _pair_index(hypergraph.edges)
    alive = set(hypergraph.edges)
    steps = max_deleted = 0
    # an edge without mates never gains one, so one ordered pass picks the
    # smallest conflicted edge at every step
    for edge in hypergraph.edges:
        if edge not in alive:
            continue
        mates = set()
        for pair in _pairs_of(edge):
            mates |= index[pair]
        mates.discard(edge)
        if not mates:
            continue
        for mate in mates:
            alive.discard(mate)
            for pair in _pairs_of(mate):
                index[pair].discard(mate)
        steps += 1
        max_deleted = max(max_deleted, len(mates))
    return LinearizeStats(hypergraph=hypergraph.restricted_to(alive), steps=steps, max_step_deletions=max_deleted)


def linearize(hypergraph: Hypergraph3, t: Optional[int] = None) -> Hypergraph3:
    """
    Repeatedly keep the smallest 3-edge that meets another in two vertices and
    delete all such mates, until the hypergraph is linear.
    """
    stats = _linearize(hypergraph)
    if t is not None and stats.max_step_deletions > max(0, 2 * t - 4):
        logger.warning(f"A linearization step deleted {stats.max_step_deletions} edges, above 2t-4={2 * t - 4}")
    return stats.hypergraph


def _rainbow_probability(parts: Sequence[Part]) -> Fraction:
    assigned = [p for p in parts if p is not Part.UNASSIGNED]
    if len(set(assigned)) != len(assigned):
        return Fraction(0)
    free = 3 - len(assigned)
    return Fraction(math.factorial(free), 3 ** free)


def extract_3partite(hypergraph: Hypergraph3) -> Hypergraph3:
    """
    Derandomized 3-partition by conditional expectations.

    Vertices are fixed in id order, each to the part that maximizes the expected
    number of rainbow 3-edges (remaining vertices uniform); ties go to the lower
    part. The rainbow edges kept number at least ceil(2/9 |E|).
    """
    labels = [Part.UNASSIGNED] * hypergraph.n
    by_vertex = defaultdict(list)
    for edge in hypergraph.edges:
        for x in edge:
            by_vertex[x].append(edge)
    for vertex in range(hypergraph.n):
        best_part, best_score = PARTS[0], None
        for part in PARTS:
            labels[vertex] = part
            score = sum(
                (_rainbow_probability([labels[x] for x in edge]) for edge in by_vertex[vertex]),
                Fraction(0),
            )
            if best_score is None or score > best_score:
                best_part, best_score = part, score
        labels[vertex] = best_part
    kept = [edge for edge in hypergraph.edges if len({labels[x] for x in edge}) == 3]
    result = hypergraph.restricted_to(kept, partition=tuple(labels))
    assert 9 * result.m >= 2 * hypergraph.m, "conditional expectation fell below 2/9"
    return result


def orient_h4(hypergraph: Hypergraph3) -> Dict[Tuple[Part, Part], int]:
    """Count annotated 3-edges per (handle part, center part) class."""
    if hypergraph.partition is None:
        raise InvalidParams("Orientation classes need a partitioned hypergraph")
    counts = {classes: 0 for classes in permutations(PARTS, 2)}
    for edge in hypergraph.edges:
        note = hypergraph.annotations.get(edge)
        if note is None:
            continue
        key = (hypergraph.partition[note.handle], hypergraph.partition[note.center])
        if key in counts:
            counts[key] += 1
    return counts


def select_h4(hypergraph: Hypergraph3) -> Hypergraph3:
    counts = orient_h4(hypergraph)
    largest = max(counts.values())
    handle_part, center_part = next(key for key, count in counts.items() if count == largest)
    kept = [
        edge
        for edge in hypergraph.edges
        if edge in hypergraph.annotations
        and hypergraph.partition[hypergraph.annotations[edge].handle] == handle_part
        and hypergraph.partition[hypergraph.annotations[edge].center] == center_part
    ]
    return hypergraph.restricted_to(kept)


@dataclass
class PipelineStages:
    h1: Hypergraph3
    h2: Hypergraph3
    h3: Hypergraph3
    h4: Hypergraph3
    report: PipelineReport


def run_pipeline(
    graph: Graph,
    cfg: AnalysisConfig,
    level: int,
    analysis: Optional[CriticalityAnalysis] = None,
) -> PipelineStages:
    analysis = analysis or CriticalityAnalysis(graph, cfg.k)
    built = _build_h1(graph, cfg, level, analysis)
    h1 = built.hypergraph
    linear = _linearize(h1)
    h2 = linear.hypergraph
    h3 = extract_3partite(h2)
    h4 = select_h4(h3)
    report = PipelineReport(
        level=level,
        t=cfg.t,
        h1_size=h1.m,
        h2_size=h2.m,
        h3_size=h3.m,
        h4_size=h4.m,
        h2_linear=is_linear(h2),
        h2_ratio_ok=2 * cfg.t * h2.m >= h1.m,
        h3_ratio_ok=9 * h3.m >= 2 * h2.m,
        h4_ratio_ok=6 * h4.m >= h3.m,
        h4_triangle_free=not find_triangles(h4),
        collisions=built.collisions,
        dropped_paths=built.dropped,
        max_step_deletions=linear.max_step_deletions,
        step_bound_ok=linear.max_step_deletions <= max(0, 2 * cfg.t - 4),
    )
    logger.debug(f"Pipeline level {level}: sizes {h1.m}/{h2.m}/{h3.m}/{h4.m}")
    return PipelineStages(h1=h1, h2=h2, h3=h3, h4=h4, report=report)


def pipeline(graph: Graph, cfg: AnalysisConfig, level: int) -> PipelineReport:
    return run_pipeline(graph, cfg, level).report


def pipeline_all_levels(
    graph: Graph, cfg: AnalysisConfig, analysis: Optional[CriticalityAnalysis] = None
) -> List[PipelineReport]:
    analysis = analysis or CriticalityAnalysis(graph, cfg.k)
    return [run_pipeline(graph, cfg, level, analysis).report for level in range(2, cfg.k + 1)]


@dataclass(frozen=True)
class RszResult:
    n: int
    value: int
    witness: Hypergraph3


def _closes_triangle(candidate: Triple, chosen: Sequence[Triple]) -> bool:
    touching = [edge for edge in chosen if len(set(edge) & set(candidate)) == 1]
    return any(_forms_triangle(candidate, e2, e3) for e2, e3 in combinations(touching, 2))


def rsz_exhaustive(n: int) -> RszResult:
    """
    Exact RSz(n) by backtracking over 3-edges in lexicographic order, pruning on
    linearity, triangle-freeness and a pair-count bound. The first 3-edge is
    fixed to {0, 1, 2}, which any non-empty optimum can be relabeled to contain.

    Raises:
        TooLarge: For n > 7
    """
    if n > RSZ_MAX_N:
        raise TooLarge(f"Exhaustive RSz search is limited to n <= {RSZ_MAX_N}, got {n}")
    if n < 3:
        return RszResult(n=max(n, 0), value=0, witness=Hypergraph3(n=max(n, 0)))
    triples: List[Triple] = list(combinations(range(n), 3))
    linear_cap = (n * ((n - 1) // 2)) // 3
    best: List[Triple] = []
    chosen: List[Triple] = [triples[0]]
    used = set(_pairs_of(triples[0]))

    def extend(start: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= linear_cap:
            return
        free_pairs = n * (n - 1) // 2 - len(used)
        if len(chosen) + free_pairs // 3 <= len(best):
            return
        for idx in range(start, len(triples)):
            candidate = triples[idx]
            pairs = _pairs_of(candidate)
            if any(pair in used for pair in pairs) or _closes_triangle(candidate, chosen):
                continue
            chosen.append(candidate)
            used.update(pairs)
            extend(idx + 1)
            chosen.pop()
            used.difference_update(pairs)

    extend(1)
    logger.debug(f"RSz({n}) = {len(best)}")
    return RszResult(n=n, value=len(best), witness=make_hypergraph(n, best))


def rsz_naive(n: int) -> int:
    """Subset enumeration of all 3-edge sets; an independent check for n <= 5."""
    if n > RSZ_NAIVE_MAX_N:
        raise TooLarge(f"Naive RSz enumeration is limited to n <= {RSZ_NAIVE_MAX_N}, got {n}")
    triples = list(combinations(range(n), 3)) if n >= 3 else []
    best = 0
    for mask in range(1 << len(triples)):
        subset = [triples[i] for i in range(len(triples)) if mask >> i & 1]
        if len(subset) <= best:
            continue
        candidate = Hypergraph3(n=n, edges=tuple(subset))
        if is_linear(candidate) and not find_triangles(candidate):
            best = len(subset)
    return best

"""
Exhaustive small-n search: isomorphism classes of simple graphs, the largest
diameter-k-critical graphs among them, and the degree-square inequality.

Canonical codes are integers over the vertex pairs in graph6 order
(0,1), (0,2), (1,2), (0,3), ... with the first pair as the most significant
bit. The canonical code of a graph is the smallest code over the relabelings
that list vertices by non-increasing degree, not over all n! relabelings.
Isomorphisms preserve degrees, so isomorphic graphs share it; the published
representatives (and their graph6 strings) are in this form, with vertex 0 of
largest degree.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import permutations, product
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from utils.checkpoint_manager import CheckpointManager
from utils.parallel_utils import map_in_workers, resolve_threads

from .criticality import is_diameter_k_critical
from .errors import InvalidParams, TooLarge
from .graph_core import Graph, build_graph, degree_square_sum
from .reports import SearchDocument

logger = logging.getLogger(__name__)

ENUMERATION_MAX_N = 8
DEFAULT_MAX_N = 6
EXHAUSTIVE_MAX_N = 7
SHARD_SIZE = 64


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _pair_position(i: int, j: int) -> int:
    """Index of pair (i, j), i < j, in graph6 order."""
    return j * (j - 1) // 2 + i


def _degree_orderings(graph: Graph) -> Iterator[Tuple[int, ...]]:
    """Vertex orderings (new label -> old vertex) by non-increasing degree."""
    classes = {}
    for vertex in range(graph.n):
        classes.setdefault(graph.degree(vertex), []).append(vertex)
    blocks = [classes[d] for d in sorted(classes, reverse=True)]
    for choice in product(*(permutations(block) for block in blocks)):
        yield tuple(v for block in choice for v in block)


def _code_for_ordering(graph: Graph, order: Sequence[int]) -> int:
    total = pair_count(graph.n)
    code = 0
    for j in range(1, graph.n):
        for i in range(j):
            if graph.has_edge(order[i], order[j]):
                code |= 1 << (total - 1 - _pair_position(i, j))
    return code


def canonical_form(graph: Graph) -> int:
    return min(_code_for_ordering(graph, order) for order in _degree_orderings(graph))


def from_canonical_code(n: int, code: int) -> Graph:
    total = pair_count(n)
    edges = [(i, j) for j in range(1, n) for i in range(j) if code >> (total - 1 - _pair_position(i, j)) & 1]
    return build_graph(n, edges)


def canonical_graph(graph: Graph) -> Graph:
    return from_canonical_code(graph.n, canonical_form(graph))


def automorphism_count(graph: Graph) -> int:
    """Number of degree-preserving vertex permutations that map E(G) onto itself."""
    edges = graph.edges()
    classes = {}
    for vertex in range(graph.n):
        classes.setdefault(graph.degree(vertex), []).append(vertex)
    blocks = list(classes.values())
    count = 0
    for choice in product(*(permutations(block) for block in blocks)):
        mapping = {}
        for block, image in zip(blocks, choice):
            mapping.update(zip(block, image))
        if all(graph.has_edge(mapping[e.u], mapping[e.v]) for e in edges):
            count += 1
    return count


def _child_codes(n: int, parent_code: int) -> List[int]:
    """Canonical codes of every one-vertex extension of a class on n-1 vertices."""
    parent = from_canonical_code(n - 1, parent_code)
    base_edges = [e.as_tuple() for e in parent.edges()]
    codes = set()
    for mask in range(1 << (n - 1)):
        extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
        codes.add(canonical_form(build_graph(n, base_edges + extra)))
    return sorted(codes)


@lru_cache(maxsize=None)
def _class_codes(n: int, threads: int = 1) -> Tuple[int, ...]:
    if n <= 1:
        return (0,)
    parents = _class_codes(n - 1, threads)
    children = map_in_workers(partial(_child_codes, n), parents, threads)
    merged = sorted(set().union(*children))
    logger.debug(f"n={n}: {len(merged)} isomorphism classes from {len(parents)} parents")
    return tuple(merged)


def class_codes(n: int, threads: int = 1) -> Tuple[int, ...]:
    """Sorted canonical codes of all isomorphism classes on n vertices."""
    if n < 0:
        raise InvalidParams(f"n must be non-negative, got {n}")
    if n > ENUMERATION_MAX_N:
        raise TooLarge(f"Graph enumeration is limited to n <= {ENUMERATION_MAX_N}, got {n}")
    return _class_codes(n, threads)


def enumerate_graphs(n: int, threads: int = 1) -> Iterator[Graph]:
    """
    Yield one canonical representative per isomorphism class of simple graphs
    on n vertices, in increasing canonical-code order.

    Classes on n vertices are the canonical forms of all one-vertex extensions
    of the classes on n - 1 vertices.
    """
    for code in class_codes(n, threads):
        yield from_canonical_code(n, code)


@dataclass
class SearchResult:
    n: int
    k: int
    max_edges: Optional[int]
    extremal: List[Graph]
    critical_count: int
    class_count: int = 0

    def to_document(self) -> SearchDocument:
        from utils.graph_io import graph6_string

        return SearchDocument(
            n=self.n,
            k=self.k,
            max_edges=self.max_edges,
            extremal_graph6=[graph6_string(graph) for graph in self.extremal],
            critical_count=self.critical_count,
            class_count=self.class_count,
        )


def _critical_in_shard(n: int, k: int, codes: Sequence[int]) -> List[int]:
    return [code for code in codes if is_diameter_k_critical(from_canonical_code(n, code), k)]


def extremal_search(
    n: int,
    k: int,
    exhaustive: bool = False,
    threads: int = 1,
    progress: bool = False,
    checkpoint_file: Optional[str | Path] = None,
    default_max_n: int = DEFAULT_MAX_N,
    exhaustive_max_n: int = EXHAUSTIVE_MAX_N,
) -> SearchResult:
    """
    Largest diameter-k-critical graphs on n vertices, by exhaustive enumeration.

    Args:
        n: Vertex count
        k: Diameter level
        exhaustive: Opt in to sizes above default_max_n, up to exhaustive_max_n
        threads: Worker processes for enumeration and filtering
        progress: Show a progress bar over shards
        checkpoint_file: JSON file recording finished shards, so an
            interrupted run resumes where it stopped

    Returns:
        SearchResult: max_edges is None when no critical graph exists

    Raises:
        TooLarge: If n is above the allowed size for the chosen mode
    """
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    limit = exhaustive_max_n if exhaustive else default_max_n
    if n > limit:
        hint = "" if exhaustive else " (pass exhaustive=True / --exhaustive to go further)"
        raise TooLarge(f"Exhaustive search is limited to n <= {limit}{hint}, got {n}")

    codes = class_codes(n, threads)
    shards = [codes[start:start + SHARD_SIZE] for start in range(0, len(codes), SHARD_SIZE)]
    checkpoint = CheckpointManager(checkpoint_file, context={"n": n, "k": k}) if checkpoint_file else None
    done = checkpoint.get_processed_shards() if checkpoint else {}
    pending = [idx for idx in range(len(shards)) if str(idx) not in done]
    logger.info(f"Searching {len(codes)} classes on n={n} for k={k} in {len(shards)} shards ({len(pending)} pending)")

    results = dict(done)
    worker = partial(_critical_in_shard, n, k)
    per_batch = resolve_threads(threads)
    batches = [pending[start:start + per_batch] for start in range(0, len(pending), per_batch)]
    bar = tqdm(total=len(pending), desc=f"n={n} k={k}", disable=not progress)
    try:
        for batch in batches:
            found = map_in_workers(worker, [shards[idx] for idx in batch], threads)
            for idx, critical in zip(batch, found):
                results[str(idx)] = critical
                if checkpoint:
                    checkpoint.update_checkpoint(str(idx), critical)
            bar.update(len(batch))
    finally:
        bar.close()

    critical_codes = sorted(code for codes_in_shard in results.values() for code in codes_in_shard)
    if not critical_codes:
        return SearchResult(n=n, k=k, max_edges=None, extremal=[], critical_count=0, class_count=len(codes))
    max_edges = max(code.bit_count() for code in critical_codes)
    extremal = [from_canonical_code(n, code) for code in critical_codes if code.bit_count() == max_edges]
    return SearchResult(
        n=n,
        k=k,
        max_edges=max_edges,
        extremal=extremal,
        critical_count=len(critical_codes),
        class_count=len(codes),
    )


@dataclass(frozen=True)
class DegreeSquareCheck:
    lhs: int
    rhs: int
    ratio: Optional[float]
    holds: bool
    claimed: bool = False

    @property
    def violation(self) -> bool:
        """A failure only counts where the inequality is claimed (critical, k >= 3)."""
        return self.claimed and not self.holds


def degree_square_check(graph: Graph, k: Optional[int] = None) -> DegreeSquareCheck:
    lhs = degree_square_sum(graph)
    rhs = graph.n * graph.m
    claimed = k is not None and k >= 3 and bool(is_diameter_k_critical(graph, k))
    return DegreeSquareCheck(
        lhs=lhs,
        rhs=rhs,
        ratio=lhs / rhs if rhs else None,
        holds=lhs <= rhs,
        claimed=claimed,
    )


def labeled_count(classes: Sequence[Graph]) -> int:
    """Sum of n!/|Aut| over classes; equals 2^C(n,2) for a complete enumeration."""
    return sum(math.factorial(graph.n) // automorphism_count(graph) for graph in classes)

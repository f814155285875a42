"""
Immutable simple-graph representation with distance and diameter queries.

Vertices are the dense integers 0..n-1. Every other module reads graphs
through this one, so the BFS loops here are kept plain and array-indexed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidEdge, InvalidVertex, MissingEdge

# Compares greater than every finite hop count
UNREACHABLE = 1 << 30


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Canonical edge identity, always stored with u < v."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise InvalidEdge(f"Self-loop at vertex {self.u}")
        if self.u > self.v:
            raise InvalidEdge(f"Edge ({self.u}, {self.v}) is not normalized, use EdgeRef.of")

    @classmethod
    def of(cls, a: int, b: int) -> "EdgeRef":
        a, b = int(a), int(b)
        return cls(a, b) if a < b else cls(b, a)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.u, self.v)

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: Tuple[int, ...]

    def reachable(self, vertex: int) -> bool:
        return self.dist[vertex] != UNREACHABLE

    def eccentricity(self) -> int:
        return max(self.dist) if self.dist else 0


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    Attributes:
        n: Number of vertices
        adj: Sorted neighbor tuple per vertex
    """

    n: int
    adj: Tuple[Tuple[int, ...], ...]

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    @cached_property
    def _adj_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        return self.adj[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adj[vertex])

    def has_edge(self, a: int, b: int) -> bool:
        if not (0 <= a < self.n and 0 <= b < self.n):
            return False
        return b in self._adj_sets[a]

    def edges(self) -> List[EdgeRef]:
        """All edges in lexicographic order."""
        return [EdgeRef(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[EdgeRef | Sequence[int]]) -> Graph:
    """
    Build a normalized graph from an edge list.

    Args:
        n: Vertex count
        edges: EdgeRef objects or (u, v) pairs in any orientation

    Returns:
        Graph: Graph with duplicate edges collapsed

    Raises:
        InvalidVertex: If an endpoint is outside 0..n-1
        InvalidEdge: If an edge is a self-loop
    """
    if n < 0:
        raise InvalidVertex(f"Vertex count must be non-negative, got {n}")
    neighbor_sets: List[set] = [set() for _ in range(n)]
    for edge in edges:
        a, b = edge.as_tuple() if isinstance(edge, EdgeRef) else (int(edge[0]), int(edge[1]))
        for vertex in (a, b):
            if not 0 <= vertex < n:
                raise InvalidVertex(f"Vertex {vertex} out of range for n={n}")
        if a == b:
            raise InvalidEdge(f"Self-loop at vertex {a}")
        neighbor_sets[a].add(b)
        neighbor_sets[b].add(a)
    return Graph(n=n, adj=tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets))


def _check_vertex(graph: Graph, vertex: int) -> None:
    if not 0 <= vertex < graph.n:
        raise InvalidVertex(f"Vertex {vertex} out of range for n={graph.n}")


def _require_edge(graph: Graph, edge: EdgeRef) -> None:
    if not graph.has_edge(edge.u, edge.v):
        raise MissingEdge(f"Edge {edge} is not in {graph!r}")


def _bfs(graph: Graph, source: int, skip: Optional[EdgeRef] = None, radius: Optional[int] = None) -> List[int]:
    """Hop distances from source, ignoring `skip` and stopping past `radius`."""
    dist = [UNREACHABLE] * graph.n
    dist[source] = 0
    queue = deque([source])
    su, sv = skip.as_tuple() if skip is not None else (-1, -1)
    adj = graph.adj
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if radius is not None and dx >= radius:
            continue
        for y in adj[x]:
            if dist[y] != UNREACHABLE:
                continue
            if (x == su and y == sv) or (x == sv and y == su):
                continue
            dist[y] = dx + 1
            queue.append(y)
    return dist


def bfs_distances(graph: Graph, source: int) -> DistanceRow:
    """Exact hop distances from source; UNREACHABLE for other components."""
    _check_vertex(graph, source)
    return DistanceRow(source=source, dist=tuple(_bfs(graph, source)))


def bfs_distances_without_edge(graph: Graph, source: int, edge: EdgeRef) -> DistanceRow:
    _check_vertex(graph, source)
    _require_edge(graph, edge)
    return DistanceRow(source=source, dist=tuple(_bfs(graph, source, skip=edge)))


def _diameter(graph: Graph, skip: Optional[EdgeRef] = None) -> int:
    best = 0
    for source in range(graph.n):
        ecc = max(_bfs(graph, source, skip))
        if ecc == UNREACHABLE:
            return UNREACHABLE
        best = max(best, ecc)
    return best


def diameter(graph: Graph) -> int:
    """Largest pairwise distance; UNREACHABLE iff the graph is disconnected."""
    return _diameter(graph)


def diameter_without_edge(graph: Graph, edge: EdgeRef) -> int:
    """Diameter of G - e, computed by masking e during traversal."""
    _require_edge(graph, edge)
    return _diameter(graph, skip=edge)


def exceeds_diameter_without_edge(graph: Graph, edge: EdgeRef, k: int) -> bool:
    """
    Whether diam(G - e) > k.

    Each BFS stops at depth k, and the scan ends at the first source whose
    k-ball misses a vertex.
    """
    _require_edge(graph, edge)
    for source in range(graph.n):
        if UNREACHABLE in _bfs(graph, source, skip=edge, radius=k):
            return True
    return False


def distance_matrix(graph: Graph, skip: Optional[EdgeRef] = None) -> np.ndarray:
    """All-pairs hop distances as an n x n int64 array."""
    table = np.empty((graph.n, graph.n), dtype=np.int64)
    for source in range(graph.n):
        table[source] = _bfs(graph, source, skip)
    return table


def degree_square_sum(graph: Graph) -> int:
    return sum(d * d for d in graph.degrees())


def iter_pairs(n: int) -> Iterator[Tuple[int, int]]:
    """Unordered vertex pairs (x, y) with x < y in lexicographic order."""
    for x in range(n):
        for y in range(x + 1, n):
            yield x, y

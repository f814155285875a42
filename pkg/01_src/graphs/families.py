"""
Deterministic generators for the graph families used by the analysis.

Vertex layouts are fixed so that generated files are stable across runs:
- gen_gk: a0 left hubs, then a1 paths of k-1 vertices each, then a2 right hubs
- gen_g30 / gen_g3m: clique side 0..n/2-1, independent side n/2..n-1,
  theta(i) = i + n/2
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidParams
from .graph_core import EdgeRef, Graph, build_graph

logger = logging.getLogger(__name__)

ELEMENTARY_FAMILIES = ("cycle", "path", "complete")


@dataclass(frozen=True)
class GkParams:
    k: int
    a0: int
    a1: int
    a2: int

    def __post_init__(self):
        if self.k < 3:
            raise InvalidParams(f"G_k needs k >= 3, got k={self.k}")
        for name in ("a0", "a1", "a2"):
            if getattr(self, name) < 1:
                raise InvalidParams(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def n(self) -> int:
        return self.a0 + self.a1 * (self.k - 1) + self.a2

    @property
    def m(self) -> int:
        return self.a1 * (self.k - 2) + self.a1 * (self.a0 + self.a2)


@dataclass(frozen=True)
class Matching:
    """Disjoint pairs on the clique side of G_{3,M}."""

    pairs: Tuple[EdgeRef, ...] = field(default_factory=tuple)

    def vertices(self) -> List[int]:
        return [x for pair in self.pairs for x in pair.as_tuple()]

    def validate(self, n: int) -> None:
        half = n // 2
        seen = set()
        for pair in self.pairs:
            for x in pair.as_tuple():
                if not 0 <= x < half:
                    raise InvalidParams(f"Matching vertex {x} is not on the clique side 0..{half - 1}")
                if x in seen:
                    raise InvalidParams(f"Vertex {x} appears twice in the matching")
                seen.add(x)

    def __str__(self) -> str:
        return ",".join(str(pair) for pair in self.pairs)


def parse_matching(spec: str) -> Matching:
    """
    Parse the `u-v,u-v,...` matching grammar.

    Raises:
        InvalidParams: On malformed tokens or repeated vertices
    """
    spec = (spec or "").strip()
    if not spec:
        return Matching()
    pairs = []
    seen = set()
    for token in spec.split(","):
        parts = token.strip().split("-")
        if len(parts) != 2:
            raise InvalidParams(f"Bad matching token '{token}', expected u-v")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidParams(f"Bad matching token '{token}', expected integers")
        if a == b:
            raise InvalidParams(f"Matching pair '{token}' is a loop")
        for x in (a, b):
            if x in seen:
                raise InvalidParams(f"Vertex {x} repeated in matching '{spec}'")
            seen.add(x)
        pairs.append(EdgeRef.of(a, b))
    return Matching(tuple(pairs))


def gen_elementary(family: str, n: int) -> Graph:
    if family not in ELEMENTARY_FAMILIES:
        raise InvalidParams(f"Unknown elementary family '{family}'")
    if family == "cycle":
        if n < 3:
            raise InvalidParams(f"A cycle needs n >= 3, got {n}")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if n < 1:
        raise InvalidParams(f"The {family} family needs n >= 1, got {n}")
    if family == "path":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    return build_graph(n, combinations(range(n), 2))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise InvalidParams(f"Both parts must be non-empty, got ({a}, {b})")
    return build_graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def hub_vertices(p: GkParams) -> Tuple[List[int], List[int]]:
    """Left and right hub vertex ids of gen_gk(p)."""
    right_start = p.a0 + p.a1 * (p.k - 1)
    return list(range(p.a0)), list(range(right_start, right_start + p.a2))


def gen_gk(p: GkParams) -> Graph:
    """
    The hub-and-paths family: a1 disjoint paths x_1..x_{k-1}, every x_1
    joined to all a0 left hubs and every x_{k-1} to all a2 right hubs.
    """
    left, right = hub_vertices(p)
    edges = []
    for path_index in range(p.a1):
        start = p.a0 + path_index * (p.k - 1)
        path = list(range(start, start + p.k - 1))
        edges.extend(zip(path, path[1:]))
        edges.extend((hub, path[0]) for hub in left)
        edges.extend((path[-1], hub) for hub in right)
    graph = build_graph(p.n, edges)
    assert graph.m == p.m, f"G_k edge count {graph.m} != {p.m}"
    return graph


def suggested_a1(k: int, n: int) -> int:
    """round((n + k - 2) / (2(k - 1))) with ties rounded down."""
    if k < 3:
        raise InvalidParams(f"k must be >= 3, got {k}")
    numerator = n + k - 2
    denominator = 2 * (k - 1)
    # round half down on the rational numerator / denominator
    return max(1, (2 * numerator + denominator - 1) // (2 * denominator))


def gk_params_for_order(k: int, n: int) -> GkParams:
    """a0 = 1, a1 = suggested_a1(k, n), a2 = whatever is left of n."""
    a1 = suggested_a1(k, n)
    a2 = n - 1 - a1 * (k - 1)
    if a2 < 1:
        raise InvalidParams(f"n={n} is too small for a G_k graph with k={k}")
    return GkParams(k=k, a0=1, a1=a1, a2=a2)


def gk_edge_estimate(k: int, n: int) -> float:
    """(n^2 + 2(k-2)n) / (4(k-1)), the leading terms of e(G_k)."""
    return (n * n + 2 * (k - 2) * n) / (4 * (k - 1))


def _check_g3_order(n: int) -> None:
    if n < 6 or n % 2:
        raise InvalidParams(f"G_{{3,M}} needs an even n >= 6, got {n}")


def gen_g30(n: int) -> Graph:
    return gen_g3m(n, Matching())


def gen_g3m(n: int, matching: Optional[Matching] = None) -> Graph:
    """
    Start from K_{n/2} plus the perfect matching i -- i + n/2; for every uv in M
    drop the clique edge uv and add theta(u)theta(v).
    """
    _check_g3_order(n)
    matching = matching or Matching()
    matching.validate(n)
    half = n // 2
    removed = {pair.as_tuple() for pair in matching.pairs}
    edges = [pair for pair in combinations(range(half), 2) if pair not in removed]
    edges.extend((i, i + half) for i in range(half))
    edges.extend((pair.u + half, pair.v + half) for pair in matching.pairs)
    graph = build_graph(n, edges)
    assert graph.m == (n * n + 2 * n) // 8, f"G_3,M edge count {graph.m} differs from (n^2+2n)/8"
    logger.debug(f"Generated G_3,M with n={n}, |M|={len(matching.pairs)}, m={graph.m}")
    return graph


def random_matching(n: int, seed: Optional[int] = None) -> Matching:
    """
    Random matching on the clique side of G_{3,M}: shuffle, draw the size
    uniformly from 0..n/4 and pair consecutive vertices.
    """
    _check_g3_order(n)
    rng = np.random.default_rng(seed)
    half = n // 2
    order = [int(x) for x in rng.permutation(half)]
    size = int(rng.integers(0, half // 2 + 1))
    return Matching(tuple(EdgeRef.of(order[2 * j], order[2 * j + 1]) for j in range(size)))


def family_graph(
    family: str,
    n: Optional[int] = None,
    k: Optional[int] = None,
    a0: Optional[int] = None,
    a1: Optional[int] = None,
    a2: Optional[int] = None,
    matching: Optional[Matching] = None,
) -> Graph:
    """
    Dispatch a family name plus parameters to its generator.

    `bipartite` splits n into floor(n/2) and ceil(n/2) when a0/a2 are not given.
    """
    if family in ELEMENTARY_FAMILIES:
        if n is None:
            raise InvalidParams(f"--n is required for family '{family}'")
        return gen_elementary(family, n)
    if family == "bipartite":
        if a0 is not None and a2 is not None:
            return gen_complete_bipartite(a0, a2)
        if n is None:
            raise InvalidParams("family 'bipartite' needs --n or both --a0 and --a2")
        return gen_complete_bipartite(n // 2, n - n // 2)
    if family == "gk":
        if k is None:
            raise InvalidParams("family 'gk' needs --k")
        if a0 is not None and a1 is not None and a2 is not None:
            return gen_gk(GkParams(k=k, a0=a0, a1=a1, a2=a2))
        if n is None:
            raise InvalidParams("family 'gk' needs --n or all of --a0 --a1 --a2")
        return gen_gk(gk_params_for_order(k, n))
    if family == "g30":
        if n is None:
            raise InvalidParams("family 'g30' needs --n")
        return gen_g30(n)
    if family == "g3m":
        if n is None:
            raise InvalidParams("family 'g3m' needs --n")
        return gen_g3m(n, matching)
    raise InvalidParams(f"Unknown family '{family}'")

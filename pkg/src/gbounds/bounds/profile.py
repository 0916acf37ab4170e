"""
Multiplicity-grouped pair statistics.

Every pair sum in the bounds depends on a pair {u, v} only through a few
integers (degrees, |N[u] ∪ N[v]|, |N(u) ∩ N(v)|, adjacency). Vertices with
identical open neighborhoods (false twins) share all of these, so the
statistics are collected over twin classes: O(classes^2) bitset operations
instead of O(n^2). A star or a complete bipartite graph has two classes.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from ..core.errors import NotBipartiteError
from ..core.graph import Bipartition, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwinClass:
    """Vertices sharing one open neighborhood."""

    rep: int
    size: int
    degree: int
    mask: int


def twin_classes(g: Graph, vertices: Tuple[int, ...] = ()) -> List[TwinClass]:
    """Group ``vertices`` (default all) by open neighborhood, in first-seen order."""
    groups: Dict[int, List[int]] = {}
    for u in vertices or range(g.n):
        row = g.adj[u]
        if row in groups:
            groups[row][1] += 1
        else:
            groups[row] = [u, 1]
    return [
        TwinClass(rep=rep, size=size, degree=row.bit_count(), mask=row)
        for row, (rep, size) in groups.items()
    ]


@dataclass(frozen=True)
class GraphProfile:
    """
    Pair statistics of a graph, as multiplicity counters.

    Attributes:
        n: Vertex count
        min_degree: delta
        degree_counts: d -> number of vertices of degree d
        union_counts: |N[u] ∪ N[v]| -> number of unordered pairs
        degree_sum_counts: d(u)+d(v) -> number of unordered pairs
        edge_counts: (d(u), d(v)) with d(u) <= d(v) -> number of edges
        non_edge_counts: (d(u), d(v), |N(u) ∩ N(v)|) with d(u) <= d(v)
            -> number of non-adjacent pairs
        class_count: Number of twin classes
    """

    n: int
    min_degree: int
    degree_counts: Dict[int, int]
    union_counts: Dict[int, int]
    degree_sum_counts: Dict[int, int]
    edge_counts: Dict[Tuple[int, int], int]
    non_edge_counts: Dict[Tuple[int, int, int], int]
    class_count: int

    @property
    def non_edge_union_counts(self) -> Dict[int, int]:
        """|N[u] ∪ N[v]| -> count, over non-adjacent pairs only."""
        counts: Counter = Counter()
        for (du, dv, common), c in self.non_edge_counts.items():
            counts[du + dv + 2 - common] += c
        return dict(counts)

    def non_neighbor_weights(self) -> Dict[int, int]:
        """d -> (number of vertices of degree d) * (n - 1 - d)."""
        return {d: c * (self.n - 1 - d) for d, c in self.degree_counts.items()}


@lru_cache(maxsize=64)
def graph_profile(g: Graph) -> GraphProfile:
    """Build (and cache) the pair statistics of ``g``."""
    classes = twin_classes(g)
    degree_counts: Counter = Counter()
    union_counts: Counter = Counter()
    degree_sum_counts: Counter = Counter()
    edge_counts: Counter = Counter()
    non_edge_counts: Counter = Counter()

    for i, ci in enumerate(classes):
        degree_counts[ci.degree] += ci.size
        within = ci.size * (ci.size - 1) // 2
        if within:
            # Twins are never adjacent and share all d neighbors.
            union_counts[ci.degree + 2] += within
            degree_sum_counts[2 * ci.degree] += within
            non_edge_counts[(ci.degree, ci.degree, ci.degree)] += within

        for cj in classes[i + 1 :]:
            pairs = ci.size * cj.size
            adjacent = (ci.mask >> cj.rep) & 1
            degrees = (min(ci.degree, cj.degree), max(ci.degree, cj.degree))
            degree_sum_counts[ci.degree + cj.degree] += pairs
            if adjacent:
                union_counts[(ci.mask | cj.mask).bit_count()] += pairs
                edge_counts[degrees] += pairs
            else:
                union_counts[(ci.mask | cj.mask).bit_count() + 2] += pairs
                common = (ci.mask & cj.mask).bit_count()
                non_edge_counts[degrees + (common,)] += pairs

    logger.debug(f"Profile of n={g.n}: {len(classes)} twin classes")
    return GraphProfile(
        n=g.n,
        min_degree=min(degree_counts),
        degree_counts=dict(degree_counts),
        union_counts=dict(union_counts),
        degree_sum_counts=dict(degree_sum_counts),
        edge_counts=dict(edge_counts),
        non_edge_counts=dict(non_edge_counts),
        class_count=len(classes),
    )


@dataclass(frozen=True)
class BipartiteProfile:
    """
    Pair statistics of a bipartite graph split into sides A and B.

    Attributes:
        size_a, size_b: |A|, |B|
        degrees_a: d -> count over A (degrees_b likewise)
        pairs_a: (d(u), d(v), |N(u) ∪ N(v)|) over pairs inside A
        pairs_b: same inside B
        cross: (d(u), d(v), adjacent) over u in A, v in B
    """

    size_a: int
    size_b: int
    degrees_a: Dict[int, int]
    degrees_b: Dict[int, int]
    pairs_a: Dict[Tuple[int, int, int], int]
    pairs_b: Dict[Tuple[int, int, int], int]
    cross: Dict[Tuple[int, int, bool], int]


def _side_pairs(classes: List[TwinClass]) -> Tuple[Dict[int, int], Dict[Tuple[int, int, int], int]]:
    degrees: Counter = Counter()
    pairs: Counter = Counter()
    for i, ci in enumerate(classes):
        degrees[ci.degree] += ci.size
        within = ci.size * (ci.size - 1) // 2
        if within:
            pairs[(ci.degree, ci.degree, ci.degree)] += within
        for cj in classes[i + 1 :]:
            du, dv = sorted((ci.degree, cj.degree))
            pairs[(du, dv, (ci.mask | cj.mask).bit_count())] += ci.size * cj.size
    return dict(degrees), dict(pairs)


@lru_cache(maxsize=64)
def bipartite_profile(g: Graph, bip: Bipartition) -> BipartiteProfile:
    """
    Build the side statistics for a validated bipartition.

    Raises:
        NotBipartiteError: If an edge lies inside a side
    """
    mask_a = bip.mask_a
    for u in bip.side_a:
        if g.adj[u] & mask_a:
            raise NotBipartiteError(f"edge inside side A at vertex {u}")
    mask_b = bip.mask_b
    for v in bip.side_b:
        if g.adj[v] & mask_b:
            raise NotBipartiteError(f"edge inside side B at vertex {v}")

    classes_a = twin_classes(g, bip.side_a)
    classes_b = twin_classes(g, bip.side_b)
    degrees_a, pairs_a = _side_pairs(classes_a)
    degrees_b, pairs_b = _side_pairs(classes_b)

    cross: Counter = Counter()
    for ca in classes_a:
        for cb in classes_b:
            adjacent = bool((ca.mask >> cb.rep) & 1)
            cross[(ca.degree, cb.degree, adjacent)] += ca.size * cb.size

    return BipartiteProfile(
        size_a=len(bip.side_a),
        size_b=len(bip.side_b),
        degrees_a=degrees_a,
        degrees_b=degrees_b,
        pairs_a=pairs_a,
        pairs_b=pairs_b,
        cross=dict(cross),
    )

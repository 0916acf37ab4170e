"""
Simple undirected graphs stored as adjacency bitsets.

Vertex ``u``'s neighborhood is the Python integer ``adj[u]`` whose bit ``v``
is set iff {u, v} is an edge. Unions and popcounts on these integers are the
workhorse of every bound.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import GraphFormatError, InvalidParameterError


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask < 0:
        raise ValueError("bitset must be non-negative")
    if mask.bit_length() <= 64:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low
        return
    # Linear in the width for large masks.
    bits = bin(mask)[:1:-1]
    i = bits.find("1")
    while i != -1:
        yield i
        i = bits.find("1", i + 1)


def _mask_from(indices: Sequence[int], n: int) -> int:
    if len(indices) <= 8:
        mask = 0
        for v in indices:
            mask |= 1 << v
        return mask
    buf = bytearray((n + 7) // 8)
    for v in indices:
        buf[v >> 3] |= 1 << (v & 7)
    return int.from_bytes(buf, "little")


@dataclass(frozen=True)
class Graph:
    """
    An immutable simple undirected graph on vertices 0..n-1.

    Invariants: adjacency is symmetric and irreflexive and
    edge_count equals half the degree sum.
    """

    n: int
    adj: Tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise InvalidParameterError(
                f"expected {self.n} adjacency rows, got {len(self.adj)}"
            )
        object.__setattr__(self, "edge_count", sum(self.degrees) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from an edge iterable; duplicates collapse.

        Raises:
            InvalidParameterError: On a loop or an endpoint outside 0..n-1
        """
        if n < 1:
            raise InvalidParameterError(f"a graph needs at least one vertex, got n={n}")
        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n, tuple(_mask_from(sorted(nb), n) for nb in neighbors))

    @classmethod
    def from_adjacency(cls, n: int, adj: Sequence[int], validate: bool = True) -> "Graph":
        """
        Wrap precomputed bitsets.

        Builders that are symmetric by construction pass ``validate=False``.
        """
        graph = cls(n, tuple(adj))
        if validate:
            full = (1 << n) - 1
            for u in range(n):
                row = graph.adj[u]
                if row & ~full or row < 0:
                    raise GraphFormatError(f"row {u} references vertices beyond n={n}")
                if (row >> u) & 1:
                    raise GraphFormatError(f"loop at vertex {u}")
                for v in iter_bits(row):
                    if not (graph.adj[v] >> u) & 1:
                        raise GraphFormatError(f"edge ({u}, {v}) is not symmetric")
        return graph

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabelling nodes densely in sorted order."""
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def degree(self, u: int) -> int:
        return self.degrees[u]

    def closed(self, u: int) -> int:
        """Bitset of N[u]."""
        return self.adj[u] | (1 << u)

    def neighbors(self, u: int) -> List[int]:
        return list(iter_bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edge_count={self.edge_count})"


@dataclass(frozen=True)
class GammaClassProof:
    """Why a graph is (or is not) in class Gamma."""

    connected: bool
    non_complete: bool
    n_ge_3: bool

    @property
    def in_gamma(self) -> bool:
        return self.connected and self.non_complete and self.n_ge_3

    def __bool__(self) -> bool:
        return self.in_gamma


@dataclass(frozen=True)
class Bipartition:
    """A two-colouring of a bipartite graph; every edge joins side_a to side_b."""

    side_a: Tuple[int, ...]
    side_b: Tuple[int, ...]

    @property
    def mask_a(self) -> int:
        return _mask_from(self.side_a, max(self.side_a, default=0) + 1)

    @property
    def mask_b(self) -> int:
        return _mask_from(self.side_b, max(self.side_b, default=0) + 1)


def is_connected(g: Graph) -> bool:
    """Frontier search from vertex 0 on bitsets."""
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for u in iter_bits(frontier):
            reach |= g.adj[u]
        frontier = reach & ~seen
        seen |= frontier
    return seen.bit_count() == g.n


def gamma_class(g: Graph) -> GammaClassProof:
    return GammaClassProof(
        connected=is_connected(g),
        non_complete=g.edge_count < g.n * (g.n - 1) // 2,
        n_ge_3=g.n >= 3,
    )


def find_bipartition(g: Graph) -> Optional[Bipartition]:
    """BFS layering, component by component; None when an odd cycle exists."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj[u]):
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    side_a = tuple(v for v in range(g.n) if colour[v] == 0)
    side_b = tuple(v for v in range(g.n) if colour[v] == 1)
    return Bipartition(side_a=side_a, side_b=side_b)


def closed_union_size(g: Graph, u: int, v: int) -> int:
    """|N[u] ∪ N[v]| for distinct u, v."""
    if u == v:
        raise InvalidParameterError("closed_union_size needs two distinct vertices")
    return (g.closed(u) | g.closed(v)).bit_count()

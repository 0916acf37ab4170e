"""
Named graph families and the small-graph catalog.

Canonical vertex orderings:
    star(m): center is vertex 0, leaves are 1..m
    path(n): vertices 0..n-1 in path order
    cycle(n): vertices 0..n-1 in cyclic order
    complete_bipartite(a, b): side A is 0..a-1, side B is a..a+b-1

The builders assemble adjacency bitsets directly, so K_{1,10^6} is built in
linear time.
"""

import logging
from typing import Callable, Dict, Iterator, Tuple

import networkx as nx

from .errors import InvalidParameterError
from .graph import Graph, gamma_class

logger = logging.getLogger(__name__)

ATLAS_MAX_N = 7


def star(m: int) -> Graph:
    if m < 1:
        raise InvalidParameterError(f"star needs m >= 1, got {m}")
    n = m + 1
    center = ((1 << n) - 1) ^ 1
    return Graph.from_adjacency(n, (center,) + (1,) * m, validate=False)


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    adj = []
    for i in range(n):
        row = 0
        if i > 0:
            row |= 1 << (i - 1)
        if i < n - 1:
            row |= 1 << (i + 1)
        adj.append(row)
    return Graph.from_adjacency(n, adj, validate=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    adj = [(1 << ((i - 1) % n)) | (1 << ((i + 1) % n)) for i in range(n)]
    return Graph.from_adjacency(n, adj, validate=False)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameterError(f"complete_bipartite needs a, b >= 1, got ({a}, {b})")
    n = a + b
    side_a = (1 << a) - 1
    side_b = ((1 << n) - 1) ^ side_a
    return Graph.from_adjacency(n, (side_b,) * a + (side_a,) * b, validate=False)


FAMILIES: Dict[str, Tuple[Callable[..., Graph], int]] = {
    "star": (star, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete_bipartite": (complete_bipartite, 2),
}

ALIASES = {"cbip": "complete_bipartite", "kmn": "complete_bipartite"}


def make_named(family: str, *params: int) -> Graph:
    """
    Build a member of a named family.

    Args:
        family: One of star, path, cycle, complete_bipartite (or an alias)
        *params: Family parameters, e.g. ``make_named("complete_bipartite", 2, 1000)``

    Raises:
        InvalidParameterError: Unknown family or wrong parameter count/values
    """
    key = ALIASES.get(family, family)
    if key not in FAMILIES:
        available = ", ".join(sorted(FAMILIES) + sorted(ALIASES))
        raise InvalidParameterError(f"Unknown family '{family}'. Available: {available}")
    builder, arity = FAMILIES[key]
    if len(params) != arity:
        raise InvalidParameterError(
            f"{key} takes {arity} parameter(s), got {len(params)}"
        )
    return builder(*params)


def parse_named(spec: str) -> Graph:
    """Parse ``family:p1,p2`` (e.g. ``star:1000000``, ``cbip:2,1000``)."""
    family, sep, raw = spec.partition(":")
    if not sep or not raw:
        raise InvalidParameterError(f"expected family:params, got {spec!r}")
    try:
        params = [int(p) for p in raw.split(",")]
    except ValueError:
        raise InvalidParameterError(f"non-integer parameter in {spec!r}")
    return make_named(family.strip().lower(), *params)


def small_graph_catalog(max_n: int) -> Iterator[Graph]:
    """
    Every connected non-complete graph on 3..max_n vertices, one per
    isomorphism class, in graph atlas order.
    """
    if not 3 <= max_n <= ATLAS_MAX_N:
        raise InvalidParameterError(f"catalog covers 3 <= max_n <= {ATLAS_MAX_N}, got {max_n}")
    count = 0
    for h in nx.graph_atlas_g():
        if not 3 <= h.number_of_nodes() <= max_n:
            continue
        g = Graph.from_networkx(h)
        if gamma_class(g).in_gamma:
            count += 1
            yield g
    logger.debug(f"Catalog up to n={max_n}: {count} graphs")

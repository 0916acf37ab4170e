"""
Exact domination and independence numbers for small graphs.

exact_gamma runs iterative deepening over the dominating-set size, starting
below a greedy upper bound and branching on the closed neighborhood of the
first undominated vertex. exact_alpha is a branch and bound on the
maximum-degree vertex of the candidate set. The brute_force variants scan
all subsets by increasing size and serve as meta-oracles in tests.
"""

import logging
from typing import Optional

from ..core.errors import OracleLimitError
from ..core.graph import Graph, iter_bits
from .distributions import iter_subsets

logger = logging.getLogger(__name__)

DEFAULT_GAMMA_LIMIT = 24
DEFAULT_ALPHA_LIMIT = 40
BRUTE_FORCE_LIMIT = 20


def greedy_dominating_set(g: Graph) -> int:
    """Bitset of a greedy dominating set (largest new coverage first)."""
    full = (1 << g.n) - 1
    uncovered = full
    chosen = 0
    while uncovered:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            gain = (g.closed(v) & uncovered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        uncovered &= ~g.closed(best_v)
    return chosen


def exact_gamma(g: Graph, limit: int = DEFAULT_GAMMA_LIMIT) -> int:
    """
    Domination number by iterative deepening.

    Raises:
        OracleLimitError: If n exceeds ``limit``
    """
    if g.n > limit:
        raise OracleLimitError("exact_gamma refused", size=g.n, limit=limit)
    closed = [g.closed(v) for v in range(g.n)]
    reach = max(c.bit_count() for c in closed)
    upper = greedy_dominating_set(g).bit_count()

    def search(uncovered: int, left: int) -> bool:
        if not uncovered:
            return True
        if left == 0 or uncovered.bit_count() > left * reach:
            return False
        low = uncovered & -uncovered
        v = low.bit_length() - 1
        # Some member of N[v] must be chosen.
        for w in iter_bits(closed[v]):
            if search(uncovered & ~closed[w], left - 1):
                return True
        return False

    full = (1 << g.n) - 1
    for k in range(1, upper):
        if search(full, k):
            logger.debug(f"exact_gamma = {k} (greedy gave {upper})")
            return k
    return upper


def exact_alpha(g: Graph, limit: int = DEFAULT_ALPHA_LIMIT) -> int:
    """
    Independence number by branch and bound.

    Raises:
        OracleLimitError: If n exceeds ``limit``
    """
    if g.n > limit:
        raise OracleLimitError("exact_alpha refused", size=g.n, limit=limit)
    adj = g.adj
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        pivot, pivot_degree = -1, -1
        for v in iter_bits(candidates):
            d = (adj[v] & candidates).bit_count()
            if d > pivot_degree:
                pivot, pivot_degree = v, d
        if pivot_degree <= 0:
            # Candidates are pairwise non-adjacent.
            best = max(best, size + candidates.bit_count())
            return
        expand(candidates & ~adj[pivot] & ~(1 << pivot), size + 1)
        expand(candidates & ~(1 << pivot), size)

    expand((1 << g.n) - 1, 0)
    return best


def _check_brute_force(g: Graph, name: str) -> None:
    if g.n > BRUTE_FORCE_LIMIT:
        raise OracleLimitError(f"{name} refused", size=g.n, limit=BRUTE_FORCE_LIMIT)


def brute_force_gamma(g: Graph) -> int:
    """Smallest k such that some k-subset dominates, by full enumeration."""
    _check_brute_force(g, "brute_force_gamma")
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for subset in iter_subsets(g.n, k):
            covered = 0
            for v in iter_bits(subset):
                covered |= g.closed(v)
            if covered == full:
                return k
    return g.n


def brute_force_alpha(g: Graph) -> int:
    """Largest k such that some k-subset is independent, by full enumeration."""
    _check_brute_force(g, "brute_force_alpha")
    best: Optional[int] = None
    for k in range(g.n, 0, -1):
        for subset in iter_subsets(g.n, k):
            if all(not (g.adj[v] & subset) for v in iter_bits(subset)):
                best = k
                break
        if best is not None:
            return best
    return 0

"""
Exhaustive distributions of the alteration variables.

Each function enumerates every equally likely random choice behind one of
the bounds and returns the exact distribution of the resulting set size:

    dom: X a t-subset of V, Y the vertices with N[u] ∩ X empty, z = |X| + |Y|
    bip: X_A, X_B subsets of the sides, Y_A, Y_B the side vertices outside
         X_A (X_B) with no neighbor in X_B (X_A), z = |X_A|+|X_B|+|Y_A|+|Y_B|
    ind: X a t-subset of V, Y the members of X with a neighbor in X,
         z = |X| - |Y|
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, Mapping

from ..core.arith import binom
from ..core.errors import InvalidParameterError, OracleLimitError
from ..core.graph import Bipartition, Graph, iter_bits

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 10_000_000


def iter_subsets(n: int, t: int) -> Iterator[int]:
    """All t-subsets of 0..n-1 as bitmasks in colex order (Gosper's hack)."""
    if t < 0 or t > n:
        return
    if t == 0:
        yield 0
        return
    subset = (1 << t) - 1
    limit = 1 << n
    while subset < limit:
        yield subset
        low = subset & -subset
        ripple = subset + low
        subset = (((ripple ^ subset) >> 2) // low) | ripple


@dataclass(frozen=True)
class ExactDistribution:
    """
    A finite distribution of equally likely integer outcomes.

    mean and variance are exact; ``bhatia_davis_slack`` is
    (mean - min)(max - mean) - variance, which is never negative.
    """

    support: Dict[int, int]
    total: int
    mean: Fraction = field(init=False)
    variance: Fraction = field(init=False)
    min_val: int = field(init=False)
    max_val: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.support or self.total != sum(self.support.values()):
            raise InvalidParameterError("distribution counts must be non-empty and sum to total")
        mean = Fraction(sum(v * c for v, c in self.support.items()), self.total)
        second = Fraction(sum(v * v * c for v, c in self.support.items()), self.total)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "variance", second - mean**2)
        object.__setattr__(self, "min_val", min(self.support))
        object.__setattr__(self, "max_val", max(self.support))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "ExactDistribution":
        support = {v: c for v, c in sorted(counts.items()) if c}
        return cls(support=support, total=sum(support.values()))

    def merge(self, other: "ExactDistribution") -> "ExactDistribution":
        """Combine two partial enumerations by adding counts."""
        counts = Counter(self.support)
        counts.update(other.support)
        return ExactDistribution.from_counts(counts)

    @property
    def bhatia_davis_slack(self) -> Fraction:
        return (self.mean - self.min_val) * (self.max_val - self.mean) - self.variance

    def satisfies_bhatia_davis(self) -> bool:
        return self.bhatia_davis_slack >= 0


def _check_limit(name: str, outcomes: int, limit: int) -> None:
    if outcomes > limit:
        raise OracleLimitError(f"{name} enumeration refused", size=outcomes, limit=limit)


def exhaustive_dom_distribution(
    g: Graph, t: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> ExactDistribution:
    """
    Distribution of |X| + |Y| over all t-subsets X.

    Raises:
        InvalidParameterError: If t is outside [1, n - delta]
        OracleLimitError: If C(n, t) exceeds ``limit``
    """
    if not 1 <= t <= g.n - g.min_degree:
        raise InvalidParameterError(f"t must lie in [1, {g.n - g.min_degree}], got {t}")
    _check_limit("dom", binom(g.n, t), limit)
    closed = [g.closed(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    counts: Counter = Counter()
    for subset in iter_subsets(g.n, t):
        covered = 0
        for v in iter_bits(subset):
            covered |= closed[v]
        counts[t + (full & ~covered).bit_count()] += 1
    return ExactDistribution.from_counts(counts)


def exhaustive_bip_distribution(
    g: Graph, bip: Bipartition, a: int, b: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> ExactDistribution:
    """
    Distribution of |X_A| + |X_B| + |Y_A| + |Y_B| over all (X_A, X_B).

    Raises:
        InvalidParameterError: If a or b exceed the side sizes
        OracleLimitError: If C(|A|, a) * C(|B|, b) exceeds ``limit``
    """
    side_a, side_b = bip.side_a, bip.side_b
    if not (0 <= a <= len(side_a) and 0 <= b <= len(side_b)):
        raise InvalidParameterError(f"(a, b) = ({a}, {b}) exceeds the sides")
    _check_limit("bip", binom(len(side_a), a) * binom(len(side_b), b), limit)
    mask_a, mask_b = bip.mask_a, bip.mask_b

    picks_b = []
    for chosen in combinations(side_b, b):
        x_b = 0
        reach_b = 0
        for v in chosen:
            x_b |= 1 << v
            reach_b |= g.adj[v]
        picks_b.append((x_b, reach_b))

    counts: Counter = Counter()
    for chosen in combinations(side_a, a):
        x_a = 0
        reach_a = 0
        for u in chosen:
            x_a |= 1 << u
            reach_a |= g.adj[u]
        for x_b, reach_b in picks_b:
            y_a = mask_a & ~x_a & ~reach_b
            y_b = mask_b & ~x_b & ~reach_a
            counts[a + b + y_a.bit_count() + y_b.bit_count()] += 1
    return ExactDistribution.from_counts(counts)


def exhaustive_ind_distribution(
    g: Graph, t: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> ExactDistribution:
    """
    Distribution of |X| - |Y| over all t-subsets X.

    Raises:
        InvalidParameterError: If t is outside [2, n - delta]
        OracleLimitError: If C(n, t) exceeds ``limit``
    """
    if not 2 <= t <= g.n - g.min_degree:
        raise InvalidParameterError(f"t must lie in [2, {g.n - g.min_degree}], got {t}")
    _check_limit("ind", binom(g.n, t), limit)
    counts: Counter = Counter()
    for subset in iter_subsets(g.n, t):
        isolated = sum(1 for v in iter_bits(subset) if not g.adj[v] & subset)
        counts[isolated] += 1
    return ExactDistribution.from_counts(counts)

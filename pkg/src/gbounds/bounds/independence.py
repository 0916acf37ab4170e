"""
Lower bounds on the independence number.

alpha_cw, alpha_s and alpha_acl are closed sums over vertices, edges and
non-edges. alpha_hr runs the greedy degree-family algorithm. alpha_hm
maximises 2t - 1 - b(G,t)/a(G,t) over 2 <= t <= n - delta, where a and b
are raw binomial sums.

The variance of the alteration variable z' = |X| - |Y'| involves, for a
non-edge {u, v}, the (t-2)-subsets of V minus N[u] minus {v}, which has
n - d(u) - 2 elements. The printed b(G,t) counts n - d(u) - 1 instead and
is never smaller, so alpha_hm keeps it as stated while alpha_hm_sharp uses
the exact count.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ..core.arith import binom, ratio_sweep
from ..core.errors import InvalidParameterError, InvariantViolationError
from ..core.formats import encode_graph6
from ..core.graph import Graph
from .base import LOWER, BaseBound, Optimum, require_gamma
from .profile import graph_profile, twin_classes

logger = logging.getLogger(__name__)


def _witness(g: Graph, **extra) -> Dict:
    record = {"graph6": encode_graph6(g) if g.n <= 512 else None}
    record.update(extra)
    return record


def alpha_cw(g: Graph) -> Optimum:
    """Sum of 1/(d(u)+1)."""
    require_gamma(g)
    profile = graph_profile(g)
    value = sum((Fraction(c, d + 1) for d, c in profile.degree_counts.items()), Fraction(0))
    return Optimum(value=value)


def alpha_s(g: Graph) -> Optimum:
    """
    alpha_CW plus, per vertex u, (1/(d(u)+1)) * max(d(u)/(d(u)+1) - sum over
    v in N(u) of 1/(d(v)+1), 0).

    Twin classes share the neighbor sum, which is itself summed per class.
    """
    require_gamma(g)
    classes = twin_classes(g)
    value = alpha_cw(g).value
    for ci in classes:
        neighbor_sum = Fraction(0)
        for cj in classes:
            if (ci.mask >> cj.rep) & 1:
                neighbor_sum += Fraction(cj.size, cj.degree + 1)
        gain = Fraction(ci.degree, ci.degree + 1) - neighbor_sum
        if gain > 0:
            value += ci.size * gain / (ci.degree + 1)
    return Optimum(value=value)


def acl_correction(g: Graph) -> Fraction:
    """
    The nonnegative correction term A(G): a degree term, minus an edge term,
    plus a common-neighbor term over non-edges.
    """
    profile = graph_profile(g)
    degree_term = sum(
        (Fraction(c * d, (d + 1) ** 2) for d, c in profile.degree_counts.items()), Fraction(0)
    )
    edge_term = sum(
        (Fraction(2 * c, (du + 1) * (dv + 1)) for (du, dv), c in profile.edge_counts.items()),
        Fraction(0),
    )
    common_term = Fraction(0)
    for (du, dv, common), c in profile.non_edge_counts.items():
        if common:
            common_term += Fraction(
                2 * c * common, (du + 1) * (dv + 1) * (2 + du + dv - common)
            )
    return degree_term - edge_term + common_term


def alpha_acl(g: Graph) -> Optimum:
    """
    alpha_CW + A(G)/(alpha_CW - 1).

    Raises:
        InvariantViolationError: If A(G) < 0 or alpha_CW <= 1
    """
    require_gamma(g)
    cw = alpha_cw(g).value
    correction = acl_correction(g)
    if correction < 0:
        raise InvariantViolationError(f"A(G) = {correction} is negative", _witness(g))
    if cw <= 1:
        raise InvariantViolationError(f"alpha_CW = {cw} is not above 1", _witness(g))
    return Optimum(value=cw + correction / (cw - 1))


class DegreeFamily:
    """
    The multiset {d(u) + 1} after ``l`` greedy decrements of a maximum member.

    Stored as a value histogram; a decrement moves members from the current
    maximum value to the value below it, so ``decrement(count)`` costs time
    proportional to the number of distinct levels crossed. ``value`` is the
    exact sum of reciprocals, maintained incrementally.
    """

    def __init__(self, degrees: Dict[int, int]):
        self.histogram: Dict[int, int] = {}
        for d, c in degrees.items():
            self.histogram[d + 1] = self.histogram.get(d + 1, 0) + c
        self.l = 0
        self.capacity = sum(d * c for d, c in degrees.items())
        self.value = sum((Fraction(c, f) for f, c in self.histogram.items()), Fraction(0))
        self._max = max(self.histogram)

    @classmethod
    def from_graph(cls, g: Graph) -> "DegreeFamily":
        return cls(graph_profile(g).degree_counts)

    def decrement(self, count: int = 1) -> "DegreeFamily":
        """
        Apply ``count`` greedy decrements in place.

        Raises:
            InvalidParameterError: If members would drop below 1
        """
        if count < 0 or self.l + count > self.capacity:
            raise InvalidParameterError(
                f"l must stay within [0, {self.capacity}], requested {self.l + count}"
            )
        hist = self.histogram
        while count:
            top = self._max
            moved = min(count, hist[top])
            hist[top] -= moved
            hist[top - 1] = hist.get(top - 1, 0) + moved
            self.value += Fraction(moved, top * (top - 1))
            if hist[top] == 0:
                del hist[top]
                self._max = top - 1
            count -= moved
            self.l += moved
        return self

    def members(self) -> List[int]:
        """Sorted member list (small graphs and tests)."""
        return sorted(Counter(self.histogram).elements())


def phi(g: Graph, l: int) -> Fraction:
    """
    Minimum of sum 1/(d(u)+1-psi(u)) over psi with sum psi = l, psi(u) <= d(u),
    via the greedy family.

    Raises:
        InvalidParameterError: If l is outside [0, sum of degrees]
    """
    if l < 0:
        raise InvalidParameterError(f"l must be non-negative, got {l}")
    return DegreeFamily.from_graph(g).decrement(l).value


def alpha_hr(g: Graph) -> Optimum:
    """Smallest integer k with k >= phi(G, 2(k-1)), found by counting k up from 1."""
    require_gamma(g)
    family = DegreeFamily.from_graph(g)
    k = 1
    while k < family.value:
        k += 1
        family.decrement(2)
    return Optimum(value=Fraction(k), argopt=family.l, evaluated=k)


@dataclass(frozen=True)
class IndTermsAtT:
    """
    Raw binomial sums at one t.

    Attributes:
        a_ind: sum over u of C(n-d(u)-1, t-1)
        b_ind: the printed b(G,t), with C(n-d(u)-1, t-2) per endpoint
        b_sharp: the same with C(n-d(u)-2, t-2) per endpoint
        hm_value: 2t - 1 - b_ind/a_ind
        sharp_value: 2t - 1 - b_sharp/a_ind
    """

    t: int
    a_ind: int
    b_ind: int
    b_sharp: int
    hm_value: Fraction
    sharp_value: Fraction


def _check_t(g: Graph, t: int) -> None:
    if not 2 <= t <= g.n - g.min_degree:
        raise InvalidParameterError(f"t must lie in [2, {g.n - g.min_degree}], got {t}")


def ind_terms(g: Graph, t: int) -> IndTermsAtT:
    """
    Evaluate a_ind, b_ind, b_sharp at one t as exact integers.

    Raises:
        NotInGammaError: If g is not in Gamma
        InvalidParameterError: If t is outside [2, n - delta]
        InvariantViolationError: If a_ind is not positive
    """
    require_gamma(g)
    _check_t(g, t)
    n = g.n
    profile = graph_profile(g)
    weights = profile.non_neighbor_weights()

    a_ind = sum(c * binom(n - d - 1, t - 1) for d, c in profile.degree_counts.items())
    union = sum(c * binom(n - u, t - 2) for u, c in profile.non_edge_union_counts.items())
    b_ind = 2 * (sum(w * binom(n - d - 1, t - 2) for d, w in weights.items()) - union)
    b_sharp = 2 * (sum(w * binom(n - d - 2, t - 2) for d, w in weights.items()) - union)
    if a_ind <= 0:
        raise InvariantViolationError(f"a(G,{t}) = {a_ind} is not positive", _witness(g, t=t))
    return IndTermsAtT(
        t=t,
        a_ind=a_ind,
        b_ind=b_ind,
        b_sharp=b_sharp,
        hm_value=2 * t - 1 - Fraction(b_ind, a_ind),
        sharp_value=2 * t - 1 - Fraction(b_sharp, a_ind),
    )


def independence_sweep(g: Graph) -> Iterator[Tuple[int, Fraction, Fraction]]:
    """
    Yield (t, hm_value, sharp_value) for t = 2..n - delta.

    Works on ratios C(s, t')/C(n, t') for t' = t-1 and t-2 and rescales by
    C(n, t-2)/C(n, t-1) = (t-1)/(n-t+2), avoiding the raw big integers.
    """
    require_gamma(g)
    n = g.n
    last = n - g.min_degree
    profile = graph_profile(g)
    weights = profile.non_neighbor_weights()

    singles = {n - d - 1: c for d, c in profile.degree_counts.items()}
    printed = Counter()
    sharp = Counter()
    for d, w in weights.items():
        if w:
            printed[n - d - 1] += w
            sharp[n - d - 2] += w
    unions = profile.non_edge_union_counts
    union_support = {n - u: c for u, c in unions.items()}
    support = set(singles) | set(printed) | set(sharp) | set(union_support)

    previous = None
    for column in ratio_sweep(n, support, 0, last - 1):
        if previous is not None:
            t = column.t + 1
            a_ratio = column.weighted_sum(singles)
            if a_ratio <= 0:
                raise InvariantViolationError(f"a(G,{t}) is not positive", _witness(g, t=t))
            union_ratio = previous.weighted_sum(union_support)
            scale = Fraction(t - 1, n - t + 2) / a_ratio
            b_printed = 2 * (previous.weighted_sum(printed) - union_ratio)
            b_sharp = 2 * (previous.weighted_sum(sharp) - union_ratio)
            yield t, 2 * t - 1 - b_printed * scale, 2 * t - 1 - b_sharp * scale
        previous = column


def _maximise(g: Graph, index: int) -> Optimum:
    best: Optional[Fraction] = None
    best_t = 0
    evaluated = 0
    for row in independence_sweep(g):
        evaluated += 1
        value = row[index]
        if best is None or value > best:
            best, best_t = value, row[0]
    assert best is not None
    return Optimum(value=best, argopt=best_t, evaluated=evaluated)


def alpha_hm(g: Graph) -> Optimum:
    """Maximum over 2 <= t <= n - delta of 2t - 1 - b(G,t)/a(G,t)."""
    return _maximise(g, 1)


def alpha_hm_sharp(g: Graph) -> Optimum:
    """alpha_hm with the exact non-edge count; never below alpha_hm."""
    return _maximise(g, 2)


class AlphaCWBound(BaseBound):
    name = "alpha_cw"
    label = "α_CW"
    kind = LOWER

    def compute(self, g: Graph) -> Optimum:
        return alpha_cw(g)


class AlphaSBound(BaseBound):
    name = "alpha_s"
    label = "α_S"
    kind = LOWER

    def compute(self, g: Graph) -> Optimum:
        return alpha_s(g)


class AlphaACLBound(BaseBound):
    name = "alpha_acl"
    label = "α_ACL"
    kind = LOWER

    def compute(self, g: Graph) -> Optimum:
        return alpha_acl(g)


class AlphaHRBound(BaseBound):
    name = "alpha_hr"
    label = "α_HR"
    kind = LOWER

    def compute(self, g: Graph) -> Optimum:
        return alpha_hr(g)


class AlphaHMBound(BaseBound):
    name = "alpha_hm"
    label = "α_HM"
    kind = LOWER

    def compute(self, g: Graph) -> Optimum:
        return alpha_hm(g)


class AlphaHMSharpBound(BaseBound):
    name = "alpha_hm_sharp"
    label = "α_HM*"
    kind = LOWER

    def compute(self, g: Graph) -> Optimum:
        return alpha_hm_sharp(g)

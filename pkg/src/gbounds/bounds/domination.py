"""
Upper bounds on the domination number.

gamma_cssf, gamma_hm1 and gamma_hm2 minimise over t in [n - delta] the
mean-and-variance expressions obtained from a uniformly random t-set X and
the vertices Y it leaves undominated. gamma_hm3 does the same for bipartite
graphs with one random set per side.

Every per-t value is at least t, so a minimisation can stop as soon as t
reaches the best value found; ties keep the smaller t.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple

from ..core.arith import RatioColumn, ratio_sweep, ratio_table
from ..core.errors import InvalidParameterError, InvariantViolationError, NotBipartiteError
from ..core.formats import encode_graph6
from ..core.graph import Bipartition, Graph, find_bipartition, is_connected
from .base import UPPER, BaseBound, Optimum, require_gamma
from .profile import BipartiteProfile, bipartite_profile, graph_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DomTermsAtT:
    """a(G,t), b(G,t), c(G,t) and the two per-t bound values."""

    t: int
    a: Fraction
    b: Fraction
    c: Fraction
    hm1_value: Fraction
    hm2_value: Fraction

    @property
    def variance(self) -> Fraction:
        return self.b - (self.a - self.t) ** 2


def _check_dom(g: Graph, terms: DomTermsAtT) -> DomTermsAtT:
    n = g.n
    witness = {"graph6": _safe_graph6(g), "t": terms.t}
    if not terms.a < n:
        raise InvariantViolationError(f"a(G,{terms.t}) = {terms.a} is not below n = {n}", witness)
    if terms.variance < 0:
        raise InvariantViolationError(
            f"b(G,{terms.t}) - (a - t)^2 = {terms.variance} is negative", witness
        )
    if terms.c > terms.b:
        raise InvariantViolationError(f"c(G,{terms.t}) = {terms.c} exceeds b = {terms.b}", witness)
    return terms


def _safe_graph6(g: Graph) -> Optional[str]:
    return encode_graph6(g) if g.n <= 512 else None


def _assemble(t: int, n: int, single: Fraction, pair_b: Fraction, pair_c: Fraction) -> DomTermsAtT:
    a = t + single
    b = single + 2 * pair_b
    c = single + 2 * pair_c
    gap = n - a
    return DomTermsAtT(
        t=t,
        a=a,
        b=b,
        c=c,
        hm1_value=a - (b - single**2) / gap,
        hm2_value=a - (c - single**2) / gap,
    )


def dom_terms(g: Graph, t: int) -> DomTermsAtT:
    """
    Evaluate a, b, c at one t from a single ratio table.

    Args:
        g: Graph in Gamma
        t: 1 <= t <= n - delta

    Raises:
        NotInGammaError: If g is not in Gamma
        InvalidParameterError: If t is out of range
        InvariantViolationError: If a >= n, the variance is negative or c > b
    """
    require_gamma(g)
    n = g.n
    if not 1 <= t <= n - g.min_degree:
        raise InvalidParameterError(f"t must lie in [1, {n - g.min_degree}], got {t}")

    profile = graph_profile(g)
    r = ratio_table(n, t)
    single = sum((c * r[n - d - 1] for d, c in profile.degree_counts.items()), Fraction(0))
    pair_b = sum((c * r[n - u] for u, c in profile.union_counts.items()), Fraction(0))
    pair_c = sum((c * r[n - s - 2] for s, c in profile.degree_sum_counts.items()), Fraction(0))
    return _check_dom(g, _assemble(t, n, single, pair_b, pair_c))


def domination_sweep(g: Graph, t_stop: Optional[int] = None) -> Iterator[DomTermsAtT]:
    """
    Yield DomTermsAtT for t = 1, 2, ... up to n - delta (or ``t_stop``).

    Uses one incremental ratio sweep over the profile's support, so the
    cost per t is proportional to the number of distinct pair statistics.
    """
    require_gamma(g)
    n = g.n
    last = n - g.min_degree if t_stop is None else min(t_stop, n - g.min_degree)
    profile = graph_profile(g)

    singles = {n - d - 1: c for d, c in profile.degree_counts.items()}
    unions = {n - u: c for u, c in profile.union_counts.items()}
    sums = {n - s - 2: c for s, c in profile.degree_sum_counts.items() if n - s - 2 >= 0}
    support = set(singles) | set(unions) | set(sums)

    for column in ratio_sweep(n, support, 1, last):
        yield _check_dom(
            g,
            _assemble(
                column.t,
                n,
                column.weighted_sum(singles),
                column.weighted_sum(unions),
                column.weighted_sum(sums),
            ),
        )


def _minimise(g: Graph, value_of: Callable[[DomTermsAtT], Fraction]) -> Optimum:
    best: Optional[Fraction] = None
    best_t = 0
    evaluated = 0
    for terms in domination_sweep(g):
        if best is not None and terms.t >= best:
            break
        evaluated += 1
        value = value_of(terms)
        if best is None or value < best:
            best, best_t = value, terms.t
    assert best is not None
    logger.debug(f"Minimum {best} at t={best_t} after {evaluated} values of t")
    return Optimum(value=best, argopt=best_t, evaluated=evaluated)


def gamma_cssf(g: Graph) -> Optimum:
    """min over t of a(G,t)."""
    return _minimise(g, lambda terms: terms.a)


def gamma_hm1(g: Graph) -> Optimum:
    """min over t of a - (b - (a-t)^2)/(n - a)."""
    return _minimise(g, lambda terms: terms.hm1_value)


def gamma_hm2(g: Graph) -> Optimum:
    """As gamma_hm1 with the degree-only c(G,t) in place of b(G,t)."""
    return _minimise(g, lambda terms: terms.hm2_value)


@dataclass(frozen=True)
class BipTermsAtAB:
    """e..k at one grid point (a, b) and the resulting bound value."""

    a: int
    b: int
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction
    i: Fraction
    j: Fraction
    k: Fraction
    hm3_value: Fraction


def require_bipartition(g: Graph, bip: Optional[Bipartition] = None) -> Bipartition:
    """
    Return a bipartition with both sides of size >= 2 for a connected graph.

    Raises:
        NotBipartiteError: Not connected, not bipartite, or a side is too small
    """
    if not is_connected(g):
        raise NotBipartiteError("graph is not connected")
    if bip is None:
        bip = find_bipartition(g)
        if bip is None:
            raise NotBipartiteError("graph contains an odd cycle")
    if len(bip.side_a) < 2 or len(bip.side_b) < 2:
        raise NotBipartiteError(
            f"both sides need at least 2 vertices, got |A|={len(bip.side_a)}, |B|={len(bip.side_b)}"
        )
    if len(bip.side_a) + len(bip.side_b) != g.n or set(bip.side_a) & set(bip.side_b):
        raise NotBipartiteError("sides do not partition the vertex set")
    return bip


def _bip_point(
    prof: BipartiteProfile,
    a: int,
    b: int,
    col_a: RatioColumn,
    col_b: RatioColumn,
    literal_coefficient: bool = False,
) -> BipTermsAtAB:
    size_a, size_b = prof.size_a, prof.size_b
    keep_a = Fraction(size_a - a, size_a)
    keep_b = Fraction(size_b - b, size_b)

    # P(u in Y_A) for u in A of degree d, P(v in Y_B) for v in B.
    p = {d: keep_a * col_b[size_b - d] for d in prof.degrees_a}
    q = {d: keep_b * col_a[size_a - d] for d in prof.degrees_b}

    if literal_coefficient:
        coef_a = Fraction(size_a - 1, size_a) ** 2
        coef_b = Fraction(size_b - 1, size_b) ** 2
    else:
        coef_a = keep_a**2
        coef_b = keep_b**2
    both_a = Fraction((size_a - a) * (size_a - a - 1), size_a * (size_a - 1))
    both_b = Fraction((size_b - b) * (size_b - b - 1), size_b * (size_b - 1))

    e = a + b + sum((c * p[d] for d, c in prof.degrees_a.items()), Fraction(0))
    e += sum((c * q[d] for d, c in prof.degrees_b.items()), Fraction(0))
    f = sum((c * p[d] * (1 - p[d]) for d, c in prof.degrees_a.items()), Fraction(0))
    g_ = sum((c * q[d] * (1 - q[d]) for d, c in prof.degrees_b.items()), Fraction(0))

    h = Fraction(0)
    for (du, dv, union), c in prof.pairs_a.items():
        rb_u, rb_v = col_b[size_b - du], col_b[size_b - dv]
        h += c * (both_a * col_b[size_b - union] - coef_a * rb_u * rb_v)
    i = Fraction(0)
    for (du, dv, union), c in prof.pairs_b.items():
        ra_u, ra_v = col_a[size_a - du], col_a[size_a - dv]
        i += c * (both_b * col_a[size_a - union] - coef_b * ra_u * ra_v)
    j = Fraction(0)
    for (du, dv, adjacent), c in prof.cross.items():
        # |{u} ∪ N(v)| and |{v} ∪ N(u)|
        in_a = dv if adjacent else dv + 1
        in_b = du if adjacent else du + 1
        j += c * (col_a[size_a - in_a] * col_b[size_b - in_b] - p[du] * q[dv])

    k = f + g_ + 2 * (h + i + j)
    total = size_a + size_b
    return BipTermsAtAB(
        a=a, b=b, e=e, f=f, g=g_, h=h, i=i, j=j, k=k, hm3_value=e - k / (total - e)
    )


def _check_grid_point(prof: BipartiteProfile, a: int, b: int) -> None:
    in_box = 0 <= a <= prof.size_a and 0 <= b <= prof.size_b
    if not (in_box and 0 < a + b < prof.size_a + prof.size_b):
        raise InvalidParameterError(
            f"(a, b) = ({a}, {b}) is outside S({prof.size_a}, {prof.size_b})"
        )


def _check_bip(g: Graph, terms: BipTermsAtAB, total: int) -> BipTermsAtAB:
    witness = {"graph6": _safe_graph6(g), "a": terms.a, "b": terms.b}
    if not terms.e < total:
        raise InvariantViolationError(f"e = {terms.e} is not below |A|+|B| = {total}", witness)
    if terms.k < 0:
        raise InvariantViolationError(f"k = {terms.k} is negative", witness)
    return terms


def _point_supports(prof: BipartiteProfile) -> Tuple[set, set]:
    support_a = {prof.size_a - d for d in prof.degrees_b}
    support_a |= {prof.size_a - u for _, _, u in prof.pairs_b}
    support_a |= {prof.size_a - (dv if adj else dv + 1) for _, dv, adj in prof.cross}
    support_b = {prof.size_b - d for d in prof.degrees_a}
    support_b |= {prof.size_b - u for _, _, u in prof.pairs_a}
    support_b |= {prof.size_b - (du if adj else du + 1) for du, _, adj in prof.cross}
    return {s for s in support_a if s >= 0}, {s for s in support_b if s >= 0}


def _single_column(size: int, t: int, support: set) -> RatioColumn:
    table = ratio_table(size, t)
    return RatioColumn(n=size, t=t, values={s: table[s] for s in support})


def bip_terms(
    g: Graph,
    bip: Bipartition,
    a: int,
    b: int,
    literal_coefficient: bool = False,
) -> BipTermsAtAB:
    """
    Evaluate e, f, g, h, i, j, k at one grid point.

    The product terms of h and i use ((|A|-a)/|A|)^2 and ((|B|-b)/|B|)^2,
    the squared marginal of a vertex staying outside X_A (X_B). Passing
    ``literal_coefficient=True`` substitutes ((|A|-1)/|A|)^2 instead, which
    agrees only at a = 1 (b = 1) and can make k negative; it exists for
    regression tests.

    Raises:
        NotBipartiteError: Not connected bipartite with sides >= 2
        InvalidParameterError: (a, b) not in S(|A|, |B|)
        InvariantViolationError: e >= |A|+|B| or k < 0 (corrected coefficient)
    """
    bip = require_bipartition(g, bip)
    prof = bipartite_profile(g, bip)
    _check_grid_point(prof, a, b)
    support_a, support_b = _point_supports(prof)
    terms = _bip_point(
        prof,
        a,
        b,
        _single_column(prof.size_a, a, support_a),
        _single_column(prof.size_b, b, support_b),
        literal_coefficient=literal_coefficient,
    )
    if literal_coefficient:
        return terms
    return _check_bip(g, terms, prof.size_a + prof.size_b)


def bipartite_sweep(g: Graph, bip: Optional[Bipartition] = None) -> Iterator[BipTermsAtAB]:
    """Yield BipTermsAtAB over S(|A|, |B|), a ascending then b ascending."""
    bip = require_bipartition(g, bip)
    prof = bipartite_profile(g, bip)
    support_a, support_b = _point_supports(prof)
    cols_a: List[RatioColumn] = list(ratio_sweep(prof.size_a, support_a, 0, prof.size_a))
    cols_b: List[RatioColumn] = list(ratio_sweep(prof.size_b, support_b, 0, prof.size_b))
    total = prof.size_a + prof.size_b
    for a in range(prof.size_a + 1):
        for b in range(prof.size_b + 1):
            if a + b == 0 or a + b == total:
                continue
            yield _check_bip(g, _bip_point(prof, a, b, cols_a[a], cols_b[b]), total)


def gamma_hm3(g: Graph, bip: Optional[Bipartition] = None) -> Optimum:
    """
    Minimum of e - k/(|A|+|B|-e) over the full grid S(|A|, |B|).

    Raises:
        NotBipartiteError: Not connected bipartite with sides >= 2
        InvariantViolationError: If the minimum exceeds min(|A|, |B|)
    """
    bip = require_bipartition(g, bip)
    best: Optional[Fraction] = None
    best_ab: Tuple[int, int] = (0, 0)
    evaluated = 0
    for terms in bipartite_sweep(g, bip):
        evaluated += 1
        if best is None or terms.hm3_value < best:
            best, best_ab = terms.hm3_value, (terms.a, terms.b)
    assert best is not None
    cap = min(len(bip.side_a), len(bip.side_b))
    if best > cap:
        raise InvariantViolationError(
            f"gamma_HM3 = {best} exceeds min(|A|, |B|) = {cap}",
            {"graph6": _safe_graph6(g), "a": best_ab[0], "b": best_ab[1]},
        )
    return Optimum(value=best, argopt=best_ab, evaluated=evaluated)


class GammaCSSFBound(BaseBound):
    name = "gamma_cssf"
    label = "γ_CSSF"
    kind = UPPER

    def compute(self, g: Graph) -> Optimum:
        return gamma_cssf(g)


class GammaHM1Bound(BaseBound):
    name = "gamma_hm1"
    label = "γ_HM1"
    kind = UPPER

    def compute(self, g: Graph) -> Optimum:
        return gamma_hm1(g)


class GammaHM2Bound(BaseBound):
    name = "gamma_hm2"
    label = "γ_HM2"
    kind = UPPER

    def compute(self, g: Graph) -> Optimum:
        return gamma_hm2(g)


class GammaHM3Bound(BaseBound):
    """Bipartite-only; absent when the graph has no bipartition with sides >= 2."""

    name = "gamma_hm3"
    label = "γ_HM3"
    kind = UPPER

    def applies_to(self, g: Graph) -> bool:
        if not super().applies_to(g):
            return False
        bip = find_bipartition(g)
        return bip is not None and len(bip.side_a) >= 2 and len(bip.side_b) >= 2

    def compute(self, g: Graph) -> Optimum:
        require_gamma(g)
        return gamma_hm3(g)


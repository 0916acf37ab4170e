"""
Invariant suite run by ``gbounds verify``.

verify_graph cross-checks the closed-form terms of every bound against the
exhaustive distributions, then sandwiches the bounds between the exact
domination and independence numbers and checks the known orderings. Every
failure carries a witness: the graph6 string, the check name, the
parameter point, and the expected and computed values.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional

from ..bounds.base import require_gamma
from ..bounds.domination import bip_terms, dom_terms, gamma_cssf, gamma_hm1, gamma_hm2, gamma_hm3
from ..bounds.independence import (
    alpha_acl,
    alpha_cw,
    alpha_hm,
    alpha_hm_sharp,
    alpha_hr,
    alpha_s,
    ind_terms,
)
from ..core.arith import binom, ceil_rat, floor_rat
from ..core.errors import NotBipartiteError
from ..core.formats import encode_graph6
from ..core.graph import Graph, find_bipartition
from .distributions import (
    DEFAULT_ENUMERATION_LIMIT,
    ExactDistribution,
    exhaustive_bip_distribution,
    exhaustive_dom_distribution,
    exhaustive_ind_distribution,
)
from .exact import DEFAULT_ALPHA_LIMIT, DEFAULT_GAMMA_LIMIT, exact_alpha, exact_gamma

logger = logging.getLogger(__name__)

DISTRIBUTIONS: FrozenSet[str] = frozenset({"dom", "ind", "bip"})


@dataclass
class VerificationOptions:
    """Which checks to run and the oracle limits they may use."""

    distributions: FrozenSet[str] = DISTRIBUTIONS
    sandwich: bool = True
    orderings: bool = True
    gamma_limit: int = DEFAULT_GAMMA_LIMIT
    alpha_limit: int = DEFAULT_ALPHA_LIMIT
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT


@dataclass
class Failure:
    """One failed check with its witness."""

    check: str
    graph6: str
    point: Dict[str, Any]
    expected: str
    got: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "graph6": self.graph6,
            "point": self.point,
            "expected": self.expected,
            "got": self.got,
        }

    def __str__(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.point.items())
        return (
            f"{self.check} failed on {self.graph6} ({where}): "
            f"expected {self.expected}, got {self.got}"
        )


@dataclass
class VerificationResult:
    graph_id: str
    checks_run: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class _Recorder:
    def __init__(self, g: Graph, result: VerificationResult):
        self.graph6 = encode_graph6(g)
        self.result = result

    def expect(self, check: str, ok: bool, expected: Any, got: Any, **point: Any) -> None:
        self.result.checks_run += 1
        if not ok:
            failure = Failure(check, self.graph6, point, str(expected), str(got))
            logger.error(str(failure))
            self.result.failures.append(failure)


def _check_distribution(rec: _Recorder, name: str, dist: ExactDistribution, **point: Any) -> None:
    rec.expect(
        f"{name}.bhatia_davis",
        dist.satisfies_bhatia_davis(),
        ">= 0",
        dist.bhatia_davis_slack,
        **point,
    )


def _verify_dom(g: Graph, rec: _Recorder, limit: int) -> None:
    for t in range(1, g.n - g.min_degree + 1):
        terms = dom_terms(g, t)
        dist = exhaustive_dom_distribution(g, t, limit)
        rec.expect("dom.mean", dist.mean == terms.a, dist.mean, terms.a, t=t)
        rec.expect(
            "dom.variance", dist.variance == terms.variance, dist.variance, terms.variance, t=t
        )
        _check_distribution(rec, "dom", dist, t=t)


def _verify_ind(g: Graph, rec: _Recorder, limit: int) -> None:
    n = g.n
    for t in range(2, n - g.min_degree + 1):
        terms = ind_terms(g, t)
        dist = exhaustive_ind_distribution(g, t, limit)
        outcomes = binom(n, t)
        a_prime = Fraction(terms.a_ind, outcomes)
        b_prime = Fraction(terms.b_sharp, outcomes)
        variance = t - a_prime - (t - a_prime) ** 2 + t * (t - 1) - b_prime
        rec.expect("ind.mean", dist.mean == a_prime, dist.mean, a_prime, t=t)
        rec.expect("ind.variance", dist.variance == variance, dist.variance, variance, t=t)
        sharp, printed = terms.sharp_value, terms.hm_value
        rec.expect("ind.sharp_le_max", sharp <= dist.max_val, dist.max_val, sharp, t=t)
        rec.expect("ind.printed_le_sharp", printed <= sharp, sharp, printed, t=t)
        _check_distribution(rec, "ind", dist, t=t)


def _verify_bip(g: Graph, rec: _Recorder, limit: int) -> None:
    bip = find_bipartition(g)
    if bip is None or len(bip.side_a) < 2 or len(bip.side_b) < 2:
        return
    size_a, size_b = len(bip.side_a), len(bip.side_b)
    for a in range(size_a + 1):
        for b in range(size_b + 1):
            if a + b == 0 or a + b == size_a + size_b:
                continue
            terms = bip_terms(g, bip, a, b)
            dist = exhaustive_bip_distribution(g, bip, a, b, limit)
            rec.expect("bip.mean", dist.mean == terms.e, dist.mean, terms.e, a=a, b=b)
            rec.expect("bip.variance", dist.variance == terms.k, dist.variance, terms.k, a=a, b=b)
            _check_distribution(rec, "bip", dist, a=a, b=b)


def _verify_sandwich(g: Graph, rec: _Recorder, options: VerificationOptions) -> None:
    gamma = exact_gamma(g, options.gamma_limit)
    alpha = exact_alpha(g, options.alpha_limit)
    upper = {
        "gamma_cssf": gamma_cssf(g).value,
        "gamma_hm1": gamma_hm1(g).value,
        "gamma_hm2": gamma_hm2(g).value,
    }
    try:
        upper["gamma_hm3"] = gamma_hm3(g).value
    except NotBipartiteError:
        pass
    for name, value in upper.items():
        rec.expect(f"sandwich.{name}", gamma <= floor_rat(value), f">= {gamma}", value)

    lower = {
        "alpha_cw": alpha_cw(g).value,
        "alpha_s": alpha_s(g).value,
        "alpha_acl": alpha_acl(g).value,
        "alpha_hr": alpha_hr(g).value,
        "alpha_hm": alpha_hm(g).value,
        "alpha_hm_sharp": alpha_hm_sharp(g).value,
    }
    for name, value in lower.items():
        rec.expect(f"sandwich.{name}", ceil_rat(value) <= alpha, f"<= {alpha}", value)


def _verify_orderings(g: Graph, rec: _Recorder) -> None:
    hm1 = gamma_hm1(g).value
    cssf = gamma_cssf(g).value
    hm2 = gamma_hm2(g).value
    rec.expect("order.hm1_le_cssf", hm1 <= cssf, f">= {hm1}", cssf)
    rec.expect("order.hm1_le_hm2", hm1 <= hm2, f">= {hm1}", hm2)
    cw = alpha_cw(g).value
    s = alpha_s(g).value
    acl = alpha_acl(g).value
    rec.expect("order.cw_le_s", cw <= s, f">= {cw}", s)
    rec.expect("order.cw_le_acl", cw <= acl, f">= {cw}", acl)
    hm = alpha_hm(g).value
    sharp = alpha_hm_sharp(g).value
    rec.expect("order.hm_le_sharp", hm <= sharp, f">= {hm}", sharp)


def verify_graph(
    g: Graph, options: Optional[VerificationOptions] = None, graph_id: str = ""
) -> VerificationResult:
    """
    Run the invariant suite on one graph in Gamma.

    Raises:
        NotInGammaError: If g is not in Gamma
        OracleLimitError: If an exact solver or an enumeration is refused
    """
    options = options or VerificationOptions()
    require_gamma(g)
    result = VerificationResult(graph_id=graph_id or encode_graph6(g))
    rec = _Recorder(g, result)

    if "dom" in options.distributions:
        _verify_dom(g, rec, options.enumeration_limit)
    if "ind" in options.distributions:
        _verify_ind(g, rec, options.enumeration_limit)
    if "bip" in options.distributions:
        _verify_bip(g, rec, options.enumeration_limit)
    if options.sandwich:
        _verify_sandwich(g, rec, options)
    if options.orderings:
        _verify_orderings(g, rec)

    logger.debug(f"{result.graph_id}: {result.checks_run} checks, {len(result.failures)} failures")
    return result

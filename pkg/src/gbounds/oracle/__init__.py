"""
Ground-truth engines.

This package contains exact domination and independence solvers, the
exhaustive distributions of the alteration variables behind every bound,
and the invariant suite that ties them together.
"""

from .distributions import (
    ExactDistribution,
    exhaustive_bip_distribution,
    exhaustive_dom_distribution,
    exhaustive_ind_distribution,
    iter_subsets,
)
from .exact import brute_force_alpha, brute_force_gamma, exact_alpha, exact_gamma
from .verify import VerificationOptions, VerificationResult, verify_graph

__all__ = [
    "ExactDistribution",
    "exhaustive_bip_distribution",
    "exhaustive_dom_distribution",
    "exhaustive_ind_distribution",
    "iter_subsets",
    "brute_force_alpha",
    "brute_force_gamma",
    "exact_alpha",
    "exact_gamma",
    "VerificationOptions",
    "VerificationResult",
    "verify_graph",
]

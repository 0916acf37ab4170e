"""
Bound implementations.

This package contains the upper bounds on the domination number, the lower
bounds on the independence number, and the factory that creates them by
name.
"""

from .base import BaseBound, BoundValue, Optimum
from .domination import (
    bip_terms,
    dom_terms,
    gamma_cssf,
    gamma_hm1,
    gamma_hm2,
    gamma_hm3,
)
from .factory import DOMINATION_TABLE, INDEPENDENCE_TABLE, BoundFactory
from .independence import (
    DegreeFamily,
    alpha_acl,
    alpha_cw,
    alpha_hm,
    alpha_hm_sharp,
    alpha_hr,
    alpha_s,
    ind_terms,
    phi,
)

__all__ = [
    "BaseBound",
    "BoundValue",
    "Optimum",
    "BoundFactory",
    "DOMINATION_TABLE",
    "INDEPENDENCE_TABLE",
    "DegreeFamily",
    "bip_terms",
    "dom_terms",
    "gamma_cssf",
    "gamma_hm1",
    "gamma_hm2",
    "gamma_hm3",
    "alpha_acl",
    "alpha_cw",
    "alpha_hm",
    "alpha_hm_sharp",
    "alpha_hr",
    "alpha_s",
    "ind_terms",
    "phi",
]

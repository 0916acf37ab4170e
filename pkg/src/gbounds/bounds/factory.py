"""
Bound factory for creating bound instances by name.

This module provides the registry used by the experiment harness and the
CLI, and the fixed label orders of the comparison tables.
"""

import logging
from typing import Dict, Iterable, List, Tuple, Type

from ..core.errors import InvalidParameterError
from .base import LOWER, UPPER, BaseBound
from .domination import GammaCSSFBound, GammaHM1Bound, GammaHM2Bound, GammaHM3Bound
from .independence import (
    AlphaACLBound,
    AlphaCWBound,
    AlphaHMBound,
    AlphaHMSharpBound,
    AlphaHRBound,
    AlphaSBound,
)

logger = logging.getLogger(__name__)

# Row/column order of the comparison tables.
DOMINATION_TABLE: Tuple[str, ...] = ("gamma_cssf", "gamma_hm1", "gamma_hm2")
INDEPENDENCE_TABLE: Tuple[str, ...] = ("alpha_acl", "alpha_s", "alpha_hr", "alpha_hm")


class BoundFactory:
    """Factory for creating bound instances."""

    # Registry of available bounds, in report order
    _bounds: Dict[str, Type[BaseBound]] = {
        "gamma_cssf": GammaCSSFBound,
        "gamma_hm1": GammaHM1Bound,
        "gamma_hm2": GammaHM2Bound,
        "gamma_hm3": GammaHM3Bound,
        "alpha_cw": AlphaCWBound,
        "alpha_s": AlphaSBound,
        "alpha_acl": AlphaACLBound,
        "alpha_hr": AlphaHRBound,
        "alpha_hm": AlphaHMBound,
        "alpha_hm_sharp": AlphaHMSharpBound,
    }

    @classmethod
    def create_bound(cls, name: str) -> BaseBound:
        """
        Create a bound instance.

        Args:
            name: Registry name (gamma_hm1, alpha_acl, ...)

        Raises:
            InvalidParameterError: If the bound is unknown
        """
        if name not in cls._bounds:
            available = ", ".join(cls._bounds)
            raise InvalidParameterError(f"Unknown bound '{name}'. Available: {available}")
        return cls._bounds[name]()

    @classmethod
    def available_bounds(cls) -> List[str]:
        return list(cls._bounds)

    @classmethod
    def kind_of(cls, name: str) -> str:
        return cls.create_bound(name).kind

    @classmethod
    def label_of(cls, name: str) -> str:
        return cls._bounds[name].label if name in cls._bounds else name

    @classmethod
    def resolve(cls, names: Iterable[str]) -> List[str]:
        """
        Validate a selection of bound names, keeping registry order.

        Raises:
            InvalidParameterError: On an unknown name
        """
        wanted = {name.strip() for name in names if name.strip()}
        unknown = wanted - set(cls._bounds)
        if unknown:
            available = ", ".join(cls._bounds)
            raise InvalidParameterError(
                f"Unknown bound(s) {', '.join(sorted(unknown))}. Available: {available}"
            )
        return [name for name in cls._bounds if name in wanted]

    @classmethod
    def upper_bounds(cls) -> List[str]:
        return [name for name, bound in cls._bounds.items() if bound.kind == UPPER]

    @classmethod
    def lower_bounds(cls) -> List[str]:
        return [name for name, bound in cls._bounds.items() if bound.kind == LOWER]

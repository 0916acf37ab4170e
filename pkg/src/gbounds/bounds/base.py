"""
Base bound interface.

This module defines the abstract base class every bound implements so the
experiment harness and the CLI can evaluate bounds by name, plus the small
result containers shared by the domination and independence modules.
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from ..core.arith import ceil_rat, floor_rat
from ..core.errors import NotInGammaError
from ..core.graph import GammaClassProof, Graph, gamma_class

logger = logging.getLogger(__name__)

UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class Optimum:
    """An exact optimum over a parameter sweep with its arg-optimum."""

    value: Fraction
    argopt: Any = None
    evaluated: int = 0


@dataclass
class BoundValue:
    """
    One bound evaluated on one graph.

    ``floor`` and ``ceil`` are exact integer roundings of ``value``; the
    comparison tables use floor for upper bounds and ceil for lower bounds.
    """

    name: str
    kind: str
    value: Fraction
    argopt: Any = None
    seconds: Optional[float] = None

    @property
    def floor(self) -> int:
        return floor_rat(self.value)

    @property
    def ceil(self) -> int:
        return ceil_rat(self.value)

    @property
    def integered(self) -> int:
        return self.floor if self.kind == UPPER else self.ceil

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        argopt = list(self.argopt) if isinstance(self.argopt, tuple) else self.argopt
        record: Dict[str, Any] = {
            "num": self.value.numerator,
            "den": self.value.denominator,
            "floor": self.floor,
            "ceil": self.ceil,
            "argopt": argopt,
        }
        if timings and self.seconds is not None:
            record["seconds"] = round(self.seconds, 6)
        return record

    @classmethod
    def from_dict(cls, name: str, kind: str, record: Dict[str, Any]) -> "BoundValue":
        argopt = record.get("argopt")
        if isinstance(argopt, list):
            argopt = tuple(argopt)
        return cls(
            name=name,
            kind=kind,
            value=Fraction(record["num"], record["den"]),
            argopt=argopt,
            seconds=record.get("seconds"),
        )


def require_gamma(g: Graph) -> GammaClassProof:
    """
    Check membership in class Gamma (connected, non-complete, n >= 3).

    Raises:
        NotInGammaError: With the failing proof attached
    """
    proof = gamma_class(g)
    if not proof.in_gamma:
        raise NotInGammaError(proof)
    return proof


class BaseBound(ABC):
    """
    Abstract base class for all bounds.

    Subclasses set ``name`` (registry key), ``label`` (table label) and
    ``kind`` (upper bound on gamma or lower bound on alpha).
    """

    name: str = ""
    label: str = ""
    kind: str = UPPER

    def __init__(self) -> None:
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    def applies_to(self, g: Graph) -> bool:
        """Whether the bound is defined for this graph (default: g in Gamma)."""
        return gamma_class(g).in_gamma

    @abstractmethod
    def compute(self, g: Graph) -> Optimum:
        """
        Compute the exact bound.

        Raises:
            NotInGammaError: If the graph is outside the bound's domain
            InvariantViolationError: If a guaranteed property fails
        """

    def evaluate(self, g: Graph) -> BoundValue:
        """Compute the bound and wrap it with timing."""
        start = time.perf_counter()
        optimum = self.compute(g)
        seconds = time.perf_counter() - start
        self.logger.debug(
            f"{self.name} = {optimum.value} (argopt={optimum.argopt}, "
            f"{optimum.evaluated} points, {seconds:.3f}s)"
        )
        return BoundValue(
            name=self.name,
            kind=self.kind,
            value=optimum.value,
            argopt=optimum.argopt,
            seconds=seconds,
        )

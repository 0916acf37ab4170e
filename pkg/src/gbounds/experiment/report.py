"""
Per-graph bound reports and their JSON-lines persistence.

One record per line:

    {"graph_id", "model", "params", "seed_index", "n", "m", "graph6",
     "bounds": {name: {"num", "den", "floor", "ceil", "argopt"}},
     "oracle": {"gamma", "alpha"} | null, "timings": {name: seconds}?}

A leading ``{"meta": ...}`` line is allowed and skipped by the reader.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

from ..bounds.base import LOWER, UPPER, BoundValue, require_gamma
from ..bounds.factory import BoundFactory
from ..core.arith import ceil_rat, floor_rat
from ..core.errors import (
    GraphFormatError,
    InvalidParameterError,
    InvariantViolationError,
    NotBipartiteError,
)
from ..core.formats import encode_graph6
from ..core.graph import Graph
from ..oracle.exact import DEFAULT_ALPHA_LIMIT, DEFAULT_GAMMA_LIMIT, exact_alpha, exact_gamma

logger = logging.getLogger(__name__)

GRAPH6_MAX_N = 512


@dataclass
class EvaluationOptions:
    """Which bounds to compute and when to run the exact oracles."""

    bounds: Tuple[str, ...] = tuple(BoundFactory.available_bounds())
    oracle_max_n: int = 12
    gamma_limit: int = DEFAULT_GAMMA_LIMIT
    alpha_limit: int = DEFAULT_ALPHA_LIMIT
    timings: bool = False
    check_invariants: bool = True


@dataclass
class BoundReport:
    """All computed bounds for one graph."""

    graph_id: str
    n: int
    m: int
    bounds: Dict[str, BoundValue] = field(default_factory=dict)
    oracle: Optional[Dict[str, int]] = None
    model: Optional[str] = None
    params: Optional[Dict[str, float]] = None
    seed_index: Optional[int] = None
    graph6: Optional[str] = None
    timings: bool = False

    def value(self, name: str) -> Fraction:
        return self.bounds[name].value

    def integered(self, name: str) -> int:
        return self.bounds[name].integered

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "graph_id": self.graph_id,
            "model": self.model,
            "params": self.params,
            "seed_index": self.seed_index,
            "n": self.n,
            "m": self.m,
            "graph6": self.graph6,
            "bounds": {name: bv.to_dict() for name, bv in self.bounds.items()},
            "oracle": self.oracle,
        }
        if self.timings:
            record["timings"] = {
                name: round(bv.seconds, 6)
                for name, bv in self.bounds.items()
                if bv.seconds is not None
            }
        return record

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "BoundReport":
        timings = record.get("timings") or {}
        bounds = {}
        for name, entry in record.get("bounds", {}).items():
            kind = BoundFactory.kind_of(name)
            bv = BoundValue.from_dict(name, kind, entry)
            bv.seconds = timings.get(name)
            bounds[name] = bv
        return cls(
            graph_id=record["graph_id"],
            n=record["n"],
            m=record["m"],
            bounds=bounds,
            oracle=record.get("oracle"),
            model=record.get("model"),
            params=record.get("params"),
            seed_index=record.get("seed_index"),
            graph6=record.get("graph6"),
            timings=bool(timings),
        )


def _check_report(report: BoundReport) -> None:
    witness = {"graph_id": report.graph_id, "graph6": report.graph6}
    bounds = report.bounds
    if "gamma_hm1" in bounds:
        hm1 = bounds["gamma_hm1"].value
        for other in ("gamma_cssf", "gamma_hm2"):
            if other in bounds and hm1 > bounds[other].value:
                raise InvariantViolationError(
                    f"gamma_hm1 = {hm1} exceeds {other} = {bounds[other].value}", witness
                )
    if report.oracle is None:
        return
    gamma, alpha = report.oracle["gamma"], report.oracle["alpha"]
    for name, bv in bounds.items():
        if bv.kind == UPPER and gamma > floor_rat(bv.value):
            raise InvariantViolationError(
                f"gamma = {gamma} exceeds floor({name}) = {floor_rat(bv.value)}", witness
            )
        if bv.kind == LOWER and alpha < ceil_rat(bv.value):
            raise InvariantViolationError(
                f"alpha = {alpha} is below ceil({name}) = {ceil_rat(bv.value)}", witness
            )


def evaluate_graph(
    g: Graph,
    options: Optional[EvaluationOptions] = None,
    graph_id: str = "",
    model: Optional[str] = None,
    params: Optional[Dict[str, float]] = None,
    seed_index: Optional[int] = None,
) -> BoundReport:
    """
    Compute the requested bounds (and the oracles when n is small enough).

    Bounds that do not apply (gamma_hm3 on a non-bipartite graph) are
    absent from the report rather than errors.

    Raises:
        NotInGammaError: If g is not in Gamma
        InvariantViolationError: If a guaranteed property fails
    """
    options = options or EvaluationOptions()
    require_gamma(g)
    report = BoundReport(
        graph_id=graph_id,
        n=g.n,
        m=g.edge_count,
        model=model,
        params=params,
        seed_index=seed_index,
        graph6=encode_graph6(g) if g.n <= GRAPH6_MAX_N else None,
        timings=options.timings,
    )
    for name in options.bounds:
        bound = BoundFactory.create_bound(name)
        if not bound.applies_to(g):
            logger.debug(f"{graph_id}: {name} does not apply")
            continue
        try:
            report.bounds[name] = bound.evaluate(g)
        except NotBipartiteError as e:
            logger.debug(f"{graph_id}: {name} skipped ({e})")

    if g.n <= options.oracle_max_n:
        report.oracle = {
            "gamma": exact_gamma(g, options.gamma_limit),
            "alpha": exact_alpha(g, options.alpha_limit),
        }
    if options.check_invariants:
        _check_report(report)
    return report


def write_reports(
    handle: TextIO, reports: Iterable[BoundReport], meta: Optional[Dict[str, Any]] = None
) -> int:
    """Write JSON lines (with an optional meta line first); returns the record count."""
    count = 0
    if meta is not None:
        handle.write(json.dumps({"meta": meta}, sort_keys=True) + "\n")
    for report in reports:
        handle.write(json.dumps(report.to_record(), sort_keys=True) + "\n")
        count += 1
    return count


def save_reports(
    path: str, reports: Sequence[BoundReport], meta: Optional[Dict[str, Any]] = None
) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8") as handle:
        count = write_reports(handle, reports, meta)
    logger.info(f"Wrote {count} reports to {target}")
    return target


def iter_reports(handle: TextIO) -> Iterator[BoundReport]:
    """
    Parse JSON lines; blank lines and meta lines are skipped.

    Raises:
        GraphFormatError: On a line that is not a report record
    """
    for number, line in enumerate(handle, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"invalid JSON: {e.msg}", line=number)
        if not isinstance(record, dict):
            kind = type(record).__name__
            raise GraphFormatError(f"expected a JSON object, got {kind}", line=number)
        if "meta" in record and "graph_id" not in record:
            continue
        try:
            yield BoundReport.from_record(record)
        except (KeyError, TypeError, ValueError, InvalidParameterError) as e:
            raise GraphFormatError(f"not a report record: {e}", line=number)


def read_reports(path: str) -> List[BoundReport]:
    with Path(path).open("r", encoding="utf-8") as handle:
        return list(iter_reports(handle))

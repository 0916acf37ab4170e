"""
Strict-win comparison matrices over a corpus of bound reports.

For upper bounds on gamma a row beats a column on a graph when the floor of
the row bound is strictly smaller than the floor of the column bound; for
lower bounds on alpha when the ceiling of the row bound is strictly greater.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..bounds.factory import DOMINATION_TABLE, INDEPENDENCE_TABLE, BoundFactory
from ..core.errors import InvalidParameterError
from .report import BoundReport

logger = logging.getLogger(__name__)

FLOOR = "floor"
CEIL = "ceil"
RULES = (FLOOR, CEIL)


def beats(report: BoundReport, row: str, col: str, rule: str) -> bool:
    """True when bound ``row`` strictly beats bound ``col`` on this report."""
    if rule == FLOOR:
        return report.bounds[row].floor < report.bounds[col].floor
    if rule == CEIL:
        return report.bounds[row].ceil > report.bounds[col].ceil
    raise InvalidParameterError(f"Unknown rule '{rule}'. Available: {', '.join(RULES)}")


@dataclass(frozen=True)
class ComparisonMatrix:
    """
    Win counts for every ordered pair of bounds.

    Attributes:
        labels: Registry names, rows and columns in the same order
        wins: wins[(row, col)] = graphs where row strictly beats col
        sample_size: Corpus size
        rule: "floor" (domination) or "ceil" (independence)
    """

    labels: Tuple[str, ...]
    wins: Dict[Tuple[str, str], int]
    sample_size: int
    rule: str

    def percentage(self, row: str, col: str) -> Optional[float]:
        """Share of the corpus, in percent; None on the diagonal."""
        if row == col:
            return None
        return 100.0 * self.wins[(row, col)] / self.sample_size

    def to_frame(self) -> pd.DataFrame:
        display = [BoundFactory.label_of(name) for name in self.labels]
        data = [
            [np.nan if row == col else self.percentage(row, col) for col in self.labels]
            for row in self.labels
        ]
        return pd.DataFrame(data, index=display, columns=display)

    def to_dict(self) -> Dict[str, Any]:
        n = self.sample_size
        percentages = {
            row: {
                col: None if row == col else round(100.0 * self.wins[(row, col)] / n, 1)
                for col in self.labels
            }
            for row in self.labels
        }
        return {"rule": self.rule, "sample_size": self.sample_size, "percentages": percentages}

    def to_csv(self, path: str) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(target, float_format="%.1f", encoding="utf-8")
        return target

    def __str__(self) -> str:
        frame = self.to_frame()
        table = frame.to_string(float_format=lambda v: f"{v:.1f}", na_rep="")
        return f"{table}\n(n = {self.sample_size})"


def _require_bounds(reports: Sequence[BoundReport], labels: Sequence[str]) -> None:
    if not reports:
        raise InvalidParameterError("cannot compare an empty corpus")
    for report in reports:
        missing = [name for name in labels if name not in report.bounds]
        if missing:
            raise InvalidParameterError(f"{report.graph_id} lacks {', '.join(missing)}")


def compare(reports: Sequence[BoundReport], labels: Sequence[str], rule: str) -> ComparisonMatrix:
    """
    Count strict wins for every ordered pair of ``labels``.

    Raises:
        InvalidParameterError: Empty corpus, a report missing a bound, or an unknown rule
    """
    _require_bounds(reports, labels)
    wins = {(r, c): 0 for r in labels for c in labels if r != c}
    for report in reports:
        for r, c in wins:
            if beats(report, r, c, rule):
                wins[(r, c)] += 1
    logger.debug(f"Compared {len(labels)} bounds over {len(reports)} graphs ({rule})")
    return ComparisonMatrix(labels=tuple(labels), wins=wins, sample_size=len(reports), rule=rule)


def compare_domination(reports: Sequence[BoundReport]) -> ComparisonMatrix:
    """3x3 matrix over gamma_cssf, gamma_hm1 and gamma_hm2 with floored comparison."""
    return compare(reports, DOMINATION_TABLE, FLOOR)


def compare_independence(reports: Sequence[BoundReport]) -> ComparisonMatrix:
    """4x4 matrix over alpha_acl, alpha_s, alpha_hr and alpha_hm with ceiled comparison."""
    return compare(reports, INDEPENDENCE_TABLE, CEIL)


def find_witnesses(
    reports: Sequence[BoundReport], labels: Sequence[str], rule: str
) -> Dict[Tuple[str, str], Optional[str]]:
    """
    First graph id (in sorted id order) where the row strictly beats the column.

    Reports lacking either bound of a pair are ignored for that pair. Pairs
    with no witness map to None.
    """
    found: Dict[Tuple[str, str], Optional[str]] = {
        (r, c): None for r in labels for c in labels if r != c
    }
    for report in sorted(reports, key=lambda rep: rep.graph_id):
        for (r, c), witness in found.items():
            if witness is not None or r not in report.bounds or c not in report.bounds:
                continue
            if beats(report, r, c, rule):
                found[(r, c)] = report.graph_id
    missing: List[str] = [f"{r}>{c}" for (r, c), w in found.items() if w is None]
    if missing:
        logger.warning(f"No witness for {', '.join(missing)}")
    return found

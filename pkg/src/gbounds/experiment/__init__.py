"""
Batch evaluation, comparison matrices and the random-graph protocol.
"""

from .compare import (
    CEIL,
    FLOOR,
    ComparisonMatrix,
    compare,
    compare_domination,
    compare_independence,
    find_witnesses,
)
from .protocol import (
    PUBLISHED_GRIDS,
    ProtocolCell,
    ProtocolConfig,
    ProtocolRun,
    published_cells,
    run_protocol,
)
from .report import (
    BoundReport,
    EvaluationOptions,
    evaluate_graph,
    iter_reports,
    read_reports,
    save_reports,
    write_reports,
)

__all__ = [
    "CEIL",
    "FLOOR",
    "BoundReport",
    "ComparisonMatrix",
    "EvaluationOptions",
    "PUBLISHED_GRIDS",
    "ProtocolCell",
    "ProtocolConfig",
    "ProtocolRun",
    "compare",
    "compare_domination",
    "compare_independence",
    "evaluate_graph",
    "find_witnesses",
    "iter_reports",
    "published_cells",
    "read_reports",
    "run_protocol",
    "save_reports",
    "write_reports",
]

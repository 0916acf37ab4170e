"""
Random-graph comparison protocol.

For every cell of a parameter grid the protocol draws a seeded batch of
graphs in Gamma, evaluates all bounds on each graph and aggregates the
strict-win matrices. A run directory holds:

    reports.jsonl      one BoundReport per graph
    domination.csv     3x3 floored comparison
    independence.csv   4x4 ceiled comparison
    provenance.json    seed, grid, rng algorithm, version, cell failures

Nothing time- or worker-dependent is written, so reruns with the same
configuration produce identical files.
"""

import json
import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

from .. import __version__
from ..core.errors import InvalidParameterError, RejectionCapError
from ..core.graph import Graph
from ..randgraph import DEFAULT_REJECTION_CAP, MODELS, SIDE_DISTRIBUTION, RngConfig, generate_batch
from .compare import ComparisonMatrix, compare_domination, compare_independence
from .report import BoundReport, EvaluationOptions, evaluate_graph, save_reports

logger = logging.getLogger(__name__)

PUBLISHED_SAMPLES = 500

PUBLISHED_GRIDS: Dict[str, Dict[str, Tuple[float, ...]]] = {
    "gnp": {
        "p": (0.2, 0.3, 0.5, 0.6, 0.8),
        "n": (10, 20, 30, 50, 80, 100, 120, 150),
    },
    "bip": {
        "p_a": (0.02, 0.05, 0.1),
        "p_r": (0.02, 0.05, 0.1),
        "n": (10, 25, 50, 100),
    },
}

# Folded into every cell's seed sequence so the two models never share streams.
MODEL_STREAM = {"gnp": 0, "bip": 1}


@dataclass(frozen=True)
class ProtocolCell:
    n: int
    params: Dict[str, float]

    @property
    def tag(self) -> str:
        values = "_".join(f"{key}{value:g}" for key, value in sorted(self.params.items()))
        return f"n{self.n}_{values}"

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, **self.params}


def published_cells(model: str) -> List[ProtocolCell]:
    """
    The published parameter grid of a model.

    Raises:
        InvalidParameterError: If the model is unknown
    """
    if model not in PUBLISHED_GRIDS:
        raise InvalidParameterError(f"Unknown model '{model}'. Available: {', '.join(MODELS)}")
    grid = PUBLISHED_GRIDS[model]
    if model == "gnp":
        return [ProtocolCell(int(n), {"p": p}) for p in grid["p"] for n in grid["n"]]
    return [
        ProtocolCell(int(n), {"p_a": p_a, "p_r": p_r})
        for p_a in grid["p_a"]
        for p_r in grid["p_r"]
        for n in grid["n"]
    ]


@dataclass
class ProtocolConfig:
    """Everything that determines a protocol run's output."""

    model: str
    cells: List[ProtocolCell]
    samples: int
    seed: int
    out_dir: str
    oracle_max_n: int = 12
    workers: int = 1
    rejection_cap: int = DEFAULT_REJECTION_CAP
    progress: bool = False

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise InvalidParameterError(
                f"Unknown model '{self.model}'. Available: {', '.join(MODELS)}"
            )
        if not self.cells:
            raise InvalidParameterError("protocol grid is empty")
        if self.samples < 1:
            raise InvalidParameterError(f"samples must be positive, got {self.samples}")

    @classmethod
    def published_grid(
        cls, model: str, scale: float, seed: int, out_dir: str, **kwargs: Any
    ) -> "ProtocolConfig":
        """The published grid with round(500 * scale) graphs per cell."""
        if scale <= 0:
            raise InvalidParameterError(f"scale must be positive, got {scale}")
        samples = max(1, round(PUBLISHED_SAMPLES * scale))
        return cls(
            model=model,
            cells=published_cells(model),
            samples=samples,
            seed=seed,
            out_dir=out_dir,
            **kwargs,
        )

    def provenance(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "model": self.model,
            "seed": self.seed,
            "samples_per_cell": self.samples,
            "grid": [cell.to_dict() for cell in self.cells],
            "oracle_max_n": self.oracle_max_n,
            "rejection_cap": self.rejection_cap,
            "rng_algorithm": RngConfig.algorithm,
            "version": __version__,
        }
        if self.model == "bip":
            record["side_distribution"] = SIDE_DISTRIBUTION
        return record


@dataclass
class ProtocolRun:
    """Result of run_protocol."""

    out_dir: Path
    reports: List[BoundReport]
    domination: Optional[ComparisonMatrix] = None
    independence: Optional[ComparisonMatrix] = None
    failures: List[Dict[str, Any]] = field(default_factory=list)


EvalTask = Tuple[Graph, EvaluationOptions, str, str, Dict[str, float], int]


def _evaluate_task(task: EvalTask) -> BoundReport:
    g, options, graph_id, model, params, index = task
    return evaluate_graph(
        g, options, graph_id=graph_id, model=model, params=params, seed_index=index
    )


def _draw_cells(config: ProtocolConfig) -> Tuple[List[EvalTask], List[Dict[str, Any]]]:
    tasks: List[EvalTask] = []
    failures: List[Dict[str, Any]] = []
    options = EvaluationOptions(oracle_max_n=config.oracle_max_n)
    for position, cell in enumerate(config.cells):
        rng = RngConfig(config.seed, stream=(MODEL_STREAM[config.model], position))
        logger.info(f"Cell {position + 1}/{len(config.cells)}: {config.model} {cell.tag}")
        try:
            samples = generate_batch(
                config.model,
                cell.n,
                cell.params,
                rng,
                config.samples,
                workers=config.workers,
                cap=config.rejection_cap,
            )
        except RejectionCapError as e:
            logger.warning(f"Cell {cell.tag} skipped: {e}")
            failures.append({"cell": cell.to_dict(), "error": str(e), "attempts": e.attempts})
            continue
        for sample in samples:
            graph_id = f"{config.model}/{cell.tag}/{sample.index}"
            tasks.append(
                (sample.graph, options, graph_id, config.model, cell.params, sample.index)
            )
    return tasks, failures


def _write_json(path: Path, payload: Dict[str, Any]) -> None:
    with path.open("w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")


def run_protocol(config: ProtocolConfig) -> ProtocolRun:
    """
    Generate, evaluate, aggregate and persist one protocol run.

    Cells whose rejection cap is exhausted are recorded in provenance and
    skipped; the remaining cells are still evaluated.

    Raises:
        InvalidParameterError: If a cell has invalid parameters
        InvariantViolationError: If a guaranteed property fails on some graph
        OSError: If the output directory cannot be written
    """
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    tasks, failures = _draw_cells(config)
    progress = tqdm(total=len(tasks), desc=f"{config.model} bounds", disable=not config.progress)
    if config.workers > 1 and len(tasks) > 1:
        with Pool(config.workers) as pool:
            reports = []
            for report in pool.imap(_evaluate_task, tasks, chunksize=8):
                reports.append(report)
                progress.update()
    else:
        reports = []
        for task in tasks:
            reports.append(_evaluate_task(task))
            progress.update()
    progress.close()

    run = ProtocolRun(out_dir=out_dir, reports=reports, failures=failures)
    provenance = config.provenance()
    provenance["failures"] = failures
    provenance["graphs"] = len(reports)
    save_reports(str(out_dir / "reports.jsonl"), reports, meta=provenance)

    if reports:
        run.domination = compare_domination(reports)
        run.independence = compare_independence(reports)
        run.domination.to_csv(str(out_dir / "domination.csv"))
        run.independence.to_csv(str(out_dir / "independence.csv"))
    else:
        logger.warning("No graphs were evaluated; comparison matrices not written")

    _write_json(out_dir / "provenance.json", provenance)
    logger.info(
        f"Protocol finished: {len(reports)} graphs, {len(failures)} failed cells, "
        f"output in {out_dir}"
    )
    return run

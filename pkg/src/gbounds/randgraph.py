"""
Seeded random graph models with rejection into class Gamma.

Two models are provided:

    gnp: every pair is an edge independently with probability p
    bip: |A| is drawn uniformly from 1..n-1 (side A = vertices 0..|A|-1);
         pairs across the sides are edges unless removed with probability
         p_R, pairs inside a side are edges with probability p_A

Each (seed, stream, index, attempt) tuple seeds its own numpy PCG64
generator through a SeedSequence, so a graph depends only on its index and
never on generation order or worker count. Rejected draws move on to the
next attempt's sub-stream.
"""

import json
import logging
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from . import __version__
from .core.errors import InvalidParameterError, RejectionCapError
from .core.formats import encode_graph6
from .core.graph import Graph, gamma_class

logger = logging.getLogger(__name__)

DEFAULT_REJECTION_CAP = 10_000
MODELS = ("gnp", "bip")
SIDE_DISTRIBUTION = "uniform{1..n-1}"


@dataclass(frozen=True)
class RngConfig:
    """
    Reproducible stream contract.

    Attributes:
        seed: 64-bit base seed
        stream: Extra words folded into every sub-seed (e.g. a protocol cell)
    """

    seed: int
    stream: Tuple[int, ...] = ()

    algorithm = "numpy.random.PCG64 seeded by SeedSequence([seed, *stream, index, attempt])"

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise InvalidParameterError(f"seed must lie in [0, 2^64), got {self.seed}")
        if any(word < 0 for word in self.stream):
            raise InvalidParameterError("stream words must be non-negative")

    def generator(self, index: int, attempt: int = 0) -> np.random.Generator:
        sequence = np.random.SeedSequence([self.seed, *self.stream, index, attempt])
        return np.random.Generator(np.random.PCG64(sequence))

    def to_dict(self) -> Dict[str, Any]:
        return {"seed": self.seed, "stream": list(self.stream), "algorithm": self.algorithm}


@dataclass
class Sample:
    """One accepted draw."""

    graph: Graph
    index: int
    attempts: int
    side_a: Optional[int] = None


def _pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, k=1)


def _from_pairs(n: int, rows: np.ndarray, cols: np.ndarray, keep: np.ndarray) -> Graph:
    return Graph.from_edges(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def _draw_gnp(n: int, p: float, gen: np.random.Generator) -> Graph:
    rows, cols = _pairs(n)
    return _from_pairs(n, rows, cols, gen.random(rows.size) < p)


def _draw_bip(n: int, p_r: float, p_a: float, gen: np.random.Generator) -> Tuple[Graph, int]:
    side_a = int(gen.integers(1, n))
    rows, cols = _pairs(n)
    u = gen.random(rows.size)
    same_side = (rows < side_a) == (cols < side_a)
    keep = np.where(same_side, u < p_a, u >= p_r)
    return _from_pairs(n, rows, cols, keep), side_a


def _check_probability(name: str, value: float, open_interval: bool) -> None:
    if open_interval and not 0 < value < 1:
        raise InvalidParameterError(f"{name} must lie in (0, 1), got {value}")
    if not 0 <= value <= 1:
        raise InvalidParameterError(f"{name} must lie in [0, 1], got {value}")


def _check_n(n: int) -> None:
    if n < 3:
        raise InvalidParameterError(f"random models need n >= 3, got {n}")


def draw_sample(
    model: str,
    n: int,
    params: Dict[str, float],
    rng: RngConfig,
    index: int,
    cap: int = DEFAULT_REJECTION_CAP,
) -> Sample:
    """
    Draw until the graph is connected and non-complete.

    Args:
        model: "gnp" (params p) or "bip" (params p_r, p_a)
        n: Vertex count, at least 3
        params: Model probabilities
        rng: Stream configuration
        index: Graph index within the stream
        cap: Maximum number of attempts

    Raises:
        InvalidParameterError: Bad model, n or probability
        RejectionCapError: If ``cap`` attempts are all rejected
    """
    _check_n(n)
    if model == "gnp":
        _check_probability("p", params["p"], open_interval=True)
    elif model == "bip":
        _check_probability("p_r", params["p_r"], open_interval=False)
        _check_probability("p_a", params["p_a"], open_interval=False)
    else:
        raise InvalidParameterError(f"Unknown model '{model}'. Available: {', '.join(MODELS)}")

    for attempt in range(cap):
        gen = rng.generator(index, attempt)
        side_a = None
        if model == "gnp":
            g = _draw_gnp(n, params["p"], gen)
        else:
            g, side_a = _draw_bip(n, params["p_r"], params["p_a"], gen)
        if gamma_class(g).in_gamma:
            return Sample(graph=g, index=index, attempts=attempt + 1, side_a=side_a)
    raise RejectionCapError(f"{model} n={n} {params} index {index}: no graph in Gamma", cap)


def sample_gnp(
    n: int, p: float, rng: RngConfig, index: int, cap: int = DEFAULT_REJECTION_CAP
) -> Graph:
    """A G(n, p) graph conditioned on Gamma by rejection."""
    return draw_sample("gnp", n, {"p": p}, rng, index, cap).graph


def sample_bip_perturbed(
    n: int,
    p_r: float,
    p_a: float,
    rng: RngConfig,
    index: int,
    cap: int = DEFAULT_REJECTION_CAP,
) -> Graph:
    """A perturbed complete bipartite graph conditioned on Gamma by rejection."""
    return draw_sample("bip", n, {"p_r": p_r, "p_a": p_a}, rng, index, cap).graph


def _draw_task(task: Tuple[str, int, Dict[str, float], RngConfig, int, int]) -> Sample:
    model, n, params, rng, index, cap = task
    return draw_sample(model, n, params, rng, index, cap)


def generate_batch(
    model: str,
    n: int,
    params: Dict[str, float],
    rng: RngConfig,
    count: int,
    start: int = 0,
    workers: int = 1,
    cap: int = DEFAULT_REJECTION_CAP,
    progress: bool = False,
) -> List[Sample]:
    """
    Draw indices start..start+count-1, in index order.

    Raises:
        RejectionCapError: From the first index that exhausts the cap
    """
    tasks = [(model, n, params, rng, index, cap) for index in range(start, start + count)]
    if workers > 1 and count > 1:
        with Pool(workers) as pool:
            results = pool.imap(_draw_task, tasks)
            samples = list(tqdm(results, total=count, desc=f"{model} n={n}", disable=not progress))
    else:
        bar = tqdm(tasks, desc=f"{model} n={n}", disable=not progress)
        samples = [_draw_task(task) for task in bar]
    rejected = sum(s.attempts - 1 for s in samples)
    logger.info(f"Generated {count} {model} graphs with n={n} ({rejected} rejected draws)")
    return samples


def batch_metadata(
    model: str, n: int, params: Dict[str, float], rng: RngConfig, samples: Sequence[Sample]
) -> Dict[str, Any]:
    meta: Dict[str, Any] = {
        "model": model,
        "n": n,
        "params": params,
        "rng": rng.to_dict(),
        "indices": [s.index for s in samples],
        "attempts": [s.attempts for s in samples],
        "version": __version__,
    }
    if model == "bip":
        meta["side_distribution"] = SIDE_DISTRIBUTION
        meta["side_sizes"] = [s.side_a for s in samples]
    return meta


def export_batch(samples: Sequence[Sample], stem: str, meta: Dict[str, Any]) -> Tuple[Path, Path]:
    """
    Write ``<stem>.g6`` (one graph per line) and the ``<stem>.json`` sidecar.

    Returns:
        The two paths written
    """
    base = Path(stem)
    base.parent.mkdir(parents=True, exist_ok=True)
    graph_path = base.parent / f"{base.name}.g6"
    meta_path = base.parent / f"{base.name}.json"
    with graph_path.open("w", encoding="ascii") as handle:
        for sample in samples:
            handle.write(encode_graph6(sample.graph) + "\n")
    with meta_path.open("w", encoding="utf-8") as handle:
        json.dump(meta, handle, indent=2, sort_keys=True)
        handle.write("\n")
    logger.info(f"Wrote {len(samples)} graphs to {graph_path}")
    return graph_path, meta_path

"""
Command line interface for gbounds.

Subcommands:

    bounds     evaluate every bound on the input graphs
    oracle     exact gamma / alpha, or an exhaustive distribution
    generate   seeded random graphs in Gamma, written as graph6
    compare    strict-win matrices over stored reports
    verify     run the invariant suite, or the incomparability search
    protocol   the random-graph comparison protocol

Exit codes: 0 success, 1 invariant violation, 2 input error, 3 resource
refusal.
"""

import argparse
import json
import sys
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple

import pandas as pd

from . import __version__
from .bounds.base import UPPER
from .bounds.factory import INDEPENDENCE_TABLE, BoundFactory
from .core.errors import (
    GraphFormatError,
    InvalidParameterError,
    InvariantViolationError,
    NotBipartiteError,
    NotInGammaError,
    OracleLimitError,
    RejectionCapError,
)
from .core.formats import read_graphs, write_graph6_stream
from .core.graph import Graph, find_bipartition
from .core.named import parse_named, small_graph_catalog
from .experiment.compare import (
    CEIL,
    FLOOR,
    compare_domination,
    compare_independence,
    find_witnesses,
)
from .experiment.protocol import ProtocolCell, ProtocolConfig, run_protocol
from .experiment.report import (
    BoundReport,
    EvaluationOptions,
    evaluate_graph,
    read_reports,
    write_reports,
)
from .oracle.distributions import (
    exhaustive_bip_distribution,
    exhaustive_dom_distribution,
    exhaustive_ind_distribution,
)
from .oracle.exact import exact_alpha, exact_gamma
from .oracle.verify import DISTRIBUTIONS, VerificationOptions, VerificationResult, verify_graph
from .randgraph import RngConfig, batch_metadata, export_batch, generate_batch
from .utils.config import AppConfig, load_config, validate_config
from .utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


@dataclass
class CliConfig:
    """The fully resolved configuration of one CLI run, echoed into its output."""

    subcommand: str
    inputs: List[str] = field(default_factory=list)
    named: List[str] = field(default_factory=list)
    input_format: str = "auto"
    output_format: str = "human"
    workers: int = 1
    options: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def header(self) -> str:
        return f"# config: {json.dumps(self.to_dict(), sort_keys=True)}"


def decimal(value: Fraction) -> str:
    """Six significant digits; display only."""
    return f"{float(value):.6g}"


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as handle:
        yield handle


def _load_graphs(args: argparse.Namespace) -> List[Tuple[str, Graph]]:
    graphs: List[Tuple[str, Graph]] = []
    for spec in args.named or []:
        graphs.append((f"named:{spec}", parse_named(spec)))
    for source in args.inputs:
        graphs.extend(read_graphs(source, args.format))
    return graphs


def _parallel_map(func: Callable, tasks: Sequence, workers: int) -> List:
    if workers > 1 and len(tasks) > 1:
        with Pool(min(workers, len(tasks))) as pool:
            return list(pool.imap(func, tasks))
    return [func(task) for task in tasks]


def _bounds_task(
    task: Tuple[str, Graph, EvaluationOptions]
) -> Tuple[str, Optional[BoundReport], str]:
    graph_id, g, options = task
    try:
        return graph_id, evaluate_graph(g, options, graph_id=graph_id), ""
    except NotInGammaError as e:
        return graph_id, None, str(e)


def _evaluate_all(
    graphs: List[Tuple[str, Graph]], options: EvaluationOptions, workers: int
) -> List[BoundReport]:
    results = _parallel_map(_bounds_task, [(gid, g, options) for gid, g in graphs], workers)
    reports = []
    for graph_id, report, reason in results:
        if report is None:
            logger.warning(f"Skipping {graph_id}: {reason}")
            continue
        reports.append(report)
    if graphs and not reports:
        raise InvalidParameterError("every input graph was skipped")
    return reports


# -- human / csv rendering ----------------------------------------------------


def render_report(report: BoundReport) -> str:
    lines = [f"{report.graph_id}  n={report.n} m={report.m}"]
    for name, bv in report.bounds.items():
        rounding = "floor" if bv.kind == UPPER else "ceil"
        where = "" if bv.argopt is None else f"  at {bv.argopt}"
        lines.append(
            f"  {BoundFactory.label_of(name):<8} = {bv.value}  (~{decimal(bv.value)})"
            f"  {rounding} {bv.integered}{where}"
        )
    if report.oracle is not None:
        oracle = report.oracle
        lines.append(f"  exact    gamma = {oracle['gamma']}, alpha = {oracle['alpha']}")
    return "\n".join(lines)


def reports_frame(reports: Sequence[BoundReport]) -> pd.DataFrame:
    rows = []
    for report in reports:
        row: Dict[str, Any] = {"graph_id": report.graph_id, "n": report.n, "m": report.m}
        for name, bv in report.bounds.items():
            row[name] = str(bv.value)
            row[f"{name}_int"] = bv.integered
        if report.oracle is not None:
            row.update(report.oracle)
        rows.append(row)
    return pd.DataFrame(rows)


def _emit_reports(handle: TextIO, reports: List[BoundReport], cli: CliConfig) -> None:
    if cli.output_format == "json":
        write_reports(handle, reports, meta={"config": cli.to_dict()})
        return
    handle.write(cli.header() + "\n")
    if cli.output_format == "csv":
        reports_frame(reports).to_csv(handle, index=False)
        return
    for report in reports:
        handle.write(render_report(report) + "\n")


# -- subcommands --------------------------------------------------------------


def cmd_bounds(args: argparse.Namespace, config: AppConfig, cli: CliConfig) -> int:
    graphs = _load_graphs(args)
    if not graphs:
        raise InvalidParameterError("no input graphs (give files, '-' or --named)")
    if args.bounds:
        names = BoundFactory.resolve(args.bounds.split(","))
    else:
        names = BoundFactory.available_bounds()
    options = EvaluationOptions(
        bounds=tuple(names),
        oracle_max_n=args.oracle_max_n,
        gamma_limit=config.gamma_limit,
        alpha_limit=config.alpha_limit,
        timings=args.timings,
    )
    cli.options.update(
        {"bounds": names, "oracle_max_n": args.oracle_max_n, "timings": args.timings}
    )
    reports = _evaluate_all(graphs, options, cli.workers)
    with _output(args.output) as handle:
        _emit_reports(handle, reports, cli)
    return EXIT_OK


def _oracle_distribution(g: Graph, args: argparse.Namespace, config: AppConfig) -> Dict[str, Any]:
    limit = config.enumeration_limit
    if args.dist == "dom":
        if args.t is None:
            raise InvalidParameterError("--dist dom needs --t")
        dist, point = exhaustive_dom_distribution(g, args.t, limit), {"t": args.t}
    elif args.dist == "ind":
        if args.t is None:
            raise InvalidParameterError("--dist ind needs --t")
        dist, point = exhaustive_ind_distribution(g, args.t, limit), {"t": args.t}
    else:
        if args.a is None or args.b is None:
            raise InvalidParameterError("--dist bip needs --a and --b")
        bip = find_bipartition(g)
        if bip is None:
            raise NotBipartiteError("graph is not bipartite")
        dist = exhaustive_bip_distribution(g, bip, args.a, args.b, limit)
        point = {"a": args.a, "b": args.b}
    return {
        "dist": args.dist,
        **point,
        "mean": str(dist.mean),
        "variance": str(dist.variance),
        "min": dist.min_val,
        "max": dist.max_val,
        "support": {str(v): c for v, c in dist.support.items()},
    }


def cmd_oracle(args: argparse.Namespace, config: AppConfig, cli: CliConfig) -> int:
    graphs = _load_graphs(args)
    if not graphs:
        raise InvalidParameterError("no input graphs (give files, '-' or --named)")
    gamma_limit = args.gamma_limit or config.gamma_limit
    alpha_limit = args.alpha_limit or config.alpha_limit
    cli.options.update({"dist": args.dist, "t": args.t, "a": args.a, "b": args.b,
                        "gamma_limit": gamma_limit, "alpha_limit": alpha_limit})
    records = []
    for graph_id, g in graphs:
        if args.dist:
            record = {"graph_id": graph_id, **_oracle_distribution(g, args, config)}
        else:
            record = {
                "graph_id": graph_id,
                "gamma": exact_gamma(g, gamma_limit),
                "alpha": exact_alpha(g, alpha_limit),
            }
        records.append(record)

    with _output(args.output) as handle:
        if cli.output_format == "json":
            handle.write(json.dumps({"meta": {"config": cli.to_dict()}}, sort_keys=True) + "\n")
            for record in records:
                handle.write(json.dumps(record, sort_keys=True) + "\n")
        elif cli.output_format == "csv":
            handle.write(cli.header() + "\n")
            pd.DataFrame(records).to_csv(handle, index=False)
        else:
            handle.write(cli.header() + "\n")
            for record in records:
                rest = ", ".join(f"{k} = {v}" for k, v in record.items() if k != "graph_id")
                handle.write(f"{record['graph_id']}: {rest}\n")
    return EXIT_OK


def _model_params(args: argparse.Namespace) -> Dict[str, float]:
    if args.model == "gnp":
        if args.p is None:
            raise InvalidParameterError("--model gnp needs --p")
        return {"p": args.p}
    if args.pr is None or args.pa is None:
        raise InvalidParameterError("--model bip needs --pr and --pa")
    return {"p_r": args.pr, "p_a": args.pa}


def cmd_generate(args: argparse.Namespace, config: AppConfig, cli: CliConfig) -> int:
    params = _model_params(args)
    seed = config.default_seed if args.seed is None else args.seed
    cap = args.cap or config.rejection_cap
    rng = RngConfig(seed)
    cli.options.update(
        {
            "model": args.model,
            "n": args.n,
            "params": params,
            "samples": args.samples,
            "seed": seed,
            "start": args.start,
            "cap": cap,
        }
    )
    samples = generate_batch(
        args.model,
        args.n,
        params,
        rng,
        args.samples,
        start=args.start,
        workers=cli.workers,
        cap=cap,
    )
    meta = batch_metadata(args.model, args.n, params, rng, samples)
    meta["config"] = cli.to_dict()
    if args.out:
        graph_path, meta_path = export_batch(samples, args.out, meta)
        print(f"wrote {graph_path} and {meta_path}", file=sys.stderr)
    else:
        write_graph6_stream([s.graph for s in samples], sys.stdout)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, config: AppConfig, cli: CliConfig) -> int:
    reports: List[BoundReport] = []
    for path in args.inputs:
        reports.extend(read_reports(path))
    domination = compare_domination(reports)
    independence = compare_independence(reports)
    with _output(args.output) as handle:
        if cli.output_format == "json":
            payload = {
                "meta": {"config": cli.to_dict()},
                "sample_size": len(reports),
                "domination": domination.to_dict(),
                "independence": independence.to_dict(),
            }
            handle.write(json.dumps(payload, sort_keys=True) + "\n")
        elif cli.output_format == "csv":
            handle.write(cli.header() + "\n")
            handle.write("# domination (floored)\n")
            domination.to_frame().to_csv(handle, float_format="%.1f")
            handle.write("# independence (ceiled)\n")
            independence.to_frame().to_csv(handle, float_format="%.1f")
        else:
            handle.write(cli.header() + "\n")
            handle.write(f"Domination, floored strict wins (%)\n{domination}\n\n")
            handle.write(f"Independence, ceiled strict wins (%)\n{independence}\n")
    return EXIT_OK


def _verify_task(
    task: Tuple[str, Graph, VerificationOptions]
) -> Tuple[str, Optional[VerificationResult], str]:
    graph_id, g, options = task
    try:
        return graph_id, verify_graph(g, options, graph_id=graph_id), ""
    except NotInGammaError as e:
        return graph_id, None, str(e)


def _witness_search(
    args: argparse.Namespace, graphs: List[Tuple[str, Graph]], cli: CliConfig
) -> int:
    reports: List[BoundReport] = []
    for path in args.reports or []:
        reports.extend(read_reports(path))
    if graphs:
        options = EvaluationOptions(oracle_max_n=0)
        reports.extend(_evaluate_all(graphs, options, cli.workers))
    if not reports:
        raise InvalidParameterError("witness search needs --reports or input graphs")

    found = dict(find_witnesses(reports, INDEPENDENCE_TABLE, CEIL))
    found.update(find_witnesses(reports, ("gamma_cssf", "gamma_hm2"), FLOOR))
    missing = [pair for pair, witness in found.items() if witness is None]
    with _output(args.output) as handle:
        if cli.output_format == "json":
            payload = {
                "meta": {"config": cli.to_dict()},
                "witnesses": [{"row": r, "col": c, "graph_id": w} for (r, c), w in found.items()],
            }
            handle.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            handle.write(cli.header() + "\n")
            for (r, c), witness in found.items():
                shown = witness if witness is not None else "NONE"
                row, col = BoundFactory.label_of(r), BoundFactory.label_of(c)
                handle.write(f"{row} beats {col}: {shown}\n")
    return EXIT_INVARIANT if missing else EXIT_OK


def cmd_verify(args: argparse.Namespace, config: AppConfig, cli: CliConfig) -> int:
    graphs = _load_graphs(args)
    if args.catalog:
        graphs.extend((f"catalog:{i}", g) for i, g in enumerate(small_graph_catalog(args.catalog)))
    cli.options.update(
        {"catalog": args.catalog, "witnesses": args.witnesses, "reports": args.reports}
    )
    if args.witnesses:
        return _witness_search(args, graphs, cli)
    if not graphs:
        raise InvalidParameterError("no input graphs (give files, '-', --named or --catalog)")

    distributions = frozenset(args.dist.split(",")) if args.dist else DISTRIBUTIONS
    unknown = distributions - DISTRIBUTIONS
    if unknown:
        raise InvalidParameterError(
            f"Unknown distribution {', '.join(sorted(unknown))}. "
            f"Available: {', '.join(sorted(DISTRIBUTIONS))}"
        )
    options = VerificationOptions(
        distributions=distributions,
        gamma_limit=config.gamma_limit,
        alpha_limit=config.alpha_limit,
        enumeration_limit=config.enumeration_limit,
    )
    cli.options["dist"] = sorted(distributions)

    results = _parallel_map(_verify_task, [(gid, g, options) for gid, g in graphs], cli.workers)
    verified = [r for _, r, _ in results if r is not None]
    for graph_id, result, reason in results:
        if result is None:
            logger.warning(f"Skipping {graph_id}: {reason}")
    if not verified:
        raise InvalidParameterError("every input graph was skipped")

    failed = [r for r in verified if not r.passed]
    checks = sum(r.checks_run for r in verified)
    with _output(args.output) as handle:
        if cli.output_format == "json":
            handle.write(json.dumps({"meta": {"config": cli.to_dict()}}, sort_keys=True) + "\n")
            for result in verified:
                record = {
                    "graph_id": result.graph_id,
                    "checks": result.checks_run,
                    "failures": [f.to_dict() for f in result.failures],
                }
                handle.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            handle.write(cli.header() + "\n")
            if failed:
                first = failed[0]
                handle.write(f"FAIL {first.graph_id}: {first.failures[0]}\n")
            handle.write(
                f"verified {len(verified)} graphs, {checks} checks, "
                f"{len(failed)} failing graphs\n"
            )
    return EXIT_INVARIANT if failed else EXIT_OK


def _custom_cells(args: argparse.Namespace) -> List[ProtocolCell]:
    if not args.n:
        raise InvalidParameterError("protocol needs --published-grid or --n")
    if args.model == "gnp":
        if not args.p:
            raise InvalidParameterError("--model gnp needs --p")
        return [ProtocolCell(n, {"p": p}) for p in args.p for n in args.n]
    if not args.pa or not args.pr:
        raise InvalidParameterError("--model bip needs --pa and --pr")
    return [
        ProtocolCell(n, {"p_a": pa, "p_r": pr})
        for pa in args.pa
        for pr in args.pr
        for n in args.n
    ]


def cmd_protocol(args: argparse.Namespace, config: AppConfig, cli: CliConfig) -> int:
    seed = config.default_seed if args.seed is None else args.seed
    common = dict(
        oracle_max_n=args.oracle_max_n,
        workers=cli.workers,
        rejection_cap=args.cap or config.rejection_cap,
        progress=args.progress,
    )
    if args.published_grid:
        protocol = ProtocolConfig.published_grid(args.model, args.scale, seed, args.out, **common)
    else:
        protocol = ProtocolConfig(
            model=args.model,
            cells=_custom_cells(args),
            samples=args.samples,
            seed=seed,
            out_dir=args.out,
            **common,
        )
    cli.options.update(protocol.provenance())
    run = run_protocol(protocol)

    if run.domination is not None and run.independence is not None:
        print(f"Domination, floored strict wins (%)\n{run.domination}\n", file=sys.stdout)
        print(f"Independence, ceiled strict wins (%)\n{run.independence}", file=sys.stdout)
    print(f"output in {run.out_dir}", file=sys.stderr)
    return EXIT_RESOURCE if run.failures else EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, AppConfig, CliConfig], int]] = {
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "generate": cmd_generate,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "protocol": cmd_protocol,
}


# -- parser -------------------------------------------------------------------


def _add_graph_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("inputs", nargs="*", help="graph files, or - for stdin")
    parser.add_argument("--named", action="append", metavar="FAMILY:PARAMS",
                        help="named graph, e.g. star:1000 or cbip:2,1000 (repeatable)")
    parser.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto",
                        help="input format (default: by extension or content)")


def _add_output(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON lines output")
    group.add_argument("--csv", action="store_true", help="CSV output")
    parser.add_argument("--output", "-o", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbounds",
        description="Exact probabilistic bounds on domination and independence numbers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR (default: LOG_LEVEL)")
    parser.add_argument(
        "--workers", type=int, help="worker processes (default: GBOUNDS_WORKERS or CPUs)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="evaluate bounds on graphs")
    _add_graph_inputs(p)
    _add_output(p)
    p.add_argument("--bounds", help="comma separated bound names (default: all)")
    p.add_argument("--oracle-max-n", type=int, help="run exact gamma/alpha up to this n")
    p.add_argument("--timings", action="store_true", help="record per-bound seconds")

    p = sub.add_parser("oracle", help="exact gamma and alpha, or an exhaustive distribution")
    _add_graph_inputs(p)
    _add_output(p)
    p.add_argument("--dist", choices=sorted(DISTRIBUTIONS), help="print this exact distribution")
    p.add_argument("--t", type=int, help="subset size for dom / ind")
    p.add_argument("--a", type=int, help="side A subset size for bip")
    p.add_argument("--b", type=int, help="side B subset size for bip")
    p.add_argument("--gamma-limit", type=int)
    p.add_argument("--alpha-limit", type=int)

    p = sub.add_parser("generate", help="random graphs in Gamma")
    p.add_argument("--model", choices=("gnp", "bip"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--pr", type=float, help="cross edge removal probability (bip)")
    p.add_argument("--pa", type=float, help="same side edge probability (bip)")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--start", type=int, default=0, help="first graph index")
    p.add_argument("--cap", type=int, help="rejection cap per graph")
    p.add_argument(
        "--out", help="output stem; writes STEM.g6 and STEM.json (default: graph6 on stdout)"
    )

    p = sub.add_parser("compare", help="comparison matrices from stored reports")
    p.add_argument("inputs", nargs="+", help="reports.jsonl files")
    _add_output(p)

    p = sub.add_parser("verify", help="invariant suite against the exact oracles")
    _add_graph_inputs(p)
    _add_output(p)
    p.add_argument(
        "--catalog", type=int, metavar="N", help="all graphs in Gamma on 3..N vertices (N <= 7)"
    )
    p.add_argument("--dist", help="comma separated subset of dom,ind,bip (default: all)")
    p.add_argument("--witnesses", action="store_true", help="search for incomparability witnesses")
    p.add_argument(
        "--reports", action="append", help="stored reports for --witnesses (repeatable)"
    )

    p = sub.add_parser("protocol", help="random-graph comparison protocol")
    p.add_argument("--model", choices=("gnp", "bip"), required=True)
    p.add_argument(
        "--published-grid",
        "--paper-grid",
        action="store_true",
        help="use the published parameter grid",
    )
    p.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="with --published-grid: round(500*scale) graphs per cell",
    )
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--p", type=float, nargs="+")
    p.add_argument("--pr", type=float, nargs="+")
    p.add_argument("--pa", type=float, nargs="+")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int)
    p.add_argument("--cap", type=int, help="rejection cap per graph")
    p.add_argument("--oracle-max-n", type=int, help="run exact gamma/alpha up to this n")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--out", required=True, help="output directory")
    return parser


def _cli_config(args: argparse.Namespace, config: AppConfig) -> CliConfig:
    if getattr(args, "json", False):
        output_format = "json"
    elif getattr(args, "csv", False):
        output_format = "csv"
    else:
        output_format = "human"
    return CliConfig(
        subcommand=args.command,
        inputs=list(getattr(args, "inputs", []) or []),
        named=list(getattr(args, "named", None) or []),
        input_format=getattr(args, "format", "auto"),
        output_format=output_format,
        workers=config.resolved_workers(),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``gbounds`` console script."""
    args = build_parser().parse_args(argv)

    try:
        config = load_config()
        if args.workers is not None:
            config.workers = args.workers
        if args.log_level:
            config.log_level = args.log_level.upper()
        validate_config(config)
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_INPUT

    setup_logging(
        level=config.log_level, log_file=config.log_file, enable_debug=config.enable_debug
    )
    if hasattr(args, "oracle_max_n") and args.oracle_max_n is None:
        args.oracle_max_n = config.oracle_max_n

    cli = _cli_config(args, config)
    logger.debug(f"Resolved configuration: {cli.to_dict()}")
    try:
        return COMMANDS[args.command](args, config, cli)
    except InvariantViolationError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        if e.witness:
            witness = json.dumps(e.witness, sort_keys=True, default=str)
            print(f"witness: {witness}", file=sys.stderr)
        return EXIT_INVARIANT
    except (OracleLimitError, RejectionCapError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphFormatError, InvalidParameterError, NotInGammaError, NotBipartiteError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

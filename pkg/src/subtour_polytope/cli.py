from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml

from .config import AppConfig, load_config
from .errors import DomainError, GraphParseError, InfeasibleError, PolytopeError, ScaleLimitError
from .geometry.serialize import emit_lp, point_from_json, system_to_json
from .geometry.simplex import Direction
from .graph.core import Graph, is_reduced_form
from .graph.parser import load_graph
from .graph.reductions import ReductionStatus, lift_point, preprocess, reduce_weights
from .locked.core import enumerate_locked
from .locked.matroid import oracle_disagreements
from .pipeline.bound import bound, q_bound
from .pipeline.certify import certify
from .pipeline.decomposition import decompose_extreme_point
from .pipeline.descriptions import DescriptionKind, describe
from .pipeline.verify import SUITE_ALIASES, SUITES, run_suites
from .rational import ONE, to_fraction
from .reports.builders import (
    bound_document,
    certify_document,
    decompose_document,
    error_document,
    locked_document,
    reduce_document,
    verify_document,
)
from .validation.schema import validate_document

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_SCALE = 3


def setup_logging(verbose: bool = False, level_name: str = "INFO") -> None:
    """Configure logging on stderr; stdout carries the output document."""
    level = logging.DEBUG if verbose else getattr(logging, level_name.upper(), logging.INFO)

    formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - %(message)s',
        datefmt='%H:%M:%S'
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers = []  # Clear any existing handlers
    root_logger.addHandler(handler)


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 like every other input error."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(doc: Dict[str, Any], config: AppConfig) -> None:
    validate_document(doc, config.schemas_dir)
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _load(args: argparse.Namespace) -> Graph:
    g = load_graph(Path(args.graph))
    logger.info(f"Loaded {args.graph}: n={g.n}, m={g.m}")
    return g


def _working_graph(g: Graph) -> Graph:
    """The graph itself when already reduced, otherwise its reduction."""
    if is_reduced_form(g):
        return g
    reduced, trace = preprocess(g)
    if trace.status is ReductionStatus.INFEASIBLE_BRIDGE:
        raise InfeasibleError(f"P(G) is empty: {trace.reason}")
    if trace.status is ReductionStatus.DEGENERATE_SMALL:
        raise DomainError("graph reduces to fewer than 3 vertices")
    logger.info(f"Working on the reduced graph: n={reduced.n}, m={reduced.m}")
    return reduced


def load_weights(source: str, g: Graph) -> List:
    """Weights for `--weights`: graph, uniform, or a YAML file.

    The YAML document is either a list of m rationals in edge order or a mapping
    from 1-based edge index to rational; unlisted edges weigh 1.
    """
    if source == "graph":
        return list(g.weights)
    if source == "uniform":
        return [ONE] * g.m
    data = yaml.safe_load(Path(source).read_text(encoding="utf-8"))
    if isinstance(data, dict) and "weights" in data:
        data = data["weights"]
    if isinstance(data, list):
        if len(data) != g.m:
            raise DomainError(f"weight file lists {len(data)} values, graph has {g.m} edges")
        return [to_fraction(str(v)) for v in data]
    if isinstance(data, dict):
        weights = [ONE] * g.m
        for key, value in data.items():
            idx = int(key) - 1
            if not 0 <= idx < g.m:
                raise DomainError(f"weight file names edge {key}, graph has {g.m} edges")
            weights[idx] = to_fraction(str(value))
        return weights
    raise DomainError("weight file must hold a list or a mapping of edge weights")


def _load_point(source: str) -> Sequence:
    path = Path(source)
    text = path.read_text(encoding="utf-8") if path.exists() else source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"--point is neither a JSON file nor a JSON array: {exc}") from None
    if isinstance(data, dict):
        data = data.get("point")
    if not isinstance(data, list):
        raise DomainError("--point must be a JSON array of rationals")
    return point_from_json([str(v) for v in data])


def cmd_reduce(args: argparse.Namespace, config: AppConfig) -> int:
    g = _load(args)
    reduced, trace = preprocess(g)
    keep = trace.status is not ReductionStatus.INFEASIBLE_BRIDGE
    _emit(reduce_document(g, reduced if keep else None, trace).to_json_dict(), config)
    if trace.status is ReductionStatus.INFEASIBLE_BRIDGE:
        logger.error(f"P(G) is empty: {trace.reason}")
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_locked(args: argparse.Namespace, config: AppConfig) -> int:
    g = _working_graph(_load(args))
    locked = enumerate_locked(g, limit=args.limit, limits=config.limits)
    disagreements = None
    if args.oracle:
        checked, disagreements = oracle_disagreements(g, config.limits)
        logger.info(f"Oracle compared on {checked} vertex sets: {len(disagreements)} disagreements")
    _emit(locked_document(g, locked, disagreements).to_json_dict(), config)
    return EXIT_OK


def cmd_describe(args: argparse.Namespace, config: AppConfig) -> int:
    g = _working_graph(_load(args))
    sys_ = describe(g, args.kind, v0=args.v0 - 1, keep_ub=args.keep_ub, limits=config.limits)
    logger.info(f"{args.kind}: {len(sys_)} constraints over {sys_.dim} variables")
    if args.lp:
        sys.stdout.write(emit_lp(sys_, title=f"{args.kind} {Path(args.graph).name}"))
    else:
        _emit(system_to_json(sys_, args.kind), config)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace, config: AppConfig) -> int:
    g = _working_graph(_load(args))
    sys_ = describe(g, args.kind, v0=args.v0 - 1, keep_ub=args.keep_ub, limits=config.limits)
    cert = certify(sys_, config.limits)
    _emit(certify_document(g, args.kind, cert).to_json_dict(), config)
    return EXIT_OK


def cmd_bound(args: argparse.Namespace, config: AppConfig) -> int:
    g = _load(args)
    weights = load_weights(args.weights, g)
    direction = Direction(args.direction)
    # always preprocess: series edges are contracted even on a 2-connected input
    work, trace = preprocess(g)
    if trace.status is ReductionStatus.INFEASIBLE_BRIDGE:
        raise InfeasibleError(f"P(G) is empty: {trace.reason}")
    if trace.status is ReductionStatus.DEGENERATE_SMALL:
        raise DomainError("graph reduces to fewer than 3 vertices")
    work_weights = reduce_weights(trace, weights)
    report = bound(work, work_weights, args.max_iter, direction, config.limits)
    lifted = None
    if trace.steps and report.point is not None:
        lifted = lift_point(trace, report.point)
    q_report = q_bound(work, work_weights, direction, config.limits) if args.with_q else None
    _emit(bound_document(work, report, lifted, q_report).to_json_dict(), config)
    if report.bound is None:
        logger.error("LP relaxation is infeasible")
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, config: AppConfig) -> int:
    g = _load(args)
    if not is_reduced_form(g):
        raise DomainError("decompose needs a 2-connected simple graph; run reduce first")
    dec = decompose_extreme_point(g, _load_point(args.point), config.limits)
    _emit(decompose_document(g, dec).to_json_dict(), config)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: AppConfig) -> int:
    g = _working_graph(_load(args))
    results = run_suites(args.suite, g, config.limits, seed=args.seed, samples=args.samples)
    doc = verify_document(g, results)
    _emit(doc.to_json_dict(), config)
    if not doc.passed:
        logger.warning("Some suites reported counterexamples")
    return EXIT_OK


def _add_description_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--kind",
        choices=[k.value for k in DescriptionKind],
        default=DescriptionKind.Q.value,
        help="Which constraint system to build",
    )
    p.add_argument("--v0", type=int, default=1, help="Vertex (1-based) without a degree row in P-refined")
    p.add_argument(
        "--keep-ub",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Emit x(e) <= 1 rows in P-minimal",
    )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subtour-polytope", description="Linear descriptions of the subtour elimination polytope")
    p.add_argument("--verbose", "-v", action="store_true", help="Enable DEBUG logging")
    sub = p.add_subparsers(dest="cmd", required=True)

    p_red = sub.add_parser("reduce", help="Delete loops and parallels, contract series edges, detect bridges")
    p_red.add_argument("graph", help="Edge-list graph file")
    p_red.set_defaults(func=cmd_reduce)

    p_lock = sub.add_parser("locked", help="Enumerate locked subgraphs")
    p_lock.add_argument("graph")
    p_lock.add_argument("--limit", type=int, default=None, help="Stop after this many locked subgraphs")
    p_lock.add_argument("--oracle", action="store_true", help="Cross-check against the matroid definition")
    p_lock.set_defaults(func=cmd_locked)

    p_desc = sub.add_parser("describe", help="Write a constraint system")
    p_desc.add_argument("graph")
    _add_description_flags(p_desc)
    fmt = p_desc.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="lp", action="store_false", help="Canonical JSON (default)")
    fmt.add_argument("--lp", dest="lp", action="store_true", help="LP text format")
    p_desc.set_defaults(func=cmd_describe, lp=False)

    p_cert = sub.add_parser("certify", help="Classify every constraint of a system by its face")
    p_cert.add_argument("graph")
    _add_description_flags(p_cert)
    p_cert.set_defaults(func=cmd_certify)

    p_bound = sub.add_parser("bound", help="Subtour relaxation bound by cutting planes")
    p_bound.add_argument("graph")
    p_bound.add_argument(
        "--weights", default="graph", help="'graph' (file weights), 'uniform', or a YAML weights file"
    )
    p_bound.add_argument("--max-iter", type=int, default=None, help="LP solves allowed (default 10 m)")
    p_bound.add_argument("--direction", choices=[d.value for d in Direction], default=Direction.MINIMIZE.value)
    p_bound.add_argument("--with-q", action="store_true", help="Also optimize over Q(G)")
    p_bound.add_argument("--json", action="store_true", help="JSON output (the only format)")
    p_bound.set_defaults(func=cmd_bound)

    p_dec = sub.add_parser("decompose", help="Decompose an extreme point of Q(G)")
    p_dec.add_argument("graph")
    p_dec.add_argument("--point", required=True, help="JSON array of rationals, or a file holding one")
    p_dec.set_defaults(func=cmd_decompose)

    p_ver = sub.add_parser("verify", help="Run property suites")
    p_ver.add_argument("graph")
    p_ver.add_argument(
        "--suite",
        choices=list(SUITES) + list(SUITE_ALIASES) + ["all"],
        default="all",
        help="Suite name, numbered alias (e.g. lemma2.2), or all",
    )
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--samples", type=int, default=100, help="Random samples per sampled suite")
    p_ver.set_defaults(func=cmd_verify)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = load_config()
    setup_logging(args.verbose, config.env.get("LOG_LEVEL", "INFO"))

    try:
        return args.func(args, config)
    except (GraphParseError, OSError) as exc:
        return _fail(exc, EXIT_USAGE)
    except InfeasibleError as exc:
        return _fail(exc, EXIT_INFEASIBLE)
    except ScaleLimitError as exc:
        return _fail(exc, EXIT_SCALE)
    except PolytopeError as exc:
        return _fail(exc, EXIT_USAGE)


def _fail(exc: Exception, code: int) -> int:
    logger.error(f"{type(exc).__name__}: {exc}")
    sys.stdout.write(json.dumps(error_document(exc, code).to_json_dict(), indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv


@dataclass(frozen=True)
class Limits:
    """Desk-scale limits guarding the exhaustive algorithms.

    - `max_cut_vertices`: largest n for which every canonical cut is written out.
    - `max_vertex_edges` / `max_vertex_constraints`: vertex enumeration bounds.
    - `max_oracle_edges`: matroid-definition oracle bound.
    - `max_subset_scan_edges`: largest m for which every edge subset is
      compared against the matroid oracle.
    - `max_locked_vertices`: locked subgraph enumeration bound.
    - `exhaustive_mincut_vertices`: up to this n the min cut is found by
      enumeration so ties are broken canonically.
    """

    max_cut_vertices: int = 12
    max_vertex_edges: int = 12
    max_vertex_constraints: int = 60
    max_oracle_edges: int = 20
    max_subset_scan_edges: int = 12
    max_locked_vertices: int = 24
    exhaustive_mincut_vertices: int = 12


DEFAULT_LIMITS = Limits()


@dataclass
class AppConfig:
    """Top-level configuration for the command line.

    - `root_dir`: Repository root (contains `schemas` and `src`).
    - `schemas_dir`: JSON Schemas used to validate emitted documents.
    - `graphs_dir`: Bundled desk corpus of edge-list graphs.
    - `limits`: Desk-scale limits after environment overrides.
    - `env`: Remaining environment-derived toggles.
    """

    root_dir: Path
    schemas_dir: Path
    graphs_dir: Path
    limits: Limits = DEFAULT_LIMITS
    env: dict = field(default_factory=dict)


def detect_repo_root() -> Path:
    """Walk upwards from this file, then from the cwd, until `schemas` exists."""
    here = Path(__file__).resolve()
    for p in list(here.parents) + [Path.cwd().resolve()] + list(Path.cwd().resolve().parents):
        if (p / "schemas").is_dir() and (p / "src").is_dir():
            return p
    return Path.cwd().resolve()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logging.getLogger(__name__).warning(f"Ignoring non-integer {name}={raw!r}")
        return default


def load_limits() -> Limits:
    base = DEFAULT_LIMITS
    return Limits(
        max_cut_vertices=_int_env("SEP_MAX_CUT_VERTICES", base.max_cut_vertices),
        max_vertex_edges=_int_env("SEP_MAX_VERTEX_EDGES", base.max_vertex_edges),
        max_vertex_constraints=_int_env("SEP_MAX_VERTEX_CONSTRAINTS", base.max_vertex_constraints),
        max_oracle_edges=_int_env("SEP_MAX_ORACLE_EDGES", base.max_oracle_edges),
        max_subset_scan_edges=_int_env("SEP_MAX_SUBSET_SCAN_EDGES", base.max_subset_scan_edges),
        max_locked_vertices=_int_env("SEP_MAX_LOCKED_VERTICES", base.max_locked_vertices),
        exhaustive_mincut_vertices=_int_env(
            "SEP_EXHAUSTIVE_MINCUT_VERTICES", base.exhaustive_mincut_vertices
        ),
    )


def load_config() -> AppConfig:
    # Load .env file from repository root
    root = detect_repo_root()
    load_dotenv(root / ".env")

    env = {
        "LOG_LEVEL": os.getenv("SEP_LOG_LEVEL", "INFO").upper(),
    }
    return AppConfig(
        root_dir=root,
        schemas_dir=root / "schemas",
        graphs_dir=root / "graphs",
        limits=load_limits(),
        env=env,
    )

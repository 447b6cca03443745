import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from src.subtour_polytope.graph.core import Graph  # noqa: E402
from src.subtour_polytope.graph.parser import load_graph  # noqa: E402

GRAPHS = ROOT / "graphs"


def prism_graph() -> Graph:
    """Triangles 0-1-2 and 3-4-5 joined by 0-3, 1-4, 2-5 (edges 6, 7, 8)."""
    return Graph.from_pairs(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def k5() -> Graph:
    return Graph.complete(5)


@pytest.fixture
def prism() -> Graph:
    return prism_graph()


@pytest.fixture
def petersen() -> Graph:
    return load_graph(GRAPHS / "petersen.graph")


@pytest.fixture
def graphs_dir() -> Path:
    return GRAPHS

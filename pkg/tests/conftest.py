"""
Shared fixtures for the gbounds test suite.
"""

import logging
import sys
from pathlib import Path

import pytest

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gbounds.core.formats import parse_graph6
from gbounds.core.graph import Graph
from gbounds.core.named import complete_bipartite, cycle, path, small_graph_catalog, star


@pytest.fixture
def p3() -> Graph:
    """Path 0-1-2."""
    return parse_graph6("Bg")


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def k22() -> Graph:
    return complete_bipartite(2, 2)


@pytest.fixture
def k23() -> Graph:
    return complete_bipartite(2, 3)


@pytest.fixture
def star5() -> Graph:
    return star(5)


@pytest.fixture(scope="session")
def catalog5() -> list:
    """Every connected non-complete graph on 3..5 vertices (26 graphs)."""
    return list(small_graph_catalog(5))


@pytest.fixture(scope="session")
def catalog6() -> list:
    return list(small_graph_catalog(6))


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep developer environment variables out of the tests."""
    for name in (
        "LOG_LEVEL",
        "LOG_FILE",
        "DEBUG",
        "GBOUNDS_WORKERS",
        "GBOUNDS_ORACLE_MAX_N",
        "GBOUNDS_GAMMA_LIMIT",
        "GBOUNDS_ALPHA_LIMIT",
        "GBOUNDS_ENUMERATION_LIMIT",
        "GBOUNDS_REJECTION_CAP",
        "GBOUNDS_SEED",
    ):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def restore_root_logger():
    """setup_logging replaces root handlers; put pytest's back afterwards."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)

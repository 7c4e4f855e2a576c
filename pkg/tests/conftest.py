"""Shared fixtures."""

import pytest
from loguru import logger

from lascoux.combi_core import WeakComposition
from lascoux.config import reset_settings
from lascoux.heckewords import Permutation
from lascoux.insertion import TableauPair
from lascoux.tableaux import RSVT, IncreasingTableau


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    for name in ("LASCOUX_LOG_LEVEL", "LASCOUX_LOG_FORMAT", "LASCOUX_LOG_FILE", "LASCOUX_WORKERS", "LASCOUX_VERIFY_IDENTITIES"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def log_records():
    """Collect loguru records emitted by the library while the test runs."""
    records = []
    logger.enable("lascoux")
    handler = logger.add(lambda message: records.append(message.record), level="TRACE")
    yield records
    logger.remove(handler)
    logger.disable("lascoux")


@pytest.fixture
def example_tableaux():
    """The three tableaux whose reading words are 731467, 7317467 and 63176467."""
    return [
        IncreasingTableau([[1, 4, 6, 7], [3], [7]]),
        IncreasingTableau([[1, 4, 6, 7], [3, 7], [7]]),
        IncreasingTableau([[1, 4, 6, 7], [3, 6], [6, 7]]),
    ]


@pytest.fixture
def insertion_example():
    return IncreasingTableau([[1, 2, 3, 5], [2, 5, 6], [3, 6], [6, 7], [8]])


@pytest.fixture
def psi_example():
    return TableauPair(IncreasingTableau([[1, 2], [3]]), RSVT([[(3,), (2, 1)], [(2, 1)]]))


@pytest.fixture
def worked_product_inputs():
    return WeakComposition((1, 0, 2)), Permutation([3, 2, 1]), 3

import sys

import pytest
from loguru import logger
from sympy import Rational

from spin_hurwitz.config import load_settings
from spin_hurwitz.services.golden import load_golden


@pytest.fixture(autouse=True)
def restore_logger():
    yield
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


@pytest.fixture
def fresh_settings(monkeypatch):
    for name in ("SPINH_TRUNCATION_MARGIN", "SPINH_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("spin_hurwitz.config.load_dotenv", lambda: False)
    load_settings.cache_clear()
    yield monkeypatch
    load_settings.cache_clear()


@pytest.fixture(scope="session")
def golden():
    return load_golden()


def cells(r: int, parts: int | None = None) -> list[tuple[int, tuple[int, ...], Rational]]:
    """Expected ``(g, mu, value)`` of the embedded tables for one ``r``."""
    result = []
    for table in load_golden().tables:
        if table.r != r:
            continue
        for cell in table.cells:
            if parts is None or len(cell.mu) == parts:
                result.append((cell.g, tuple(cell.mu), cell.expected))
    return result

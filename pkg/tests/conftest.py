"""Shared fixtures."""

import pytest

from denumerant.models.config import DenumerantConfig
from denumerant.partcount import PartSet, TableCache
from denumerant.services.oracle_service import ValueOracle


@pytest.fixture
def cache():
    return TableCache()


@pytest.fixture
def oracle(cache):
    return ValueOracle(cache=cache)


@pytest.fixture
def config():
    return DenumerantConfig()


@pytest.fixture
def p3():
    return PartSet.first(3)


@pytest.fixture
def p4():
    return PartSet.first(4)


@pytest.fixture
def p5():
    return PartSet.first(5)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    """Keep DENUMERANT_* variables of the caller out of the tests."""
    import os

    for key in list(os.environ):
        if key.upper().startswith("DENUMERANT_"):
            monkeypatch.delenv(key, raising=False)

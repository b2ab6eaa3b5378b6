"""
Shared test fixtures
"""

import os
import sys
from pathlib import Path

import pytest

# Add repository root to Python path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.cache.weyl_cache import WeylGroupCache
from src.classification.formality import FormalityEngine
from src.config.settings import settings

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_collection_modifyitems(config, items):
    if os.getenv("ISOFORM_RUN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set ISOFORM_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def desk_settings():
    return settings.with_overrides(cap=10_000_000, max_workers=2)


@pytest.fixture(scope="session")
def weyl_cache():
    return WeylGroupCache(max_entries=64)


@pytest.fixture
def engine(desk_settings, weyl_cache):
    return FormalityEngine(desk_settings, weyl_cache)


@pytest.fixture
def fixtures_dir():
    return FIXTURES

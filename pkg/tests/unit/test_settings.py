import pytest

from src.config.settings import Settings
from src.utils.errors import ConfigurationError


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("CAP", "MAX_WORKERS", "CACHE_ENTRIES", "LOG_LEVEL", "LOG_FILE"):
        monkeypatch.delenv(f"ISOFORM_{name}", raising=False)
    return monkeypatch


def test_defaults(clean_env):
    s = Settings()
    assert s.enumeration.cap == 10_000_000
    assert s.performance.max_workers == 4
    assert s.logging.level == "WARNING"
    assert s.validate()


def test_environment_overrides(clean_env):
    clean_env.setenv("ISOFORM_CAP", "1_000")
    clean_env.setenv("ISOFORM_MAX_WORKERS", "2")
    clean_env.setenv("ISOFORM_LOG_LEVEL", "debug")
    s = Settings()
    assert s.enumeration.cap == 1000
    assert s.performance.max_workers == 2
    assert s.logging.level == "DEBUG"


def test_bad_integer_raises(clean_env):
    clean_env.setenv("ISOFORM_CAP", "lots")
    with pytest.raises(ConfigurationError):
        Settings()


def test_flags_win_over_environment(clean_env):
    clean_env.setenv("ISOFORM_CAP", "500")
    s = Settings().with_overrides(cap=42)
    assert s.enumeration.cap == 42
    assert s.performance == Settings().performance


def test_validate_rejects_nonpositive_values(clean_env):
    assert not Settings().with_overrides(cap=0).validate()
    clean_env.setenv("ISOFORM_LOG_LEVEL", "chatty")
    assert not Settings().validate()

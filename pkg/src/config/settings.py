"""
Configuration settings for isoform
Loads environment variables (ISOFORM_*) and provides centralized config
"""

import os
import logging
from dataclasses import dataclass, replace
from typing import Optional
from dotenv import load_dotenv

from src.utils.errors import ConfigurationError

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

ENV_PREFIX = "ISOFORM_"
VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class EnumerationConfig:
    """Weyl group enumeration limits

    E8 (696729600 elements) is above the default cap, so pairs with an E8
    factor report only the cohomology side.
    """
    cap: int = 10_000_000


@dataclass(frozen=True)
class PerformanceConfig:
    """Concurrency and caching"""
    max_workers: int = 4
    cache_entries: int = 16


@dataclass(frozen=True)
class LoggingConfig:
    """Logging configuration"""
    level: str = "WARNING"
    log_file: str = "logs/isoform.log"
    max_file_size: int = 10 * 1024 * 1024  # 10MB
    backup_count: int = 5


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip().replace("_", ""))
    except ValueError:
        raise ConfigurationError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")


class Settings:
    """Main settings class that loads all configuration"""

    def __init__(self):
        """Initialize settings from environment variables"""
        self.enumeration = self._load_enumeration_config()
        self.performance = self._load_performance_config()
        self.logging = self._load_logging_config()

    def _load_enumeration_config(self) -> EnumerationConfig:
        return EnumerationConfig(cap=_env_int('CAP', EnumerationConfig.cap))

    def _load_performance_config(self) -> PerformanceConfig:
        return PerformanceConfig(
            max_workers=_env_int('MAX_WORKERS', PerformanceConfig.max_workers),
            cache_entries=_env_int('CACHE_ENTRIES', PerformanceConfig.cache_entries),
        )

    def _load_logging_config(self) -> LoggingConfig:
        return LoggingConfig(
            level=os.getenv(ENV_PREFIX + 'LOG_LEVEL', LoggingConfig.level).upper(),
            log_file=os.getenv(ENV_PREFIX + 'LOG_FILE', LoggingConfig.log_file),
        )

    def with_overrides(self, cap: Optional[int] = None, max_workers: Optional[int] = None) -> "Settings":
        """
        Copy of these settings with command-line values applied

        Flags win over the environment, which wins over defaults.
        """
        clone = Settings.__new__(Settings)
        clone.enumeration = self.enumeration if cap is None else replace(self.enumeration, cap=cap)
        clone.performance = (self.performance if max_workers is None
                             else replace(self.performance, max_workers=max_workers))
        clone.logging = self.logging
        return clone

    def validate(self) -> bool:
        """Validate all settings"""
        try:
            assert self.enumeration.cap >= 1, "enumeration cap must be positive"
            assert self.performance.max_workers >= 1, "max_workers must be positive"
            assert self.performance.cache_entries >= 1, "cache_entries must be positive"
            assert self.logging.level in VALID_LOG_LEVELS, f"unknown log level {self.logging.level}"
            logger.debug("Configuration validated successfully")
            return True
        except AssertionError as e:
            logger.error(f"Configuration validation failed: {e}")
            return False


# Singleton instance
settings = Settings()

#!/usr/bin/env python3
"""
isoform - Main Entry Point
Equivariant formality of isotropy actions on compact homogeneous spaces
"""

import logging
import logging.handlers
import sys
from pathlib import Path

# Add repository root to Python path
sys.path.insert(0, str(Path(__file__).parent))

from src.config.settings import LoggingConfig, settings
from src.cli.commands import run


def setup_logging(config: LoggingConfig):
    """
    Route logs to a rotating file and to stderr

    stdout is reserved for reports, so the console handler writes to stderr
    at the configured level while the file keeps everything.
    """
    log_file = Path(config.log_file)
    log_file.parent.mkdir(parents=True, exist_ok=True)

    file_handler = logging.handlers.RotatingFileHandler(
        log_file,
        maxBytes=config.max_file_size,
        backupCount=config.backup_count,
        encoding="utf-8",
    )
    file_handler.setFormatter(logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))
    file_handler.setLevel(logging.DEBUG)

    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    stderr_handler.setLevel(getattr(logging, config.level, logging.WARNING))

    root = logging.getLogger()
    root.setLevel(logging.DEBUG)
    root.addHandler(file_handler)
    root.addHandler(stderr_handler)

    # Catalog workers run on the asyncio loop
    logging.getLogger('asyncio').setLevel(logging.WARNING)
    logging.getLogger(__name__).debug(f"Logging to {log_file} at {config.level}")


if __name__ == "__main__":
    if sys.version_info < (3, 9):
        print("Python 3.9 or higher is required", file=sys.stderr)
        sys.exit(1)

    setup_logging(settings.logging)

    try:
        sys.exit(run())
    except KeyboardInterrupt:
        sys.exit(130)

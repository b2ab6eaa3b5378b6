"""
Command-line front end
`isoform analyze <file|->` and `isoform catalog`

Exit codes:
    0: success
    1: invalid input, failed analysis or failed catalog check
    2: --expect-formal was given and the pair is not confirmed formal, either
       NO or UNKNOWN (circles above the enumeration cap)
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from src.cache.weyl_cache import WeylGroupCache
from src.catalog.builtin_catalog import CATALOG_KINDS, builtin_catalog
from src.catalog.catalog_runner import CatalogRunner
from src.classification.formality import FormalityEngine
from src.config.settings import Settings, settings as default_settings
from src.pairs.spec_document import load_pair_spec
from src.reporting.report_formatter import ReportFormatter
from src.utils.errors import IsoformError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FORMAL = 2


def _positive_int(text: str) -> int:
    try:
        value = int(text.replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoform",
        description="Equivariant formality of isotropy actions on homogeneous spaces G/K",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--cap", type=_positive_int, help="Weyl group enumeration cap (env ISOFORM_CAP)")
    shared.add_argument("--json", action="store_true", help="Emit JSON instead of text")

    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[shared], help="Analyze one pair-spec document")
    analyze.add_argument("path", help="Pair-spec JSON file, or '-' for stdin")
    analyze.add_argument("--expect-formal", action="store_true",
                         help="Exit 2 unless the pair is equivariantly formal")

    catalog = sub.add_parser("catalog", parents=[shared], help="Run the built-in catalog")
    catalog.add_argument("--check", action="store_true", help="Exit 1 if any row violates an invariant")
    catalog.add_argument("--filter", choices=CATALOG_KINDS, help="Only rows of this construction")
    catalog.add_argument("--workers", type=_positive_int, help="Concurrent rows (env ISOFORM_MAX_WORKERS)")
    return parser


def _read_document(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    return Path(path).read_text(encoding="utf-8")


def cmd_analyze(args: argparse.Namespace, config: Settings, stdin: TextIO, stdout: TextIO) -> int:
    """Analyze one document and print its report"""
    try:
        text = _read_document(args.path, stdin)
    except OSError as e:
        print(f"error: cannot read {args.path}: {e.strerror or e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        spec, label = load_pair_spec(text)
        report = FormalityEngine(config).analyze_spec(spec)
    except IsoformError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.json:
        print(ReportFormatter.format_report_json(report), file=stdout)
    else:
        print(ReportFormatter.format_report(report, title=label), file=stdout)

    if args.expect_formal and report.formal is not True:
        return EXIT_NOT_FORMAL
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, config: Settings, stdout: TextIO) -> int:
    """Run the built-in catalog and print a table or a JSON array"""
    entries = builtin_catalog(args.filter)
    runner = CatalogRunner(config, WeylGroupCache(config.performance.cache_entries))
    rows = asyncio.run(runner.run(entries))

    if args.json:
        print(ReportFormatter.format_catalog_json(rows), file=stdout)
    else:
        print(ReportFormatter.format_catalog(rows), file=stdout)

    if args.check and not all(r.ok for r in rows):
        return EXIT_ERROR
    return EXIT_OK


def run(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None, config: Optional[Settings] = None) -> int:
    """
    Parse arguments and dispatch

    Flags override the environment, which overrides defaults.
    """
    args = build_parser().parse_args(argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    config = (config or default_settings).with_overrides(
        cap=args.cap, max_workers=getattr(args, "workers", None)
    )
    if not config.validate():
        print("error: invalid configuration", file=sys.stderr)
        return EXIT_ERROR

    try:
        if args.command == "analyze":
            return cmd_analyze(args, config, stdin, stdout)
        return cmd_catalog(args, config, stdout)
    except Exception:
        logger.exception(f"Unexpected failure in '{args.command}'")
        print("error: unexpected failure, see log for details", file=sys.stderr)
        return EXIT_ERROR

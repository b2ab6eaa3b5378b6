"""
Catalog runner
Analyzes catalog rows concurrently and checks each report against the
invariants the constructions must satisfy
"""

import asyncio
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.cache.weyl_cache import WeylGroupCache
from src.catalog.builtin_catalog import CatalogEntry
from src.classification.formality import FormalityEngine, FormalityReport, line_negated
from src.config.settings import Settings, settings as default_settings
from src.pairs.constructions import Construction, PairData, resolve_spec
from src.utils.errors import IsoformError

logger = logging.getLogger(__name__)


@dataclass
class CatalogRow:
    """Outcome of one catalog entry"""
    entry: CatalogEntry
    report: Optional[FormalityReport] = None
    error: Optional[str] = None
    violations: List[str] = field(default_factory=list)
    line_negated: Optional[bool] = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.error is None and not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.entry.name,
            'kind': self.entry.kind,
            'ok': self.ok,
            'error': self.error,
            'violations': list(self.violations),
            'report': self.report.to_dict() if self.report else None,
        }


def check_row(entry: CatalogEntry, report: FormalityReport, negated: Optional[bool] = None) -> List[str]:
    """
    Hard invariants violated by a catalog report

    Args:
        entry: catalog row with its expected values
        report: analysis result
        negated: whether W(G) negates the circle direction, for semisimple circles

    Returns:
        List of violation messages (empty when the row passes)
    """
    violations = []
    values = report.to_dict()
    for key, want in entry.expected.items():
        if values.get(key) != want:
            violations.append(f"{key} = {values.get(key)!r}, expected {want!r}")

    if report.has_fixed_point_data and report.fp_dim > report.dim_quotient:
        violations.append(f"localization bound: fp_dim {report.fp_dim} > dim {report.dim_quotient}")

    if entry.kind == 'fold' and report.has_fixed_point_data:
        if not (report.formal and report.ncz and report.fp_components == 1):
            violations.append("fold pair must be formal, ncz and have a connected fixed set")

    if entry.kind == 'regular' and report.has_fixed_point_data:
        if not report.formal or report.fp_components != report.dim_quotient:
            violations.append("equal-rank pair must be formal with components = dim")

    if negated is not None and report.formal != negated:
        violations.append(f"circle dichotomy: formal={report.formal} but line negated={negated}")

    return violations


class CatalogRunner:
    """
    Runs catalog rows concurrently
    Rows share one Weyl group cache; results come back in catalog order
    """

    def __init__(self, config: Optional[Settings] = None, cache: Optional[WeylGroupCache] = None):
        """
        Initialize the runner

        Args:
            config: settings (cap, worker count)
            cache: shared Weyl group cache
        """
        self.settings = config or default_settings
        self.cache = cache or WeylGroupCache(self.settings.performance.cache_entries)
        self.engine = FormalityEngine(self.settings, self.cache)
        self.stats = {'rows': 0, 'failed': 0, 'seconds': 0.0}

    async def run(self, entries: Sequence[CatalogEntry]) -> List[CatalogRow]:
        """Analyze all entries, at most max_workers at a time"""
        workers = self.settings.performance.max_workers
        semaphore = asyncio.Semaphore(workers)
        logger.info(f"Running {len(entries)} catalog rows with {workers} workers")
        started = time.perf_counter()

        async def bounded(entry: CatalogEntry) -> CatalogRow:
            async with semaphore:
                return await asyncio.to_thread(self.evaluate, entry)

        rows = await asyncio.gather(*(bounded(e) for e in entries))

        self.stats['rows'] += len(rows)
        self.stats['failed'] += sum(1 for r in rows if not r.ok)
        self.stats['seconds'] += time.perf_counter() - started
        logger.info(f"Catalog finished: {len(rows)} rows, {sum(1 for r in rows if not r.ok)} failed")
        return list(rows)

    def _circle_negated(self, p: PairData, report: FormalityReport) -> Optional[bool]:
        if p.construction is not Construction.CIRCLE or p.has_central_part or not report.has_fixed_point_data:
            return None
        return line_negated(self.cache.get(p.g, self.settings.enumeration.cap), p)

    def evaluate(self, entry: CatalogEntry) -> CatalogRow:
        """Resolve, analyze and check one row; errors are recorded, never raised"""
        started = time.perf_counter()
        row = CatalogRow(entry=entry)
        try:
            pair = resolve_spec(entry.spec, self.settings.enumeration.cap)
            row.report = self.engine.analyze(pair)
            row.line_negated = self._circle_negated(pair, row.report)
            row.violations = check_row(entry, row.report, row.line_negated)
        except IsoformError as e:
            logger.error(f"Catalog row '{entry.name}' failed: {e}")
            row.error = f"{type(e).__name__}: {e}"
        except Exception as e:
            logger.exception(f"Unexpected error in catalog row '{entry.name}'")
            row.error = f"{type(e).__name__}: {e}"
        row.seconds = time.perf_counter() - started
        if row.violations:
            logger.error(f"Catalog row '{entry.name}' violates: {'; '.join(row.violations)}")
        return row

"""
Report formatter
Renders formality reports and catalog sweeps as text tables or JSON
"""

import json
import logging
from typing import Any, List, Optional, Sequence

from src.catalog.catalog_runner import CatalogRow
from src.classification.formality import FormalityReport

logger = logging.getLogger(__name__)


def _yes_no(value: Optional[bool]) -> str:
    if value is None:
        return "UNKNOWN"
    return "YES" if value else "NO"


def _braces(values: Sequence[int]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


class ReportFormatter:
    """
    Formats analysis output
    Text for people, canonical JSON for machines
    """

    @staticmethod
    def to_json(data: Any) -> str:
        """Canonical JSON: fixed key order from to_dict, two-space indent"""
        return json.dumps(data, indent=2)

    @staticmethod
    def format_report_json(report: FormalityReport) -> str:
        return ReportFormatter.to_json(report.to_dict())

    @staticmethod
    def format_report(report: FormalityReport, title: Optional[str] = None) -> str:
        """
        Format a report for the terminal

        Every verdict line carries the Cartan-pair license of the pair; the
        last line is the formality verdict with both dimensions.
        """
        lines = [f"Pair: {title or report.pair}"]
        lines.append(f"  construction: {report.provenance}")
        lines.append(f"  G = {report.g} (rank {report.rank_g}), K = {report.k} (rank {report.rank_k})")
        lines.append(f"  Samelson degrees: {_braces(report.samelson_degrees)}")
        lines.append(f"  dim im(Weil): {report.weil_image_dim}")
        lines.append(f"  dim H*(G/K): {report.dim_quotient}")
        if report.has_fixed_point_data:
            lines.append(f"  fixed-point components: {report.fp_components}")
            lines.append(f"  dim H*((G/K)^T): {report.fp_dim}")
        if report.torus_transfer:
            t = report.torus_transfer
            lines.append(f"  maximal torus of K: dim H*(G/T_K) = {t['dim_quotient']} "
                         f"= {report.dim_quotient} * {t['weyl_order_k']}")
        for block in report.blocks:
            lines.append(f"  block {block.pair}: dim {block.dim_quotient}, fp {block.fp_dim}, "
                         f"formal {_yes_no(block.formal)}")
        for warning in report.warnings:
            lines.append(f"  warning: {warning}")
        if report.verdict_source:
            lines.append(f"  verdict source: {report.verdict_source}")

        tag = f"[{report.license}]"
        routes = ", ".join(f"{k}={_yes_no(v)}" for k, v in report.ncz_routes.items())
        lines.append(f"{tag} non-cohomologous to zero: {_yes_no(report.ncz)} ({routes})")
        lines.append(f"{tag} fixed set connected: {_yes_no(report.fixed_set_connected)}")
        lines.append(f"{tag} equivariantly formal: {ReportFormatter._formal_detail(report)}")
        return "\n".join(lines)

    @staticmethod
    def _formal_detail(report: FormalityReport) -> str:
        verdict = _yes_no(report.formal)
        if report.has_fixed_point_data:
            sign = "=" if report.formal else "≠"
            return f"{verdict} ({report.dim_quotient} {sign} {report.fp_dim})"
        if report.verdict_source:
            return f"{verdict} ({report.verdict_source})"
        return f"{verdict} (fixed-point side skipped)"

    @staticmethod
    def format_catalog(rows: List[CatalogRow]) -> str:
        """Summary table, one line per row, in catalog order"""
        header = f"{'pair':<28} {'kind':<8} {'dim':>5} {'fp':>5} {'comp':>5} {'formal':>7} {'ncz':>5}  status"
        lines = [header, "-" * len(header)]
        for row in rows:
            r = row.report
            if r is None:
                cells = f"{'-':>5} {'-':>5} {'-':>5} {'-':>7} {'-':>5}"
            else:
                cells = (f"{r.dim_quotient:>5} {ReportFormatter._cell(r.fp_dim):>5} "
                         f"{ReportFormatter._cell(r.fp_components):>5} {_yes_no(r.formal):>7} {_yes_no(r.ncz):>5}")
            status = "ok" if row.ok else "FAIL: " + (row.error or "; ".join(row.violations))
            lines.append(f"{row.entry.name:<28} {row.entry.kind:<8} {cells}  {status}")
        failed = sum(1 for r in rows if not r.ok)
        lines.append(f"{len(rows)} rows, {failed} failed")
        return "\n".join(lines)

    @staticmethod
    def format_catalog_json(rows: List[CatalogRow]) -> str:
        return ReportFormatter.to_json([r.to_dict() for r in rows])

    @staticmethod
    def _cell(value: Optional[int]) -> str:
        return "-" if value is None else str(value)

"""
Formality verdict engine
Compares the fixed-point side with the cohomology side and reports
equivariant formality, fixed-set connectedness and ncz with evidence
"""

import logging
from dataclasses import dataclass, field
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Union

from src.algebra.exact_linalg import QMatrix, restrict_to_subspace
from src.algebra.root_system import root_datum
from src.algebra.weyl_group import RestrictionSet, WeylGroup, restriction_set
from src.cache.weyl_cache import WeylGroupCache
from src.classification.cohomology import (
    TransferReport, dim_cohomology_group, dim_cohomology_quotient, equal_rank_transfer,
    samelson_degrees, weil_image_dim
)
from src.config.settings import Settings, settings as default_settings
from src.pairs.constructions import Construction, PairData, PairSpec, maximal_torus_pair, resolve_spec
from src.utils.errors import CapExceeded, InternalInconsistency, NonIntegralComponents

logger = logging.getLogger(__name__)

COUNTED = "fixed-point-count"
CITED = "theorem-backed, fixed-point side unverified"

# Constructions whose formality is known without the fixed-point count
THEOREM_FORMAL = (Construction.FOLD, Construction.DIAGONAL, Construction.REGULAR,
                  Construction.CENTRAL, Construction.MAXIMAL_TORUS)


@dataclass
class FormalityReport:
    """Verdicts for one pair with the numbers behind them"""
    pair: str
    g: str
    k: str
    construction: str
    provenance: str
    license: str
    rank_g: int
    rank_k: int
    dim_quotient: int
    weil_image_dim: int
    samelson_degrees: List[int]
    ncz: bool
    fp_components: Optional[int] = None
    fp_dim: Optional[int] = None
    formal: Optional[bool] = None
    fixed_set_connected: Optional[bool] = None
    verdict_source: Optional[str] = None
    ncz_routes: Dict[str, Optional[bool]] = field(default_factory=dict)
    torus_transfer: Optional[Dict[str, Any]] = None
    blocks: List["FormalityReport"] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def has_fixed_point_data(self) -> bool:
        return self.fp_dim is not None

    def to_dict(self) -> Dict[str, Any]:
        """Serializable form; key order is fixed"""
        return {
            'dim_quotient': self.dim_quotient,
            'fp_dim': self.fp_dim,
            'formal': self.formal,
            'ncz': self.ncz,
            'fp_components': self.fp_components,
            'fixed_set_connected': self.fixed_set_connected,
            'weil_image_dim': self.weil_image_dim,
            'samelson_degrees': list(self.samelson_degrees),
            'pair': self.pair,
            'g': self.g,
            'k': self.k,
            'rank_g': self.rank_g,
            'rank_k': self.rank_k,
            'construction': self.construction,
            'provenance': self.provenance,
            'license': self.license,
            'verdict_source': self.verdict_source,
            'ncz_routes': dict(self.ncz_routes),
            'torus_transfer': dict(self.torus_transfer) if self.torus_transfer else None,
            'blocks': [b.to_dict() for b in self.blocks],
            'warnings': list(self.warnings),
        }


WeylData = Union[WeylGroup, Sequence[WeylGroup]]


def _components(p: PairData, restrictions: int) -> int:
    if restrictions % p.k_weyl_order:
        raise NonIntegralComponents(
            f"{p.label}: |H| = {restrictions} is not divisible by |W(K)| = {p.k_weyl_order}"
        )
    return restrictions // p.k_weyl_order


def _check_weyl_k_inside(p: PairData, h: RestrictionSet) -> None:
    """W(K) restricted to t_K lies in H, checked on its generating reflections"""
    if not h.contains_identity():
        raise InternalInconsistency(f"{p.label}: H misses the identity")
    if not p.k_weyl_roots:
        return
    datum = root_datum(p.g)
    members = set(h.restrictions)
    n = p.rank_g
    for root in p.k_weyl_roots:
        s = datum.reflection(root)
        matrix = QMatrix.from_rows([[int(i == j) - s.root[i] * s.coroot[j] for j in range(n)] for i in range(n)])
        if restrict_to_subspace(matrix, p.tk) not in members:
            raise InternalInconsistency(f"{p.label}: reflection in {root} restricts outside H")
    logger.debug(f"{p.label}: {len(p.k_weyl_roots)} reflections of W(K) lie in H")


def fixed_point_components(p: PairData, w: WeylData) -> int:
    """
    Number of components of (G/K)^{T_K}: |H| / |W(K)|

    Args:
        p: resolved pair
        w: W(G) for an irreducible pair, one group per block for a product

    Raises:
        NonIntegralComponents: if |W(K)| does not divide |H|
        InternalInconsistency: if a reflection of W(K) restricts outside H
    """
    if p.is_product:
        return prod(fixed_point_components(b, g) for b, g in zip(p.blocks, w))
    h = restriction_set(w, p.tk)
    _check_weyl_k_inside(p, h)
    return _components(p, h.order)


def fixed_point_dim(p: PairData, w: WeylData) -> int:
    """dim H*((G/K)^{T_K}) = 2^(rank G - rank K) * components"""
    return 2 ** (p.rank_g - p.rank_k) * fixed_point_components(p, w)


def line_negated(w: WeylGroup, p: PairData) -> bool:
    """Whether some element of w sends the circle direction of p to its negative"""
    (direction,), _ = p.tk.integer_basis()
    target = tuple(-v for v in direction)
    return any(w.apply(i, direction) == target for i in range(w.order))


def _ncz_routes(dim_identity: bool, weil_trivial: bool, formal: Optional[bool],
                connected: Optional[bool]) -> Dict[str, Optional[bool]]:
    return {
        'dimension_identity': dim_identity,
        'weil_trivial': weil_trivial,
        'formal_and_connected': None if formal is None or connected is None else (formal and connected),
    }


def _check_routes(label: str, routes: Dict[str, Optional[bool]]) -> bool:
    known = {k: v for k, v in routes.items() if v is not None}
    if len(set(known.values())) > 1:
        raise InternalInconsistency(f"ncz routes disagree for {label}: {known}")
    return routes['dimension_identity']


class FormalityEngine:
    """
    Formality analysis for resolved pairs
    Weyl groups are enumerated through a shared cache bounded by the configured cap
    """

    def __init__(self, config: Optional[Settings] = None, cache: Optional[WeylGroupCache] = None):
        self.settings = config or default_settings
        self.cache = cache or WeylGroupCache(self.settings.performance.cache_entries)

    @property
    def cap(self) -> int:
        return self.settings.enumeration.cap

    def analyze_spec(self, spec: PairSpec) -> FormalityReport:
        return self.analyze(resolve_spec(spec, self.cap))

    def analyze(self, p: PairData) -> FormalityReport:
        """
        Analyze a resolved pair

        Args:
            p: PairData from the constructions module

        Returns:
            FormalityReport; products are combined from their block reports

        Raises:
            InternalInconsistency: when independent routes to a verdict disagree
        """
        if p.is_product:
            return self._analyze_product(p)
        return self._analyze_irreducible(p)

    def _analyze_irreducible(self, p: PairData) -> FormalityReport:
        samelson = samelson_degrees(p)
        dim = dim_cohomology_quotient(p)
        weil = weil_image_dim(p)
        dim_identity = dim_cohomology_group(p.g) == dim * 2 ** p.rank_k
        warnings = []
        if p.construction is Construction.CIRCLE and p.has_central_part and p.has_semisimple_part:
            warnings.append("circle direction mixes central and semisimple components; "
                            "Samelson rule removes the degree-1 primitive")

        report = FormalityReport(
            pair=p.label,
            g=p.g.label,
            k=p.k_label,
            construction=p.construction.value,
            provenance=p.provenance,
            license=p.license,
            rank_g=p.rank_g,
            rank_k=p.rank_k,
            dim_quotient=dim,
            weil_image_dim=weil,
            samelson_degrees=list(samelson),
            ncz=dim_identity,
            warnings=warnings,
        )

        try:
            w = self.cache.get(p.g, self.cap)
        except CapExceeded as e:
            logger.warning(f"Skipping fixed-point side of {p.label}: {e}")
            report.warnings.append(f"fixed-point side skipped: {e}")
            if p.construction in THEOREM_FORMAL:
                report.formal = True
                report.verdict_source = CITED
            report.ncz_routes = _ncz_routes(dim_identity, weil == 1, None, None)
            report.ncz = _check_routes(p.label, report.ncz_routes)
            return report

        restrictions = restriction_set(w, p.tk).order
        components = _components(p, restrictions)
        fp_dim = 2 ** (p.rank_g - p.rank_k) * components
        if fp_dim > dim:
            raise InternalInconsistency(f"{p.label}: fixed-point dimension {fp_dim} exceeds dim H* = {dim}")

        report.fp_components = components
        report.fp_dim = fp_dim
        report.formal = fp_dim == dim
        report.fixed_set_connected = components == 1
        report.verdict_source = COUNTED
        report.ncz_routes = _ncz_routes(dim_identity, weil == 1, report.formal, report.fixed_set_connected)
        report.ncz = _check_routes(p.label, report.ncz_routes)

        if p.construction is not Construction.MAXIMAL_TORUS:
            transfer = equal_rank_transfer(p, maximal_torus_pair(p), restriction_order=restrictions)
            report.torus_transfer = self._transfer_dict(transfer)

        logger.info(f"Analyzed {p.label}: dim {dim}, fp {fp_dim}, formal={report.formal}, ncz={report.ncz}")
        return report

    @staticmethod
    def _transfer_dict(t: TransferReport) -> Dict[str, Any]:
        return {
            'dim_quotient': t.dim_h,
            'weyl_order_k': t.weyl_k,
            'formal': t.formal_h,
            'holds': t.holds,
        }

    def _analyze_product(self, p: PairData) -> FormalityReport:
        blocks = [self._analyze_irreducible(b) for b in p.blocks]
        dim = prod(b.dim_quotient for b in blocks)
        weil = prod(b.weil_image_dim for b in blocks)
        dim_identity = dim_cohomology_group(p.g) == dim * 2 ** p.rank_k
        if dim != dim_cohomology_quotient(p):
            raise InternalInconsistency(f"{p.label}: block dimensions disagree with the product formula")

        report = FormalityReport(
            pair=p.label,
            g=p.g.label,
            k=p.k_label,
            construction=p.construction.value,
            provenance=p.provenance,
            license=p.license,
            rank_g=p.rank_g,
            rank_k=p.rank_k,
            dim_quotient=dim,
            weil_image_dim=weil,
            samelson_degrees=list(samelson_degrees(p)),
            ncz=dim_identity,
            blocks=blocks,
            warnings=[w for b in blocks for w in b.warnings],
        )

        if all(b.has_fixed_point_data for b in blocks):
            report.fp_components = prod(b.fp_components for b in blocks)
            report.fp_dim = prod(b.fp_dim for b in blocks)
            report.formal = all(b.formal for b in blocks)
            report.fixed_set_connected = report.fp_components == 1
            report.verdict_source = COUNTED
            if report.formal != (report.fp_dim == dim):
                raise InternalInconsistency(f"{p.label}: block verdicts disagree with the product count")
        elif any(b.formal is False for b in blocks):
            report.formal = False
            report.verdict_source = COUNTED
        elif all(b.formal for b in blocks):
            report.formal = True
            report.verdict_source = CITED

        report.ncz_routes = _ncz_routes(dim_identity, weil == 1, report.formal, report.fixed_set_connected)
        report.ncz = _check_routes(p.label, report.ncz_routes)
        logger.info(f"Analyzed product {p.label}: dim {dim}, fp {report.fp_dim}, formal={report.formal}")
        return report


def analyze(p: PairData, config: Optional[Settings] = None, cache: Optional[WeylGroupCache] = None) -> FormalityReport:
    """Analyze one pair with a throwaway engine"""
    return FormalityEngine(config, cache).analyze(p)

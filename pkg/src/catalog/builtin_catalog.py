"""
Built-in catalog of classical pairs
Folds, equal-rank subgroups, circles and products with the exact values
their reports must carry
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from src.algebra.root_system import CompactAlgebra, SimpleType
from src.pairs.constructions import (
    CircleSpec, FoldSpec, PairSpec, ProductBlock, ProductSpec, RegularSpec
)

CATALOG_KINDS = ('fold', 'circle', 'regular', 'product')


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog row: a recipe plus expected report values"""
    name: str
    kind: str
    spec: PairSpec
    expected: Dict[str, Any] = field(default_factory=dict, hash=False)


def _t(label: str) -> SimpleType:
    return SimpleType.parse(label)


def _g(label: str) -> CompactAlgebra:
    return CompactAlgebra.parse(label)


def _formal_ncz(dim: int) -> Dict[str, Any]:
    """Expected values for a non-cohomologous-to-zero pair"""
    return {'dim_quotient': dim, 'fp_dim': dim, 'fp_components': 1, 'formal': True, 'ncz': True}


def _equal_rank(dim: int) -> Dict[str, Any]:
    return {'dim_quotient': dim, 'fp_dim': dim, 'fp_components': dim, 'formal': True, 'ncz': dim == 1}


def _circle(dim: int, fp_dim: int, components: int) -> Dict[str, Any]:
    formal = fp_dim == dim
    return {'dim_quotient': dim, 'fp_dim': fp_dim, 'fp_components': components,
            'formal': formal, 'ncz': formal and components == 1}


def _fold_rows() -> List[CatalogEntry]:
    rows = [CatalogEntry("A2 identity", 'fold', FoldSpec(_t('A2'), 'identity'), _formal_ncz(1))]
    # fixed subgroup of the flip has rank ceil(n/2)
    for n in range(2, 8):
        dim = 2 ** (n - (n + 1) // 2)
        rows.append(CatalogEntry(f"A{n} flip", 'fold', FoldSpec(_t(f'A{n}'), 'flip'), _formal_ncz(dim)))
    for n in range(3, 8):
        rows.append(CatalogEntry(f"D{n} leaf swap", 'fold', FoldSpec(_t(f'D{n}'), 'flip'), _formal_ncz(2)))
    rows.append(CatalogEntry("D4 triality", 'fold', FoldSpec(_t('D4'), 'triality'), _formal_ncz(4)))
    rows.append(CatalogEntry("E6 flip", 'fold', FoldSpec(_t('E6'), 'flip'), _formal_ncz(4)))
    return rows


def _regular_rows() -> List[CatalogEntry]:
    return [
        CatalogEntry("A2 maximal torus", 'regular', RegularSpec(_g('A2')), _equal_rank(6)),
        CatalogEntry("A2 U(2)", 'regular', RegularSpec(_g('A2'), ((1, 0),)), _equal_rank(3)),
        CatalogEntry("A3 A1xA1", 'regular', RegularSpec(_g('A3'), ((1, 0, 0), (0, 0, 1))), _equal_rank(6)),
        CatalogEntry("B2 long A1xA1", 'regular', RegularSpec(_g('B2'), ((1, 0), (1, 2))), _equal_rank(2)),
        CatalogEntry("B3 long D3", 'regular',
                     RegularSpec(_g('B3'), ((1, 0, 0), (0, 1, 0), (0, 1, 2))), _equal_rank(2)),
        CatalogEntry("G2 long A2", 'regular', RegularSpec(_g('G2'), ((0, 1), (3, 1))), _equal_rank(2)),
    ]


def _circle_rows() -> List[CatalogEntry]:
    def su3(*entries: int) -> CircleSpec:
        return CircleSpec(_g('A2'), tuple(Fraction(v) for v in entries), 'trace_zero')

    return [
        CatalogEntry("SU(3) circle (1,2,-3)", 'circle', su3(1, 2, -3), _circle(4, 2, 1)),
        CatalogEntry("SU(3) circle (1,-1,0)", 'circle', su3(1, -1, 0), _circle(4, 4, 2)),
        CatalogEntry("SU(3) circle (1,0,-1)", 'circle', su3(1, 0, -1), _circle(4, 4, 2)),
        CatalogEntry("SU(2) circle (1,-1)", 'circle',
                     CircleSpec(_g('A1'), (Fraction(1), Fraction(-1)), 'trace_zero'), _circle(2, 2, 2)),
        CatalogEntry("central circle T1", 'circle', CircleSpec(_g('T1'), (Fraction(1),)), _circle(1, 1, 1)),
        CatalogEntry("mixed circle T1xSU(2)", 'circle',
                     CircleSpec(_g('T1+A1'), (Fraction(1), Fraction(1))), _circle(2, 2, 1)),
    ]


def _product_rows() -> List[CatalogEntry]:
    def block(label: str, copies: int, automorphism: str) -> ProductBlock:
        return ProductBlock(_t(label), copies, automorphism)

    return [
        CatalogEntry("SU(2)^2 diagonal", 'product',
                     ProductSpec(0, (block('A1', 2, 'identity'),)), _formal_ncz(2)),
        CatalogEntry("SU(3) one-copy flip", 'product',
                     ProductSpec(0, (block('A2', 1, 'flip'),)), _formal_ncz(2)),
        CatalogEntry("Spin(8)^2 diagonal G2", 'product',
                     ProductSpec(0, (block('D4', 2, 'triality'),)), _formal_ncz(64)),
        CatalogEntry("T1xSU(2) identity", 'product',
                     ProductSpec(1, (block('A1', 1, 'identity'),)), _formal_ncz(1)),
        CatalogEntry("SU(4)^2 diagonal C2", 'product',
                     ProductSpec(0, (block('A3', 2, 'flip'),)), _formal_ncz(16)),
    ]


def builtin_catalog(kind: Optional[str] = None) -> List[CatalogEntry]:
    """
    Catalog rows in their fixed order

    Args:
        kind: keep only rows of this kind
    """
    rows = _fold_rows() + _regular_rows() + _circle_rows() + _product_rows()
    if kind is None:
        return rows
    if kind not in CATALOG_KINDS:
        raise ValueError(f"unknown catalog kind '{kind}', expected one of {', '.join(CATALOG_KINDS)}")
    return [r for r in rows if r.kind == kind]

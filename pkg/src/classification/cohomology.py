"""
Cohomology of homogeneous spaces
Degree-multiset arithmetic: Samelson degrees, the Weil image dimension and
dim H*(G/K) for Cartan pairs
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Iterator, Optional, Tuple

from src.algebra.exact_linalg import subspace_equal
from src.algebra.root_system import CompactAlgebra
from src.algebra.weyl_group import WeylGroup, restriction_set
from src.pairs.constructions import Construction, PairData
from src.utils.errors import (
    InternalInconsistency, MultisetNotContained, NonIntegerProduct, SizeMismatch,
    SubspaceMismatch, UnsupportedPair
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeMultiset:
    """Sorted multiset of positive odd degrees"""
    degrees: Tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(sorted(int(d) for d in self.degrees))
        if any(d < 1 or d % 2 == 0 for d in values):
            raise ValueError(f"degrees must be positive odd integers, got {list(values)}")
        object.__setattr__(self, 'degrees', values)

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeMultiset":
        return cls(tuple(degrees))

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def contains(self, other: "DegreeMultiset") -> bool:
        mine = Counter(self.degrees)
        return all(mine[d] >= n for d, n in Counter(other.degrees).items())

    def difference(self, other: "DegreeMultiset") -> "DegreeMultiset":
        """
        Multiset difference self - other

        Raises:
            MultisetNotContained: if other is not contained in self
        """
        if not self.contains(other):
            raise MultisetNotContained(f"{list(other.degrees)} is not contained in {list(self.degrees)}")
        remaining = Counter(self.degrees)
        remaining.subtract(other.degrees)
        return DegreeMultiset(tuple(remaining.elements()))

    def union(self, other: "DegreeMultiset") -> "DegreeMultiset":
        return DegreeMultiset(self.degrees + other.degrees)

    def without_one(self, degree: int) -> "DegreeMultiset":
        return self.difference(DegreeMultiset((degree,)))

    @property
    def weyl_order(self) -> int:
        return prod((d + 1) // 2 for d in self.degrees)

    def __str__(self) -> str:
        return "{" + ",".join(str(d) for d in self.degrees) + "}"


def g_degrees(p: PairData) -> DegreeMultiset:
    return DegreeMultiset(p.g.primitive_degrees)


def k_degrees(p: PairData) -> DegreeMultiset:
    return DegreeMultiset(p.k_degrees)


def samelson_degrees(p: PairData) -> DegreeMultiset:
    """
    Degrees of the Samelson subspace of (G, K)

    Equal-rank pairs have none. Fixed subgroups of automorphisms and their
    diagonals are non-cohomologous to zero, so every primitive of G outside
    K's degrees is Samelson. A circle loses the degree-1 primitive when it
    meets the center and the quadratic invariant otherwise, since that
    invariant is definite on every semisimple line.

    Raises:
        UnsupportedPair: for constructions without a Samelson rule
        MultisetNotContained: if K's degrees are not among G's
    """
    kind = p.construction
    if kind is Construction.REGULAR:
        return DegreeMultiset()
    if kind in (Construction.FOLD, Construction.DIAGONAL, Construction.CENTRAL):
        return g_degrees(p).difference(k_degrees(p))
    if kind is Construction.CIRCLE:
        return g_degrees(p).without_one(1 if p.has_central_part else 3)
    if kind is Construction.MAXIMAL_TORUS and p.reference is not None:
        return samelson_degrees(p.reference)
    if kind is Construction.PRODUCT:
        out = DegreeMultiset()
        for block in p.blocks:
            out = out.union(samelson_degrees(block))
        return out
    raise UnsupportedPair(f"no Samelson rule for {kind.value} pair {p.label}")


def dim_image_weil(g: DegreeMultiset, k: DegreeMultiset, samelson: DegreeMultiset) -> int:
    """
    Dimension of the image of the Weil homomorphism

    Pairs the non-Samelson degrees of G with the degrees of K, both
    ascending, and multiplies (g_j + 1)/(l_j + 1).

    Returns:
        positive integer

    Raises:
        SizeMismatch: if |g| - |samelson| != |k|
        MultisetNotContained: if samelson is not contained in g
        NonIntegerProduct: if the product is not an integer
    """
    rest = g.difference(samelson)
    if len(rest) != len(k):
        raise SizeMismatch(f"{len(g)} degrees of G minus {len(samelson)} Samelson degrees != {len(k)} degrees of K")
    value = prod((Fraction(gj + 1, lj + 1) for gj, lj in zip(rest, k)), start=Fraction(1))
    if value.denominator != 1:
        raise NonIntegerProduct(f"pairing {rest} with {k} gives {value}")
    return int(value)


def check_cartan_pair(p: PairData, samelson: DegreeMultiset):
    """|P_(G,K)| = rank G - rank K"""
    if len(samelson) != p.rank_g - p.rank_k:
        raise SizeMismatch(
            f"{p.label}: {len(samelson)} Samelson degrees, rank G - rank K = {p.rank_g - p.rank_k}"
        )


def weil_image_dim(p: PairData) -> int:
    """dim im(omega) for a pair; products multiply over blocks"""
    if p.is_product:
        return prod(weil_image_dim(b) for b in p.blocks)
    samelson = samelson_degrees(p)
    check_cartan_pair(p, samelson)
    return dim_image_weil(g_degrees(p), k_degrees(p), samelson)


def dim_cohomology_quotient(p: PairData) -> int:
    """
    dim H*(G/K) = dim im(omega) * 2^|samelson| for a Cartan pair

    Product pairs multiply over their blocks.
    """
    if p.is_product:
        return prod(dim_cohomology_quotient(b) for b in p.blocks)
    samelson = samelson_degrees(p)
    check_cartan_pair(p, samelson)
    dim = dim_image_weil(g_degrees(p), k_degrees(p), samelson) * 2 ** len(samelson)
    logger.debug(f"dim H*{p.label} = {dim} (Samelson {samelson})")
    return dim


def dim_cohomology_group(a: CompactAlgebra) -> int:
    """dim H*(G) = 2^rank"""
    return 2 ** a.rank


@dataclass(frozen=True)
class TransferReport:
    """Comparison of (G, K) with an equal-rank subpair (G, H)"""
    g_label: str
    k_label: str
    h_label: str
    dim_k: int
    dim_h: int
    weyl_k: int
    weyl_h: int
    samelson: DegreeMultiset
    formal_k: Optional[bool] = None
    formal_h: Optional[bool] = None

    @property
    def holds(self) -> bool:
        return self.dim_k * self.weyl_k == self.dim_h * self.weyl_h

    def __str__(self) -> str:
        return (f"dim H*(G/{self.h_label}) = {self.dim_h} = "
                f"{self.dim_k} * {self.weyl_k}/{self.weyl_h}")


def _formal(p: PairData, dim: int, restrictions: int) -> bool:
    components = Fraction(restrictions, p.k_weyl_order)
    return 2 ** (p.rank_g - p.rank_k) * components == dim


def equal_rank_transfer(p_k: PairData, p_h: PairData, weyl: Optional[WeylGroup] = None,
                        restriction_order: Optional[int] = None) -> TransferReport:
    """
    Compare (G, K) with (G, H) where H is of maximal rank in K

    Both quotient dimensions come from dim_cohomology_quotient; the
    transfer identity and equality of Samelson degrees are asserted. With
    an enumerated W(G), or the order of its restriction set on t_K, the two
    formality verdicts are computed from one restriction set and must agree.

    Raises:
        SubspaceMismatch: if the pairs differ in G or in t_K
        InternalInconsistency: if the identity or a verdict comparison fails
    """
    if p_k.is_product or p_h.is_product:
        raise UnsupportedPair("transfer compares irreducible pairs")
    if p_k.g != p_h.g:
        raise SubspaceMismatch(f"pairs live in {p_k.g} and {p_h.g}")
    if not subspace_equal(p_k.tk, p_h.tk):
        raise SubspaceMismatch(f"t_K differs: {p_k.tk} vs {p_h.tk}")

    samelson_k, samelson_h = samelson_degrees(p_k), samelson_degrees(p_h)
    if samelson_k != samelson_h:
        raise InternalInconsistency(f"Samelson degrees differ: {samelson_k} vs {samelson_h}")

    dim_k, dim_h = dim_cohomology_quotient(p_k), dim_cohomology_quotient(p_h)
    formal_k = formal_h = None
    if restriction_order is None and weyl is not None:
        restriction_order = restriction_set(weyl, p_k.tk).order
    if restriction_order is not None:
        h = restriction_order
        formal_k, formal_h = _formal(p_k, dim_k, h), _formal(p_h, dim_h, h)

    report = TransferReport(
        g_label=p_k.g.label,
        k_label=p_k.k_label,
        h_label=p_h.k_label,
        dim_k=dim_k,
        dim_h=dim_h,
        weyl_k=p_k.k_weyl_order,
        weyl_h=p_h.k_weyl_order,
        samelson=samelson_k,
        formal_k=formal_k,
        formal_h=formal_h,
    )
    if not report.holds:
        raise InternalInconsistency(f"transfer identity fails for {p_k.label}: {report}")
    if formal_k is not None and formal_k != formal_h:
        raise InternalInconsistency(f"{p_k.label} formal={formal_k} but {p_h.label} formal={formal_h}")
    return report

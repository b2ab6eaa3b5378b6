"""
Pair constructions
Resolves fold, circle, equal-rank and product recipes into PairData:
the Cartan subspace of K inside t_G plus K's degree and Weyl data
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm, prod
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from src.algebra.exact_linalg import QMatrix, Subspace, direct_sum, fixed_subspace, to_vector
from src.algebra.root_system import (
    CompactAlgebra, SimpleType, additive_closure_gap, build_root_system, primitive_degrees,
    reflection_closure, root_datum, root_subsystem, weyl_order_formula
)
from src.algebra.weyl_group import DEFAULT_CAP, reflection_subgroup_order
from src.algorithms.lie_tables import FOLD_TABLE, NAMED_AUTOMORPHISMS
from src.utils.errors import (
    DimensionMismatch, NotClosedSubsystem, NotDiagramAutomorphism, PairResolutionError,
    RankDeficient, RootNotInSystem, UnsupportedFold, ZeroDirection
)
from src.utils.validators import PermutationValidator

logger = logging.getLogger(__name__)

# A named automorphism or a 1-based image list
Automorphism = Union[str, Tuple[int, ...]]


class Construction(Enum):
    """How a pair was built"""
    FOLD = "fold"
    CIRCLE = "circle"
    REGULAR = "regular"
    PRODUCT = "product"
    DIAGONAL = "diagonal"
    CENTRAL = "central"
    MAXIMAL_TORUS = "maximal-torus"


# Cartan-pair license per construction
LICENSES = {
    Construction.FOLD: "automorphism-fixed-subgroup",
    Construction.REGULAR: "equal-rank",
    Construction.CIRCLE: "one-dimensional-torus",
    Construction.CENTRAL: "abelian-factor",
    Construction.DIAGONAL: "diagonal-of-fixed-subgroup",
    Construction.PRODUCT: "product-kunneth",
    Construction.MAXIMAL_TORUS: "maximal-torus",
}


# ----------------------------------------------------------------------
# Recipes
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FoldSpec:
    """Fixed subgroup of a diagram automorphism of a simple group"""
    g_type: SimpleType
    automorphism: Automorphism = "identity"


@dataclass(frozen=True)
class CircleSpec:
    """
    One-dimensional torus through a direction of t_G

    coordinates is 'simple' (simple-root basis, center first) or
    'trace_zero' (n+1 diagonal entries summing to zero, single A_n only).
    """
    g: CompactAlgebra
    direction: Tuple[Fraction, ...]
    coordinates: str = "simple"


@dataclass(frozen=True)
class RegularSpec:
    """Equal-rank subgroup generated by root reflections plus a torus"""
    g: CompactAlgebra
    sub_roots: Tuple[Tuple[int, ...], ...] = ()
    extra_center: Optional[int] = None


@dataclass(frozen=True)
class ProductBlock:
    factor: SimpleType
    copies: int = 1
    return_automorphism: Automorphism = "identity"


@dataclass(frozen=True)
class ProductSpec:
    """Z x I_1^l_1 x ... with K the fixed subgroup of a permuting automorphism"""
    center_dim: int = 0
    blocks: Tuple[ProductBlock, ...] = ()


PairSpec = Union[FoldSpec, CircleSpec, RegularSpec, ProductSpec]


# ----------------------------------------------------------------------
# Resolved pairs
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PairData:
    """
    Resolved pair (G, K)

    tk is the Cartan subalgebra of K in simple-root coordinates of t_G.
    k_weyl_roots are roots of G whose reflections generate W(K); None when
    W(K) is not generated by reflections of G (folds, diagonals).
    Product pairs carry their factors in blocks and are analysed blockwise.
    """
    g: CompactAlgebra
    k_degrees: Tuple[int, ...]
    k_weyl_order: int
    tk: Subspace
    construction: Construction
    k_label: str
    provenance: str
    k_weyl_roots: Optional[Tuple[Tuple[int, ...], ...]] = None
    blocks: Tuple["PairData", ...] = ()
    has_central_part: bool = False
    has_semisimple_part: bool = True
    fold_order: int = 1
    reference: Optional["PairData"] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'k_degrees', tuple(sorted(self.k_degrees)))
        if self.tk.ambient_dim != self.g.rank:
            raise DimensionMismatch(f"t_K lives in dimension {self.tk.ambient_dim}, rank G is {self.g.rank}")
        if self.tk.dim != len(self.k_degrees):
            raise DimensionMismatch(f"dim t_K = {self.tk.dim} but K has {len(self.k_degrees)} primitive degrees")
        if self.k_weyl_order < 1:
            raise PairResolutionError("|W(K)| must be positive")
        formula = prod((d + 1) // 2 for d in self.k_degrees)
        if formula != self.k_weyl_order:
            raise PairResolutionError(
                f"degrees {list(self.k_degrees)} give |W(K)| = {formula}, construction gave {self.k_weyl_order}"
            )

    @property
    def license(self) -> str:
        return LICENSES[self.construction]

    @property
    def rank_g(self) -> int:
        return self.g.rank

    @property
    def rank_k(self) -> int:
        return self.tk.dim

    @property
    def is_product(self) -> bool:
        return bool(self.blocks)

    @property
    def label(self) -> str:
        return f"({self.g.label}, {self.k_label})"

    def canonical_bytes(self) -> bytes:
        head = "|".join([
            self.construction.value,
            self.g.label,
            self.k_label,
            ",".join(str(d) for d in self.k_degrees),
            str(self.k_weyl_order),
        ]).encode("ascii")
        parts = [head, self.tk.canonical_bytes()]
        parts.extend(b.canonical_bytes() for b in self.blocks)
        return b"#".join(parts)


# ----------------------------------------------------------------------
# Diagram automorphisms
# ----------------------------------------------------------------------

def standard_diagram_automorphism(t: SimpleType, name: str) -> Tuple[int, ...]:
    """
    0-based image list of a named diagram automorphism

    Raises:
        UnsupportedFold: if t has no automorphism of that name
    """
    n = t.rank
    if name not in NAMED_AUTOMORPHISMS:
        raise UnsupportedFold(f"unknown automorphism '{name}', expected one of {', '.join(NAMED_AUTOMORPHISMS)}")
    if name == 'identity':
        return tuple(range(n))
    if name == 'flip':
        if t.family == 'A':
            return tuple(n - 1 - i for i in range(n))
        if t.family == 'D':
            return tuple(range(n - 2)) + (n - 1, n - 2)
        if t.family == 'E' and n == 6:
            return (5, 1, 4, 3, 2, 0)
    if name == 'triality' and t.family == 'D' and n == 4:
        # outer nodes 0 -> 2 -> 3 -> 0 around the center 1
        return (2, 1, 3, 0)
    raise UnsupportedFold(f"{t} has no '{name}' diagram automorphism")


def _normalize_automorphism(t: SimpleType, automorphism: Automorphism) -> Tuple[int, ...]:
    if isinstance(automorphism, str):
        return standard_diagram_automorphism(t, automorphism.strip().lower())
    ok, perm, error = PermutationValidator.normalize(list(automorphism), t.rank)
    if not ok:
        raise NotDiagramAutomorphism(error)
    return perm


def _check_diagram_automorphism(t: SimpleType, perm: Sequence[int]):
    cartan = build_root_system(t).cartan_matrix
    n = t.rank
    for i in range(n):
        for j in range(n):
            if cartan[perm[i]][perm[j]] != cartan[i][j]:
                raise NotDiagramAutomorphism(
                    f"{[p + 1 for p in perm]} does not preserve the {t} diagram "
                    f"(edge {i + 1}-{j + 1})"
                )


def permutation_order(perm: Sequence[int]) -> int:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        cycles.append(length)
    return lcm(*cycles) if cycles else 1


def induced_map(perm: Sequence[int]) -> QMatrix:
    """Permutation matrix sending simple root i to simple root perm[i]"""
    n = len(perm)
    return QMatrix.from_rows([[int(perm[j] == i) for j in range(n)] for i in range(n)])


def folded_type(t: SimpleType, order: int) -> SimpleType:
    """
    Type of the subgroup fixed by a diagram automorphism of the given order

    Raises:
        UnsupportedFold: outside the classical fold table
    """
    if order == 1:
        return t
    parity = ('even' if t.rank % 2 == 0 else 'odd') if t.family == 'A' else None
    family = FOLD_TABLE.get((t.family, order, parity))
    if family is None or (t.family == 'E' and t.rank != 6) or (order == 3 and t.rank != 4):
        raise UnsupportedFold(f"no fold of {t} by an automorphism of order {order}")
    if t.family == 'A':
        rank = (t.rank + 1) // 2
        if family == 'B' and rank == 1:
            return SimpleType('A', 1)
        return SimpleType(family, rank)
    if family == 'B':
        return SimpleType('B', t.rank - 1)
    return SimpleType(family, 2 if family == 'G' else 4)


# ----------------------------------------------------------------------
# Resolvers
# ----------------------------------------------------------------------

def resolve_fold(spec: FoldSpec) -> PairData:
    """
    Resolve the fixed subgroup of a diagram automorphism

    Args:
        spec: simple type plus automorphism

    Returns:
        PairData with tk the fixed subspace of the induced map on t_G

    Raises:
        NotDiagramAutomorphism: if the permutation breaks the Cartan matrix
        UnsupportedFold: for automorphisms outside the fold table
    """
    t = spec.g_type
    perm = _normalize_automorphism(t, spec.automorphism)
    _check_diagram_automorphism(t, perm)
    order = permutation_order(perm)
    k_type = folded_type(t, order)

    tk = fixed_subspace(induced_map(perm))
    if tk.dim != k_type.rank:
        raise UnsupportedFold(f"fixed subspace of dimension {tk.dim} does not match {k_type}")

    images = "(" + ",".join(str(p + 1) for p in perm) + ")"
    pair = PairData(
        g=CompactAlgebra.simple(t),
        k_degrees=primitive_degrees(k_type),
        k_weyl_order=weyl_order_formula(k_type),
        tk=tk,
        construction=Construction.FOLD,
        k_label=k_type.label,
        provenance=f"fold {t} by {images} -> {k_type}",
        fold_order=order,
    )
    logger.info(f"Resolved fold pair {pair.label}")
    return pair


def trace_zero_to_simple(values: Sequence) -> Tuple[Fraction, ...]:
    """
    Convert n+1 trace-zero diagonal entries to simple-root coordinates of A_n

    Partial sums: (1, 2, -3) -> (1, 3).
    """
    vector = to_vector(values)
    if sum(vector) != 0:
        raise PairResolutionError(f"trace-zero direction {list(map(str, vector))} does not sum to zero")
    out, running = [], Fraction(0)
    for v in vector[:-1]:
        running += v
        out.append(running)
    return tuple(out)


def resolve_circle(spec: CircleSpec) -> PairData:
    """
    Resolve the circle subgroup through spec.direction

    Raises:
        ZeroDirection: if the direction is zero
        DimensionMismatch: if the direction has the wrong length
    """
    g = spec.g
    if spec.coordinates == "trace_zero":
        if g.center_dim or len(g.factors) != 1 or g.factors[0].family != 'A':
            raise PairResolutionError(f"trace-zero coordinates need a single A_n factor, got {g}")
        if len(spec.direction) != g.rank + 1:
            raise DimensionMismatch(f"{g} needs {g.rank + 1} trace-zero entries, got {len(spec.direction)}")
        direction = trace_zero_to_simple(spec.direction)
    elif spec.coordinates == "simple":
        direction = to_vector(spec.direction)
    else:
        raise PairResolutionError(f"unknown coordinate system '{spec.coordinates}'")

    if len(direction) != g.rank:
        raise DimensionMismatch(f"direction of length {len(direction)} for {g} of rank {g.rank}")
    if not any(direction):
        raise ZeroDirection(f"circle direction in {g} is zero")

    central = any(direction[:g.center_dim])
    semisimple = any(direction[g.center_dim:])
    shown = ",".join(str(v) for v in direction)
    pair = PairData(
        g=g,
        k_degrees=(1,),
        k_weyl_order=1,
        tk=Subspace.span([direction]),
        construction=Construction.CIRCLE,
        k_label="T1",
        provenance=f"circle in {g} through ({shown})",
        k_weyl_roots=(),
        has_central_part=central,
        has_semisimple_part=semisimple,
    )
    if central and semisimple:
        logger.warning(f"Circle {pair.label} mixes central and semisimple directions")
    logger.info(f"Resolved circle pair {pair.label}")
    return pair


def resolve_regular(spec: RegularSpec, cap: int = DEFAULT_CAP) -> PairData:
    """
    Resolve an equal-rank subgroup generated by root reflections

    Args:
        spec: ambient algebra, generating roots and central torus dimension
        cap: largest reflection subgroup closed by enumeration

    Returns:
        PairData with tk = t_G

    Raises:
        RootNotInSystem: if a generator is not a root of G
        RankDeficient: if the roots and the extra torus do not fill t_G
        NotClosedSubsystem: if two roots of the generated system sum to a
            root of G outside it
    """
    g = spec.g
    datum = root_datum(g)
    roots = tuple(tuple(int(v) for v in r) for r in spec.sub_roots)
    for r in roots:
        if len(r) != g.rank:
            raise DimensionMismatch(f"root {r} has length {len(r)}, rank of {g} is {g.rank}")
        if not datum.is_root(r):
            raise RootNotInSystem(f"{r} is not a root of {g}")

    span_rank = Subspace.span(roots, g.rank).dim
    extra = g.rank - span_rank if spec.extra_center is None else spec.extra_center
    if extra < 0:
        raise PairResolutionError(f"extra_center must be nonnegative, got {extra}")
    if span_rank + extra < g.rank:
        raise RankDeficient(
            f"roots span {span_rank} dimensions and extra_center is {extra}; rank of {g} is {g.rank}"
        )
    if span_rank + extra > g.rank:
        raise PairResolutionError(
            f"extra_center {extra} exceeds the {g.rank - span_rank} directions orthogonal to the roots"
        )

    if roots:
        gap = additive_closure_gap(datum, reflection_closure(datum, roots))
        if gap is not None:
            a, b = gap
            raise NotClosedSubsystem(f"{a} + {b} is a root of {g} outside the system generated by {list(roots)}")
        simple, types = root_subsystem(datum, roots)
    else:
        simple, types = (), ()
    k_algebra_degrees = [1] * extra + [d for t in types for d in primitive_degrees(t)]
    formula = prod(weyl_order_formula(t) for t in types)
    if formula <= cap:
        closed = reflection_subgroup_order(datum, roots, cap)
        if closed != formula:
            raise PairResolutionError(f"reflection closure gives {closed}, identified types give {formula}")

    k_label = "+".join(([f"T{extra}"] if extra else []) + [t.label for t in types])
    pair = PairData(
        g=g,
        k_degrees=tuple(k_algebra_degrees),
        k_weyl_order=formula,
        tk=Subspace.full(g.rank),
        construction=Construction.REGULAR,
        k_label=k_label,
        provenance=f"regular subgroup of {g} from {len(roots)} roots" + (f" and T{extra}" if extra else ""),
        k_weyl_roots=tuple(simple),
        has_central_part=g.center_dim > 0,
    )
    logger.info(f"Resolved regular pair {pair.label}")
    return pair


def _diagonal(inner: PairData, copies: int) -> PairData:
    """Lift (I, H) to (I^l, diagonal H)"""
    t = inner.g.factors[0]
    g = CompactAlgebra(0, (t,) * copies)
    tk = Subspace.span([tuple(b) * copies for b in inner.tk.basis], g.rank)
    return PairData(
        g=g,
        k_degrees=inner.k_degrees,
        k_weyl_order=inner.k_weyl_order,
        tk=tk,
        construction=Construction.DIAGONAL,
        k_label=f"diag({inner.k_label})",
        provenance=f"diagonal of {inner.provenance} in {copies} copies",
        fold_order=inner.fold_order,
        reference=inner,
    )


def _central_block(center_dim: int) -> PairData:
    g = CompactAlgebra(center_dim)
    return PairData(
        g=g,
        k_degrees=(1,) * center_dim,
        k_weyl_order=1,
        tk=Subspace.full(center_dim),
        construction=Construction.CENTRAL,
        k_label=g.label,
        provenance=f"center {g.label}",
        k_weyl_roots=(),
        has_central_part=True,
        has_semisimple_part=False,
    )


def resolve_product(spec: ProductSpec) -> PairData:
    """
    Resolve a product with a block-permuting automorphism

    Each block (I^l, sigma) contributes the diagonal of the fixed subgroup
    of sigma; the center is contained in K.
    """
    if not spec.blocks and spec.center_dim < 1:
        raise PairResolutionError("a product needs a center or at least one block")
    blocks: List[PairData] = []
    if spec.center_dim:
        blocks.append(_central_block(spec.center_dim))
    for block in spec.blocks:
        if block.copies < 1:
            raise PairResolutionError(f"block {block.factor} needs at least one copy, got {block.copies}")
        inner = resolve_fold(FoldSpec(block.factor, block.return_automorphism))
        blocks.append(inner if block.copies == 1 else _diagonal(inner, block.copies))

    g = CompactAlgebra(spec.center_dim, tuple(f for b in blocks for f in b.g.factors))
    degrees = tuple(d for b in blocks for d in b.k_degrees)
    pair = PairData(
        g=g,
        k_degrees=degrees,
        k_weyl_order=prod(b.k_weyl_order for b in blocks),
        tk=direct_sum([b.tk for b in blocks]),
        construction=Construction.PRODUCT,
        k_label=" x ".join(b.k_label for b in blocks),
        provenance="product of " + "; ".join(b.provenance for b in blocks),
        blocks=tuple(blocks),
        has_central_part=spec.center_dim > 0,
        has_semisimple_part=bool(spec.blocks),
    )
    logger.info(f"Resolved product pair {pair.label} with {len(blocks)} blocks")
    return pair


def resolve_spec(spec: PairSpec, cap: int = DEFAULT_CAP) -> PairData:
    """Dispatch a recipe to its resolver"""
    if isinstance(spec, FoldSpec):
        return resolve_fold(spec)
    if isinstance(spec, CircleSpec):
        return resolve_circle(spec)
    if isinstance(spec, RegularSpec):
        return resolve_regular(spec, cap)
    if isinstance(spec, ProductSpec):
        return resolve_product(spec)
    raise PairResolutionError(f"unsupported recipe {type(spec).__name__}")


def maximal_torus_pair(p: PairData) -> PairData:
    """(G, T_K) for an irreducible pair (G, K), sharing its Cartan subspace"""
    if p.is_product:
        raise PairResolutionError("maximal torus pairs are formed blockwise")
    return PairData(
        g=p.g,
        k_degrees=(1,) * p.rank_k,
        k_weyl_order=1,
        tk=p.tk,
        construction=Construction.MAXIMAL_TORUS,
        k_label=f"T{p.rank_k}",
        provenance=f"maximal torus of {p.k_label} in {p.g}",
        k_weyl_roots=(),
        has_central_part=p.has_central_part,
        has_semisimple_part=p.has_semisimple_part,
        reference=p,
    )


def sample_circle_directions(g: CompactAlgebra, count: int, seed: int, bound: int = 5) -> List[Tuple[int, ...]]:
    """
    Seeded nonzero integer directions in simple-root coordinates

    Args:
        g: ambient algebra
        count: number of directions
        seed: numpy generator seed
        bound: entries are drawn from [-bound, bound]
    """
    rng = np.random.default_rng(seed)
    directions = []
    while len(directions) < count:
        draw = rng.integers(-bound, bound + 1, size=g.rank)
        if np.any(draw):
            directions.append(tuple(int(v) for v in draw))
    return directions

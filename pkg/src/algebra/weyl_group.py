"""
Weyl group enumeration
Weyl groups as explicit integer matrices in simple-root coordinates,
reflection subgroup orders and stabilizer restriction sets
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, FrozenSet, List, Sequence, Tuple

from src.algebra.exact_linalg import QMatrix, Subspace, restrict_to_subspace
from src.algebra.root_system import (
    CompactAlgebra, Reflection, RootDatum, RootSystem, build_root_system, make_reflection
)
from src.utils.errors import CapExceeded, DimensionMismatch, RootNotInSystem

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10_000_000

# Row-major flat tuple of ints
FlatMatrix = Tuple[int, ...]


def _identity(n: int) -> FlatMatrix:
    return tuple(int(i == j) for i in range(n) for j in range(n))


def _left_reflect(s: Reflection, w: FlatMatrix, n: int) -> FlatMatrix:
    """s * w using s = I - root coroot^T (only rows where root is nonzero change)"""
    q = [0] * n
    for k, p in enumerate(s.coroot):
        if p:
            base = k * n
            for j in range(n):
                q[j] += p * w[base + j]
    out = list(w)
    for i, b in enumerate(s.root):
        if b:
            base = i * n
            for j in range(n):
                out[base + j] -= b * q[j]
    return tuple(out)


def _closure(generators: Sequence[Reflection], n: int, cap: int, label: str) -> Tuple[List[FlatMatrix], List[int]]:
    """
    Breadth-first closure of reflections under left multiplication

    Returns elements ordered by (word length, matrix entries) and their lengths.
    """
    identity = _identity(n)
    seen = {identity}
    elements, lengths = [identity], [0]
    layer = [identity]
    depth = 0
    while layer:
        depth += 1
        nxt = set()
        for w in layer:
            for s in generators:
                v = _left_reflect(s, w, n)
                if v not in seen:
                    seen.add(v)
                    nxt.add(v)
        if len(seen) > cap:
            raise CapExceeded(len(seen), cap, label)
        layer = sorted(nxt)
        elements.extend(layer)
        lengths.extend([depth] * len(layer))
    return elements, lengths


@dataclass(frozen=True)
class WeylGroup:
    """
    Finite Weyl group given by all of its elements

    Elements are row-major integer matrices acting on column vectors in
    simple-root coordinates (central coordinates first, acted on trivially).
    """
    label: str
    dimension: int
    generators: Tuple[Reflection, ...]
    elements: Tuple[FlatMatrix, ...]
    lengths: Tuple[int, ...]
    roots: FrozenSet[Tuple[int, ...]] = field(repr=False)
    form: Tuple[Tuple[int, ...], ...] = field(repr=False)
    _index: Dict[FlatMatrix, int] = field(compare=False, repr=False, hash=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, matrix: Sequence[int]) -> bool:
        return tuple(matrix) in self._index

    def matrix(self, i: int) -> QMatrix:
        n = self.dimension
        return QMatrix(n, n, tuple(Fraction(v) for v in self.elements[i]))

    def apply(self, i: int, x: Sequence[int]) -> Tuple[int, ...]:
        n, w = self.dimension, self.elements[i]
        return tuple(sum(w[r * n + c] * x[c] for c in range(n)) for r in range(n))

    def multiply(self, a: FlatMatrix, b: FlatMatrix) -> FlatMatrix:
        n = self.dimension
        return tuple(
            sum(a[i * n + k] * b[k * n + j] for k in range(n))
            for i in range(n) for j in range(n)
        )


def _make_group(label: str, dimension: int, generators, elements, lengths, roots, form) -> WeylGroup:
    elements = tuple(elements)
    return WeylGroup(
        label=label,
        dimension=dimension,
        generators=tuple(generators),
        elements=elements,
        lengths=tuple(lengths),
        roots=frozenset(roots),
        form=tuple(tuple(r) for r in form),
        _index={e: i for i, e in enumerate(elements)},
    )


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylGroup:
    """
    Enumerate W for one simple root system

    Args:
        rs: root system
        cap: refuse to enumerate groups of larger formula order

    Returns:
        WeylGroup ordered by word length then matrix entries

    Raises:
        CapExceeded: if the formula order exceeds cap
    """
    if rs.weyl_order > cap:
        raise CapExceeded(rs.weyl_order, cap, rs.simple_type.label)
    elements, lengths = _closure(rs.simple_reflections(), rs.rank, cap, rs.simple_type.label)
    if len(elements) != rs.weyl_order:
        raise ArithmeticError(f"{rs.simple_type}: enumerated {len(elements)} elements, formula gives {rs.weyl_order}")
    logger.info(f"Enumerated W({rs.simple_type}): {len(elements)} elements")
    return _make_group(rs.simple_type.label, rs.rank, rs.simple_reflections(), elements, lengths, rs.roots, rs.form)


def trivial_weyl(dimension: int) -> WeylGroup:
    """Trivial group acting on `dimension` central coordinates"""
    form = [[int(i == j) for j in range(dimension)] for i in range(dimension)]
    label = f"T{dimension}" if dimension else "1"
    return _make_group(label, dimension, (), [_identity(dimension)], [0], (), form)


def product_weyl(groups: Sequence[WeylGroup], cap: int = DEFAULT_CAP) -> WeylGroup:
    """
    Direct product acting block-diagonally

    Raises:
        CapExceeded: if the product order exceeds cap
    """
    total = prod(g.order for g in groups)
    label = " x ".join(g.label for g in groups) or "1"
    if total > cap:
        raise CapExceeded(total, cap, label)
    n = sum(g.dimension for g in groups)
    offsets = list(itertools.accumulate([0] + [g.dimension for g in groups]))[:-1]

    def embed(v: Sequence[int], start: int) -> Tuple[int, ...]:
        out = [0] * n
        out[start:start + len(v)] = v
        return tuple(out)

    generators = [
        Reflection(embed(s.root, o), embed(s.coroot, o))
        for g, o in zip(groups, offsets) for s in g.generators
    ]
    roots = [embed(r, o) for g, o in zip(groups, offsets) for r in g.roots]
    form = [[0] * n for _ in range(n)]
    for g, o in zip(groups, offsets):
        for i, row in enumerate(g.form):
            form[o + i][o:o + g.dimension] = row

    keyed = []
    for combo in itertools.product(*(range(g.order) for g in groups)):
        flat = [0] * (n * n)
        length = 0
        for g, o, idx in zip(groups, offsets, combo):
            w, d = g.elements[idx], g.dimension
            length += g.lengths[idx]
            for r in range(d):
                flat[(o + r) * n + o:(o + r) * n + o + d] = w[r * d:(r + 1) * d]
        keyed.append((length, tuple(flat)))
    keyed.sort()
    return _make_group(label, n, generators, [k[1] for k in keyed], [k[0] for k in keyed], roots, form)


def weyl_group_for_algebra(algebra: CompactAlgebra, cap: int = DEFAULT_CAP) -> WeylGroup:
    """W(G) for a compact algebra: trivial on the center, product over factors"""
    if algebra.weyl_order > cap:
        raise CapExceeded(algebra.weyl_order, cap, algebra.label)
    parts = [trivial_weyl(algebra.center_dim)] if algebra.center_dim else []
    parts.extend(enumerate_weyl(build_root_system(t), cap) for t in algebra.factors)
    if len(parts) == 1:
        return parts[0]
    group = product_weyl(parts, cap)
    return group


def reflection_subgroup_order(datum: RootDatum, roots: Sequence[Sequence[int]], cap: int = DEFAULT_CAP) -> int:
    """Order of the group generated by reflections in the given roots of datum"""
    if not roots:
        return 1
    reflections = [datum.reflection(r) for r in roots]
    elements, _ = _closure(reflections, datum.dimension, cap, "reflection subgroup")
    return len(elements)


def subgroup_order(w: WeylGroup, roots: Sequence[Sequence[int]]) -> int:
    """
    Order of the subgroup of w generated by reflections in roots

    Raises:
        RootNotInSystem: if a vector is not a root of w's root system
    """
    for r in roots:
        if tuple(r) not in w.roots:
            raise RootNotInSystem(f"{tuple(r)} is not a root of {w.label}")
    if not roots:
        return 1
    reflections = [make_reflection(w.form, r) for r in roots]
    elements, _ = _closure(reflections, w.dimension, max(w.order, 1), w.label)
    return len(elements)


@dataclass(frozen=True)
class RestrictionSet:
    """Distinct restrictions to tk of Weyl elements stabilizing tk"""
    subspace: Subspace
    restrictions: Tuple[QMatrix, ...]
    stabilizer_order: int

    @property
    def order(self) -> int:
        return len(self.restrictions)

    def __len__(self) -> int:
        return len(self.restrictions)

    def contains_identity(self) -> bool:
        return QMatrix.identity(self.subspace.dim) in self.restrictions

    def is_group(self) -> bool:
        """Closure under composition and inverse (pairwise check)"""
        members = set(self.restrictions)
        for a in self.restrictions:
            if a.inverse() not in members:
                return False
            for b in self.restrictions:
                if (a @ b) not in members:
                    return False
        return True


def restriction_set(w: WeylGroup, tk: Subspace) -> RestrictionSet:
    """
    Compute H = { w|tk : w in W, w(tk) = tk }

    Stabilization is tested in integer arithmetic against an annihilator of
    tk; restrict_to_subspace runs once per distinct restriction. On the
    full space the restriction is the element itself.

    Args:
        w: enumerated Weyl group
        tk: subspace in w's coordinates

    Returns:
        RestrictionSet whose order is the number of components of N_G(T_K)
    """
    if tk.ambient_dim != w.dimension:
        raise DimensionMismatch(f"subspace lives in dimension {tk.ambient_dim}, group acts on {w.dimension}")
    if tk.dim < 1:
        raise DimensionMismatch("restriction set needs a nonzero subspace")

    n = w.dimension
    basis, _ = tk.integer_basis()
    annihilator = tk.annihilator()
    pivots = tk.pivots
    full = tk.dim == n

    distinct: Dict[Tuple[int, ...], QMatrix] = {}
    stabilizers = 0
    for elem in w.elements:
        images = []
        invariant = True
        for b in basis:
            v = [sum(elem[r * n + c] * b[c] for c in range(n) if b[c]) for r in range(n)]
            if any(sum(a[j] * v[j] for j in range(n) if a[j]) for a in annihilator):
                invariant = False
                break
            images.append(v)
        if not invariant:
            continue
        stabilizers += 1
        # pivot entries of the integer images determine the restriction
        key = tuple(v[p] for v in images for p in pivots)
        if key in distinct:
            continue
        matrix = QMatrix(n, n, tuple(Fraction(x) for x in elem))
        distinct[key] = matrix if full else restrict_to_subspace(matrix, tk)

    logger.debug(f"Restriction set on {tk} in {w.label}: {stabilizers} stabilizers, {len(distinct)} restrictions")
    return RestrictionSet(subspace=tk, restrictions=tuple(distinct.values()), stabilizer_order=stabilizers)

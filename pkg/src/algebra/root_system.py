"""
Root data for compact Lie algebras
Simple types A-G, Cartan matrices, positive roots, primitive degrees and
Weyl orders; compact algebras as a center plus simple factors
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.algorithms.lie_tables import E_EDGES, EXCEPTIONAL_DEGREES, classical_degrees
from src.utils.errors import InvalidTypeError, RootNotInSystem
from src.utils.validators import TypeLabelValidator

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class SimpleType:
    """Family letter plus rank, e.g. D4"""
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, 'family', family)
        error = TypeLabelValidator.rank_error(family, self.rank)
        if error:
            raise InvalidTypeError(error)

    @classmethod
    def parse(cls, label: str) -> "SimpleType":
        ok, parsed, error = TypeLabelValidator.validate_type(label)
        if not ok:
            raise InvalidTypeError(error)
        return cls(*parsed)

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


class Reflection(NamedTuple):
    """Reflection x -> x - <coroot, x> root in integer coordinates"""
    root: IntVector
    coroot: IntVector

    def apply(self, x: Sequence[int]) -> IntVector:
        c = sum(p * v for p, v in zip(self.coroot, x))
        if c == 0:
            return tuple(x)
        return tuple(v - c * b for v, b in zip(x, self.root))


def cartan_matrix(t: SimpleType) -> IntMatrix:
    """Cartan matrix C with C[i][j] = <alpha_i^vee, alpha_j>, Bourbaki numbering"""
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1):
        c[i][j] = cij
        c[j][i] = cji

    if t.family in ('A', 'B', 'C', 'F', 'G'):
        for i in range(n - 1):
            bond(i, i + 1)
    if t.family == 'B':
        bond(n - 2, n - 1, -1, -2)
    elif t.family == 'C':
        bond(n - 2, n - 1, -2, -1)
    elif t.family == 'F':
        bond(1, 2, -1, -2)
    elif t.family == 'G':
        bond(0, 1, -3, -1)
    elif t.family == 'D':
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif t.family == 'E':
        for i, j in E_EDGES:
            if i < n and j < n:
                bond(i, j)
    return tuple(tuple(row) for row in c)


def symmetrizer(cartan: IntMatrix) -> IntVector:
    """Positive integers d with d_i C_ij = d_j C_ji, primitive on each component"""
    n = len(cartan)
    d: List[Fraction] = [Fraction(0)] * n
    for start in range(n):
        if d[start]:
            continue
        d[start] = Fraction(1)
        stack = [start]
        component = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and not d[j]:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
                    component.append(j)
        scale = lcm(*(d[i].denominator for i in component))
        ints = [int(d[i] * scale) for i in component]
        common = gcd(*ints)
        for i, v in zip(component, ints):
            d[i] = Fraction(v // common)
    return tuple(int(x) for x in d)


def _root_closure(cartan: IntMatrix) -> FrozenSet[IntVector]:
    """All roots, as the closure of the simple roots under simple reflections"""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * x[j] for j in range(n))
                if c == 0:
                    continue
                y = list(x)
                y[i] -= c
                y = tuple(y)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _sorted_positive(roots: Iterable[IntVector]) -> Tuple[IntVector, ...]:
    return tuple(sorted((r for r in roots if all(v >= 0 for v in r)), key=lambda r: (sum(r), r)))


def primitive_degrees(t: SimpleType) -> Tuple[int, ...]:
    """Primitive degrees g_j of the simple type, ascending"""
    if not isinstance(t, SimpleType):
        raise InvalidTypeError(f"not a simple type: {t!r}")
    key = (t.family, t.rank)
    if key in EXCEPTIONAL_DEGREES:
        return EXCEPTIONAL_DEGREES[key]
    try:
        return classical_degrees(t.family, t.rank)
    except KeyError:
        raise InvalidTypeError(f"no degree table for {t.label}")


def weyl_order_formula(t: SimpleType) -> int:
    """|W| as the product of (g + 1) / 2 over the primitive degrees"""
    return prod((g + 1) // 2 for g in primitive_degrees(t))


@dataclass(frozen=True)
class RootSystem:
    """Root datum of one simple type in simple-root coordinates"""
    simple_type: SimpleType
    cartan_matrix: IntMatrix
    symmetrizer: IntVector
    positive_roots: Tuple[IntVector, ...]
    primitive_degrees: Tuple[int, ...]
    weyl_order: int
    _root_set: FrozenSet[IntVector] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @property
    def simple_roots(self) -> Tuple[IntVector, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @property
    def roots(self) -> Tuple[IntVector, ...]:
        return self.positive_roots + tuple(tuple(-v for v in r) for r in self.positive_roots)

    @property
    def form(self) -> IntMatrix:
        """Invariant form B = D C in simple-root coordinates"""
        return tuple(
            tuple(self.symmetrizer[i] * self.cartan_matrix[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def inner_product(self, x: Sequence[int], y: Sequence[int]) -> int:
        return _bilinear(self.form, x, y)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def simple_reflections(self) -> Tuple[Reflection, ...]:
        return tuple(Reflection(self.simple_roots[i], self.cartan_matrix[i]) for i in range(self.rank))

    def reflection(self, root: Sequence[int]) -> Reflection:
        if not self.is_root(root):
            raise RootNotInSystem(f"{tuple(root)} is not a root of {self.simple_type}")
        return make_reflection(self.form, root)


def _bilinear(form: IntMatrix, x: Sequence, y: Sequence):
    return sum(x[i] * form[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j])


def make_reflection(form: IntMatrix, root: Sequence[int]) -> Reflection:
    """Reflection in root with respect to the invariant form"""
    root = tuple(int(v) for v in root)
    norm = _bilinear(form, root, root)
    coroot = []
    for j in range(len(root)):
        pairing = Fraction(2 * sum(root[i] * form[i][j] for i in range(len(root))), norm)
        if pairing.denominator != 1:
            raise RootNotInSystem(f"{root} does not define an integral reflection")
        coroot.append(int(pairing))
    return Reflection(root, tuple(coroot))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """
    Construct the root system of a simple type

    Positive roots are obtained by closing the simple roots under simple
    reflections; the count is checked against the primitive degrees.
    """
    cartan = cartan_matrix(t)
    roots = _root_closure(cartan)
    positive = _sorted_positive(roots)
    degrees = primitive_degrees(t)
    expected = sum((g - 1) // 2 for g in degrees)
    if len(positive) != expected:
        raise InvalidTypeError(f"{t}: closure produced {len(positive)} positive roots, expected {expected}")
    logger.debug(f"Built root system {t}: {len(positive)} positive roots")
    return RootSystem(
        simple_type=t,
        cartan_matrix=cartan,
        symmetrizer=symmetrizer(cartan),
        positive_roots=positive,
        primitive_degrees=degrees,
        weyl_order=weyl_order_formula(t),
        _root_set=roots,
    )


def identify_type(cartan: IntMatrix) -> SimpleType:
    """
    Identify the simple type of an indecomposable Cartan matrix

    Uses rank, number of positive roots and the root-length pattern;
    A3/D3 resolve to A3 and B2/C2 to B2.
    """
    r = len(cartan)
    n_pos = sum(1 for root in _root_closure(cartan) if all(v >= 0 for v in root))
    simply_laced = all(cartan[i][j] in (0, -1) for i in range(r) for j in range(r) if i != j)
    if simply_laced:
        if n_pos == r * (r + 1) // 2:
            return SimpleType('A', r)
        if r >= 4 and n_pos == r * (r - 1):
            return SimpleType('D', r)
        if (r, n_pos) in ((6, 36), (7, 63), (8, 120)):
            return SimpleType('E', r)
    else:
        if r == 2 and n_pos == 6:
            return SimpleType('G', 2)
        if r == 4 and n_pos == 24:
            return SimpleType('F', 4)
        if n_pos == r * r:
            d = symmetrizer(cartan)
            short = sum(1 for v in d if v == min(d))
            return SimpleType('B' if short == 1 else 'C', r)
    raise InvalidTypeError(f"unrecognised Cartan matrix {cartan}")


@dataclass(frozen=True)
class CompactAlgebra:
    """Center of dimension center_dim plus simple factors; coordinates are center first"""
    center_dim: int = 0
    factors: Tuple[SimpleType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple(self.factors))
        if self.center_dim < 0:
            raise InvalidTypeError("center dimension must be nonnegative")
        if self.rank < 1:
            raise InvalidTypeError("a compact algebra needs positive rank")

    @classmethod
    def simple(cls, t: SimpleType) -> "CompactAlgebra":
        return cls(0, (t,))

    @classmethod
    def parse(cls, label: str) -> "CompactAlgebra":
        ok, parsed, error = TypeLabelValidator.split_algebra(label)
        if not ok:
            raise InvalidTypeError(error)
        center, factors = parsed
        return cls(center, tuple(SimpleType(f, r) for f, r in factors))

    @property
    def rank(self) -> int:
        return self.center_dim + sum(f.rank for f in self.factors)

    @property
    def primitive_degrees(self) -> Tuple[int, ...]:
        degrees = [1] * self.center_dim
        for f in self.factors:
            degrees.extend(primitive_degrees(f))
        return tuple(sorted(degrees))

    @property
    def weyl_order(self) -> int:
        return prod(weyl_order_formula(f) for f in self.factors)

    @property
    def is_semisimple(self) -> bool:
        return self.center_dim == 0

    def offsets(self) -> Tuple[int, ...]:
        """Start coordinate of each simple factor"""
        starts, pos = [], self.center_dim
        for f in self.factors:
            starts.append(pos)
            pos += f.rank
        return tuple(starts)

    @property
    def label(self) -> str:
        parts = ([f"T{self.center_dim}"] if self.center_dim else []) + [f.label for f in self.factors]
        return "+".join(parts)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class RootDatum:
    """Root data of a compact algebra embedded in its full coordinates"""
    algebra: CompactAlgebra
    form: IntMatrix
    simple_roots: Tuple[IntVector, ...]
    positive_roots: Tuple[IntVector, ...]
    roots: FrozenSet[IntVector] = field(repr=False)

    @property
    def dimension(self) -> int:
        return self.algebra.rank

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.roots

    def reflection(self, root: Sequence[int]) -> Reflection:
        if not self.is_root(root):
            raise RootNotInSystem(f"{tuple(root)} is not a root of {self.algebra}")
        return make_reflection(self.form, root)

    def inner_product(self, x: Sequence, y: Sequence):
        return _bilinear(self.form, x, y)


@lru_cache(maxsize=None)
def root_datum(algebra: CompactAlgebra) -> RootDatum:
    """Block-assembled root datum; the center carries the standard form"""
    n = algebra.rank
    form = [[int(i == j and i < algebra.center_dim) for j in range(n)] for i in range(n)]
    simple, positive, roots = [], [], set()

    def embed(v: Sequence[int], start: int) -> IntVector:
        out = [0] * n
        out[start:start + len(v)] = v
        return tuple(out)

    for t, start in zip(algebra.factors, algebra.offsets()):
        rs = build_root_system(t)
        for i, row in enumerate(rs.form):
            form[start + i][start:start + t.rank] = row
        simple.extend(embed(v, start) for v in rs.simple_roots)
        positive.extend(embed(v, start) for v in rs.positive_roots)
        roots.update(embed(v, start) for v in rs.roots)
    return RootDatum(
        algebra=algebra,
        form=tuple(tuple(r) for r in form),
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        roots=frozenset(roots),
    )


def reflection_closure(datum: RootDatum, generators: Sequence[Sequence[int]]) -> FrozenSet[IntVector]:
    """Orbit of the generators and their negatives under the reflections they define"""
    reflections = [datum.reflection(g) for g in generators]
    seen = set()
    for g in generators:
        seen.add(tuple(g))
        seen.add(tuple(-v for v in g))
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in reflections:
                y = s.apply(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def additive_closure_gap(datum: RootDatum, roots: Iterable[IntVector]) -> Optional[Tuple[IntVector, IntVector]]:
    """
    First pair (a, b) of the given roots whose sum is a root of datum
    missing from them, or None when the set is closed
    """
    members = set(roots)
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            total = tuple(x + y for x, y in zip(a, b))
            if total not in members and datum.is_root(total):
                return a, b
    return None


def root_subsystem(datum: RootDatum, generators: Sequence[Sequence[int]]) -> Tuple[Tuple[IntVector, ...], Tuple[SimpleType, ...]]:
    """
    Root subsystem generated by reflections in the given roots

    Args:
        datum: ambient root datum
        generators: roots of the ambient system

    Returns:
        (simple roots of the subsystem, identified simple types), both in a
        deterministic order
    """
    positive = set(_sorted_positive(reflection_closure(datum, generators)))
    simple = tuple(sorted(
        (b for b in positive
         if not any(tuple(x - y for x, y in zip(b, g)) in positive for g in positive if g != b)),
        key=lambda r: (sum(r), r),
    ))

    # split into components by non-orthogonality
    adjacency: Dict[int, List[int]] = {i: [] for i in range(len(simple))}
    for i in range(len(simple)):
        for j in range(i + 1, len(simple)):
            if datum.inner_product(simple[i], simple[j]) != 0:
                adjacency[i].append(j)
                adjacency[j].append(i)
    types, ordered, visited = [], [], set()
    for start in range(len(simple)):
        if start in visited:
            continue
        component, stack = [], [start]
        visited.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in adjacency[i]:
                if j not in visited:
                    visited.add(j)
                    stack.append(j)
        component.sort()
        roots = [simple[i] for i in component]
        sub_cartan = tuple(
            tuple(int(Fraction(2 * datum.inner_product(a, b), datum.inner_product(a, a))) for b in roots)
            for a in roots
        )
        types.append(identify_type(sub_cartan))
        ordered.extend(roots)
    return tuple(ordered), tuple(types)

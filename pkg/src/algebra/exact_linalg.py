"""
Exact rational linear algebra
Small dense matrices and subspaces over Q with canonical (RREF) forms,
eliminated by sympy's DomainMatrix over QQ
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.utils.errors import DimensionMismatch, ShapeMismatch

logger = logging.getLogger(__name__)

Rational = Fraction
Vector = Tuple[Fraction, ...]


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or 'p/q' string to a Fraction (floats rejected)"""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact input required, got {value!r}")
    return Fraction(value)


def to_vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def _encode(values: Iterable[Fraction]) -> bytes:
    return ",".join(f"{v.numerator}/{v.denominator}" for v in values).encode("ascii")


def _domain_matrix(rows: Sequence[Sequence[Fraction]], cols: int) -> DomainMatrix:
    return DomainMatrix(
        [[QQ(x.numerator, x.denominator) for x in r] for r in rows], (len(rows), cols), QQ
    )


def _fraction_rows(dm: DomainMatrix) -> List[List[Fraction]]:
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in r] for r in dm.to_list()]


@dataclass(frozen=True)
class QMatrix:
    """Dense rational matrix, row-major, immutable"""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ShapeMismatch(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        if not rows:
            raise ShapeMismatch("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), width, tuple(to_rational(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise ShapeMismatch(f"cannot apply {self.rows}x{self.cols} matrix to length-{len(vector)} vector")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector)), Fraction(0))
            for i in range(self.rows)
        )

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return QMatrix.from_domain_matrix(self.to_domain_matrix().matmul(other.to_domain_matrix()))

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def inverse(self) -> "QMatrix":
        """Inverse over QQ; raises ShapeMismatch for singular or non-square input"""
        if not self.is_square:
            raise ShapeMismatch("only square matrices are invertible")
        dm = self.to_domain_matrix()
        if dm.rank() != self.rows:
            raise ShapeMismatch("matrix is singular")
        return QMatrix.from_domain_matrix(dm.inv())

    def to_domain_matrix(self) -> DomainMatrix:
        return _domain_matrix(self.to_rows(), self.cols)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "QMatrix":
        return cls.from_rows(_fraction_rows(dm))

    def canonical_bytes(self) -> bytes:
        return f"{self.rows}x{self.cols}:".encode("ascii") + _encode(self.entries)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows)) + "]"


def _rref_rows(rows: Sequence[Sequence[Fraction]], cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and pivot columns of a nonempty list of rows"""
    reduced, pivots = _domain_matrix(rows, cols).rref()
    return _fraction_rows(reduced), list(pivots)


def rref(m: QMatrix) -> QMatrix:
    """Reduced row-echelon form of m (same shape, zero rows last)"""
    reduced, _ = m.to_domain_matrix().rref()
    return QMatrix.from_domain_matrix(reduced)


@dataclass(frozen=True)
class Subspace:
    """
    Linear subspace of Q^n stored by its RREF basis

    Two spans are equal exactly when their canonical bases are equal, so
    dataclass equality and hashing are subspace equality.
    """
    ambient_dim: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...] = field(compare=False)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: Optional[int] = None) -> "Subspace":
        rows = [list(to_vector(v)) for v in vectors]
        if ambient_dim is None:
            if not rows:
                raise DimensionMismatch("ambient dimension required for an empty span")
            ambient_dim = len(rows[0])
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionMismatch(f"all vectors must have length {ambient_dim}")
        if not rows:
            return cls(ambient_dim, (), ())
        reduced, pivots = _rref_rows(rows, ambient_dim)
        basis = tuple(tuple(r) for r in reduced[:len(pivots)])
        return cls(ambient_dim, basis, tuple(pivots))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, vector: Sequence) -> Optional[Vector]:
        """Coordinates of vector in the canonical basis, or None if it lies outside"""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(vector)} in {self.ambient_dim}-dimensional space")
        coords = tuple(to_rational(vector[p]) for p in self.pivots)
        for j in range(self.ambient_dim):
            value = sum((c * b[j] for c, b in zip(coords, self.basis)), Fraction(0))
            if value != vector[j]:
                return None
        return coords

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None

    def integer_basis(self) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...]]:
        """
        Basis rows scaled to primitive integer vectors

        Returns:
            (rows, scales) with rows[r] = scales[r] * basis[r]
        """
        rows, scales = [], []
        for b in self.basis:
            scale = lcm(*(x.denominator for x in b)) if b else 1
            ints = [int(x * scale) for x in b]
            common = gcd(*ints) or 1
            rows.append(tuple(v // common for v in ints))
            scales.append(scale // common)
        return tuple(rows), tuple(scales)

    def annihilator(self) -> Tuple[Tuple[int, ...], ...]:
        """Integer rows N with N v = 0 exactly when v lies in the subspace"""
        free = [c for c in range(self.ambient_dim) if c not in self.pivots]
        rows = []
        for f in free:
            v = [Fraction(0)] * self.ambient_dim
            v[f] = Fraction(1)
            for r, p in enumerate(self.pivots):
                v[p] = -self.basis[r][f]
            scale = lcm(*(x.denominator for x in v))
            rows.append(tuple(int(x * scale) for x in v))
        return tuple(rows)

    def canonical_bytes(self) -> bytes:
        return f"{self.ambient_dim}:".encode("ascii") + b"|".join(_encode(b) for b in self.basis)

    def __str__(self) -> str:
        inner = ", ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis)
        return f"span{{{inner}}}"


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    return a.basis == b.basis


def null_space(m: QMatrix) -> Subspace:
    """Kernel of m as a Subspace of Q^cols"""
    return Subspace.span(_fraction_rows(m.to_domain_matrix().nullspace()), m.cols)


def fixed_subspace(m: QMatrix) -> Subspace:
    """Subspace of vectors fixed by the square matrix m"""
    if not m.is_square:
        raise ShapeMismatch("fixed subspace needs a square matrix")
    identity = QMatrix.identity(m.rows)
    return null_space(QMatrix(m.rows, m.cols, tuple(a - b for a, b in zip(m.entries, identity.entries))))


def direct_sum(parts: Sequence[Subspace]) -> Subspace:
    """Block direct sum of subspaces of consecutive coordinate blocks"""
    total = sum(p.ambient_dim for p in parts)
    vectors, offset = [], 0
    for part in parts:
        for b in part.basis:
            v = [Fraction(0)] * total
            v[offset:offset + part.ambient_dim] = b
            vectors.append(v)
        offset += part.ambient_dim
    return Subspace.span(vectors, total)


def restrict_to_subspace(m: QMatrix, s: Subspace) -> Optional[QMatrix]:
    """
    Matrix of m restricted to s in s's canonical basis

    Args:
        m: square matrix acting on the ambient space of s
        s: subspace

    Returns:
        The dim(s) x dim(s) restriction, or None when m does not map s into s
    """
    if not m.is_square or m.rows != s.ambient_dim:
        raise ShapeMismatch(f"{m.rows}x{m.cols} matrix cannot act on {s.ambient_dim}-dimensional space")
    if s.dim == 0:
        return None
    basis = _domain_matrix(s.basis, s.ambient_dim).transpose()
    images = m.to_domain_matrix().matmul(basis)
    # canonical basis is the identity on the pivot rows
    image_rows = images.to_list()
    coords = DomainMatrix([image_rows[p] for p in s.pivots], (s.dim, s.dim), QQ)
    if basis.matmul(coords).to_list() != image_rows:
        return None
    return QMatrix.from_domain_matrix(coords)

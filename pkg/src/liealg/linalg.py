"""Exact dense linear algebra over Q and prime fields.

Matrices are immutable row-major grids of exact scalars.  The reduced
row-echelon form here normalizes pivots to 1 and eliminates above and
below, which makes RREF bases canonical: two spans of the same subspace
always produce bit-identical ``Subspace`` objects.  No floating point
appears anywhere in this module.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import FieldMismatchError, FpElement, PrimeField, QQ, RationalField

__all__ = [
    "FieldMismatchError",
    "ShapeError",
    "Matrix",
    "Subspace",
    "rref",
    "rank",
    "nullspace",
    "det",
    "solve",
]


class ShapeError(ValueError):
    """Raised when matrix dimensions do not fit the requested operation."""


def _check_same_field(a, b):
    if a.field != b.field:
        raise FieldMismatchError(f"field mismatch: {a.field} vs {b.field}")


class Matrix:
    """An immutable exact matrix over a fixed field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows: Iterable[Sequence]):
        coerced = tuple(tuple(field(x) for x in row) for row in rows)
        if coerced and any(len(r) != len(coerced[0]) for r in coerced):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(coerced))
        object.__setattr__(self, "ncols", len(coerced[0]) if coerced else 0)
        object.__setattr__(self, "rows", coerced)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows)) if self.rows else \
            Matrix(self.field, [])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i))

    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(x == zero for r in self.rows for x in r)

    def trace(self):
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        t = self.field.zero
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, [[c * x for x in r] for r in self.rows])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-x for x in r] for r in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("matrix addition shape mismatch")
        return Matrix(self.field,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            _check_same_field(self, other)
            if self.ncols != other.nrows:
                raise ShapeError("matrix product shape mismatch")
            cols = other.transpose().rows
            zero = self.field.zero
            return Matrix(self.field,
                          [[_dot(r, c, zero) for c in cols] for r in self.rows])
        # vector on the right
        vec = tuple(self.field(x) for x in other)
        if self.ncols != len(vec):
            raise ShapeError("matrix-vector shape mismatch")
        zero = self.field.zero
        return tuple(_dot(r, vec, zero) for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows
                and (self.nrows, self.ncols) == (other.nrows, other.ncols))

    def __hash__(self):
        return hash((self.field, self.rows, self.ncols))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}: {body})"


def _dot(u, v, zero):
    s = zero
    for a, b in zip(u, v):
        s = s + a * b
    return s


def _rref_rows(field, rows):
    """In-place RREF on a list of row lists; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    zero = field.zero
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form of ``m`` and its pivot column indices."""
    rows = [list(r) for r in m.rows]
    pivots = _rref_rows(m.field, rows)
    return Matrix(m.field, rows) if rows else m, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> "Subspace":
    """Canonical basis of {v : m v = 0} as a subspace of the column space.

    The free-variable vectors are re-reduced by the Subspace constructor,
    so the result carries the canonical RREF basis like any other span.
    """
    reduced, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    zero, one = m.field.zero, m.field.one
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = -reduced.rows[r][f]
        basis.append(v)
    return Subspace(m.field, m.ncols, basis)


def det(m: Matrix):
    """Exact determinant by elimination with pivoting."""
    if not m.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = m.nrows
    field = m.field
    zero = field.zero
    rows = [list(r) for r in m.rows]
    result = field.one
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            result = -result
        result = result * rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != zero:
                f = rows[i][c] / inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def solve(m: Matrix, b: Sequence):
    """One solution of m x = b (pivot-variable convention), or None."""
    bvec = [m.field(x) for x in b]
    if len(bvec) != m.nrows:
        raise ShapeError("right-hand side length mismatch")
    aug_rows = [list(r) + [bv] for r, bv in zip(m.rows, bvec)]
    if not aug_rows:
        return tuple()
    pivots = _rref_rows(m.field, aug_rows)
    if m.ncols in pivots:
        return None  # a pivot in the augmented column means inconsistency
    zero = m.field.zero
    x = [zero] * m.ncols
    for r, c in enumerate(pivots):
        x[c] = aug_rows[r][-1]
    return tuple(x)


class Subspace:
    """A linear subspace with a canonical RREF basis.

    Equality of subspaces is literal equality of the stored basis, which
    the RREF normal form makes sound: equal spaces have identical bases.
    """

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim: int, vectors: Iterable[Sequence]):
        rows = [[field(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ShapeError("spanning vector of wrong length")
        _rref_rows(field, rows)
        zero = field.zero
        rows = [r for r in rows if any(x != zero for x in r)]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        return cls(field, ambient_dim, vectors)

    @classmethod
    def zero(cls, field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim,
                   Matrix.identity(field, ambient_dim).rows)

    @classmethod
    def coordinate(cls, field, ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        """Span of the given basis coordinates."""
        zero, one = field.zero, field.one
        vecs = []
        for i in sorted(set(indices)):
            v = [zero] * ambient_dim
            v[i] = one
            vecs.append(v)
        return cls(field, ambient_dim, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis)

    def pivot_columns(self) -> tuple[int, ...]:
        zero = self.field.zero
        pivots = []
        for row in self.basis:
            for c, x in enumerate(row):
                if x != zero:
                    pivots.append(c)
                    break
        return tuple(pivots)

    def reduce(self, v: Sequence) -> tuple:
        """Canonical representative of v modulo this subspace."""
        vec = [self.field(x) for x in v]
        if len(vec) != self.ambient_dim:
            raise ShapeError("vector of wrong length")
        zero = self.field.zero
        for row, c in zip(self.basis, self.pivot_columns()):
            if vec[c] != zero:
                f = vec[c]
                vec = [x - f * y for x, y in zip(vec, row)]
        return tuple(vec)

    def contains(self, v: Sequence) -> bool:
        zero = self.field.zero
        return all(x == zero for x in self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def add(self, other: "Subspace") -> "Subspace":
        _check_same_field(self, other)
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("ambient dimension mismatch")
        return Subspace(self.field, self.ambient_dim,
                        list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of [U^T | -V^T]."""
        _check_same_field(self, other)
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("ambient dimension mismatch")
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient_dim)
        k, l = self.dim, other.dim
        stacked = Matrix(self.field, [
            [self.basis[a][i] for a in range(k)] +
            [-other.basis[b][i] for b in range(l)]
            for i in range(self.ambient_dim)
        ])
        sols = nullspace(stacked)
        zero = self.field.zero
        vecs = []
        for s in sols.basis:
            v = [zero] * self.ambient_dim
            for a in range(k):
                if s[a] != zero:
                    v = [x + s[a] * y for x, y in zip(v, self.basis[a])]
            vecs.append(v)
        return Subspace(self.field, self.ambient_dim, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")"
                         for v in self.basis)
        return f"Subspace(dim {self.dim} of {self.ambient_dim}: {vecs})"

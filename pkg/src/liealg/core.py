"""Finite-dimensional Lie algebras given by structure constants.

A ``LieAlgebra`` stores a sparse bracket table c_{ij}^k for i < j only;
antisymmetry is implied by the storage and [x_i, x_i] = 0 structurally.
The Jacobi identity is *not* assumed at construction: it is a property
one checks (``check_jacobi``), because part of the point of this library
is studying tables for which it fails.

All derived computations (Killing form, series, center, quotients,
derivations) reduce to exact linear algebra from ``liealg.linalg``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .fields import FieldMismatchError
from .linalg import Matrix, ShapeError, Subspace, det, nullspace

__all__ = [
    "LieAlgebra",
    "BilinearForm",
    "JacobiWitness",
    "DerivationSpace",
    "NotAnIdealError",
    "form_block_sum",
    "direct_sum",
]


class NotAnIdealError(ValueError):
    """Raised when a quotient is requested by a non-ideal."""


@dataclass(frozen=True)
class JacobiWitness:
    """A basis triple where the Jacobi identity fails, with the defect."""
    i: int
    j: int
    k: int
    defect: tuple


@dataclass(frozen=True)
class DerivationSpace:
    """Derivations of an algebra, flattened row-major into dim^2 space."""
    space: Subspace
    inner_dim: int
    outer_dim: int


class LieAlgebra:
    """An algebra on basis x_0..x_{dim-1} with sparse bracket table."""

    __slots__ = ("field", "dim", "sc", "labels", "grading")

    def __init__(self, field, dim: int,
                 brackets: Mapping[tuple[int, int], object],
                 labels: Sequence[str] | None = None,
                 grading: Sequence[int] | None = None):
        """brackets maps (i, j) with i < j to {k: coeff} or [(k, coeff)]."""
        sc: dict[tuple[int, int], tuple] = {}
        zero = field.zero
        for (i, j), terms in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket key ({i},{j}) must satisfy 0 <= i < j < dim")
            if isinstance(terms, Mapping):
                terms = terms.items()
            clean = []
            for k, c in terms:
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target index {k} out of range")
                c = field(c)
                if c != zero:
                    clean.append((k, c))
            if clean:
                clean.sort()
                sc[(i, j)] = tuple(clean)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError("labels length mismatch")
        if grading is not None:
            grading = tuple(int(g) for g in grading)
            if len(grading) != dim:
                raise ValueError("grading length mismatch")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "sc", sc)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "grading", grading)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra)
                and self.field == other.field and self.dim == other.dim
                and self.sc == other.sc and self.labels == other.labels
                and self.grading == other.grading)

    def __hash__(self):
        return hash((self.field, self.dim, tuple(sorted(self.sc.items()))))

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim} over {self.field}, {len(self.sc)} stored brackets)"

    # -- brackets ----------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> tuple:
        """[x_i, x_j] as a tuple of (k, coeff), antisymmetry applied."""
        if i == j:
            return ()
        if i < j:
            return self.sc.get((i, j), ())
        return tuple((k, -c) for k, c in self.sc.get((j, i), ()))

    def structure_constant(self, i: int, j: int, k: int):
        for l, c in self.bracket_basis(i, j):
            if l == k:
                return c
        return self.field.zero

    def _coerce_vector(self, x: Sequence) -> tuple:
        vec = tuple(self.field(v) for v in x)
        if len(vec) != self.dim:
            raise ShapeError(f"vector of length {len(vec)}, expected {self.dim}")
        return vec

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """[x, y] for coordinate vectors x, y."""
        x = self._coerce_vector(x)
        y = self._coerce_vector(y)
        zero = self.field.zero
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, yj in enumerate(y):
                if yj == zero or i == j:
                    continue
                f = xi * yj
                for k, c in self.bracket_basis(i, j):
                    out[k] = out[k] + f * c
        return tuple(out)

    def basis_vector(self, i: int) -> tuple:
        zero, one = self.field.zero, self.field.one
        return tuple(one if j == i else zero for j in range(self.dim))

    def _bracket_basis_vector(self, i: int, y: Sequence) -> list:
        """[x_i, y] with y a coordinate vector; avoids building x_i."""
        zero = self.field.zero
        out = [zero] * self.dim
        for j, yj in enumerate(y):
            if yj == zero or j == i:
                continue
            for k, c in self.bracket_basis(i, j):
                out[k] = out[k] + yj * c
        return out

    def adjoint(self, x: Sequence) -> Matrix:
        """Matrix of y |-> [x, y]; column j is [x, x_j]."""
        x = self._coerce_vector(x)
        zero = self.field.zero
        cols = []
        for j in range(self.dim):
            col = [zero] * self.dim
            for i, xi in enumerate(x):
                if xi == zero or i == j:
                    continue
                for k, c in self.bracket_basis(i, j):
                    col[k] = col[k] + xi * c
            cols.append(col)
        return Matrix(self.field, zip(*cols)) if cols else Matrix(self.field, [])

    # -- identities --------------------------------------------------------

    def check_jacobi(self) -> JacobiWitness | None:
        """First (lexicographic) basis triple violating Jacobi, if any."""
        zero = self.field.zero
        for i, j, k in itertools.combinations(range(self.dim), 3):
            acc: dict[int, object] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for l, c1 in self.bracket_basis(a, b):
                    for m, c2 in self.bracket_basis(l, c):
                        acc[m] = acc.get(m, zero) + c1 * c2
            if any(v != zero for v in acc.values()):
                defect = [zero] * self.dim
                for m, v in acc.items():
                    defect[m] = v
                return JacobiWitness(i, j, k, tuple(defect))
        return None

    def is_abelian(self) -> bool:
        return not self.sc

    def killing_form(self) -> "BilinearForm":
        """K(x_i, x_j) = trace(ad x_i . ad x_j)."""
        zero = self.field.zero
        # adjacency per generator: ad[i][l] = [x_i, x_l] term list
        ad = [[self.bracket_basis(i, l) for l in range(self.dim)]
              for i in range(self.dim)]
        grid = [[zero] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(i, self.dim):
                t = zero
                for l in range(self.dim):
                    for k, c2 in ad[j][l]:
                        for m, c1 in ad[i][k]:
                            if m == l:
                                t = t + c1 * c2
                grid[i][j] = t
                grid[j][i] = t
        return BilinearForm(Matrix(self.field, grid))

    # -- subspaces and series ------------------------------------------------

    def _bracket_span(self, s: Subspace, t: Subspace) -> Subspace:
        vecs = [self.bracket(u, v) for u in s.basis for v in t.basis]
        return Subspace(self.field, self.dim, vecs)

    def derived_series(self) -> list[Subspace]:
        """D0 = L, D_{k+1} = [D_k, D_k], listed until stable."""
        series = [Subspace.full(self.field, self.dim)]
        while True:
            nxt = self._bracket_span(series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def lower_central_series(self) -> list[Subspace]:
        """C0 = L, C_{k+1} = [L, C_k], listed until stable."""
        full = Subspace.full(self.field, self.dim)
        series = [full]
        while True:
            nxt = self._bracket_span(full, series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].is_zero()

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero()

    def center(self) -> Subspace:
        """{x : [x, y] = 0 for all y}, via stacked adjoint equations."""
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append([self.structure_constant(i, j, k)
                             for i in range(self.dim)])
        if not rows:
            return Subspace.full(self.field, self.dim)
        return nullspace(Matrix(self.field, rows))

    def is_ideal(self, s: Subspace) -> bool:
        self._check_subspace(s)
        return all(s.contains(self._bracket_basis_vector(i, v))
                   for i in range(self.dim) for v in s.basis)

    def is_subalgebra(self, s: Subspace) -> bool:
        self._check_subspace(s)
        return all(s.contains(self.bracket(u, v))
                   for u in s.basis for v in s.basis)

    def _check_subspace(self, s: Subspace):
        if s.ambient_dim != self.dim:
            raise ShapeError("subspace ambient dimension mismatch")
        if s.field != self.field:
            raise FieldMismatchError("subspace over a different field")

    def quotient(self, j: Subspace) -> "LieAlgebra":
        """Quotient by an ideal, on the non-pivot coordinates of its basis."""
        if not self.is_ideal(j):
            raise NotAnIdealError("quotient requires an ideal")
        pivots = set(j.pivot_columns())
        kept = [c for c in range(self.dim) if c not in pivots]
        pos = {c: a for a, c in enumerate(kept)}
        zero = self.field.zero
        brackets = {}
        for a, ca in enumerate(kept):
            for b in range(a + 1, len(kept)):
                w = [zero] * self.dim
                for k, c in self.bracket_basis(ca, kept[b]):
                    w[k] = c
                red = j.reduce(w)
                terms = [(pos[c], red[c]) for c in kept if red[c] != zero]
                if terms:
                    brackets[(a, b)] = terms
        labels = tuple(self.labels[c] for c in kept) if self.labels else None
        grading = None
        if self.grading is not None and all(
                sum(1 for x in row if x != zero) == 1 for row in j.basis):
            grading = tuple(self.grading[c] for c in kept)
        return LieAlgebra(self.field, len(kept), brackets,
                          labels=labels, grading=grading)

    # -- maps ---------------------------------------------------------------

    def is_automorphism(self, phi: Matrix) -> bool:
        """phi invertible with phi[x,y] = [phi x, phi y] on basis pairs.

        Columns of phi are the images of the basis vectors.
        """
        if phi.field != self.field:
            raise FieldMismatchError("map over a different field")
        if not (phi.is_square() and phi.nrows == self.dim):
            raise ShapeError("map dimension mismatch")
        if det(phi) == self.field.zero:
            return False
        cols = [phi.col(j) for j in range(self.dim)]
        zero = self.field.zero
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = [zero] * self.dim
                for k, c in self.bracket_basis(i, j):
                    w[k] = c
                if phi * tuple(w) != self.bracket(cols[i], cols[j]):
                    return False
        return True

    def derivation_space(self) -> DerivationSpace:
        """Solve D[x_i,x_j] = [Dx_i,x_j] + [x_i,Dx_j] over all i < j.

        Unknowns are the dim^2 entries of D flattened row-major; equation
        rows are assembled over ordered pairs i < j, output index k
        ascending, which fixes the layout of the returned basis.
        """
        d = self.dim
        zero = self.field.zero
        rows = []
        for i in range(d):
            for j in range(i + 1, d):
                eq = [[zero] * (d * d) for _ in range(d)]
                for l, c in self.bracket_basis(i, j):
                    for k in range(d):
                        eq[k][k * d + l] = eq[k][k * d + l] + c
                for r in range(d):
                    for k, c in self.bracket_basis(r, j):
                        eq[k][r * d + i] = eq[k][r * d + i] - c
                    for k, c in self.bracket_basis(i, r):
                        eq[k][r * d + j] = eq[k][r * d + j] - c
                rows.extend(eq)
        if not rows:
            space = Subspace.full(self.field, d * d)
        else:
            space = nullspace(Matrix(self.field, rows))
        inner = d - self.center().dim
        return DerivationSpace(space, inner, space.dim - inner)

    def check_grading(self, degrees: Sequence[int]) -> bool:
        return self.grading_witness(degrees) is None

    def grading_witness(self, degrees: Sequence[int]) -> tuple[int, int, int] | None:
        """First (i, j, k) with c_{ij}^k != 0 but deg_k != deg_i + deg_j."""
        degrees = list(degrees)
        if len(degrees) != self.dim:
            raise ShapeError("degrees length mismatch")
        for (i, j), terms in sorted(self.sc.items()):
            for k, _ in terms:
                if degrees[k] != degrees[i] + degrees[j]:
                    return (i, j, k)
        return None


class BilinearForm:
    """A symmetric bilinear form on basis coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if not matrix.is_symmetric():
            raise ValueError("bilinear form matrix must be symmetric")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearForm is immutable")

    @classmethod
    def from_entries(cls, field, grid: Iterable[Sequence]) -> "BilinearForm":
        return cls(Matrix(field, grid))

    @classmethod
    def zero(cls, field, dim: int) -> "BilinearForm":
        return cls(Matrix.zeros(field, dim, dim))

    @property
    def field(self):
        return self.matrix.field

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def entry(self, i: int, j: int):
        return self.matrix.entry(i, j)

    def value(self, x: Sequence, y: Sequence):
        x = [self.field(v) for v in x]
        y = [self.field(v) for v in y]
        t = self.field.zero
        for i, xi in enumerate(x):
            if xi == self.field.zero:
                continue
            for j, yj in enumerate(y):
                g = self.matrix.entry(i, j)
                if yj != self.field.zero and g != self.field.zero:
                    t = t + xi * g * yj
        return t

    def det(self):
        return det(self.matrix)

    def is_nondegenerate(self) -> bool:
        return self.det() != self.field.zero

    def scale(self, c) -> "BilinearForm":
        return BilinearForm(self.matrix.scale(c))

    def add(self, other: "BilinearForm") -> "BilinearForm":
        return BilinearForm(self.matrix + other.matrix)

    def restrict(self, s: Subspace) -> Matrix:
        """Gram matrix of the form on the subspace basis."""
        u = s.basis_matrix()
        return u * self.matrix * u.transpose()

    def invariance_witness(self, alg: LieAlgebra) -> tuple[int, int, int] | None:
        """First basis triple (k, i, j) violating B([x_k,x_i],x_j) + B(x_i,[x_k,x_j]) = 0."""
        if alg.dim != self.dim:
            raise ShapeError("form/algebra dimension mismatch")
        zero = self.field.zero
        for k in range(alg.dim):
            for i in range(alg.dim):
                for j in range(i, alg.dim):
                    t = zero
                    for l, c in alg.bracket_basis(k, i):
                        g = self.matrix.entry(l, j)
                        if g != zero:
                            t = t + c * g
                    for l, c in alg.bracket_basis(k, j):
                        g = self.matrix.entry(i, l)
                        if g != zero:
                            t = t + c * g
                    if t != zero:
                        return (k, i, j)
        return None

    def is_invariant(self, alg: LieAlgebra) -> bool:
        return self.invariance_witness(alg) is None

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"BilinearForm({self.matrix!r})"


def form_block_sum(b1: BilinearForm, b2: BilinearForm) -> BilinearForm:
    """Orthogonal (block-diagonal) sum of two forms."""
    _require_same_field(b1.field, b2.field)
    n1, n2 = b1.dim, b2.dim
    zero = b1.field.zero
    grid = [[zero] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            grid[i][j] = b1.entry(i, j)
    for i in range(n2):
        for j in range(n2):
            grid[n1 + i][n1 + j] = b2.entry(i, j)
    return BilinearForm(Matrix(b1.field, grid))


def _require_same_field(f1, f2):
    if f1 != f2:
        raise FieldMismatchError(f"field mismatch: {f1} vs {f2}")


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Direct sum of Lie algebras (blocks bracket independently)."""
    _require_same_field(a.field, b.field)
    brackets = {}
    for (i, j), terms in a.sc.items():
        brackets[(i, j)] = terms
    off = a.dim
    for (i, j), terms in b.sc.items():
        brackets[(i + off, j + off)] = [(k + off, c) for k, c in terms]
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(a.labels) + tuple(b.labels)
    grading = None
    if a.grading is not None and b.grading is not None:
        grading = tuple(a.grading) + tuple(b.grading)
    return LieAlgebra(a.field, a.dim + b.dim, brackets,
                      labels=labels, grading=grading)

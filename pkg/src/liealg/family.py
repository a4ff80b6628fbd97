"""The solvable graded family built from a hat map.

The family member of size n + 1 lives on basis T_0..T_n with bracket

    [T_i, T_j] = hat(i - j) T_{i+j}   if i + j <= n,  else 0.

With the balanced mod-3 hat this is a solvable algebra carrying the
grading deg(T_i) = i, a canonical invariant metric supported on the
reversed diagonal (plus an optional corner term), a completely
understood coordinate-ideal lattice (suffix ideals plus "skip" ideals),
and a shift automorphism T_i -> -T_{i + hat(i)}.  Other hat maps (the
identity map gives truncated Witt tables, ``ZModHat`` gives prime-field
variants) reuse the same constructor.

Everything here is exact; solvers return canonical objects from
``liealg.linalg`` so results compare bit-identically in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import BilinearForm, LieAlgebra
from .fields import QQ
from .hats import MOD3_BALANCED, BalancedMod3
from .linalg import Matrix, Subspace, nullspace

__all__ = [
    "truncated_algebra",
    "suffix_subspace",
    "skip_subspace",
    "canonical_metric",
    "DiagonalMetricResult",
    "single_diagonal_metric_solve",
    "enumerate_coordinate_ideals",
    "IdealClassification",
    "classify_ideals",
    "ClassificationMismatchError",
    "hat_shift_automorphism",
    "DEFAULT_BRUTE_CAP",
]

#: Default ceiling on brute-force subset enumeration (2^16 subsets).
DEFAULT_BRUTE_CAP = 1 << 16


def truncated_algebra(n: int, hat=MOD3_BALANCED, field=None) -> LieAlgebra:
    """Family member on T_0..T_n for the given hat map.

    The bracket table is always constructed; whether it satisfies the
    Jacobi identity is a property of the hat map and is checked
    separately (``LieAlgebra.check_jacobi`` / ``jacobi_hat_scan``).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if field is None:
        field = hat.default_field()
    brackets = {}
    for i in range(n + 1):
        for j in range(i + 1, n + 1 - i):
            c = field(hat.value(i - j))
            if c != field.zero:
                brackets[(i, j)] = [(i + j, c)]
    return LieAlgebra(field, n + 1, brackets,
                      labels=tuple(f"T{i}" for i in range(n + 1)),
                      grading=tuple(range(n + 1)))


def suffix_subspace(n: int, m: int, field=QQ) -> Subspace:
    """span{T_m..T_n} inside the (n+1)-dimensional member; m = n+1 is zero."""
    if not 0 <= m <= n + 1:
        raise ValueError(f"suffix start {m} out of range 0..{n + 1}")
    return Subspace.coordinate(field, n + 1, range(m, n + 1))


def skip_subspace(n: int, m: int, field=QQ) -> Subspace:
    """span{T_{m-2}} + span{T_m..T_n}; an ideal exactly when hat(m) = 0.

    m = n + 1 is allowed and gives the lone line span{T_{n-1}} (empty
    suffix part), which is an ideal exactly when hat(n + 1) = 0.
    """
    if not 2 <= m <= n + 1:
        raise ValueError(f"skip parameter {m} out of range 2..{n + 1}")
    return Subspace.coordinate(field, n + 1, [m - 2, *range(m, n + 1)])


def canonical_metric(n: int, b=0, field=QQ) -> BilinearForm:
    """(T_i, T_j) = [i + j = n] + b [i = 0][j = 0].

    Always constructible; it is an invariant metric exactly when
    hat(n) = 0, which downstream checks verify rather than assume.
    """
    zero, one = field.zero, field.one
    grid = [[one if i + j == n else zero for j in range(n + 1)]
            for i in range(n + 1)]
    grid[0][0] = grid[0][0] + field(b)
    return BilinearForm(Matrix(field, grid))


@dataclass(frozen=True)
class DiagonalMetricResult:
    """Outcome of the single-diagonal metric solve."""
    n: int
    exists: bool
    weights: tuple | None

    def form(self, field=QQ) -> BilinearForm:
        if not self.exists:
            raise ValueError("no single-diagonal invariant metric exists")
        n = self.n
        zero = field.zero
        grid = [[self.weights[j] if i + j == n else zero
                 for j in range(n + 1)] for i in range(n + 1)]
        return BilinearForm(Matrix(field, grid))


def single_diagonal_metric_solve(n: int, hat=MOD3_BALANCED) -> DiagonalMetricResult:
    """Decide whether an invariant metric supported on i + j = n exists.

    The ansatz (T_i, T_j) = w_j [i + j = n] is symmetric iff w_i = w_{n-i},
    and ad-invariance reduces to

        hat(k - i) w_j + hat(k - j) w_{n-i} = 0   for all i + j + k = n.

    The solver assembles exactly this linear system and asks for a
    solution with every weight nonzero (anything less is degenerate on
    the diagonal).  Returned weights are normalized to w_0 = 1.
    """
    field = hat.default_field()
    zero, one = field.zero, field.one
    rows = set()
    for i in range(n + 1):
        # symmetry of the ansatz
        if i < n - i:
            row = [zero] * (n + 1)
            row[i] = one
            row[n - i] = -one
            rows.add(tuple(row))
        for j in range(n + 1 - i):
            k = n - i - j
            a = field(hat.value(k - i))
            b = field(hat.value(k - j))
            if a == zero and b == zero:
                continue
            row = [zero] * (n + 1)
            row[j] = row[j] + a
            row[n - i] = row[n - i] + b
            if any(x != zero for x in row):
                rows.add(tuple(row))
    if rows:
        space = nullspace(Matrix(field, sorted(rows, key=str)))
    else:
        space = Subspace.full(field, n + 1)
    weights = _all_nonzero_element(space, field)
    if weights is None:
        return DiagonalMetricResult(n, False, None)
    w0 = weights[0]
    return DiagonalMetricResult(n, True, tuple(w / w0 for w in weights))


def _all_nonzero_element(space: Subspace, field):
    """A vector in the space with every coordinate nonzero, or None.

    Coordinates are linear functionals on the space, so if none of them
    vanishes identically a combination sum(t^a basis_a) avoids all of
    them for some small t (each coordinate is a nonzero polynomial of
    degree < dim in t).  Over Q the scan below is therefore complete.
    """
    zero = field.zero
    if space.dim == 0:
        return None
    cols = list(zip(*space.basis))
    if any(all(x == zero for x in col) for col in cols):
        return None
    for v in space.basis:
        if all(x != zero for x in v):
            return v
    bound = (space.dim - 1) * space.ambient_dim + 1
    if getattr(field, "characteristic", 0):
        bound = min(bound, field.characteristic - 1)
    for t in range(1, bound + 1):
        tt = field(t)
        v = space.basis[0]
        power = field.one
        acc = list(v)
        for w in space.basis[1:]:
            power = power * tt
            acc = [x + power * y for x, y in zip(acc, w)]
        if all(x != zero for x in acc):
            return tuple(acc)
    return None


def enumerate_coordinate_ideals(alg: LieAlgebra,
                                max_subsets: int = DEFAULT_BRUTE_CAP) -> list[Subspace]:
    """All coordinate subspaces that are ideals, by brute force.

    Subsets are encoded as bitmasks and a subset C is an ideal iff the
    support of [T_i, T_j] lands inside C for every j in C and every i.
    Results are sorted by dimension, then lexicographically on the
    index tuple.
    """
    d = alg.dim
    if 1 << d > max_subsets:
        raise ValueError(
            f"2^{d} subsets exceed the enumeration cap {max_subsets}")
    incident: list[list[int]] = [[] for _ in range(d)]
    for (i, j), terms in alg.sc.items():
        mask = 0
        for k, _ in terms:
            mask |= 1 << k
        incident[i].append(mask)
        incident[j].append(mask)
    found = []
    for c in range(1 << d):
        ok = True
        rest = c
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            for mask in incident[j]:
                if mask & ~c:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(c)
    subsets = [tuple(i for i in range(d) if c >> i & 1) for c in found]
    subsets.sort(key=lambda s: (len(s), s))
    return [Subspace.coordinate(alg.field, d, s) for s in subsets]


class ClassificationMismatchError(RuntimeError):
    """Closed-form ideal list disagreed with the brute-force scan."""


@dataclass(frozen=True)
class IdealClassification:
    """Coordinate ideals of a family member, in closed form.

    suffix_ideals lists every m with span{T_m..T_n} an ideal (always
    all of 0..n+1); skip_ideals lists the m with hat(m) = 0 whose
    span{T_{m-2}} + span{T_m..T_n} is an ideal; other collects any
    brute-force findings outside the two patterns (expected empty).
    """
    n: int
    suffix_ideals: tuple[int, ...]
    skip_ideals: tuple[int, ...]
    other: tuple[Subspace, ...]

    def subspaces(self, field=QQ) -> list[Subspace]:
        out = [suffix_subspace(self.n, m, field) for m in self.suffix_ideals]
        out += [skip_subspace(self.n, m, field) for m in self.skip_ideals]
        out += list(self.other)
        return out


def classify_ideals(n: int, hat=MOD3_BALANCED, cross_check: bool = True,
                    max_subsets: int = DEFAULT_BRUTE_CAP) -> IdealClassification:
    """Closed-form coordinate-ideal list, cross-checked by brute force.

    The closed form holds for the balanced mod-3 hat (and any hat with
    the same zero pattern): suffix spans for every m, plus a skip ideal
    for each m in 2..n+1 with hat(m) = 0, where m = n+1 contributes the
    degenerate skip span{T_{n-1}} (only when hat(n+1) = 0, i.e. for
    n = 2 mod 3).  When the member is small enough the list is verified
    against ``enumerate_coordinate_ideals`` and a mismatch raises
    ``ClassificationMismatchError``.
    """
    suffix = tuple(range(0, n + 2))
    skip = tuple(m for m in range(2, n + 2) if hat.value(m) == 0)
    result = IdealClassification(n, suffix, skip, ())
    if cross_check and (1 << (n + 1)) <= max_subsets:
        field = hat.default_field()
        alg = truncated_algebra(n, hat, field)
        brute = enumerate_coordinate_ideals(alg, max_subsets)
        claimed = result.subspaces(field)
        if set(brute) != set(claimed) or len(claimed) != len(set(claimed)):
            raise ClassificationMismatchError(
                f"classification mismatch at n={n}: brute force found "
                f"{len(brute)} ideals, closed form lists {len(claimed)}")
    return result


def hat_shift_automorphism(n: int, field=QQ) -> Matrix | None:
    """The map T_i -> -T_{i + hat(i)} when defined, as a column matrix.

    For hat(n) = 1 the image of T_n would leave the algebra, so there
    is no such map and None is returned.
    """
    hat = BalancedMod3()
    if hat.value(n) == 1:
        return None
    zero, one = field.zero, field.one
    grid = [[zero] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        grid[i + hat.value(i)][i] = -one
    return Matrix(field, grid)

"""Brackets, Jacobi witnesses, series, quotients, derivations, gradings."""

import random
from fractions import Fraction

import pytest

from liealg.core import BilinearForm, LieAlgebra, NotAnIdealError, direct_sum
from liealg.family import canonical_metric, suffix_subspace, truncated_algebra
from liealg.fields import PrimeField, QQ
from liealg.linalg import Matrix, Subspace


def heisenberg():
    # [x, y] = z
    return LieAlgebra(QQ, 3, {(0, 1): [(2, 1)]})


def so21():
    # [J0,K1]=K2, [K1,K2]=-J0, [K2,J0]=K1
    return LieAlgebra(QQ, 3, {(0, 1): [(2, 1)],
                              (1, 2): [(0, -1)],
                              (0, 2): [(1, -1)]})


def two_dim_nonabelian():
    # [R0, R1] = R1
    return LieAlgebra(QQ, 2, {(0, 1): [(1, 1)]})


def test_construction_validation():
    with pytest.raises(ValueError):
        LieAlgebra(QQ, 2, {(1, 0): [(0, 1)]})  # needs i < j
    with pytest.raises(ValueError):
        LieAlgebra(QQ, 2, {(0, 1): [(2, 1)]})  # target out of range
    with pytest.raises(ValueError):
        LieAlgebra(QQ, 2, {(0, 1): [(1, 1)]}, labels=("a",))
    # zero coefficients are dropped from storage
    alg = LieAlgebra(QQ, 2, {(0, 1): [(0, 0), (1, 0)]})
    assert alg.is_abelian()


def test_bracket_family_pins():
    a3 = truncated_algebra(3)
    t = a3.basis_vector
    assert a3.bracket(t(0), t(1)) == (0, -1, 0, 0)
    assert a3.bracket(t(1), t(1)) == (0, 0, 0, 0)
    assert a3.bracket(t(1), t(2)) == (0, 0, 0, -1)
    assert a3.bracket(t(1), t(0)) == (0, 1, 0, 0)


def test_bracket_bilinear():
    rng = random.Random(5)
    alg = truncated_algebra(5)
    for _ in range(20):
        x = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        y = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        z = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        a = Fraction(rng.randint(-3, 3))
        left = alg.bracket([a * xi + yi for xi, yi in zip(x, y)], z)
        split = tuple(a * u + v for u, v in
                      zip(alg.bracket(x, z), alg.bracket(y, z)))
        assert left == split
        assert alg.bracket(x, y) == tuple(-v for v in alg.bracket(y, x))


def test_antisymmetry_of_stored_tensor():
    for alg in (truncated_algebra(6), so21(), heisenberg()):
        d = alg.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    assert alg.structure_constant(i, j, k) == \
                        -alg.structure_constant(j, i, k)


def test_check_jacobi_clean_cases():
    assert truncated_algebra(8).check_jacobi() is None
    assert so21().check_jacobi() is None
    assert heisenberg().check_jacobi() is None
    assert LieAlgebra(QQ, 4, {}).check_jacobi() is None


def test_check_jacobi_first_witness_is_lexicographic():
    # flip one coefficient of the 5-element member to break Jacobi
    base = truncated_algebra(4)
    brackets = {key: list(terms) for key, terms in base.sc.items()}
    brackets[(0, 1)] = [(1, 1)]  # was -1
    broken = LieAlgebra(QQ, 5, brackets)
    witness = broken.check_jacobi()
    assert witness is not None

    def defect(i, j, k):
        acc = [QQ.zero] * 5
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            w = broken.bracket(broken.basis_vector(a), broken.basis_vector(b))
            for m, v in enumerate(broken.bracket(w, broken.basis_vector(c))):
                acc[m] += v
        return tuple(acc)

    zero = tuple([QQ.zero] * 5)
    first = None
    for i in range(5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                if defect(i, j, k) != zero and first is None:
                    first = (i, j, k)
    assert (witness.i, witness.j, witness.k) == first
    assert witness.defect == defect(*first)


def test_adjoint_pins():
    a3 = truncated_algebra(3)
    ad0 = a3.adjoint(a3.basis_vector(0))
    expected = Matrix(QQ, [[0, 0, 0, 0], [0, -1, 0, 0],
                           [0, 0, 1, 0], [0, 0, 0, 0]])
    assert ad0 == expected
    assert a3.adjoint(a3.basis_vector(3)).is_zero()
    assert a3.adjoint((0, 0, 0, 0)).is_zero()


def test_adjoint_is_bracket():
    rng = random.Random(41)
    alg = so21()
    for _ in range(10):
        x = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        y = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        assert alg.adjoint(x) * tuple(y) == alg.bracket(x, y)


def test_killing_form_values():
    k3 = truncated_algebra(3).killing_form()
    assert k3.entry(0, 0) == 2
    assert all(k3.entry(i, j) == 0 for i in range(4) for j in range(4)
               if (i, j) != (0, 0))
    k6 = truncated_algebra(6).killing_form()
    assert k6.entry(0, 0) == 4
    assert all(k6.entry(i, j) == 0 for i in range(7) for j in range(7)
               if (i, j) != (0, 0))
    assert LieAlgebra(QQ, 3, {}).killing_form().matrix.is_zero()


def test_killing_form_matches_trace_oracle():
    """Recompute K(x_i, x_j) = tr(ad_i ad_j) with dense matrix products."""
    for alg in (truncated_algebra(5), so21(), two_dim_nonabelian()):
        k = alg.killing_form()
        ads = [alg.adjoint(alg.basis_vector(i)) for i in range(alg.dim)]
        for i in range(alg.dim):
            for j in range(alg.dim):
                assert k.entry(i, j) == (ads[i] * ads[j]).trace()


def test_killing_form_invariant_when_jacobi_holds():
    for alg in (truncated_algebra(6), so21(), heisenberg()):
        assert alg.check_jacobi() is None
        assert alg.killing_form().invariance_witness(alg) is None


def test_series_dims():
    a3 = truncated_algebra(3)
    assert [s.dim for s in a3.derived_series()] == [4, 3, 1, 0]
    assert a3.is_solvable()
    assert not a3.is_nilpotent()
    lower = a3.lower_central_series()
    assert lower[-1].dim > 0
    ab = LieAlgebra(QQ, 4, {})
    assert [s.dim for s in ab.derived_series()] == [4, 0]
    h = heisenberg()
    assert [s.dim for s in h.derived_series()] == [3, 1, 0]
    assert h.is_nilpotent()
    assert not so21().is_solvable()


def test_family_never_nilpotent():
    for n in range(1, 10):
        assert not truncated_algebra(n).is_nilpotent()
        assert truncated_algebra(n).is_solvable()


def test_center():
    a3 = truncated_algebra(3)
    assert a3.center() == Subspace.coordinate(QQ, 4, [3])
    a6 = truncated_algebra(6)
    assert a6.center() == Subspace.coordinate(QQ, 7, [6])
    ab = LieAlgebra(QQ, 3, {})
    assert ab.center().dim == 3
    assert so21().center().dim == 0


def test_is_ideal_and_subalgebra():
    a6 = truncated_algebra(6)
    for m in range(0, 8):
        assert a6.is_ideal(suffix_subspace(6, m))
    skip6 = Subspace.coordinate(QQ, 7, [4, 6])
    assert a6.is_ideal(skip6)
    assert not a6.is_ideal(Subspace.coordinate(QQ, 7, [5]))
    assert a6.is_subalgebra(Subspace.coordinate(QQ, 7, [0]))
    assert not so21().is_subalgebra(Subspace.coordinate(QQ, 3, [1, 2]))


def test_quotient_truncates_the_family():
    a10 = truncated_algebra(10)
    q = a10.quotient(suffix_subspace(10, 4))
    assert q.dim == 4
    assert q.sc == truncated_algebra(3).sc
    a6 = truncated_algebra(6)
    q2 = a6.quotient(suffix_subspace(6, 3))
    assert q2.sc == truncated_algebra(2).sc
    q3 = a6.quotient(Subspace.zero(QQ, 7))
    assert q3.sc == a6.sc


def test_quotient_respects_brackets():
    """pi[x, y] = [pi x, pi y] for the canonical projection."""
    rng = random.Random(43)
    alg = truncated_algebra(6)
    j = suffix_subspace(6, 4)
    q = alg.quotient(j)
    kept = [c for c in range(7) if c not in j.pivot_columns()]

    def project(v):
        red = j.reduce(v)
        return tuple(red[c] for c in kept)

    for _ in range(15):
        x = [Fraction(rng.randint(-2, 2)) for _ in range(7)]
        y = [Fraction(rng.randint(-2, 2)) for _ in range(7)]
        assert project(alg.bracket(x, y)) == q.bracket(project(x), project(y))


def test_quotient_requires_ideal():
    a3 = truncated_algebra(3)
    with pytest.raises(NotAnIdealError):
        a3.quotient(Subspace.coordinate(QQ, 4, [0]))


def test_is_automorphism():
    a3 = truncated_algebra(3)
    assert a3.is_automorphism(Matrix.identity(QQ, 4))
    bad = Matrix(QQ, [[1, 0, 0, 0], [0, 2, 0, 0],
                      [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not a3.is_automorphism(bad)
    singular = Matrix.zeros(QQ, 4, 4)
    assert not a3.is_automorphism(singular)


def test_charge_scaling_is_automorphism():
    """T_i -> t^i T_i respects the grading, hence every bracket."""
    for n in (3, 6):
        alg = truncated_algebra(n)
        t = Fraction(5, 3)
        phi = Matrix(QQ, [[t ** i if i == j else 0 for j in range(n + 1)]
                          for i in range(n + 1)])
        assert alg.is_automorphism(phi)


def test_derivation_space_dims():
    a3 = truncated_algebra(3)
    dspace = a3.derivation_space()
    assert dspace.space.dim == 5
    assert dspace.inner_dim == 3
    assert dspace.outer_dim == 2
    ab = LieAlgebra(QQ, 3, {})
    dab = ab.derivation_space()
    assert dab.space.dim == 9 and dab.inner_dim == 0
    r2 = two_dim_nonabelian()
    assert r2.derivation_space().inner_dim == 2


def test_derivation_members_satisfy_leibniz():
    alg = truncated_algebra(3)
    for flat in alg.derivation_space().space.basis:
        dmat = Matrix(QQ, [flat[r * 4:(r + 1) * 4] for r in range(4)])
        for i in range(4):
            for j in range(4):
                xi, xj = alg.basis_vector(i), alg.basis_vector(j)
                lhs = dmat * alg.bracket(xi, xj)
                rhs = tuple(a + b for a, b in zip(
                    alg.bracket(dmat * xi, xj), alg.bracket(xi, dmat * xj)))
                assert lhs == rhs


def test_derivation_dim_against_float_rank():
    """Assemble the Leibniz system independently; compare numpy nullity."""
    numpy = pytest.importorskip("numpy")
    for alg in (truncated_algebra(3), truncated_algebra(4), so21()):
        d = alg.dim
        rows = []
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    # D[x_i,x_j]_k = sum_l c_{ij}^l D_{kl}
                    row = [0.0] * (d * d)
                    for l in range(d):
                        c = alg.structure_constant(i, j, l)
                        if c != 0:
                            row[k * d + l] += float(c)
                    # [Dx_i, x_j]_k = sum_r D_{ri} c_{rj}^k
                    for r in range(d):
                        c = alg.structure_constant(r, j, k)
                        if c != 0:
                            row[r * d + i] -= float(c)
                        c2 = alg.structure_constant(i, r, k)
                        if c2 != 0:
                            row[r * d + j] -= float(c2)
                    rows.append(row)
        system = numpy.array(rows)
        nullity = d * d - numpy.linalg.matrix_rank(system)
        assert alg.derivation_space().space.dim == nullity


def test_check_grading():
    for n in (3, 6):
        alg = truncated_algebra(n)
        assert alg.check_grading(list(range(n + 1)))
    a3 = truncated_algebra(3)
    # (0,1,1,2) is additive on every stored bracket of the 4-dim member
    assert a3.check_grading((0, 1, 1, 2))
    assert a3.grading_witness((0, 1, 1, 3)) == (1, 2, 3)
    assert LieAlgebra(QQ, 2, {}).check_grading((0, 0))


def test_direct_sum():
    a = so21()
    b = heisenberg()
    s = direct_sum(a, b)
    assert s.dim == 6
    assert s.check_jacobi() is None
    assert [x.dim for x in s.derived_series()] == [6, 4, 3]
    # blocks do not talk to each other
    left = s.bracket(s.basis_vector(0), s.basis_vector(4))
    assert left == tuple([QQ.zero] * 6)


def test_bilinear_form_invariance_witness_order():
    a3 = truncated_algebra(3)
    good = canonical_metric(3)
    assert good.invariance_witness(a3) is None
    broken = BilinearForm(Matrix.identity(QQ, 4))
    w = broken.invariance_witness(a3)
    assert w is not None
    k, i, j = w
    # the reported triple really violates Eq-style invariance
    xk, xi, xj = (a3.basis_vector(t) for t in (k, i, j))
    val = broken.value(a3.bracket(xk, xi), xj) + \
        broken.value(xi, a3.bracket(xk, xj))
    assert val != 0


def test_prime_field_algebra():
    f3 = PrimeField(3)
    alg = truncated_algebra(3, field=f3)
    assert alg.check_jacobi() is None
    assert alg.center().dim == 1
    # the top generator of the 5-element member is not central: w(-4) = -1
    assert truncated_algebra(4, field=f3).center().dim == 0
    assert truncated_algebra(4).center().dim == 0

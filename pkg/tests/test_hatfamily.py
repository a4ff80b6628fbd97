"""Hat maps, family members, the diagonal-metric solver, ideal classification."""

import pytest

from liealg.family import (
    ClassificationMismatchError,
    canonical_metric,
    classify_ideals,
    enumerate_coordinate_ideals,
    hat_shift_automorphism,
    single_diagonal_metric_solve,
    skip_subspace,
    suffix_subspace,
    truncated_algebra,
)
from liealg.fields import PrimeField, QQ
from liealg.hats import (
    IDENTITY_HAT,
    MOD3_BALANCED,
    RangeHat,
    ZModHat,
    hat_properties,
    jacobi_hat_scan,
)
from liealg.linalg import Subspace, det


def test_hat_values():
    assert MOD3_BALANCED.value(-2) == 1
    assert MOD3_BALANCED.value(2) == -1
    assert MOD3_BALANCED.value(3) == 0
    assert [MOD3_BALANCED.value(i) for i in range(-3, 4)] == \
        [0, 1, -1, 0, 1, -1, 0]
    assert IDENTITY_HAT.value(7) == 7
    assert RangeHat(2, (0, 1)).value(-1) == 1
    assert ZModHat(4).value(-1) == 3


def test_balanced_values_stay_balanced():
    for i in range(-50, 51):
        v = MOD3_BALANCED.value(i)
        assert v in (-1, 0, 1)
        assert (v - i) % 3 == 0


def test_range_hat_requires_complete_residues():
    RangeHat(3, (0, 1, 2))
    RangeHat(3, (-1, 0, 1))
    with pytest.raises(ValueError):
        RangeHat(2, (0, 2))  # both even
    with pytest.raises(ValueError):
        RangeHat(3, (0, 1))  # incomplete


def test_composite_modulus_has_no_field():
    with pytest.raises(ValueError):
        ZModHat(6).default_field()
    assert ZModHat(5).default_field() == PrimeField(5)


def test_hat_properties_balanced():
    report = hat_properties(MOD3_BALANCED, range(-20, 21))
    assert report.multiplicative and report.add1 and report.add2
    # addition is only "almost" preserved: hat(1) + hat(1) != hat(2)
    assert MOD3_BALANCED.value(1) + MOD3_BALANCED.value(1) != \
        MOD3_BALANCED.value(2)


def test_hat_properties_identity():
    report = hat_properties(IDENTITY_HAT, range(-12, 13))
    assert report.multiplicative and report.add1 and report.add2


def test_hat_properties_mod2_range():
    report = hat_properties(RangeHat(2, (0, 1)), range(0, 13))
    assert report.multiplicative
    assert report.add2
    assert not report.add1


def test_jacobi_hat_scan_clean():
    assert jacobi_hat_scan(MOD3_BALANCED, range(0, 31)) is None
    assert jacobi_hat_scan(MOD3_BALANCED, range(-15, 16)) is None
    assert jacobi_hat_scan(IDENTITY_HAT, range(0, 31)) is None


def test_jacobi_hat_scan_mod2_witness():
    w = jacobi_hat_scan(RangeHat(2, (0, 1)), range(0, 13))
    assert w is not None
    assert (w.i, w.j, w.k) == (1, 0, 0)
    assert w.hat_values == (1, 0, 1)


def test_jacobi_hat_scan_composite_modulus_runs():
    # natural reductions are ring maps, so the identity holds mod p
    # for every modulus, field or not
    assert jacobi_hat_scan(ZModHat(4), range(0, 9)) is None
    # lifting the residues back to Z breaks it
    assert jacobi_hat_scan(RangeHat(4, (0, 1, 2, 3)), range(0, 9)) is not None


def test_truncated_algebra_tables():
    a3 = truncated_algebra(3)
    assert a3.dim == 4
    assert a3.sc == {(0, 1): ((1, QQ(-1)),),
                     (0, 2): ((2, QQ(1)),),
                     (1, 2): ((3, QQ(-1)),)}
    assert a3.labels == ("T0", "T1", "T2", "T3")
    assert a3.grading == (0, 1, 2, 3)
    a0 = truncated_algebra(0)
    assert a0.dim == 1 and a0.is_abelian()


def test_truncated_witt_table():
    witt = truncated_algebra(6, IDENTITY_HAT)
    for i in range(7):
        for j in range(7):
            for k in range(7):
                expected = (i - j) if (k == i + j and i + j <= 6 and i != j) else 0
                assert witt.structure_constant(i, j, k) == expected


def test_family_grading():
    for n in (3, 6, 9):
        assert truncated_algebra(n).check_grading(list(range(n + 1)))


def test_suffix_subspace():
    assert suffix_subspace(6, 3) == Subspace.coordinate(QQ, 7, [3, 4, 5, 6])
    assert suffix_subspace(6, 7).is_zero()
    assert suffix_subspace(6, 0) == Subspace.full(QQ, 7)
    with pytest.raises(ValueError):
        suffix_subspace(6, 8)


def test_skip_subspace():
    assert skip_subspace(6, 3) == Subspace.coordinate(QQ, 7, [1, 3, 4, 5, 6])
    assert skip_subspace(6, 6) == Subspace.coordinate(QQ, 7, [4, 6])
    # degenerate top case: empty suffix, lone line T_{n-1}
    assert skip_subspace(5, 6) == Subspace.coordinate(QQ, 6, [4])
    with pytest.raises(ValueError):
        skip_subspace(6, 1)


def test_canonical_metric_values():
    m = canonical_metric(3)
    assert all(m.entry(i, j) == (1 if i + j == 3 else 0)
               for i in range(4) for j in range(4))
    assert det(m.matrix) == 1
    m5 = canonical_metric(3, 5)
    assert m5.entry(0, 0) == 5
    assert m5.is_nondegenerate()
    # constructible for any n, invariant only when n mod 3 = 0
    m4 = canonical_metric(4)
    assert m4.invariance_witness(truncated_algebra(4)) is not None


def test_metric_b_term_tracks_killing_form():
    """The b-dependence sits at entry (0,0), like the Killing form."""
    for n in (3, 6):
        diff = canonical_metric(n, 7).matrix - canonical_metric(n, 0).matrix
        killing = truncated_algebra(n).killing_form()
        for i in range(n + 1):
            for j in range(n + 1):
                if (i, j) != (0, 0):
                    assert diff.entry(i, j) == 0
                    assert killing.entry(i, j) == 0
        assert diff.entry(0, 0) != 0 and killing.entry(0, 0) != 0


def test_single_diagonal_solver_lemma():
    for n in range(0, 31):
        result = single_diagonal_metric_solve(n)
        assert result.exists == (n % 3 == 0)
        if result.exists:
            assert len(set(result.weights)) == 1
            form = result.form()
            assert form.invariance_witness(truncated_algebra(n)) is None
            assert form.is_nondegenerate()


def test_single_diagonal_solver_pins():
    r6 = single_diagonal_metric_solve(6)
    assert r6.exists and list(r6.weights) == [QQ(1)] * 7
    assert not single_diagonal_metric_solve(5).exists
    assert not single_diagonal_metric_solve(6, IDENTITY_HAT).exists
    assert not single_diagonal_metric_solve(9, IDENTITY_HAT).exists


def test_single_diagonal_solver_mod3_residue_hat():
    # natural mod-3 reduction over F_3: same existence pattern
    hat = ZModHat(3)
    for n in range(0, 13):
        assert single_diagonal_metric_solve(n, hat).exists == (n % 3 == 0)


def test_enumerate_coordinate_ideals_abelian():
    ideals = enumerate_coordinate_ideals(truncated_algebra(0))
    assert len(ideals) == 2
    ab3 = enumerate_coordinate_ideals(
        truncated_algebra(2, field=QQ).quotient(suffix_subspace(2, 1)))
    assert len(ab3) == 2  # 1-dim quotient: zero and full


def test_enumerate_coordinate_ideals_a3():
    a3 = truncated_algebra(3)
    ideals = enumerate_coordinate_ideals(a3)
    assert len(ideals) == 6
    assert Subspace.coordinate(QQ, 4, [1, 3]) in ideals
    for s in ideals:
        assert a3.is_ideal(s)


def test_enumerate_coordinate_ideals_a6():
    a6 = truncated_algebra(6)
    ideals = enumerate_coordinate_ideals(a6)
    assert len(ideals) == 10
    assert Subspace.coordinate(QQ, 7, [1, 3, 4, 5, 6]) in ideals
    assert Subspace.coordinate(QQ, 7, [4, 6]) in ideals
    # sorted by dimension then lexicographic index tuple
    dims = [s.dim for s in ideals]
    assert dims == sorted(dims)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_coordinate_ideals(truncated_algebra(6), max_subsets=4)


def test_classify_ideals_pins():
    assert classify_ideals(6).skip_ideals == (3, 6)
    assert classify_ideals(3).skip_ideals == (3,)
    c4 = classify_ideals(4)
    assert c4.skip_ideals == (3,)
    assert c4.suffix_ideals == tuple(range(0, 6))
    assert c4.other == ()


def test_classify_matches_brute_force_through_dim_13():
    for n in range(0, 13):
        c = classify_ideals(n)  # cross-check raises on mismatch
        claimed = c.subspaces()
        brute = enumerate_coordinate_ideals(truncated_algebra(n))
        assert set(claimed) == set(brute)
        assert len(claimed) == len(brute)


def test_classified_subspaces_are_ideals():
    for n in (3, 4, 5, 6, 9):
        alg = truncated_algebra(n)
        for s in classify_ideals(n, cross_check=False).subspaces():
            assert alg.is_ideal(s)


def test_degenerate_skip_ideal_for_n_equals_two_mod_three():
    # span{T_{n-1}} is an ideal exactly when n = 2 mod 3
    for n in (2, 5, 8, 11):
        assert n + 1 in classify_ideals(n, cross_check=False).skip_ideals
        alg = truncated_algebra(n)
        assert alg.is_ideal(Subspace.coordinate(QQ, n + 1, [n - 1]))
    for n in (3, 4, 6, 7, 9):
        assert n + 1 not in classify_ideals(n, cross_check=False).skip_ideals


def test_classification_mismatch_raises():
    # a hat with a different zero pattern breaks the closed form
    with pytest.raises(ClassificationMismatchError):
        classify_ideals(6, ZModHat(5))


def test_hat_shift_automorphism():
    phi6 = hat_shift_automorphism(6)
    assert phi6 is not None
    a6 = truncated_algebra(6)
    assert a6.is_automorphism(phi6)
    t = a6.basis_vector
    assert phi6 * t(1) == tuple(-x for x in t(2))
    assert phi6 * t(2) == tuple(-x for x in t(1))
    assert phi6 * t(3) == tuple(-x for x in t(3))
    assert hat_shift_automorphism(7) is None
    for n in (3, 9, 12):
        alg = truncated_algebra(n)
        phi = hat_shift_automorphism(n)
        assert phi is not None and alg.is_automorphism(phi)


def test_hat_shift_maps_skip_to_suffix():
    for n in (3, 6, 9, 12):
        phi = hat_shift_automorphism(n)
        for m in classify_ideals(n, cross_check=False).skip_ideals:
            skip = skip_subspace(n, m)
            image = Subspace(QQ, n + 1, [phi * v for v in skip.basis])
            assert image == suffix_subspace(n, m - 1)

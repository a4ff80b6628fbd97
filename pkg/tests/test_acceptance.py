"""Top-level regression gate: one test per headline guarantee.

Each test here states a complete, externally meaningful claim about the
package; the module-level suites cover the same ground in finer grain.
All arithmetic is exact, so every assertion is an equality, not an
approximation.
"""

import json
import time

import pytest

from liealg.cli import main
from liealg.core import BilinearForm, LieAlgebra, direct_sum, form_block_sum
from liealg.family import (
    canonical_metric,
    classify_ideals,
    enumerate_coordinate_ideals,
    hat_shift_automorphism,
    single_diagonal_metric_solve,
    skip_subspace,
    suffix_subspace,
    truncated_algebra,
)
from liealg.fields import QQ, PrimeField
from liealg.hats import IDENTITY_HAT, RangeHat, jacobi_hat_scan
from liealg.io import load_algebra, save_algebra
from liealg.linalg import Matrix, Subspace
from liealg.selfdual import (
    ContractionInput,
    DoubleExtensionInput,
    Verdict,
    decomposability_check,
    deeper_verdict,
    double_extend,
    double_extension_candidates,
    invariant_profile,
    is_self_dual,
    wigner_contract,
)


def test_jacobi_identity_full_range():
    """Every family member through dim 31 is a Lie algebra, quickly."""
    start = time.monotonic()
    for n in range(0, 31):
        assert truncated_algebra(n).check_jacobi() is None
    assert time.monotonic() - start < 5.0


def test_diagonal_metric_existence_lemma():
    """A single-anti-diagonal invariant metric exists iff 3 divides n,
    always with constant weights; never for the integer-identity hat."""
    for n in range(0, 31):
        result = single_diagonal_metric_solve(n)
        assert result.exists == (n % 3 == 0)
        if result.exists:
            assert len(set(result.weights)) == 1
    assert not single_diagonal_metric_solve(6, IDENTITY_HAT).exists
    assert not single_diagonal_metric_solve(9, IDENTITY_HAT).exists


def test_canonical_metric_invariance():
    for n in (3, 6, 9, 12):
        alg = truncated_algebra(n)
        for b in (0, 1, QQ(-7, 3)):
            metric = canonical_metric(n, b)
            assert metric.invariance_witness(alg) is None
            assert metric.is_nondegenerate()


def test_killing_form_values():
    for n, scale in ((3, 2), (6, 4)):
        killing = truncated_algebra(n).killing_form()
        expected = Matrix(QQ, [[scale if i == j == 0 else 0
                                for j in range(n + 1)]
                               for i in range(n + 1)])
        assert killing.matrix == expected


def test_ideal_classification_matches_brute_force():
    start = time.monotonic()
    for n in (3, 4, 6, 9, 12):
        brute = enumerate_coordinate_ideals(truncated_algebra(n),
                                            max_subsets=1 << 13)
        closed = classify_ideals(n, cross_check=False).subspaces()
        assert set(closed) == set(brute)
        assert len(closed) == len(brute)
    six = classify_ideals(6, cross_check=False)
    assert len(six.subspaces()) == 10
    assert six.skip_ideals == (3, 6)
    assert time.monotonic() - start < 10.0


def test_shift_automorphism():
    for n in (3, 6, 9, 12):
        alg = truncated_algebra(n)
        phi = hat_shift_automorphism(n)
        assert phi is not None
        assert alg.is_automorphism(phi)
        for m in classify_ideals(n, cross_check=False).skip_ideals:
            image = Subspace(QQ, n + 1,
                             [phi * v for v in skip_subspace(n, m).basis])
            assert image == suffix_subspace(n, m - 1)
    assert hat_shift_automorphism(7) is None


def test_extension_candidates_and_verdicts():
    pairs = [(m, n) for n in range(0, 31, 3)
             for m in double_extension_candidates(n)]
    assert pairs == [(1, 3), (2, 3), (2, 6)]
    assert deeper_verdict(3).verdict == Verdict.WIGNER_OBTAINABLE
    assert deeper_verdict(6).verdict == Verdict.ABELIAN_DOUBLE_EXTENSION_ONLY
    for n in range(9, 31, 3):
        assert deeper_verdict(n).verdict == Verdict.DEEPER


def test_family_indecomposable_with_split_control():
    for n in (3, 6, 9, 12):
        assert decomposability_check(truncated_algebra(n),
                                     canonical_metric(n)) is None
    a3 = truncated_algebra(3)
    split = decomposability_check(
        direct_sum(a3, a3),
        form_block_sum(canonical_metric(3), canonical_metric(3)))
    assert split is not None
    assert {split.component, split.complement} == \
        {Subspace.coordinate(QQ, 8, [0, 1, 2, 3]),
         Subspace.coordinate(QQ, 8, [4, 5, 6, 7])}


def test_construction_battery():
    """Both constructions enforce Jacobi, invariance, non-degeneracy;
    contracting the split rank-1 simple algebra along its diagonal line
    reproduces the dim-4 family member up to invariants."""
    target = invariant_profile(truncated_algebra(3))
    assert target.dim == 4
    assert target.derived_dims == (4, 3, 1, 0)
    assert target.center_dim == 1
    assert target.solvable
    assert target.self_dual == "yes"

    inputs = [
        DoubleExtensionInput(2, BilinearForm.from_entries(QQ, [[0, 1],
                                                               [1, 0]]),
                             LieAlgebra(QQ, 1, {}),
                             (Matrix(QQ, [[-1, 0], [0, 1]]),)),
        DoubleExtensionInput(2, BilinearForm(Matrix.identity(QQ, 2)),
                             LieAlgebra(QQ, 1, {}),
                             (Matrix.zeros(QQ, 2, 2),)),
        DoubleExtensionInput(2, BilinearForm.from_entries(QQ, [[0, 1],
                                                               [1, 0]]),
                             LieAlgebra(QQ, 1, {}),
                             (Matrix(QQ, [[-1, 0], [0, 1]]),),
                             BilinearForm.from_entries(QQ, [[9]])),
    ]
    for inp in inputs:
        alg, metric = double_extend(inp)
        assert alg.check_jacobi() is None
        assert metric.invariance_witness(alg) is None
        assert metric.is_nondegenerate()
    assert invariant_profile(double_extend(inputs[0])[0]) == target

    so21 = LieAlgebra(QQ, 3, {(0, 1): [(2, 1)],
                              (1, 2): [(0, -1)],
                              (0, 2): [(1, -1)]})
    half_killing = BilinearForm(so21.killing_form().matrix.scale(QQ(1, 2)))
    contractions = [
        ContractionInput(so21, half_killing, Subspace.coordinate(QQ, 3, [0])),
        ContractionInput(LieAlgebra(QQ, 3, {}),
                         BilinearForm(Matrix.identity(QQ, 3)),
                         Subspace.coordinate(QQ, 3, [1])),
    ]
    for inp in contractions:
        alg, metric = wigner_contract(inp)
        assert alg.check_jacobi() is None
        assert metric.invariance_witness(alg) is None
        assert metric.is_nondegenerate()
    assert invariant_profile(wigner_contract(contractions[0])[0]) == target


def test_unbalanced_mod2_reduction_breaks_jacobi():
    witness = jacobi_hat_scan(RangeHat(2, (0, 1)), range(0, 13))
    assert witness is not None
    assert (witness.i, witness.j, witness.k) == (1, 0, 0)
    assert witness.hat_values == (1, 0, 1)


def test_self_duality_negative_certificate():
    answer = is_self_dual(LieAlgebra(QQ, 2, {(0, 1): [(1, 1)]}))
    assert answer.verdict == "no"
    assert answer.metric is None
    assert answer.certificate["kind"] == "generic-determinant-zero"
    assert answer.certificate["space_dim"] == 1
    assert answer.certificate["grid_points"] == 3


def test_cli_round_trip_and_exit_codes(tmp_path, capsys):
    """Every golden file survives a load/save cycle byte for byte, and
    the command surface keeps its exit-code contract."""
    so21 = LieAlgebra(QQ, 3, {(0, 1): [(2, 1)],
                              (1, 2): [(0, -1)],
                              (0, 2): [(1, -1)]})
    goldens = {
        "a0.json": (truncated_algebra(0), None),
        "a3.json": (truncated_algebra(3), canonical_metric(3)),
        "a6.json": (truncated_algebra(6), canonical_metric(6, QQ(-7, 3))),
        "witt6.json": (truncated_algebra(6, IDENTITY_HAT), None),
        "a4f5.json": (truncated_algebra(4, field=PrimeField(5)), None),
        "so21.json": (so21,
                      BilinearForm(so21.killing_form().matrix.scale(QQ(1, 2)))),
        "r01.json": (LieAlgebra(QQ, 2, {(0, 1): [(1, 1)]}), None),
    }
    for name, (alg, metric) in goldens.items():
        path = tmp_path / name
        save_algebra(path, alg, metric)
        copy = tmp_path / ("copy-" + name)
        save_algebra(copy, *load_algebra(path))
        assert path.read_bytes() == copy.read_bytes()
        assert main(["check", "jacobi", str(path)]) == 0
        assert main(["analyze", str(path)]) == 0
        if metric is not None:
            assert main(["check", "invariance", str(path)]) == 0
    capsys.readouterr()

    # exit 0: success with output file
    out = tmp_path / "gen.json"
    assert main(["gen", "--family", "an", "--n", "6", "--metric", "b=1",
                 "-o", str(out)]) == 0
    # exit 1: determinate negative
    assert main(["gen", "--family", "an", "--n", "4", "--metric", "b=0",
                 "-o", str(tmp_path / "no.json")]) == 1
    assert main(["classify", "--family", "an", "--n", "6"]) == 0
    # exit 2: usage
    assert main(["gen", "--family", "an", "--n", "-3",
                 "-o", str(out)]) == 2
    assert main(["classify", "--family", "an", "--n", "5"]) == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])
    # exit 3: unreadable or malformed input
    assert main(["check", "jacobi", str(tmp_path / "absent.json")]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["check", "jacobi", str(bad)]) == 3
    doc = json.loads((tmp_path / "a3.json").read_text())
    doc["brackets"][0]["terms"][0]["c"] = "2/4"
    bad.write_text(json.dumps(doc))
    assert main(["check", "jacobi", str(bad)]) == 3
    capsys.readouterr()

"""Command-line front end.

Subcommands: ``gen`` (write a family member to a file), ``check``
(jacobi / invariance / grading verification with witnesses), ``ideals``
(coordinate-ideal enumeration, optionally cross-checked against the
closed form), ``analyze`` (series, center, Killing form, self-duality),
``classify`` (decomposability plus the double-extension verdict for
family members), ``dext`` and ``wigner`` (metric constructions).

Exit codes: 0 the property holds or the command succeeded, 1 a checked
property fails (a witness is reported), 2 usage error, 3 malformed
input file.  Reports are deterministic; the human summary goes to
stdout, the machine JSON to --json PATH or to stdout with --porcelain.

The environment variable LIEALG_BRUTE_CAP overrides the default cap
(65536) on the number of subsets the brute-force ideal enumeration may
visit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import BilinearForm, LieAlgebra
from .family import (
    DEFAULT_BRUTE_CAP,
    canonical_metric,
    classify_ideals,
    enumerate_coordinate_ideals,
    truncated_algebra,
)
from .hats import IDENTITY_HAT, MOD3_BALANCED, ZModHat
from .io import (
    AlgebraFileError,
    load_algebra,
    save_algebra,
    scalar_to_string,
    string_to_scalar,
)
from .linalg import Matrix, Subspace
from .selfdual import (
    ConstructionError,
    ContractionInput,
    DoubleExtensionInput,
    decomposability_check,
    deeper_verdict,
    double_extend,
    double_extension_candidates,
    is_self_dual,
    wigner_contract,
)

__all__ = ["main"]


class _Usage(Exception):
    """Flag combination problem discovered after argparse (exit 2)."""


class _Failure(Exception):
    """A checked property fails (exit 1); carries report details."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


def _brute_cap() -> int:
    raw = os.environ.get("LIEALG_BRUTE_CAP")
    if raw is None:
        return DEFAULT_BRUTE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise _Usage(f"LIEALG_BRUTE_CAP must be an integer, got {raw!r}")
    if cap <= 0:
        raise _Usage("LIEALG_BRUTE_CAP must be positive")
    return cap


def _parse_hat(name: str):
    if name == "mod3":
        return MOD3_BALANCED
    if name == "identity":
        return IDENTITY_HAT
    if name.startswith("zmod:"):
        try:
            p = int(name.split(":", 1)[1])
        except ValueError:
            raise _Usage(f"bad modulus in --hat {name!r}")
        if p < 2:
            raise _Usage("zmod modulus must be at least 2")
        return ZModHat(p)
    raise _Usage(f"unknown hat {name!r} (expected mod3, identity, or zmod:P)")


def _hat_field(hat, field_flag: str):
    from .fields import QQ
    if field_flag == "Q":
        return QQ
    if isinstance(hat, ZModHat):
        try:
            return hat.default_field()
        except ValueError as exc:
            raise _Usage(str(exc))
    if hat is MOD3_BALANCED:
        from .fields import PrimeField
        return PrimeField(3)
    raise _Usage("--field Fp needs a hat with a finite modulus")


def _matrix_json(m: Matrix) -> list:
    return [[scalar_to_string(m.entry(i, j)) for j in range(m.ncols)]
            for i in range(m.nrows)]


def _witness_json(witness) -> dict:
    return {
        "i": witness.i, "j": witness.j, "k": witness.k,
        "defect": [scalar_to_string(x) for x in witness.defect],
    }


# ---------------------------------------------------------------------------
# subcommands: each returns (exit_code, report_payload, human_lines)
# ---------------------------------------------------------------------------

def _cmd_gen(args):
    hat = _parse_hat(args.hat)
    field = _hat_field(hat, args.field)
    if args.n < 0:
        raise _Usage("--n must be non-negative")
    alg = truncated_algebra(args.n, hat, field)
    metric = None
    if args.metric is not None:
        if not args.metric.startswith("b="):
            raise _Usage("--metric takes the form b=RATIONAL")
        try:
            b = string_to_scalar(field, args.metric[2:])
        except AlgebraFileError as exc:
            raise _Usage(f"bad --metric value: {exc}")
        if hat.value(args.n) != 0:
            condition = ("exists iff n mod 3 = 0" if hat is MOD3_BALANCED
                         else "exists iff hat(n) = 0")
            raise _Failure(
                f"no invariant metric on the diagonal i + j = n: {condition} "
                f"(n = {args.n}, hat(n) = {hat.value(args.n)})",
                n=args.n, hat=hat.name)
        metric = canonical_metric(args.n, b, field)
    save_algebra(args.output, alg, metric)
    report = {
        "n": args.n,
        "dim": alg.dim,
        "hat": hat.name,
        "field": "Q" if field.characteristic == 0 else f"F{field.characteristic}",
        "stored_brackets": len(alg.sc),
        "metric_included": metric is not None,
        "output": args.output,
    }
    human = [f"wrote {args.output}: family member n={args.n} "
             f"(dim {alg.dim}) over {report['field']}, "
             f"{len(alg.sc)} stored brackets"
             + (", metric included" if metric is not None else "")]
    return 0, report, human


def _cmd_check(args):
    alg, metric = load_algebra(args.file)
    prop = args.property
    if prop == "jacobi":
        witness = alg.check_jacobi()
        report = {"property": "jacobi", "holds": witness is None}
        if witness is None:
            return 0, report, ["jacobi: holds on all basis triples"]
        report["witness"] = _witness_json(witness)
        return 1, report, [
            f"jacobi: fails at triple ({witness.i}, {witness.j}, {witness.k})",
            "defect: (" + ", ".join(scalar_to_string(x)
                                    for x in witness.defect) + ")",
        ]
    if prop == "invariance":
        if metric is None:
            raise _Usage("file carries no metric to check")
        triple = metric.invariance_witness(alg)
        report = {"property": "invariance", "holds": triple is None}
        if triple is None:
            return 0, report, ["invariance: metric is ad-invariant"]
        report["witness"] = {"k": triple[0], "i": triple[1], "j": triple[2]}
        return 1, report, [f"invariance: fails at triple {triple}"]
    if prop == "grading":
        if alg.grading is None:
            raise _Usage("file carries no grading to check")
        triple = alg.grading_witness(alg.grading)
        report = {"property": "grading", "holds": triple is None,
                  "degrees": list(alg.grading)}
        if triple is None:
            return 0, report, ["grading: bracket degrees are additive"]
        report["witness"] = {"i": triple[0], "j": triple[1], "k": triple[2]}
        return 1, report, [f"grading: fails at (i, j, k) = {triple}"]
    raise _Usage(f"unknown property {prop!r}")


def _cmd_ideals(args):
    alg, _ = load_algebra(args.file)
    cap = _brute_cap()
    try:
        ideals = enumerate_coordinate_ideals(alg, cap)
    except ValueError as exc:
        raise _Usage(str(exc))
    listing = [list(s.pivot_columns()) for s in ideals]
    report = {"count": len(ideals), "ideals": listing}
    human = [f"{len(ideals)} coordinate ideals"]
    human += ["  {" + ", ".join(str(i) for i in s) + "}" for s in listing]
    code = 0
    if args.classify_an:
        n = alg.dim - 1
        classification = classify_ideals(n, MOD3_BALANCED, cross_check=False)
        closed = classification.subspaces(alg.field)
        match = set(closed) == set(ideals) and len(closed) == len(ideals)
        report["closed_form"] = {
            "suffix_starts": list(classification.suffix_ideals),
            "skip_starts": list(classification.skip_ideals),
            "match": match,
        }
        human.append(
            f"closed form: suffix starts {list(classification.suffix_ideals)}, "
            f"skip starts {list(classification.skip_ideals)}, "
            f"match={'yes' if match else 'NO'}")
        if not match:
            code = 1
    return code, report, human


def _cmd_analyze(args):
    alg, metric = load_algebra(args.file)
    derived = [s.dim for s in alg.derived_series()]
    lower = [s.dim for s in alg.lower_central_series()]
    center = alg.center().dim
    killing = alg.killing_form()
    duality = is_self_dual(alg)
    report = {
        "dim": alg.dim,
        "abelian": alg.is_abelian(),
        "derived_dims": derived,
        "lower_central_dims": lower,
        "center_dim": center,
        "solvable": derived[-1] == 0,
        "nilpotent": lower[-1] == 0,
        "killing": _matrix_json(killing.matrix),
        "self_dual": duality.verdict,
    }
    if duality.metric is not None:
        report["invariant_metric"] = _matrix_json(duality.metric.matrix)
    if duality.certificate is not None:
        report["certificate"] = duality.certificate
    if metric is not None:
        report["file_metric_invariant"] = metric.is_invariant(alg)
        report["file_metric_nondegenerate"] = metric.is_nondegenerate()
    human = [
        f"dim {alg.dim}" + (", Abelian" if alg.is_abelian() else ""),
        f"derived series dims: {derived}",
        f"lower central series dims: {lower}",
        f"center dim: {center}",
        f"solvable: {report['solvable']}, nilpotent: {report['nilpotent']}",
        f"self-dual: {duality.verdict}",
    ]
    if metric is not None:
        human.append(
            f"file metric: invariant={report['file_metric_invariant']}, "
            f"non-degenerate={report['file_metric_nondegenerate']}")
    return 0, report, human


def _split_json(split):
    if split is None:
        return None
    return {
        "component": [[scalar_to_string(x) for x in v]
                      for v in split.component.basis],
        "complement": [[scalar_to_string(x) for x in v]
                       for v in split.complement.basis],
    }


def _cmd_classify(args):
    if (args.file is None) == (args.n is None):
        raise _Usage("classify takes either FILE or --family an --n N")
    cap = _brute_cap()
    if args.n is not None:
        if args.family != "an":
            raise _Usage("only --family an is supported")
        n = args.n
        if MOD3_BALANCED.value(n) != 0 or n < 3:
            raise _Usage(
                "the family classification needs n >= 3 with n mod 3 = 0")
        alg = truncated_algebra(n)
        metric = canonical_metric(n)
        classification = classify_ideals(n, cross_check=False)
        ideals = classification.subspaces()
        split = decomposability_check(alg, metric, ideals)
        verdict = deeper_verdict(n)
        report = {
            "n": n,
            "decomposable": split is not None,
            "split": _split_json(split),
            "candidates": list(double_extension_candidates(n)),
            "verdict": verdict.verdict.value,
        }
        human = [
            f"family member n={n} (dim {n + 1})",
            f"decomposable: {split is not None}",
            f"double-extension candidates m: {report['candidates']}",
            f"verdict: {verdict.verdict.value}",
        ]
        return 0, report, human
    alg, metric = load_algebra(args.file)
    if metric is None:
        raise _Usage("classify FILE needs a metric in the file")
    try:
        ideals = enumerate_coordinate_ideals(alg, cap)
    except ValueError as exc:
        raise _Usage(str(exc))
    try:
        split = decomposability_check(alg, metric, ideals)
    except ValueError as exc:
        raise _Failure(str(exc))
    report = {"decomposable": split is not None, "split": _split_json(split)}
    human = [f"decomposable: {split is not None}"]
    if split is not None:
        human.append(f"component indices: {list(split.component.pivot_columns())}")
    return 0, report, human


def _load_matrix_file(path, field) -> list[Matrix]:
    """A bare JSON list of matrices (rows of canonical scalar strings)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"invalid JSON in {path}: {exc}") from None
    if isinstance(doc, dict) and "action" in doc:
        doc = doc["action"]
    if not isinstance(doc, list):
        raise AlgebraFileError(f"{path}: expected a list of matrices")
    mats = []
    for idx, grid in enumerate(doc):
        if not (isinstance(grid, list)
                and all(isinstance(r, list) for r in grid)):
            raise AlgebraFileError(f"{path}: matrix {idx} must be a list of rows")
        rows = [[string_to_scalar(field, x) for x in r] for r in grid]
        mats.append(Matrix(field, rows))
    return mats


def _load_form_file(path, field) -> BilinearForm:
    """A symmetric matrix, bare or under a 'metric' key."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"invalid JSON in {path}: {exc}") from None
    if isinstance(doc, dict):
        doc = doc.get("metric")
    if not isinstance(doc, list):
        raise AlgebraFileError(f"{path}: expected a matrix or a 'metric' entry")
    rows = [[string_to_scalar(field, x) for x in r] for r in doc]
    try:
        return BilinearForm(Matrix(field, rows))
    except ValueError as exc:
        raise AlgebraFileError(f"{path}: {exc}") from None


def _decomposability_verdict(alg, metric, cap) -> str:
    if (1 << alg.dim) > cap:
        return "unknown"
    split = decomposability_check(alg, metric)
    return "yes" if split is not None else "no"


def _cmd_dext(args):
    base_alg, omega = load_algebra(args.base)
    if omega is None:
        raise _Usage("--base file must carry the metric of the Abelian part")
    if not base_alg.is_abelian():
        raise _Usage("--base algebra must be Abelian")
    acting, _ = load_algebra(args.by)
    if acting.field != base_alg.field:
        raise _Usage("--base and --by files use different fields")
    action = _load_matrix_file(args.action, base_alg.field)
    pairing = None
    if args.pairing is not None:
        pairing = _load_form_file(args.pairing, base_alg.field)
    inp = DoubleExtensionInput(
        abelian_dim=base_alg.dim, omega=omega, acting=acting,
        action=tuple(action), pairing=pairing)
    try:
        out, metric = double_extend(inp)
    except (ValueError, ConstructionError) as exc:
        raise _Failure(str(exc))
    save_algebra(args.output, out, metric)
    verdict = _decomposability_verdict(out, metric, _brute_cap())
    report = {
        "dim": out.dim,
        "decomposable": verdict,
        "output": args.output,
    }
    human = [
        f"wrote {args.output}: double extension of dim {out.dim} "
        f"(acting {acting.dim} + Abelian {base_alg.dim} + dual {acting.dim})",
        "postconditions: jacobi ok, metric invariant and non-degenerate",
        f"decomposable: {verdict}",
    ]
    return 0, report, human


def _parse_index_list(text: str, dim: int) -> list[int]:
    try:
        indices = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise _Usage(f"bad index list {text!r}")
    if not indices:
        raise _Usage("subalgebra index list is empty")
    if len(set(indices)) != len(indices):
        raise _Usage("subalgebra index list has duplicates")
    for i in indices:
        if not 0 <= i < dim:
            raise _Usage(f"subalgebra index {i} out of range 0..{dim - 1}")
    return sorted(indices)


def _cmd_wigner(args):
    alg, metric = load_algebra(args.algebra)
    if metric is None:
        raise _Usage("--algebra file must carry an invariant metric")
    indices = _parse_index_list(args.subalgebra, alg.dim)
    b0 = Subspace.coordinate(alg.field, alg.dim, indices)
    inp = ContractionInput(algebra=alg, metric=metric, subalgebra=b0)
    try:
        out, out_metric = wigner_contract(inp)
    except (ValueError, ConstructionError) as exc:
        raise _Failure(str(exc))
    save_algebra(args.output, out, out_metric)
    report = {
        "dim": out.dim,
        "subalgebra_indices": indices,
        "output": args.output,
    }
    human = [
        f"wrote {args.output}: contraction along {{{', '.join(map(str, indices))}}}, "
        f"output dim {out.dim}",
        "postconditions: jacobi ok, metric invariant and non-degenerate",
    ]
    return 0, report, human


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liealg",
        description="Exact computations with structure-constant Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true",
                        help="print the machine JSON report to stdout")
    common.add_argument("--json", metavar="PATH", default=None,
                        help="also write the machine JSON report to PATH")

    p = sub.add_parser("gen", parents=[common],
                       help="generate a family member file")
    p.add_argument("--family", required=True, choices=["an"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--hat", default="mod3",
                   help="mod3 (default), identity, or zmod:P")
    p.add_argument("--field", default="Q", choices=["Q", "Fp"])
    p.add_argument("--metric", default=None, metavar="b=RATIONAL",
                   help="include the canonical metric with the given b")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("check", parents=[common],
                       help="verify a property of a file, with witnesses")
    p.add_argument("property", choices=["jacobi", "invariance", "grading"])
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("ideals", parents=[common],
                       help="enumerate coordinate ideals")
    p.add_argument("file")
    p.add_argument("--classify-an", action="store_true",
                   help="cross-check against the family closed form")
    p.set_defaults(handler=_cmd_ideals)

    p = sub.add_parser("analyze", parents=[common],
                       help="series, center, Killing form, self-duality")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("classify", parents=[common],
                       help="decomposability and construction verdicts")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--family", default="an")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("dext", parents=[common],
                       help="double extension of an Abelian metric file")
    p.add_argument("--base", required=True,
                   help="Abelian algebra file with metric")
    p.add_argument("--by", required=True, help="acting algebra file")
    p.add_argument("--action", required=True,
                   help="JSON list of action matrices")
    p.add_argument("--F", dest="pairing", default=None,
                   help="optional pairing form on the acting algebra")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_dext)

    p = sub.add_parser("wigner", parents=[common],
                       help="contraction along a coordinate subalgebra")
    p.add_argument("--algebra", required=True,
                   help="metric algebra file")
    p.add_argument("--subalgebra", required=True,
                   help="comma-separated basis indices")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_wigner)
    return parser


def _emit(args, code: int, report: dict, human: list[str]):
    envelope = {"command": args.command, "ok": code == 0, "exit_code": code}
    envelope.update(report)
    if args.json is not None:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(envelope, indent=2) + "\n")
    if args.porcelain:
        print(json.dumps(envelope, indent=2))
    else:
        for line in human:
            print(line)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, report, human = args.handler(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _Failure as exc:
        _emit(args, 1, {"error": str(exc), **exc.details}, [f"FAIL: {exc}"])
        return 1
    except AlgebraFileError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"cannot read or write file: {exc}", file=sys.stderr)
        return 3
    _emit(args, code, report, human)
    return code


if __name__ == "__main__":
    sys.exit(main())

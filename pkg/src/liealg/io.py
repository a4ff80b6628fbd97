"""Bit-exact JSON interchange for structure-constant algebras.

A document carries the format tag ``liealg-v1``, a field marker ("Q",
or "Fp" with a prime ``p``), the dimension, the bracket table with
i < j only, and optionally labels, an integer grading, and a metric
(dim x dim array).  Scalars are canonical strings: optional minus,
digits, optional '/' and positive digits, in lowest terms, with "0"
for zero; prime-field residues are plain decimal digits below p.  The
canonical encoding makes serialization deterministic, so parsing a
serialized algebra reproduces it bit-exactly.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core import BilinearForm, LieAlgebra
from .fields import FpElement, PrimeField, QQ
from .linalg import Matrix

__all__ = [
    "FORMAT_TAG",
    "AlgebraFileError",
    "scalar_to_string",
    "string_to_scalar",
    "algebra_to_document",
    "document_to_algebra",
    "dump_document",
    "save_algebra",
    "load_algebra",
]

FORMAT_TAG = "liealg-v1"

_RATIONAL_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")
_RESIDUE_RE = re.compile(r"(0|[1-9][0-9]*)\Z")


class AlgebraFileError(ValueError):
    """The document is not a well-formed liealg-v1 file."""


def scalar_to_string(x) -> str:
    """Canonical string of an exact scalar (Fraction or residue)."""
    if isinstance(x, FpElement):
        return str(x.r)
    return str(Fraction(x))


def string_to_scalar(field, s: str):
    """Parse a canonical scalar string, rejecting non-canonical spellings."""
    if not isinstance(s, str):
        raise AlgebraFileError(f"scalar must be a string, got {s!r}")
    if field is QQ or field == QQ:
        if not _RATIONAL_RE.match(s):
            raise AlgebraFileError(f"not a canonical rational: {s!r}")
        value = Fraction(s)
        if str(value) != s:
            raise AlgebraFileError(f"rational not in lowest terms: {s!r}")
        return value
    if not _RESIDUE_RE.match(s):
        raise AlgebraFileError(f"not a canonical residue: {s!r}")
    value = int(s)
    if value >= field.characteristic:
        raise AlgebraFileError(
            f"residue {s} out of range for characteristic {field.characteristic}")
    return field(value)


def _field_of_document(doc) -> object:
    marker = doc.get("field", "Q")
    if marker == "Q":
        return QQ
    if marker == "Fp":
        p = doc.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise AlgebraFileError("field 'Fp' requires an integer 'p'")
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise AlgebraFileError(str(exc)) from None
    raise AlgebraFileError(f"unknown field marker {marker!r}")


def algebra_to_document(alg: LieAlgebra,
                        metric: BilinearForm | None = None) -> dict:
    """Serializable document for an algebra (and optional metric)."""
    doc: dict = {"format": FORMAT_TAG}
    if alg.field == QQ:
        doc["field"] = "Q"
    else:
        doc["field"] = "Fp"
        doc["p"] = alg.field.characteristic
    doc["dim"] = alg.dim
    if alg.labels is not None:
        doc["labels"] = list(alg.labels)
    brackets = []
    for (i, j) in sorted(alg.sc):
        terms = [{"k": k, "c": scalar_to_string(c)} for k, c in alg.sc[(i, j)]]
        brackets.append({"i": i, "j": j, "terms": terms})
    doc["brackets"] = brackets
    if alg.grading is not None:
        doc["grading"] = list(alg.grading)
    if metric is not None:
        if metric.dim != alg.dim or metric.field != alg.field:
            raise AlgebraFileError("metric does not match the algebra")
        doc["metric"] = [[scalar_to_string(metric.entry(i, j))
                          for j in range(alg.dim)] for i in range(alg.dim)]
    return doc


def _expect(cond: bool, message: str):
    if not cond:
        raise AlgebraFileError(message)


def document_to_algebra(doc) -> tuple[LieAlgebra, BilinearForm | None]:
    """Parse a document back into (algebra, metric or None)."""
    _expect(isinstance(doc, dict), "document must be a JSON object")
    _expect(doc.get("format") == FORMAT_TAG,
            f"format tag must be {FORMAT_TAG!r}")
    field = _field_of_document(doc)
    dim = doc.get("dim")
    _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 0,
            "dim must be a non-negative integer")
    raw = doc.get("brackets", [])
    _expect(isinstance(raw, list), "brackets must be a list")
    brackets = {}
    for rec in raw:
        _expect(isinstance(rec, dict), "bracket record must be an object")
        i, j = rec.get("i"), rec.get("j")
        _expect(isinstance(i, int) and isinstance(j, int),
                "bracket indices must be integers")
        _expect(0 <= i < j < dim,
                f"bracket key ({i},{j}) must satisfy 0 <= i < j < dim")
        _expect((i, j) not in brackets, f"duplicate bracket record ({i},{j})")
        terms = rec.get("terms")
        _expect(isinstance(terms, list), "bracket terms must be a list")
        seen = set()
        parsed = []
        for t in terms:
            _expect(isinstance(t, dict), "bracket term must be an object")
            k = t.get("k")
            _expect(isinstance(k, int) and 0 <= k < dim,
                    f"term index {k!r} out of range")
            _expect(k not in seen, f"duplicate term index {k} in ({i},{j})")
            seen.add(k)
            parsed.append((k, string_to_scalar(field, t.get("c"))))
        brackets[(i, j)] = parsed
    labels = doc.get("labels")
    if labels is not None:
        _expect(isinstance(labels, list) and len(labels) == dim
                and all(isinstance(x, str) for x in labels),
                "labels must be a list of dim strings")
    grading = doc.get("grading")
    if grading is not None:
        _expect(isinstance(grading, list) and len(grading) == dim
                and all(isinstance(x, int) and not isinstance(x, bool)
                        for x in grading),
                "grading must be a list of dim integers")
    try:
        alg = LieAlgebra(field, dim, brackets, labels=labels, grading=grading)
    except ValueError as exc:
        raise AlgebraFileError(str(exc)) from None
    metric = None
    raw_metric = doc.get("metric")
    if raw_metric is not None:
        _expect(isinstance(raw_metric, list) and len(raw_metric) == dim
                and all(isinstance(r, list) and len(r) == dim
                        for r in raw_metric),
                "metric must be a dim x dim array")
        grid = [[string_to_scalar(field, x) for x in row] for row in raw_metric]
        try:
            metric = BilinearForm(Matrix(field, grid))
        except ValueError as exc:
            raise AlgebraFileError(str(exc)) from None
    return alg, metric


def dump_document(doc) -> str:
    """Deterministic textual form of a document."""
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def save_algebra(path, alg: LieAlgebra, metric: BilinearForm | None = None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_document(algebra_to_document(alg, metric)))


def load_algebra(path) -> tuple[LieAlgebra, BilinearForm | None]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"invalid JSON: {exc}") from None
    return document_to_algebra(doc)

"""Reading and writing quadratic Lie algebras as JSON documents.

Every coefficient travels as an exact rational string "p" or "p/q" (q > 0);
floats are rejected outright, both as JSON numbers and as strings like
"1.5".  The document shape:

    {
      "format": "quadratic-lie-algebra",
      "version": 1,
      "name": "sl2-killing",
      "dimension": 3,
      "basis_labels": ["e", "h", "f"],
      "brackets": [{"i": 0, "j": 1, "terms": [[0, "-2"]]}, ...],
      "form": ["8", "0", ...],              row-major, dimension^2 entries
      "subalgebra": [["1", "0", "0"], ...], optional spanning vectors
      "field": "rational"                   optional, reserved
    }

Brackets are listed for i < j only.  Parsing validates the document shape
here and then hands off to the lie module, so a parsed algebra always
satisfies Jacobi, symmetry, non-degeneracy and ad-invariance; emission is
canonical (sorted brackets, lowest-terms coefficients), which makes
parse -> emit a fixed point.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import AlgebraFileError
from .lie import QuadraticLieAlgebra
from .linalg import Matrix

FORMAT_NAME = "quadratic-lie-algebra"
FORMAT_VERSION = 1
RATIONAL_RE = re.compile(r"-?\d+(/[1-9]\d*)?")

_REQUIRED_KEYS = ("format", "version", "name", "dimension", "basis_labels", "brackets", "form")
_OPTIONAL_KEYS = ("subalgebra", "field")


def _coefficient(raw, where: str) -> Fraction:
    if not isinstance(raw, str):
        raise AlgebraFileError(f"{where}: coefficient must be a rational string, got {raw!r}")
    if not RATIONAL_RE.fullmatch(raw):
        raise AlgebraFileError(f"{where}: {raw!r} is not an exact rational 'p' or 'p/q'")
    return Fraction(raw)


def _expect_int(raw, where: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool):
        raise AlgebraFileError(f"{where}: expected an integer, got {raw!r}")
    return raw


def parse_algebra_text(text: str):
    """Parse and validate; returns (algebra, subalgebra vector tuple)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"syntax error: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise AlgebraFileError("document root must be an object")

    unknown = sorted(set(doc) - set(_REQUIRED_KEYS) - set(_OPTIONAL_KEYS))
    if unknown:
        raise AlgebraFileError(f"unknown keys: {', '.join(unknown)}")
    missing = [key for key in _REQUIRED_KEYS if key not in doc]
    if missing:
        raise AlgebraFileError(f"missing keys: {', '.join(missing)}")

    if doc["format"] != FORMAT_NAME:
        raise AlgebraFileError(f"format must be {FORMAT_NAME!r}")
    if doc["version"] != FORMAT_VERSION:
        raise AlgebraFileError(f"unsupported version {doc['version']!r}")
    if "field" in doc and doc["field"] != "rational":
        raise AlgebraFileError(f"unsupported field {doc['field']!r}")

    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise AlgebraFileError("name must be a non-empty string")
    dim = _expect_int(doc["dimension"], "dimension")
    if dim < 1:
        raise AlgebraFileError("dimension must be positive")

    labels = doc["basis_labels"]
    if (
        not isinstance(labels, list)
        or len(labels) != dim
        or not all(isinstance(s, str) and s for s in labels)
    ):
        raise AlgebraFileError("basis_labels must list one non-empty string per dimension")

    raw_brackets = doc["brackets"]
    if not isinstance(raw_brackets, list):
        raise AlgebraFileError("brackets must be a list")
    table = {}
    for pos, record in enumerate(raw_brackets):
        where = f"brackets[{pos}]"
        if not isinstance(record, dict) or set(record) != {"i", "j", "terms"}:
            raise AlgebraFileError(f"{where}: expected keys i, j, terms")
        i = _expect_int(record["i"], f"{where}.i")
        j = _expect_int(record["j"], f"{where}.j")
        if not (0 <= i < j < dim):
            raise AlgebraFileError(f"{where}: need 0 <= i < j < dimension, got ({i},{j})")
        if (i, j) in table:
            raise AlgebraFileError(f"{where}: duplicate bracket ({i},{j})")
        terms = record["terms"]
        if not isinstance(terms, list):
            raise AlgebraFileError(f"{where}.terms must be a list")
        coeffs = [Fraction(0)] * dim
        seen = set()
        for tpos, term in enumerate(terms):
            twhere = f"{where}.terms[{tpos}]"
            if not isinstance(term, list) or len(term) != 2:
                raise AlgebraFileError(f"{twhere}: expected [index, coefficient]")
            k = _expect_int(term[0], f"{twhere}[0]")
            if not 0 <= k < dim:
                raise AlgebraFileError(f"{twhere}: index {k} out of range")
            if k in seen:
                raise AlgebraFileError(f"{twhere}: duplicate index {k}")
            seen.add(k)
            coeffs[k] = _coefficient(term[1], twhere)
        table[(i, j)] = tuple(coeffs)

    raw_form = doc["form"]
    if not isinstance(raw_form, list) or len(raw_form) != dim * dim:
        raise AlgebraFileError(f"form must list dimension^2 = {dim * dim} entries row-major")
    entries = [_coefficient(x, f"form[{pos}]") for pos, x in enumerate(raw_form)]
    form = Matrix([entries[r * dim : (r + 1) * dim] for r in range(dim)], cols=dim)

    subalgebra = ()
    if "subalgebra" in doc:
        raw_sub = doc["subalgebra"]
        if not isinstance(raw_sub, list):
            raise AlgebraFileError("subalgebra must be a list of coordinate vectors")
        vectors = []
        for pos, vec in enumerate(raw_sub):
            where = f"subalgebra[{pos}]"
            if not isinstance(vec, list) or len(vec) != dim:
                raise AlgebraFileError(f"{where}: expected {dim} coordinates")
            vectors.append(tuple(_coefficient(x, f"{where}[{i}]") for i, x in enumerate(vec)))
        subalgebra = tuple(vectors)

    algebra = QuadraticLieAlgebra(name, labels, table, form)
    return algebra, subalgebra


def emit_algebra_text(algebra: QuadraticLieAlgebra, subalgebra=()) -> str:
    """Canonical document for an algebra (sorted, lowest-terms, trailing newline)."""
    brackets = []
    for (i, j), coeffs in sorted(algebra.bracket_table().items()):
        terms = [[k, str(c)] for k, c in enumerate(coeffs) if c]
        if terms:
            brackets.append({"i": i, "j": j, "terms": terms})
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "name": algebra.name,
        "dimension": algebra.dim,
        "basis_labels": list(algebra.labels),
        "brackets": brackets,
        "form": [
            str(algebra.form.entry(i, j))
            for i in range(algebra.dim)
            for j in range(algebra.dim)
        ],
    }
    if subalgebra:
        doc["subalgebra"] = [[str(c) for c in vec] for vec in subalgebra]
    return json.dumps(doc, indent=2) + "\n"

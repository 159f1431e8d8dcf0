"""JSON algebra documents and matrix files.

An algebra document looks like::

    {
      "name": "heisenberg3",
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "brackets": [
        {"left": 2, "right": 3, "terms": [{"basis": 1, "coeff": "1"}]}
      ]
    }

Indices are 1-based, ``left < right``, and each unordered pair appears at
most once.  An optional ``nilradical_dim`` marks the first basis vectors as
the nilradical of a solvable extension.  Errors name the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError, LietorError, ParseError
from .extension import SolvableExtension, from_algebra
from .lie import LieAlgebra
from .linalg import Matrix
from .scalar import Scalar, parse_scalar

__all__ = [
    "AlgebraDocument",
    "parse_algebra",
    "emit_algebra",
    "document_from_algebra",
    "parse_matrix",
    "emit_matrix",
]


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    dim: int
    basis: tuple
    brackets: tuple  # ((left, right, ((basis, Scalar), ...)), ...), 1-based
    nilradical_dim: int | None = None

    def to_algebra(self, *, validate: bool = True) -> LieAlgebra:
        table = {
            (l - 1, r - 1): [(b - 1, c) for b, c in terms]
            for l, r, terms in self.brackets
        }
        return LieAlgebra(self.dim, table, self.basis, validate=validate)

    def to_extension(self) -> SolvableExtension:
        if self.nilradical_dim is None:
            raise InputError("document has no nilradical_dim")
        return from_algebra(self.to_algebra(), self.nilradical_dim)


def _int_field(value, where: str, *, low: int | None = None, high: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    if low is not None and value < low:
        raise ParseError(f"{value} is below {low}", where)
    if high is not None and value > high:
        raise ParseError(f"index {value} out of range 1..{high}", where)
    return value


def _coeff(value, where: str) -> Scalar:
    if isinstance(value, bool):
        raise ParseError(f"malformed coefficient {value!r}", where)
    if isinstance(value, int):
        return Scalar(value)
    if not isinstance(value, str):
        raise ParseError(f"coefficient must be a string or integer, got {value!r}", where)
    try:
        return parse_scalar(value)
    except ParseError as exc:
        raise ParseError(str(exc), where) from None


def parse_algebra(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "document")
    unknown = set(data) - {"name", "dim", "basis", "brackets", "nilradical_dim"}
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)}", "document")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("must be a string", "name")
    if "dim" not in data:
        raise ParseError("missing", "dim")
    dim = _int_field(data["dim"], "dim", low=0)
    basis = data.get("basis")
    if basis is None:
        basis = [f"e{i + 1}" for i in range(dim)]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("must be a list of strings", "basis")
    if len(basis) != dim:
        raise ParseError(f"{len(basis)} labels for dimension {dim}", "basis")
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise ParseError("must be a list", "brackets")
    seen = {}
    brackets = []
    for k, entry in enumerate(raw):
        where = f"brackets[{k}]"
        if not isinstance(entry, dict):
            raise ParseError("must be an object", where)
        extra = set(entry) - {"left", "right", "terms"}
        if extra:
            raise ParseError(f"unknown field(s) {sorted(extra)}", where)
        for key in ("left", "right", "terms"):
            if key not in entry:
                raise ParseError("missing", f"{where}.{key}")
        left = _int_field(entry["left"], f"{where}.left", low=1, high=dim)
        right = _int_field(entry["right"], f"{where}.right", low=1, high=dim)
        if left >= right:
            raise ParseError(f"left ({left}) must be smaller than right ({right})", where)
        if (left, right) in seen:
            raise ParseError(
                f"pair ({left}, {right}) already given in brackets[{seen[(left, right)]}]", where
            )
        seen[(left, right)] = k
        if not isinstance(entry["terms"], list):
            raise ParseError("must be a list", f"{where}.terms")
        acc: dict[int, Scalar] = {}
        for q, term in enumerate(entry["terms"]):
            tw = f"{where}.terms[{q}]"
            if not isinstance(term, dict) or set(term) != {"basis", "coeff"}:
                raise ParseError("must be an object with 'basis' and 'coeff'", tw)
            b = _int_field(term["basis"], f"{tw}.basis", low=1, high=dim)
            acc[b] = acc.get(b, Scalar(0)) + _coeff(term["coeff"], f"{tw}.coeff")
        terms = tuple((b, acc[b]) for b in sorted(acc) if acc[b])
        if terms:
            brackets.append((left, right, terms))
    nil = data.get("nilradical_dim")
    if nil is not None:
        nil = _int_field(nil, "nilradical_dim", low=1, high=dim)
    brackets.sort(key=lambda e: (e[0], e[1]))
    return AlgebraDocument(name, dim, tuple(basis), tuple(brackets), nil)


def emit_algebra(doc: AlgebraDocument) -> str:
    data = {"name": doc.name, "dim": doc.dim, "basis": list(doc.basis)}
    if doc.nilradical_dim is not None:
        data["nilradical_dim"] = doc.nilradical_dim
    data["brackets"] = [
        {
            "left": l,
            "right": r,
            "terms": [{"basis": b, "coeff": str(c)} for b, c in terms],
        }
        for l, r, terms in doc.brackets
    ]
    return json.dumps(data, indent=2) + "\n"


def document_from_algebra(obj, name: str = "") -> AlgebraDocument:
    """Document for a :class:`LieAlgebra` or :class:`SolvableExtension`."""
    nil = None
    if isinstance(obj, SolvableExtension):
        nil = obj.nilradical_dim
        obj = obj.algebra
    brackets = tuple(
        (i + 1, j + 1, tuple((t + 1, c) for t, c in row))
        for (i, j), row in sorted(obj.table.items())
    )
    return AlgebraDocument(name, obj.dim, tuple(obj.names), brackets, nil)


def parse_matrix(text: str) -> Matrix:
    """A JSON list of rows, or ``{"rows": [...]}``; entries are scalar
    strings or integers."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if isinstance(data, dict):
        if set(data) != {"rows"}:
            raise ParseError("expected a single 'rows' field", "matrix")
        data = data["rows"]
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("expected a list of rows", "matrix")
    rows = [
        [_coeff(v, f"rows[{i}][{j}]") for j, v in enumerate(row)]
        for i, row in enumerate(data)
    ]
    try:
        return Matrix(rows)
    except LietorError as exc:
        raise ParseError(str(exc), "matrix") from None


def emit_matrix(M: Matrix) -> str:
    return json.dumps({"rows": [[str(x) for x in row] for row in M.entries]}) + "\n"

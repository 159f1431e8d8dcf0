"""Finite-dimensional Lie algebras given by structure constants.

Basis indices are 0-based in the Python API; documents and reports on the
command line use the 1-based numbering of printed tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import InputError, JacobiError, PreconditionError
from .linalg import (
    Matrix,
    Vector,
    echelon,
    from_field,
    sparse_nullspace,
    sparse_rref,
    to_field,
)
from .scalar import ZERO, Scalar, as_scalar

__all__ = [
    "LieAlgebra",
    "Subspace",
    "bracket",
    "jacobi_violations",
    "lower_central_series",
    "derived_series",
    "is_nilpotent",
    "is_solvable",
    "center",
    "generator_indices",
    "direct_sum",
    "apply_basechange",
    "permute_basis",
    "algebras_equal",
    "ad_matrix",
]


def _terms(spec) -> list[tuple[int, Scalar]]:
    if isinstance(spec, Mapping):
        items = spec.items()
    else:
        items = spec
    return [(int(t), as_scalar(c)) for t, c in items]


class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_t c_ij^t e_t``.

    Only pairs ``i < j`` are stored; zero coefficients never are.  The
    constructor accepts either orientation of a pair and flips signs as
    needed, but rejects a pair given twice.
    """

    __slots__ = ("dim", "names", "table", "_full")

    def __init__(
        self,
        dim: int,
        brackets: Mapping | Iterable = (),
        names: Sequence[str] | None = None,
        *,
        validate: bool = True,
    ):
        if dim < 0:
            raise InputError("dimension must be non-negative")
        if names is None:
            names = [f"e{i + 1}" for i in range(dim)]
        names = tuple(names)
        if len(names) != dim:
            raise InputError(f"{len(names)} basis labels for dimension {dim}")
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        table: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        seen = set()
        for (i, j), spec in items:
            i, j = int(i), int(j)
            for idx in (i, j):
                if not 0 <= idx < dim:
                    raise InputError(f"basis index {idx} out of range for dimension {dim}")
            terms = _terms(spec)
            if i == j:
                if any(c for _, c in terms):
                    raise InputError(f"[e{i + 1}, e{i + 1}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if (i, j) in seen:
                raise InputError(f"bracket of e{i + 1}, e{j + 1} given twice")
            seen.add((i, j))
            acc: dict[int, Scalar] = {}
            for t, c in terms:
                if not 0 <= t < dim:
                    raise InputError(f"basis index {t} out of range for dimension {dim}")
                acc[t] = acc.get(t, ZERO) + c * sign
            row = tuple((t, acc[t]) for t in sorted(acc) if acc[t])
            if row:
                table[(i, j)] = row
        full: dict[tuple[int, int], tuple] = {}
        for (i, j), row in table.items():
            fr = tuple((t, to_field(c)) for t, c in row)
            full[(i, j)] = fr
            full[(j, i)] = tuple((t, -c) for t, c in fr)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_full", full)
        if validate:
            bad = jacobi_violations(self)
            if bad:
                raise JacobiError(bad)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls(n)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table and self.names == other.names

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.table.items()))))

    def __repr__(self):
        return f"<LieAlgebra dim={self.dim} brackets={len(self.table)}>"

    def basis_bracket(self, i: int, j: int) -> dict[int, Scalar]:
        """``[e_i, e_j]`` as ``{t: coefficient}``."""
        return {t: from_field(c) for t, c in self._full.get((i, j), ())}

    def field_bracket(self, i: int, j: int) -> tuple:
        """Internal fast form of ``[e_i, e_j]``: ``((t, field value), ...)``."""
        return self._full.get((i, j), ())

    def sparse_bracket(self, x: Mapping[int, object], y: Mapping[int, object]) -> dict:
        """Bracket of sparse vectors holding field values."""
        out: dict = {}
        full = self._full
        for i, a in x.items():
            for j, b in y.items():
                row = full.get((i, j))
                if not row:
                    continue
                ab = a * b
                for t, c in row:
                    v = out.get(t, 0) + ab * c
                    if v:
                        out[t] = v
                    else:
                        out.pop(t, None)
        return out

    def is_abelian(self) -> bool:
        return not self.table


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F^ambient`` stored by its RREF basis rows."""

    ambient: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable, ambient: int) -> "Subspace":
        rows = []
        for v in vectors:
            if isinstance(v, Mapping):
                rows.append({c: to_field(x) for c, x in v.items() if x})
            else:
                rows.append({c: to_field(x) for c, x in enumerate(v) if x})
        return cls._from_sparse(rows, ambient)

    @classmethod
    def _from_sparse(cls, rows, ambient):
        reduced = sparse_rref(rows)
        basis = tuple(
            tuple(from_field(r.get(c, 0)) for c in range(ambient)) for _, r in reduced
        )
        return cls(ambient, basis)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls.span(({i: 1} for i in range(n)), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def sparse_basis(self) -> list[dict]:
        return [{c: to_field(x) for c, x in enumerate(v) if x} for v in self.basis]

    def contains(self, v) -> bool:
        if isinstance(v, Mapping):
            row = {c: to_field(x) for c, x in v.items() if x}
        else:
            row = {c: to_field(x) for c, x in enumerate(v) if x}
        return len(echelon(self.sparse_basis() + [row])) == self.dim

    def issubset(self, other: "Subspace") -> bool:
        return len(echelon(other.sparse_basis() + self.sparse_basis())) == other.dim


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _vec(L: LieAlgebra, x) -> dict:
    if isinstance(x, Mapping):
        return {int(k): to_field(v) for k, v in x.items() if v}
    x = list(x)
    if len(x) != L.dim:
        raise InputError(f"vector of length {len(x)} for algebra of dimension {L.dim}")
    return {i: to_field(v) for i, v in enumerate(x) if v}


def _dense(d: Mapping, n: int) -> Vector:
    return tuple(from_field(d.get(i, 0)) for i in range(n))


def bracket(L: LieAlgebra, x, y) -> Vector:
    """Bilinear bracket of two coordinate vectors."""
    return _dense(L.sparse_bracket(_vec(L, x), _vec(L, y)), L.dim)


def ad_matrix(L: LieAlgebra, i: int) -> Matrix:
    """Matrix of ``ad_{e_i}``; column ``j`` holds the coordinates of ``[e_i, e_j]``."""
    n = L.dim
    rows = [dict() for _ in range(n)]
    for j in range(n):
        for t, c in L.field_bracket(i, j):
            rows[t][j] = c
    return Matrix.from_sparse(rows, n)


def jacobi_violations(L: LieAlgebra) -> list[tuple[int, int, int, Vector]]:
    """Triples ``i < j < k`` whose Jacobi sum is non-zero, with the residual."""
    out = []
    unit = Fraction(1)
    for i, j, k in combinations(range(L.dim), 3):
        res: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = {t: v for t, v in L.field_bracket(a, b)}
            if not inner:
                continue
            for t, v in L.sparse_bracket(inner, {c: unit}).items():
                nv = res.get(t, 0) + v
                if nv:
                    res[t] = nv
                else:
                    res.pop(t, None)
        if res:
            out.append((i, j, k, _dense(res, L.dim)))
    return out


def _bracket_span(L: LieAlgebra, A: list[dict], B: list[dict]) -> Subspace:
    return Subspace._from_sparse(
        [L.sparse_bracket(a, b) for a in A for b in B], L.dim
    )


def _series(L: LieAlgebra, step) -> list[Subspace]:
    current = Subspace.whole(L.dim)
    series = [current]
    while current.dim:
        nxt = step(current)
        series.append(nxt)
        if nxt.dim == current.dim:
            break
        current = nxt
    return series


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """``[L, [L, L], [[L, L], L], ...]`` up to the first repeat or zero."""
    basis = [{i: Fraction(1)} for i in range(L.dim)]
    return _series(L, lambda cur: _bracket_span(L, cur.sparse_basis(), basis))


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """``[L, [L, L], [L', L'], ...]`` up to the first repeat or zero."""
    return _series(
        L, lambda cur: _bracket_span(L, cur.sparse_basis(), cur.sparse_basis())
    )


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def center(L: LieAlgebra) -> Subspace:
    """``{x : [x, e_i] = 0 for every i}``."""
    n = L.dim
    rows = []
    for i in range(n):
        eqs: dict[int, dict] = {}
        for k in range(n):
            for t, c in L.field_bracket(k, i):
                eqs.setdefault(t, {})[k] = c
        rows.extend(eqs.values())
    return Subspace._from_sparse(sparse_nullspace(rows, n), n)


def generator_indices(N: LieAlgebra) -> tuple[int, ...]:
    """Basis indices whose classes form a basis of ``N / [N, N]``.

    Scans the basis in index order and keeps every vector independent of
    ``[N, N]`` plus the vectors already kept.
    """
    series = lower_central_series(N)
    if series[-1].dim:
        raise PreconditionError("generator_indices needs a nilpotent algebra")
    square = series[1] if len(series) > 1 else Subspace(N.dim, ())
    rows = square.sparse_basis()
    chosen = []
    target = N.dim - square.dim
    for i in range(N.dim):
        if len(chosen) == target:
            break
        trial = rows + [{i: Fraction(1)}]
        if len(echelon(trial)) == len(rows) + 1:
            rows = trial
            chosen.append(i)
    return tuple(chosen)


def direct_sum(A: LieAlgebra, B: LieAlgebra, names: Sequence[str] | None = None) -> LieAlgebra:
    """Block direct sum; the basis of ``B`` follows that of ``A``."""
    shift = A.dim
    table = dict(A.table)
    for (i, j), row in B.table.items():
        table[(i + shift, j + shift)] = [(t + shift, c) for t, c in row]
    return LieAlgebra(A.dim + B.dim, table, names, validate=False)


def apply_basechange(L: LieAlgebra, P, names: Sequence[str] | None = None) -> LieAlgebra:
    """Rewrite ``L`` in a new basis.

    Row ``k`` of ``P`` gives the new basis vector ``f_k`` in old coordinates,
    so ``f_k = sum_j P[k][j] e_j``; the new constants solve
    ``[f_a, f_b] = sum_c c'_ab^c f_c``.
    """
    if not isinstance(P, Matrix):
        P = Matrix(P)
    n = L.dim
    if P.shape != (n, n):
        raise InputError(f"base change must be {n}x{n}, got {P.rows}x{P.cols}")
    to_new = P.transpose().inverse().to_sparse()
    new_vecs = P.to_sparse()
    table = {}
    for a, b in combinations(range(n), 2):
        u = L.sparse_bracket(new_vecs[a], new_vecs[b])
        if not u:
            continue
        coords = {}
        for r, row in enumerate(to_new):
            s = 0
            for c, v in row.items():
                x = u.get(c)
                if x:
                    s = s + v * x
            if s:
                coords[r] = from_field(s)
        if coords:
            table[(a, b)] = coords
    out = LieAlgebra(n, table, names or L.names, validate=False)
    bad = jacobi_violations(out)
    if bad:
        raise JacobiError(bad)
    return out


def permute_basis(L: LieAlgebra, perm: Sequence[int]) -> LieAlgebra:
    """Reorder the basis: new basis vector ``k`` is old ``e_{perm[k]}``."""
    n = L.dim
    if sorted(perm) != list(range(n)):
        raise InputError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    new_index = {old: new for new, old in enumerate(perm)}
    table = {
        (new_index[i], new_index[j]): [(new_index[t], c) for t, c in row]
        for (i, j), row in L.table.items()
    }
    return LieAlgebra(n, table, [L.names[p] for p in perm], validate=False)


def algebras_equal(A: LieAlgebra, B: LieAlgebra) -> bool:
    """Exact equality of structure constants; basis labels are ignored."""
    if A.dim != B.dim:
        raise InputError(f"dimension mismatch: {A.dim} vs {B.dim}")
    return A.table == B.table

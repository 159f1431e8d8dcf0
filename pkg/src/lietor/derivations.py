"""Derivation algebras and the characteristic-nilpotency test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, PreconditionError
from .lie import LieAlgebra, ad_matrix, is_nilpotent
from .linalg import Matrix, echelon, sparse_nullspace

__all__ = [
    "DerivationSpace",
    "derivation_space",
    "leibniz_rows",
    "inner_derivations",
    "is_derivation",
    "all_nilpotent",
    "is_characteristically_nilpotent",
]


@dataclass(frozen=True)
class DerivationSpace:
    """Basis of ``Der(L)``; entry ``[i][j]`` of a basis matrix is the
    coefficient of ``e_i`` in ``D(e_j)``."""

    ambient: LieAlgebra
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)


def leibniz_rows(L: LieAlgebra) -> list[dict]:
    """Sparse rows of the Leibniz system on the ``n*n`` unknowns ``D[i][j]``.

    Unknown ``D[i][j]`` has column ``i*n + j``.  One row per basis pair
    ``a < b`` and output coordinate ``k``:
    ``sum_t c_ab^t D[k][t] - sum_i c_ib^k D[i][a] - sum_i c_ai^k D[i][b] = 0``.
    """
    n = L.dim
    rows = []
    for a in range(n):
        for b in range(a + 1, n):
            eqs: dict[int, dict] = {}

            def add(k, col, val):
                row = eqs.setdefault(k, {})
                v = row.get(col, 0) + val
                if v:
                    row[col] = v
                else:
                    row.pop(col, None)

            for t, c in L.field_bracket(a, b):
                for k in range(n):
                    add(k, k * n + t, c)
            for i in range(n):
                for k, c in L.field_bracket(i, b):
                    add(k, i * n + a, -c)
                for k, c in L.field_bracket(a, i):
                    add(k, i * n + b, -c)
            rows.extend(r for r in eqs.values() if r)
    return rows


def derivation_space(L: LieAlgebra) -> DerivationSpace:
    n = L.dim
    kernel = sparse_nullspace(leibniz_rows(L), n * n)
    basis = []
    for vec in kernel:
        rows = [dict() for _ in range(n)]
        for col, v in vec.items():
            rows[col // n][col % n] = v
        basis.append(Matrix.from_sparse(rows, n))
    return DerivationSpace(L, tuple(basis))


def inner_derivations(L: LieAlgebra) -> list[Matrix]:
    return [ad_matrix(L, i) for i in range(L.dim)]


def is_derivation(L: LieAlgebra, D) -> bool:
    """Check the Leibniz rule for ``D`` on every basis pair."""
    if not isinstance(D, Matrix):
        D = Matrix(D)
    n = L.dim
    if D.shape != (n, n):
        raise InputError(f"expected a {n}x{n} matrix, got {D.rows}x{D.cols}")
    flat = {}
    for i, row in enumerate(D.to_sparse()):
        for j, v in row.items():
            flat[i * n + j] = v
    for row in leibniz_rows(L):
        s = 0
        for col, c in row.items():
            x = flat.get(col)
            if x:
                s = s + c * x
        if s:
            return False
    return True


def _mul(A: list[dict], B: list[dict]) -> list[dict]:
    out = []
    for row in A:
        acc: dict = {}
        for r, a in row.items():
            for c, b in B[r].items():
                v = acc.get(c, 0) + a * b
                if v:
                    acc[c] = v
                else:
                    acc.pop(c, None)
        out.append(acc)
    return out


def _flatten(M: list[dict], n: int) -> dict:
    return {i * n + j: v for i, row in enumerate(M) for j, v in row.items()}


def _check_closed(mats: list[list[dict]], n: int) -> None:
    pivots = echelon(_flatten(m, n) for m in mats)
    dim = len(pivots)
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            ab = _mul(mats[a], mats[b])
            ba = _mul(mats[b], mats[a])
            comm = _flatten(ab, n)
            for k, v in _flatten(ba, n).items():
                nv = comm.get(k, 0) - v
                if nv:
                    comm[k] = nv
                else:
                    comm.pop(k, None)
            if comm and len(echelon(list(pivots.values()) + [comm])) > dim:
                raise PreconditionError(
                    f"span is not closed under commutators (basis elements {a + 1}, {b + 1})"
                )


def all_nilpotent(space: DerivationSpace | Sequence) -> bool:
    """True iff every operator in the span of the basis is nilpotent.

    Builds the flag ``V_0 = 0``, ``V_{k+1} = {v : D v in V_k for all D}``.
    For a Lie algebra of operators, Engel's theorem says the flag reaches
    the whole space exactly when every element is nilpotent.
    """
    mats = list(space.basis if isinstance(space, DerivationSpace) else space)
    mats = [m if isinstance(m, Matrix) else Matrix(m) for m in mats]
    if not mats:
        return True
    n = mats[0].rows
    for m in mats:
        if m.shape != (n, n):
            raise InputError("operators must be square and of equal size")
    sparse = [m.to_sparse() for m in mats]
    _check_closed(sparse, n)

    annihilator = [{i: Fraction(1)} for i in range(n)]  # V_0 = 0
    level = 0
    while True:
        rows = []
        for D in sparse:
            rows.extend(r for r in _mul(annihilator, D) if r)
        kernel = sparse_nullspace(rows, n)
        if len(kernel) == n:
            return True
        if len(kernel) == level:
            return False
        level = len(kernel)
        annihilator = sparse_nullspace(kernel, n)


def is_characteristically_nilpotent(N: LieAlgebra) -> bool:
    if N.dim < 1:
        raise PreconditionError("characteristic nilpotency needs dim >= 1")
    if not is_nilpotent(N):
        raise PreconditionError("algebra is not nilpotent")
    return all_nilpotent(derivation_space(N))

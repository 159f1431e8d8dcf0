"""Maximal solvable extensions ``R = N + Q`` of nilpotent algebras.

The basis of an extension is always ``e_1..e_n, x_1..x_s`` with
``[e_i, x_j] = W[j][i] e_i`` and ``[x_i, x_j] = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ConsistencyError, InputError, JacobiError, PreconditionError
from .lie import (
    LieAlgebra,
    algebras_equal,
    direct_sum,
    is_nilpotent,
    jacobi_violations,
    permute_basis,
)
from .linalg import Matrix, sparse_rank
from .torus import ConditionAReport, WeightMatrix, condition_A_check, maximal_torus

__all__ = [
    "SolvableExtension",
    "extension_from_weights",
    "build_max_extension",
    "verify_nilradical_certificate",
    "build_split_extension",
    "split_permutation",
    "from_algebra",
    "nilradical_of",
]

CONDITION_A_WARNING = "condition A violated; uniqueness of the extension is not asserted"


@dataclass(frozen=True)
class SolvableExtension:
    algebra: LieAlgebra
    nilradical_dim: int
    torus: WeightMatrix
    condition_a: ConditionAReport | None = None
    warnings: tuple = field(default=())
    permutation: tuple | None = None

    @property
    def s(self) -> int:
        return self.algebra.dim - self.nilradical_dim

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def nilradical(self) -> LieAlgebra:
        return nilradical_of(self.algebra, self.nilradical_dim)


def nilradical_of(L: LieAlgebra, n: int) -> LieAlgebra:
    """The subalgebra on the first ``n`` basis vectors, assumed closed."""
    table = {
        (i, j): row for (i, j), row in L.table.items() if i < n and j < n
    }
    for row in table.values():
        if any(t >= n for t, _ in row):
            raise ConsistencyError(f"first {n} basis vectors do not span a subalgebra")
    return LieAlgebra(n, table, L.names[:n], validate=False)


def _default_names(n: int, s: int) -> list[str]:
    return [f"e{i + 1}" for i in range(n)] + [f"x{j + 1}" for j in range(s)]


def extension_from_weights(N: LieAlgebra, weights, names: Sequence[str] | None = None) -> SolvableExtension:
    """Semidirect sum of ``N`` with the diagonal derivations given by the rows
    of ``weights``.  Rows need not be independent or even non-zero, which is
    how non-maximal and degenerate extensions are built for comparison."""
    W = weights if isinstance(weights, WeightMatrix) else WeightMatrix(
        weights if isinstance(weights, Matrix) else Matrix(weights, N.dim)
    )
    n, s = N.dim, W.s
    if W.n != n:
        raise InputError(f"weights have {W.n} columns, nilradical has dimension {n}")
    table = dict(N.table)
    for j, row in enumerate(W.weights.entries):
        for i, a in enumerate(row):
            if a:
                table[(i, n + j)] = [(i, a)]
    if names is None:
        names = list(N.names) + [f"x{j + 1}" for j in range(s)]
    R = LieAlgebra(n + s, table, names, validate=False)
    bad = jacobi_violations(R)
    if bad:
        raise JacobiError(bad)
    return SolvableExtension(R, n, W)


def build_max_extension(N: LieAlgebra) -> SolvableExtension:
    if not is_nilpotent(N):
        raise PreconditionError("build_max_extension needs a nilpotent algebra")
    W = maximal_torus(N)
    if W.s == 0:
        raise PreconditionError("characteristically nilpotent nilradical; no torus")
    report = condition_A_check(N, W)
    warnings = list(report.warnings)
    if not report.holds:
        warnings.append(CONDITION_A_WARNING)
    ext = extension_from_weights(N, W)
    return SolvableExtension(ext.algebra, ext.nilradical_dim, W, report, tuple(warnings))


def read_weights(L: LieAlgebra, n: int) -> Matrix | None:
    """Torus weights of ``L`` over its first ``n`` basis vectors, or ``None``
    when the action is not diagonal or the complement is not abelian."""
    s = L.dim - n
    rows = [dict() for _ in range(s)]
    for (i, j), row in L.table.items():
        if i >= n and j >= n:
            return None
        if i < n <= j:
            if len(row) != 1 or row[0][0] != i:
                return None
            rows[j - n][i] = row[0][1]
    return Matrix.from_sparse(rows, n) if s else Matrix([], n)


def from_algebra(L: LieAlgebra, nilradical_dim: int) -> SolvableExtension:
    """Interpret ``L`` as an extension whose first ``nilradical_dim`` basis
    vectors form the nilradical."""
    n = nilradical_dim
    if not 0 < n <= L.dim:
        raise InputError(f"nilradical_dim {n} out of range for dimension {L.dim}")
    nilradical_of(L, n)  # raises unless the first n vectors are closed
    W = read_weights(L, n)
    if W is None:
        raise InputError("complement must be abelian and act diagonally on the nilradical")
    return SolvableExtension(L, n, WeightMatrix(W))


def verify_nilradical_certificate(R: SolvableExtension) -> bool:
    """``N`` is a nilpotent ideal and ``Q`` acts through independent non-zero
    diagonals, so no element of ``Q`` can be added to a nilpotent ideal."""
    L, n = R.algebra, R.nilradical_dim
    for (i, j), row in L.table.items():
        if i < n and any(t >= n for t, _ in row):
            return False
    if not is_nilpotent(nilradical_of(L, n)):
        return False
    W = read_weights(L, n)
    if W is None:
        return False
    rows = W.to_sparse()
    if any(not r for r in rows):
        return False
    return sparse_rank(rows) == len(rows)


def split_permutation(dims: Sequence[int], tori: Sequence[int]) -> tuple[int, ...]:
    """Permutation taking the block order ``N_1, Q_1, N_2, Q_2, ...`` to
    ``N_1, N_2, ..., Q_1, Q_2, ...``.  Entry ``k`` is the block-order index
    of the ``k``-th vector in the target order."""
    starts = []
    pos = 0
    for d, s in zip(dims, tori):
        starts.append(pos)
        pos += d + s
    perm = []
    for st, d in zip(starts, dims):
        perm.extend(range(st, st + d))
    for st, d, s in zip(starts, dims, tori):
        perm.extend(range(st + d, st + d + s))
    return tuple(perm)


def build_split_extension(parts: Sequence[LieAlgebra]) -> SolvableExtension:
    """Direct sum of the maximal extensions of the parts, rewritten in the
    order ``e``'s first; checked against the extension of the direct sum."""
    if not parts:
        raise InputError("need at least one part")
    exts = []
    for k, part in enumerate(parts, 1):
        try:
            exts.append(build_max_extension(part))
        except PreconditionError as exc:
            raise PreconditionError(f"part {k}: {exc}") from exc
    block = exts[0].algebra
    for ext in exts[1:]:
        block = direct_sum(block, ext.algebra)
    dims = [p.dim for p in parts]
    tori = [e.s for e in exts]
    perm = split_permutation(dims, tori)
    n, s = sum(dims), sum(tori)
    merged = permute_basis(block, perm)
    merged = LieAlgebra(n + s, merged.table, _default_names(n, s), validate=False)

    N = parts[0]
    for p in parts[1:]:
        N = direct_sum(N, p)
    reference = build_max_extension(N)
    if not algebras_equal(merged, reference.algebra):
        raise ConsistencyError("split extension differs from the extension of the direct sum")
    return SolvableExtension(
        merged, n, reference.torus, reference.condition_a, reference.warnings, perm
    )

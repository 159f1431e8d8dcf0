"""Weight equations S_e, the canonical maximal torus and condition A."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, InputError, PreconditionError
from .lie import LieAlgebra, generator_indices, is_nilpotent
from .linalg import Matrix, Vector, sparse_nullspace, sparse_rank, sparse_rref, to_field

__all__ = [
    "WeightEquations",
    "WeightMatrix",
    "ConditionAReport",
    "weight_equations",
    "maximal_torus",
    "condition_A_check",
]


@dataclass(frozen=True)
class WeightEquations:
    """One row ``a_i + a_j - a_t`` per non-zero constant ``c_ij^t``."""

    source: LieAlgebra
    matrix: Matrix
    triples: tuple  # (i, j, t) producing each row, 0-based

    @property
    def rank(self) -> int:
        return sparse_rank(self.matrix.to_sparse())


@dataclass(frozen=True)
class WeightMatrix:
    """``s x n`` torus weights.  Row ``k`` is the diagonal of the derivation
    ``x_k``; column ``i`` is the weight of ``e_i``."""

    weights: Matrix
    free_columns: tuple = ()
    rank: int | None = None

    @property
    def s(self) -> int:
        return self.weights.rows

    @property
    def n(self) -> int:
        return self.weights.cols

    def weight(self, i: int) -> Vector:
        return self.weights.column(i)

    def rows(self) -> list[Vector]:
        return list(self.weights.entries)

    def diagonal_derivations(self) -> list[Matrix]:
        n = self.n
        return [
            Matrix.from_sparse([{i: to_field(row[i])} if row[i] else {} for i in range(n)], n)
            for row in self.weights.entries
        ]


@dataclass(frozen=True)
class ConditionAReport:
    holds: bool
    violations: tuple  # pairs (i, j), 0-based, i < j
    free_set: tuple
    generators: tuple
    warnings: tuple = field(default=())


def weight_equations(N: LieAlgebra) -> WeightEquations:
    rows = []
    triples = []
    seen = set()
    for (i, j) in sorted(N.table):
        for t, _ in N.table[(i, j)]:
            acc: dict[int, int] = {}
            for idx, v in ((i, 1), (j, 1), (t, -1)):
                acc[idx] = acc.get(idx, 0) + v
            row = tuple(sorted((k, v) for k, v in acc.items() if v))
            if not row or row in seen:
                continue
            seen.add(row)
            rows.append({k: Fraction(v) for k, v in row})
            triples.append((i, j, t))
    return WeightEquations(N, Matrix.from_sparse(rows, N.dim), tuple(triples))


def _check_grading(N: LieAlgebra, weights: Matrix) -> None:
    cols = [weights.column(i) for i in range(N.dim)]
    for (i, j), row in N.table.items():
        for t, _ in row:
            if tuple(a + b for a, b in zip(cols[i], cols[j])) != cols[t]:
                raise ConsistencyError(
                    f"torus row is not a derivation at e{i + 1}, e{j + 1} -> e{t + 1}"
                )


def maximal_torus(N: LieAlgebra) -> WeightMatrix:
    """Canonical fundamental solutions of ``S_e``.

    Elimination pivots on non-generator columns first (ascending), then on
    generator columns from the highest index down.  The free parameters are
    therefore generators whenever the basis allows it, and the earliest
    generators among those.  There is one row per free column, with 1 on that
    column and 0 on the other free columns.  ``s = n - rank``.
    """
    if not is_nilpotent(N):
        raise PreconditionError("maximal_torus needs a nilpotent algebra")
    n = N.dim
    gens = set(generator_indices(N))
    order = [c for c in range(n) if c not in gens] + sorted(gens, reverse=True)
    position = {c: k for k, c in enumerate(order)}
    eqs = weight_equations(N)
    permuted = [{position[c]: v for c, v in row.items()} for row in eqs.matrix.to_sparse()]
    reduced = sparse_rref(permuted)
    pivots = {order[c] for c, _ in reduced}
    free = tuple(c for c in range(n) if c not in pivots)
    kernel = [
        {order[c]: v for c, v in vec.items()} for vec in sparse_nullspace(permuted, n)
    ]
    kernel.sort(key=lambda vec: min(c for c in vec if c in free))
    weights = Matrix.from_sparse(kernel, n)
    _check_grading(N, weights)
    return WeightMatrix(weights, free, len(reduced))


def condition_A_check(N: LieAlgebra, W: WeightMatrix) -> ConditionAReport:
    """Distinct weight columns among generators outside the free set.

    Every equal-column pair is listed, so a caller can see all coincidences
    and not just the first.
    """
    if W.n != N.dim:
        raise InputError(f"weight matrix has {W.n} columns, algebra has dimension {N.dim}")
    gens = generator_indices(N)
    free = tuple(W.free_columns)
    warnings = []
    outside = [c for c in free if c not in gens]
    if outside:
        warnings.append(
            "free columns "
            + ", ".join(f"e{c + 1}" for c in outside)
            + " are not generators; predicate evaluated against the computed free set"
        )
    check = [g for g in gens if g not in free]
    violations = []
    for a in range(len(check)):
        for b in range(a + 1, len(check)):
            i, j = check[a], check[b]
            if W.weight(i) == W.weight(j):
                violations.append((i, j))
    return ConditionAReport(
        holds=not violations,
        violations=tuple(violations),
        free_set=free,
        generators=gens,
        warnings=tuple(warnings),
    )

"""Chevalley-Eilenberg cohomology with coefficients in a finite module.

Conventions used throughout:

* ``C^m`` has basis ``delta_{S,v}`` for ``S`` an increasing ``m``-subset of
  the source basis (in ``itertools.combinations`` order) and ``v`` a module
  basis index; the flat index is ``subset_index * module_dim + v``.
* ``(d phi)(x_1..x_{m+1}) = sum_i (-1)^(i+1) x_i . phi(..^x_i..)
  + sum_{i<j} (-1)^(i+j) phi([x_i, x_j], ..^x_i..^x_j..)``.
* ``Z^m = ker d^m``, ``B^m = im d^(m-1)``, so
  ``dim H^m = dim C^m - rank d^m - rank d^(m-1)`` with ``d^(-1) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import ConsistencyError, InputError
from .extension import SolvableExtension
from .lie import LieAlgebra
from .linalg import Matrix, echelon, from_field, sparse_nullspace, sparse_rank

__all__ = [
    "ModuleAction",
    "CochainSlice",
    "InvariantCochains",
    "adjoint_action",
    "restriction_action",
    "coboundary_matrix",
    "cohomology_dim",
    "cochain_dim",
    "invariant_cochain_basis",
    "invariant_cohomology_dim",
    "restricted_coboundary_rank",
    "hochschild_serre_dim",
]


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModuleAction:
    """``rho(e_i)`` as ``module_dim x module_dim`` matrices, one per basis
    vector of ``algebra``.  The representation law is checked on creation."""

    algebra: LieAlgebra
    module_dim: int
    action: tuple
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise InputError(
                f"{len(self.action)} action matrices for an algebra of dimension {self.algebra.dim}"
            )
        for M in self.action:
            if M.shape != (self.module_dim, self.module_dim):
                raise InputError(f"action matrix has shape {M.shape}, expected square {self.module_dim}")
        if self.check:
            bad = _representation_failure(self)
            if bad is not None:
                raise InputError(
                    f"not a representation: rho([e{bad[0] + 1}, e{bad[1] + 1}]) != [rho(e{bad[0] + 1}), rho(e{bad[1] + 1})]"
                )

    @cached_property
    def columns(self) -> tuple:
        """``columns[i][v]`` lists ``(w, value)`` with ``rho(e_i) e_v = sum value e_w``."""
        out = []
        for M in self.action:
            cols = [[] for _ in range(self.module_dim)]
            for w, row in enumerate(M.to_sparse()):
                for v, val in row.items():
                    cols[v].append((w, val))
            out.append(tuple(tuple(c) for c in cols))
        return tuple(out)


def _representation_failure(mod: ModuleAction):
    L = mod.algebra
    mats = [M.to_sparse() for M in mod.action]
    m = mod.module_dim

    def mul(A, B):
        out = []
        for row in A:
            acc = {}
            for r, a in row.items():
                for c, b in B[r].items():
                    v = acc.get(c, 0) + a * b
                    if v:
                        acc[c] = v
                    else:
                        acc.pop(c, None)
            out.append(acc)
        return out

    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            ab, ba = mul(mats[i], mats[j]), mul(mats[j], mats[i])
            lhs = [dict() for _ in range(m)]
            for t, c in L.field_bracket(i, j):
                for r, row in enumerate(mats[t]):
                    for col, v in row.items():
                        lhs[r][col] = lhs[r].get(col, 0) + c * v
            for r in range(m):
                keys = set(lhs[r]) | set(ab[r]) | set(ba[r])
                for k in keys:
                    if lhs[r].get(k, 0) - ab[r].get(k, 0) + ba[r].get(k, 0):
                        return (i, j)
    return None


def _ad_on(L: LieAlgebra, i: int) -> Matrix:
    n = L.dim
    rows = [dict() for _ in range(n)]
    for j in range(n):
        for t, c in L.field_bracket(i, j):
            rows[t][j] = c
    return Matrix.from_sparse(rows, n)


def adjoint_action(L: LieAlgebra) -> ModuleAction:
    return ModuleAction(L, L.dim, tuple(_ad_on(L, i) for i in range(L.dim)))


def restriction_action(R: SolvableExtension) -> ModuleAction:
    """The nilradical ``N`` acting on all of ``R`` by ``ad``."""
    L = R.algebra
    return ModuleAction(
        R.nilradical, L.dim, tuple(_ad_on(L, i) for i in range(R.nilradical_dim))
    )


# ---------------------------------------------------------------------------
# coboundary
# ---------------------------------------------------------------------------

def cochain_dim(source_dim: int, module_dim: int, m: int) -> int:
    if m < 0 or m > source_dim:
        return 0
    return comb(source_dim, m) * module_dim


@lru_cache(maxsize=64)
def _subsets(n: int, m: int) -> tuple:
    if m < 0 or m > n:
        return ()
    return tuple(combinations(range(n), m))


@lru_cache(maxsize=64)
def _subset_index(n: int, m: int) -> dict:
    return {S: k for k, S in enumerate(_subsets(n, m))}


def _by_target(L: LieAlgebra) -> dict:
    out: dict[int, list] = {}
    for (a, b) in sorted(L.table):
        for t, c in L.field_bracket(a, b):
            out.setdefault(t, []).append((a, b, c))
    return out


@lru_cache(maxsize=32)
def _columns(L: LieAlgebra, mod: ModuleAction, m: int) -> tuple:
    """Sparse columns of ``d^m``; column ``k`` is ``d(delta_k)``."""
    n, md = L.dim, mod.module_dim
    src = _subsets(n, m)
    dst_index = _subset_index(n, m + 1)
    rho = mod.columns
    targets = _by_target(L)
    cols = []
    for S in src:
        Sset = set(S)
        # term 1: T = S + {t}
        term1 = []
        for t in range(n):
            if t in Sset:
                continue
            T = tuple(sorted(S + (t,)))
            pos = T.index(t) + 1
            sign = 1 if pos % 2 else -1
            term1.append((dst_index[T] * md, t, sign))
        # term 2: phi([e_a, e_b], rest) with {k} + rest = S
        term2: dict[int, object] = {}
        for q, k in enumerate(S):
            R = S[:q] + S[q + 1:]
            Rset = set(R)
            sq = -1 if q % 2 else 1
            for a, b, c in targets.get(k, ()):
                if a in Rset or b in Rset:
                    continue
                T = tuple(sorted(R + (a, b)))
                i, j = T.index(a) + 1, T.index(b) + 1
                sign = sq if (i + j) % 2 == 0 else -sq
                base = dst_index[T]
                term2[base] = term2.get(base, 0) + sign * c
        for v in range(md):
            col: dict = {}
            for base, t, sign in term1:
                for w, val in rho[t][v]:
                    key = base + w
                    x = col.get(key, 0) + (val if sign > 0 else -val)
                    if x:
                        col[key] = x
                    else:
                        col.pop(key, None)
            for base, val in term2.items():
                if not val:
                    continue
                key = base * md + v
                x = col.get(key, 0) + val
                if x:
                    col[key] = x
                else:
                    col.pop(key, None)
            cols.append(col)
    return tuple(cols)


@dataclass(frozen=True)
class CochainSlice:
    """``d^m : C^m -> C^(m+1)`` stored by sparse columns."""

    degree: int
    source_dim: int
    module_dim: int
    columns: tuple = field(repr=False)

    @property
    def subsets(self) -> tuple:
        return _subsets(self.source_dim, self.degree)

    @property
    def next_subsets(self) -> tuple:
        return _subsets(self.source_dim, self.degree + 1)

    @property
    def dim_source(self) -> int:
        return cochain_dim(self.source_dim, self.module_dim, self.degree)

    @property
    def dim_target(self) -> int:
        return cochain_dim(self.source_dim, self.module_dim, self.degree + 1)

    def index(self, S: Sequence[int], v: int) -> int:
        return _subset_index(self.source_dim, self.degree)[tuple(S)] * self.module_dim + v

    @cached_property
    def rank(self) -> int:
        return sparse_rank(self.columns)

    @cached_property
    def boundary(self) -> Matrix:
        rows = [dict() for _ in range(self.dim_target)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                rows[r][c] = v
        return Matrix.from_sparse(rows, self.dim_source)

    def apply(self, vec: dict) -> dict:
        """Image of a sparse cochain (field values) under ``d^m``."""
        out: dict = {}
        for k, a in vec.items():
            for r, v in self.columns[k].items():
                x = out.get(r, 0) + a * v
                if x:
                    out[r] = x
                else:
                    out.pop(r, None)
        return out


def coboundary_matrix(source: LieAlgebra, mod: ModuleAction, m: int) -> CochainSlice:
    if mod.algebra.dim != source.dim:
        raise InputError("module is over a different algebra")
    if not 0 <= m <= source.dim:
        raise InputError(f"degree {m} outside 0..{source.dim}")
    return CochainSlice(m, source.dim, mod.module_dim, _columns(source, mod, m))


def _rank(source: LieAlgebra, mod: ModuleAction, m: int) -> int:
    if m < 0 or m >= source.dim:
        return 0
    return coboundary_matrix(source, mod, m).rank


def cohomology_dim(source: LieAlgebra, mod: ModuleAction, m: int) -> int:
    if not 0 <= m <= source.dim:
        raise InputError(f"degree {m} outside 0..{source.dim}")
    return (
        cochain_dim(source.dim, mod.module_dim, m)
        - _rank(source, mod, m)
        - _rank(source, mod, m - 1)
    )


# ---------------------------------------------------------------------------
# Q-invariant subcomplex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantCochains:
    """Basis of ``C^m(N, R)^Q`` as sparse vectors over the ``delta_{S,v}`` basis."""

    degree: int
    source_dim: int
    module_dim: int
    vectors: tuple = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def labels(self) -> list:
        """``(S, v)`` for unit basis vectors; ``None`` for mixed ones."""
        subsets = _subsets(self.source_dim, self.degree)
        out = []
        for vec in self.vectors:
            if len(vec) == 1:
                k = next(iter(vec))
                out.append((subsets[k // self.module_dim], k % self.module_dim))
            else:
                out.append(None)
        return out

    def dense(self) -> list:
        size = cochain_dim(self.source_dim, self.module_dim, self.degree)
        return [tuple(from_field(v.get(k, 0)) for k in range(size)) for v in self.vectors]


def _sort_sign(seq: list) -> tuple[int, tuple] | None:
    """Sign of the permutation sorting ``seq``; ``None`` on a repeat."""
    if len(set(seq)) != len(seq):
        return None
    sign = 1
    arr = list(seq)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def _torus_operator_rows(R: SolvableExtension, m: int) -> list[dict]:
    """Rows of the system ``(x_j . phi) = 0`` for every torus basis ``x_j``.

    ``(x . phi)(y_1..y_m) = [x, phi(y_1..y_m)] - sum_i phi(y_1..[x, y_i]..y_m)``.
    """
    L, n = R.algebra, R.nilradical_dim
    md = L.dim
    subsets = _subsets(n, m)
    index = _subset_index(n, m)
    rows = []
    for j in range(n, L.dim):
        eqs: dict[int, dict] = {}

        def add(out_key, col_key, val):
            row = eqs.setdefault(out_key, {})
            x = row.get(col_key, 0) + val
            if x:
                row[col_key] = x
            else:
                row.pop(col_key, None)

        # preimage[k] lists (t, c) with [x_j, e_t] = ... + c e_k + ...
        preimage: dict[int, list] = {}
        for t in range(n):
            for k, c in L.field_bracket(j, t):
                if k >= n:
                    raise ConsistencyError("torus does not preserve the nilradical")
                preimage.setdefault(k, []).append((t, c))

        for si, S in enumerate(subsets):
            for v in range(md):
                col_key = si * md + v
                # [x, phi(e_S)] with phi = delta_{S,v}
                for w, c in L.field_bracket(j, v):
                    add(si * md + w, col_key, c)
                # -phi(.., [x, e_t], ..) on an output subset T: non-zero when
                # putting k in place of t turns T into S (up to order)
                for q, k in enumerate(S):
                    for t, c in preimage.get(k, ()):
                        seq = list(S)
                        seq[q] = t
                        res = _sort_sign(seq)
                        if res is None:
                            continue
                        sign, T = res
                        add(index[T] * md + v, col_key, -c * sign)
        rows.extend(r for r in eqs.values() if r)
    return rows


@lru_cache(maxsize=64)
def _invariants(R: SolvableExtension, m: int, method: str) -> tuple:
    n, md = R.nilradical_dim, R.algebra.dim
    if method == "weights":
        W = R.torus.weights
        wcols = [W.column(i) for i in range(n)]
        zero = tuple(0 for _ in range(R.s))
        out = []
        for si, S in enumerate(_subsets(n, m)):
            total = tuple(sum((wcols[i][r] for i in S), 0) for r in range(R.s)) if S else zero
            for v in range(md):
                target = wcols[v] if v < n else zero
                if all(a == b for a, b in zip(total, target)):
                    out.append({si * md + v: Fraction(1)})
        return tuple(out)
    if method == "literal":
        size = cochain_dim(n, md, m)
        return tuple(sparse_nullspace(_torus_operator_rows(R, m), size))
    raise InputError(f"unknown method {method!r}; use 'literal' or 'weights'")


def invariant_cochain_basis(R: SolvableExtension, m: int, method: str = "literal") -> InvariantCochains:
    """Basis of the ``Q``-invariant ``m``-cochains ``N^m -> R``.

    ``literal`` solves the torus-action equations as a linear system;
    ``weights`` keeps ``delta_{S,v}`` when the weights of ``S`` sum to the
    weight of ``v``.  For a diagonal action the two agree exactly.
    """
    if not 0 <= m <= R.nilradical_dim:
        raise InputError(f"degree {m} outside 0..{R.nilradical_dim}")
    vecs = _invariants(R, m, method)
    return InvariantCochains(m, R.nilradical_dim, R.algebra.dim, vecs)


def _restricted_rank(R: SolvableExtension, m: int, method: str) -> int:
    n = R.nilradical_dim
    if m < 0 or m >= n:
        return 0
    mod = restriction_action(R)
    d = coboundary_matrix(mod.algebra, mod, m)
    src = _invariants(R, m, method)
    dst = _invariants(R, m + 1, method)
    images = [d.apply(v) for v in src]
    unit = all(len(v) == 1 for v in dst)
    if unit:
        allowed = {next(iter(v)) for v in dst}
        for img in images:
            if not set(img) <= allowed:
                raise ConsistencyError(f"d^{m} does not preserve invariant cochains")
    else:
        base = echelon(dst)
        for img in images:
            if img and len(echelon(list(base.values()) + [img])) > len(base):
                raise ConsistencyError(f"d^{m} does not preserve invariant cochains")
    return sparse_rank(images)


def restricted_coboundary_rank(R: SolvableExtension, m: int, method: str = "weights") -> int:
    """Rank of ``d^m`` on the invariant subcomplex (``0`` outside ``0..n-1``)."""
    return _restricted_rank(R, m, method)


def invariant_cohomology_dim(R: SolvableExtension, b: int, method: str = "weights") -> int:
    """``dim H^b(N, R)^Q`` from the invariant subcomplex.

    Degree 0 uses ``H^0(N, R) = {r : [e, r] = 0 for e in N}``, then takes
    the weight-zero part.
    """
    n = R.nilradical_dim
    if b < 0:
        raise InputError("degree must be non-negative")
    if b > n:
        return 0
    return (
        len(_invariants(R, b, method))
        - _restricted_rank(R, b, method)
        - _restricted_rank(R, b - 1, method)
    )


def hochschild_serre_dim(R: SolvableExtension, p: int, method: str = "weights") -> int:
    """``sum_{a+b=p} C(s, a) dim H^b(N, R)^Q``."""
    if p < 0:
        raise InputError("degree must be non-negative")
    return sum(
        comb(R.s, a) * invariant_cohomology_dim(R, p - a, method)
        for a in range(0, min(p, R.s) + 1)
    )

"""Dense exact matrices over Q(i) with RREF, rank, nullspace and solve.

The public surface is the immutable :class:`Matrix` plus the functions
:func:`rank`, :func:`nullspace_basis`, :func:`solve_linear` and :func:`rref`.
Internally elimination runs on sparse rows (``dict`` column -> value) whose
values are plain :class:`~fractions.Fraction` whenever the data is real and
:class:`~lietor.scalar.Scalar` otherwise.  Results are converted back to
``Scalar``, and since the reduced row-echelon form is unique the sparse route
returns exactly what a dense Gauss-Jordan pass would.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Matrix",
    "Vector",
    "rank",
    "rref",
    "nullspace_basis",
    "solve_linear",
    "to_field",
    "from_field",
    "echelon",
    "sparse_rank",
    "sparse_nullspace",
    "sparse_rref",
]

Vector = tuple  # tuple of Scalar


def to_field(value):
    """Fast internal representation: Fraction when real, Scalar otherwise."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    value = as_scalar(value)
    return value.re if value.im == 0 else value


def from_field(value) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(value)


# ---------------------------------------------------------------------------
# sparse elimination core
# ---------------------------------------------------------------------------

def echelon(rows: Iterable[dict]) -> dict:
    """Row-reduce sparse rows into ``{lead column: normalized row}``.

    Each returned row has leading coefficient 1 and no entry in any other
    row's lead column *to its left*; it is an echelon form, not yet reduced.
    Values must already be field values (see :func:`to_field`).
    """
    pivots: dict = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                inv = 1 / r[lead]
                pivots[lead] = {c: v * inv for c, v in r.items()}
                break
            f = r[lead]
            for c, v in p.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return pivots


def _reduce(pivots: dict) -> list[tuple[int, dict]]:
    """Back-substitute an echelon form into RREF, sorted by lead column."""
    leads = sorted(pivots)
    rows = {c: dict(pivots[c]) for c in leads}
    for c in reversed(leads):
        pr = rows[c]
        for other in leads:
            if other >= c:
                break
            r = rows[other]
            f = r.get(c)
            if f:
                for k, v in pr.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
    return [(c, rows[c]) for c in leads]


def sparse_rank(rows: Iterable[dict]) -> int:
    return len(echelon(rows))


def sparse_rref(rows: Iterable[dict]) -> list[tuple[int, dict]]:
    return _reduce(echelon(rows))


def sparse_nullspace(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Canonical kernel basis: one vector per free column, ascending.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other
    free columns and ``-R[p][f]`` at each pivot column ``p``.
    """
    reduced = sparse_rref(rows)
    pivot_cols = {c for c, _ in reduced}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = {f: Fraction(1)}
        for c, r in reduced:
            x = r.get(f)
            if x:
                v[c] = -x
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# dense public type
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense ``rows x cols`` matrix of :class:`Scalar` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        entries = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != cols:
                raise InputError("ragged matrix rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_sparse(cls, rows: Sequence[dict], cols: int) -> "Matrix":
        return cls(
            [[from_field(r.get(c, 0)) for c in range(cols)] for r in rows], cols
        )

    def to_sparse(self) -> list[dict]:
        return [
            {c: to_field(x) for c, x in enumerate(row) if x} for row in self.entries
        ]

    # -- accessors --------------------------------------------------------
    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.entries[i][j]
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    @property
    def shape(self):
        return (self.rows, self.cols)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    T = property(transpose)

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InputError("shape mismatch in matrix sum")
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * x for x in row] for row in self.entries], self.cols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise InputError(f"cannot multiply {self.shape} by {other.shape}")
            ot = other.transpose().entries
            out = []
            for row in self.entries:
                out.append([_dot(row, col) for col in ot])
            return Matrix(out, other.cols)
        vec = tuple(as_scalar(x) for x in other)
        if len(vec) != self.cols:
            raise InputError(f"cannot apply {self.shape} matrix to length-{len(vec)} vector")
        return tuple(_dot(row, vec) for row in self.entries)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise InputError("only square matrices are invertible")
        n = self.rows
        aug = []
        for i, row in enumerate(self.to_sparse()):
            r = dict(row)
            r[n + i] = Fraction(1)
            aug.append(r)
        reduced = sparse_rref(aug)
        if len(reduced) != n or any(c >= n for c, _ in reduced):
            raise InputError("matrix is singular")
        return Matrix.from_sparse(
            [{k - n: v for k, v in r.items() if k >= n} for _, r in reduced], n
        )


def _dot(a, b) -> Scalar:
    total = ZERO
    for x, y in zip(a, b):
        if x and y:
            total = total + x * y
    return total


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


def rank(m) -> int:
    """Row rank over Q(i)."""
    m = _as_matrix(m)
    return sparse_rank(m.to_sparse())


def rref(m) -> Matrix:
    """Reduced row-echelon form with zero rows dropped."""
    m = _as_matrix(m)
    return Matrix.from_sparse([r for _, r in sparse_rref(m.to_sparse())], m.cols)


def nullspace_basis(m) -> list[Vector]:
    """Canonical basis of ker(m).

    One vector per free column of ``rref(m)``, taken in ascending column
    order; each vector is 1 on its own free column and 0 on the others.
    """
    m = _as_matrix(m)
    return [
        tuple(from_field(v.get(c, 0)) for c in range(m.cols))
        for v in sparse_nullspace(m.to_sparse(), m.cols)
    ]


def solve_linear(a, b) -> Vector | None:
    """One solution of ``a @ x == b``, or ``None`` if the system is inconsistent.

    Free variables are set to zero.
    """
    a = _as_matrix(a)
    b = [to_field(x) for x in b]
    if len(b) != a.rows:
        raise InputError(f"right-hand side has length {len(b)}, expected {a.rows}")
    n = a.cols
    aug = []
    for row, rhs in zip(a.to_sparse(), b):
        r = dict(row)
        if rhs:
            r[n] = rhs
        aug.append(r)
    reduced = sparse_rref(aug)
    x = [Fraction(0)] * n
    for c, r in reduced:
        if c == n:
            return None
        x[c] = r.get(n, Fraction(0))
    return tuple(from_field(v) for v in x)

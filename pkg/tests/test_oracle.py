"""Differential checks against sympy's exact linear algebra."""

import pytest

from lietor.catalog import catalog_build
from lietor.cohomology import adjoint_action, coboundary_matrix
from lietor.derivations import derivation_space
from lietor.scalar import as_scalar

sympy = pytest.importorskip("sympy")


def to_sympy(value):
    v = as_scalar(value)
    return sympy.Rational(v.re.numerator, v.re.denominator) + sympy.I * sympy.Rational(v.im.numerator, v.im.denominator)


def sympy_der_dim(L):
    """Solve D[x, y] = [Dx, y] + [x, Dy] symbolically on the structure constants."""
    n = L.dim
    D = sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"d_{i}_{j}"))
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in L.table.items():
        for t, coeff in terms:
            c[i][j][t] = to_sympy(coeff)
            c[j][i][t] = -to_sympy(coeff)
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            for t in range(n):
                lhs = sum(c[i][j][k] * D[t, k] for k in range(n))
                rhs = sum(D[k, i] * c[k][j][t] + D[k, j] * c[i][k][t] for k in range(n))
                eqs.append(lhs - rhs)
    A, _ = sympy.linear_eq_to_matrix(eqs, list(D))
    return n * n - A.rank()


@pytest.mark.parametrize(
    "name, params",
    [("heisenberg3", {}), ("g4", {}), ("q2n", {"n": 3}), ("nn1", {"n": 5}), ("s412", {}),
     ("gorbatsevich_r", {"variant": 1}), ("gorbatsevich_r", {"variant": 2}), ("solvable_r_h1", {}),
     ("example34", {})],
)
def test_der_dim_matches_sympy(name, params):
    obj = catalog_build(name, **params)
    L = getattr(obj, "algebra", obj)
    assert derivation_space(L).dim == sympy_der_dim(L)


@pytest.mark.parametrize("name", ["heisenberg3", "g4", "borel_sl3"])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_coboundary_rank_matches_sympy(name, m):
    obj = catalog_build(name)
    L = getattr(obj, "algebra", obj)
    d = coboundary_matrix(L, adjoint_action(L), m)
    M = d.boundary
    S = sympy.Matrix(M.rows, M.cols, lambda i, j: to_sympy(M.entries[i][j]))
    assert S.rank() == d.rank

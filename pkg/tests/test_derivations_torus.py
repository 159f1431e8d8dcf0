import pytest

from lietor.catalog import EXAMPLE34_TORUS, catalog_build
from lietor.derivations import (
    all_nilpotent,
    derivation_space,
    inner_derivations,
    is_characteristically_nilpotent,
    is_derivation,
)
from lietor.errors import PreconditionError
from lietor.lie import LieAlgebra, center, generator_indices
from lietor.linalg import Matrix, rank
from lietor.torus import WeightMatrix, condition_A_check, maximal_torus, weight_equations

NILPOTENT = ["heisenberg3", "q2n", "nbar", "nn1", "g4", "abelian", "example34", "example75_nil",
             "ancochea_family", "gorbatsevich_nilradical"]


def span_equal(rows_a, rows_b):
    a, b = Matrix(rows_a), Matrix(rows_b)
    return rank(a) == rank(b) == rank(Matrix(list(a.entries) + list(b.entries)))


# -- derivations ------------------------------------------------------------

def test_der_dimensions():
    assert derivation_space(catalog_build("gorbatsevich_r", variant=1)).dim == 13
    assert derivation_space(LieAlgebra.abelian(3)).dim == 9
    assert derivation_space(catalog_build("heisenberg3")).dim == 6


def test_der_gorbatsevich_r2():
    # published value; the printed table yields 13 (see the decisions ledger)
    assert derivation_space(catalog_build("gorbatsevich_r", variant=2)).dim == 12


def test_derivation_basis_satisfies_leibniz():
    for name in ("heisenberg3", "g4", "q2n"):
        L = catalog_build(name)
        space = derivation_space(L)
        assert all(is_derivation(L, D) for D in space.basis)
        assert rank(Matrix([[x for row in D for x in row] for D in space.basis])) == space.dim


def test_inner_derivations_inside_der():
    for name in ("heisenberg3", "q2n", "sl2", "borel_sl3"):
        obj = catalog_build(name)
        L = getattr(obj, "algebra", obj)
        space = derivation_space(L)
        inner = inner_derivations(L)
        flat = lambda D: [x for row in D for x in row]
        base = [flat(D) for D in space.basis]
        assert rank(Matrix(base + [flat(D) for D in inner])) == space.dim
        assert space.dim >= L.dim - center(L).dim


def test_all_nilpotent_examples():
    assert all_nilpotent([Matrix([[0, 1], [0, 0]])])
    assert not all_nilpotent([Matrix([[1, 0], [0, 0]])])
    assert all_nilpotent(derivation_space(catalog_build("gorbatsevich_n7")))
    with pytest.raises(PreconditionError):
        all_nilpotent([Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]])])


def test_characteristic_nilpotency():
    assert not is_characteristically_nilpotent(catalog_build("heisenberg3"))
    assert is_characteristically_nilpotent(catalog_build("gorbatsevich_n7"))
    assert not is_characteristically_nilpotent(catalog_build("q2n", n=3))
    assert is_derivation(catalog_build("heisenberg3"), Matrix([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(PreconditionError):
        is_characteristically_nilpotent(catalog_build("sl2"))


# -- torus ------------------------------------------------------------------

def test_weight_equation_examples():
    H = weight_equations(catalog_build("heisenberg3"))
    assert H.matrix == Matrix([[-1, 1, 1]]) and H.rank == 1
    Q = weight_equations(catalog_build("q2n", n=3))
    assert Q.matrix.rows == 5 and Q.rank == 4
    A = weight_equations(LieAlgebra.abelian(4))
    assert A.matrix.rows == 0 and A.rank == 0


@pytest.mark.parametrize(
    "name, params, rows",
    [
        ("heisenberg3", {}, [(1, 1, 0), (1, 0, 1)]),
        ("q2n", {"n": 3}, [(1, 0, 1, 2, 3, 3), (0, 1, 1, 1, 1, 2)]),
        ("nn1", {"n": 5}, [(1, 1, 1, 1, 0), (3, 2, 1, 0, 1)]),
        ("g4", {}, [(1, 1, 1, 0), (2, 1, 0, 1)]),
    ],
)
def test_maximal_torus_rows(name, params, rows):
    W = maximal_torus(catalog_build(name, **params))
    assert W.rows() == rows


def test_example34_torus_span():
    N = catalog_build("example34")
    W = maximal_torus(N)
    assert W.s == 3
    assert span_equal(W.rows(), EXAMPLE34_TORUS)


@pytest.mark.parametrize("name", NILPOTENT)
def test_torus_invariants(name):
    N = catalog_build(name)
    W = maximal_torus(N)
    assert W.s == N.dim - weight_equations(N).rank
    assert all(is_derivation(N, D) for D in W.diagonal_derivations())
    if W.s:
        assert rank(W.weights) == W.s
    assert W.s <= len(generator_indices(N))


def test_maximal_torus_needs_nilpotent():
    with pytest.raises(PreconditionError):
        maximal_torus(catalog_build("sl2"))


def test_condition_a_examples():
    Q6 = catalog_build("q2n", n=3)
    report = condition_A_check(Q6, maximal_torus(Q6))
    assert report.holds and report.violations == ()
    N = catalog_build("example34")
    report = condition_A_check(N, maximal_torus(N))
    assert not report.holds and (3, 6) in report.violations
    N = catalog_build("example75_nil")
    report = condition_A_check(N, maximal_torus(N))
    assert report.holds and report.free_set == (0, 1, 2)


def test_condition_a_warns_on_non_generator_free_column():
    H = catalog_build("heisenberg3")
    W = WeightMatrix(Matrix([[1, 1, 0], [1, 0, 1]]), free_columns=(0, 2))
    report = condition_A_check(H, W)
    assert report.warnings

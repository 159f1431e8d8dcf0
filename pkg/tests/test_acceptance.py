"""Acceptance suite.

Each test checks one numbered criterion. It prints a single
``PASS criterion N: ...`` or ``FAIL criterion N: ...`` line that lists the
failing checks, and then asserts. The lines are also collected in
``ACCEPTANCE_RESULTS`` and repeated in the terminal summary by
``conftest.py``.
"""

import random
import time
from itertools import combinations

import pytest

from lietor.catalog import EXAMPLE34_TORUS, catalog_build, catalog_entry, catalog_list
from lietor.cohomology import (
    adjoint_action,
    cohomology_dim,
    hochschild_serre_dim,
    invariant_cochain_basis,
    invariant_cohomology_dim,
    restricted_coboundary_rank,
)
from lietor.derivations import derivation_space, is_characteristically_nilpotent
from lietor.extension import (
    SolvableExtension,
    build_max_extension,
    build_split_extension,
    extension_from_weights,
)
from lietor.lie import (
    LieAlgebra,
    algebras_equal,
    apply_basechange,
    center,
    direct_sum,
    permute_basis,
)
from lietor.linalg import Matrix, rank
from lietor.roots import (
    invariant_count_formula,
    q_valued_count,
    root_decomposition,
    sm_bound,
    vanish_predictor,
)
from lietor.scalar import I
from lietor.torus import condition_A_check, maximal_torus, weight_equations


ACCEPTANCE_RESULTS = []


class Criterion:
    """Collects named checks and a time budget for one criterion."""

    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.failed = []
        self.start = time.perf_counter()

    def check(self, label, ok):
        if not ok:
            self.failed.append(label)

    def finish(self):
        elapsed = time.perf_counter() - self.start
        self.check(f"runtime {elapsed:.1f}s within {self.budget}s", elapsed < self.budget)
        status = "FAIL" if self.failed else "PASS"
        detail = f" [failed: {'; '.join(self.failed)}]" if self.failed else ""
        line = f"{status} criterion {self.number}: {self.title} ({elapsed:.2f}s){detail}"
        ACCEPTANCE_RESULTS.append(line)
        print("\n" + line)
        assert not self.failed, f"criterion {self.number}: {self.failed}"


def direct_dim(R, p):
    L = R.algebra if isinstance(R, SolvableExtension) else R
    return cohomology_dim(L, adjoint_action(L), p)


def der_dim(obj):
    return derivation_space(obj.algebra if isinstance(obj, SolvableExtension) else obj).dim


def signed_x(n, order, signs=None):
    """Identity on the nilradical; the j-th new x is ``sign * x_order[j]``."""
    s = len(order)
    signs = signs or (-1,) * s
    rows = [[1 if i == j else 0 for j in range(n + s)] for i in range(n)]
    for k, src in enumerate(order):
        row = [0] * (n + s)
        row[n + src] = signs[k]
        rows.append(row)
    return Matrix(rows)


def span_equal(rows_a, rows_b):
    a, b = Matrix(rows_a), Matrix(rows_b)
    return rank(a) == rank(b) == rank(Matrix(list(a.entries) + list(b.entries)))


Q6_TO_R8 = Matrix([
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, -2],
    [0, 0, 0, 0, 0, 0, 0, -1],
])

S412_MAP = Matrix([[I, -I, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, I, -I]])


def test_criterion_01_heisenberg_pipeline():
    c = Criterion(1, "Heisenberg pipeline", 1)
    H = catalog_build("heisenberg3")
    R = build_max_extension(H)
    c.check("torus dim 2", maximal_torus(H).s == 2)
    c.check("extension equals the published table", algebras_equal(R.algebra, catalog_build("solvable_r_h1").algebra))
    for p in range(4):
        c.check(f"direct H^{p} = 0", direct_dim(R, p) == 0)
        c.check(f"factorized H^{p} = 0", hochschild_serre_dim(R, p) == 0)
    c.finish()


def test_criterion_02_q6():
    c = Criterion(2, "Q6 extension, base change and vanishing", 30)
    Q6 = catalog_build("q2n", n=3)
    R = build_max_extension(Q6)
    c.check("rank S_e = 4", weight_equations(Q6).rank == 4)
    c.check("s = 2", R.s == 2)
    c.check("extension dim 8", R.dim == 8)
    c.check("base change onto r8", algebras_equal(apply_basechange(R.algebra, Q6_TO_R8), catalog_build("r2n2", n=3)))
    c.check("theorem63 predictor true", vanish_predictor(R).theorem63)
    for p in range(4):
        c.check(f"direct H^{p} = 0", direct_dim(R, p) == 0)
        c.check(f"factorized H^{p} = 0", hochschild_serre_dim(R, p) == 0)
    c.finish()


def test_criterion_03_nn1_and_nbar():
    c = Criterion(3, "n_{5,1} and N-bar_6 extensions", 60)
    cases = [
        ("n_{5,1}", catalog_build("nn1", n=5), 2, catalog_build("s_n2", n=5), (1, 0)),
        ("N-bar_6", catalog_build("nbar", n=6), 3, catalog_build("nbar_ext_h", n=6), (2, 0, 1)),
    ]
    for label, N, s, target, order in cases:
        R = build_max_extension(N)
        c.check(f"{label} torus dim {s}", R.s == s)
        c.check(f"{label} matches the published table", algebras_equal(apply_basechange(R.algebra, signed_x(N.dim, order)), target))
        for p in range(4):
            c.check(f"{label} H^{p} = 0", hochschild_serre_dim(R, p) == 0)
    c.finish()


def test_criterion_04_example34():
    c = Criterion(4, "11-dimensional example with a repeated weight column", 5)
    N = catalog_build("example34")
    W = maximal_torus(N)
    c.check(f"dim Der = 36 (computed {der_dim(N)})", der_dim(N) == 36)
    c.check("torus span", span_equal(W.rows(), EXAMPLE34_TORUS))
    c.check("condition A pair (4,7)", (3, 6) in condition_A_check(N, W).violations)
    c.finish()


def test_criterion_05_gorbatsevich():
    c = Criterion(5, "Gorbatsevich derivation dimensions", 10)
    r1 = der_dim(catalog_build("gorbatsevich_r", variant=1))
    r2 = der_dim(catalog_build("gorbatsevich_r", variant=2))
    c.check(f"dim Der(R1) = 13 (computed {r1})", r1 == 13)
    c.check(f"dim Der(R2) = 12 (computed {r2})", r2 == 12)
    c.check("N7 characteristically nilpotent", is_characteristically_nilpotent(catalog_build("gorbatsevich_n7")))
    c.finish()


def test_criterion_06_example75():
    c = Criterion(6, "dim H^2 = 1 counterexample", 60)
    R = catalog_build("example75")
    c.check("factorized H^2 = 1", hochschild_serre_dim(R, 2) == 1)
    v = vanish_predictor(R)
    c.check("both predictor flags false", not v.theorem63 and not v.theorem64)
    c.finish()


def test_criterion_07_inner_derivations():
    c = Criterion(7, "complete extensions under condition A", 60)
    cases = {
        "R(H1)": build_max_extension(catalog_build("heisenberg3")),
        "R(abelian 2)": build_max_extension(LieAlgebra.abelian(2)),
        "R(Q6)": build_max_extension(catalog_build("q2n", n=3)),
        "R(n_{5,1})": build_max_extension(catalog_build("nn1", n=5)),
        "R(N-bar_6)": build_max_extension(catalog_build("nbar", n=6)),
        "R(g4)": build_max_extension(catalog_build("g4")),
        "example75": catalog_build("example75"),
    }
    for label, R in cases.items():
        c.check(f"{label} condition A", condition_A_check(R.nilradical, R.torus).holds)
        c.check(f"{label} centerless", center(R.algebra).dim == 0)
        c.check(f"{label} dim Der = dim", der_dim(R) == R.dim)
        c.check(f"{label} direct H^1 = 0", direct_dim(R, 1) == 0)
        c.check(f"{label} factorized H^1 = 0", hochschild_serre_dim(R, 1) == 0)
    c.finish()


def test_criterion_08_outer_derivation():
    c = Criterion(8, "non-maximal torus admits an outer derivation", 5)
    H = catalog_build("heisenberg3")
    for row in maximal_torus(H).rows():
        R = extension_from_weights(H, Matrix([row]))
        c.check(f"row {row} gives dim Der > dim", der_dim(R) > R.dim)
    c.finish()


def test_criterion_09_nilpotent_h1():
    c = Criterion(9, "H^1(N, N) nonzero for nilpotent catalog algebras", 10)
    for name in catalog_list():
        if catalog_entry(name).kind != "nilpotent":
            continue
        N = catalog_build(name)
        c.check(f"{name} H^1 >= 1", direct_dim(N, 1) >= 1)
    c.finish()


def test_criterion_10_basechange_suite():
    c = Criterion(10, "published base changes", 5)
    cases = [
        ("s_{4,12}", build_max_extension(LieAlgebra.abelian(2)).algebra, S412_MAP, catalog_build("s412")),
        ("r_8", build_max_extension(catalog_build("q2n", n=3)).algebra, Q6_TO_R8, catalog_build("r2n2", n=3)),
        ("s_{n+2}", catalog_build("r_nn1", n=5).algebra, signed_x(5, (0, 1)), catalog_build("s_n2", n=5)),
        ("N-bar h", catalog_build("r_nbar", n=6).algebra, signed_x(6, (0, 1, 2)), catalog_build("nbar_ext_h", n=6)),
        ("s_{6,242}", catalog_build("r_g4").algebra, signed_x(4, (0, 1)), catalog_build("s6242")),
    ]
    for label, source, P, target in cases:
        c.check(label, algebras_equal(apply_basechange(source, P), target))
    c.finish()


def random_two_step(rng, dim):
    """A random 2-step nilpotent algebra: brackets of the first ``k`` basis
    vectors land in the span of the rest, so Jacobi holds automatically."""
    k = rng.randint(2, dim - 1)
    table = {}
    for i, j in combinations(range(k), 2):
        terms = {t: rng.choice([-2, -1, 1, 1, 2]) for t in range(k, dim) if rng.random() < 0.5}
        if terms:
            table[(i, j)] = terms
    return LieAlgebra(dim, table)


def hs_cases():
    for name in catalog_list():
        entry = catalog_entry(name)
        if entry.kind == "extension":
            params = [{"n": 5}] if name == "r_nbar" else [{}]
            for p in params:
                R = catalog_build(name, **p)
                if R.dim <= 8:
                    yield name, R
        elif entry.kind == "nilpotent":
            N = catalog_build(name)
            if N.dim + maximal_torus(N).s <= 8 and maximal_torus(N).s:
                yield f"R({name})", build_max_extension(N)


def test_criterion_11_hochschild_serre_differential():
    c = Criterion(11, "direct and factorized cohomology agree", 300)
    cases = list(hs_cases())
    rng = random.Random(20240611)
    for k in range(25):
        cases.append((f"random #{k}", build_max_extension(random_two_step(rng, rng.randint(3, 5)))))
    for label, R in cases:
        for p in range(3):
            d, h = direct_dim(R, p), hochschild_serre_dim(R, p)
            c.check(f"{label} p={p} direct {d} factorized {h}", d == h)
    c.check("at least 25 random cases", len(cases) >= 25)
    c.finish()


def test_criterion_12_borel():
    c = Criterion(12, "Borel subalgebras are cohomologically rigid", 60)
    for name in ("borel_sl2", "borel_sl3"):
        B = catalog_build(name)
        for p in range(3):
            c.check(f"{name} direct H^{p} = 0", direct_dim(B, p) == 0)
            c.check(f"{name} factorized H^{p} = 0", hochschild_serre_dim(B, p) == 0)
    c.finish()


def test_criterion_13_split_case():
    c = Criterion(13, "split extension of H1 + H1", 5)
    H = catalog_build("heisenberg3")
    R = build_split_extension([H, H])
    c.check("equals the extension of the direct sum", algebras_equal(R.algebra, build_max_extension(direct_sum(H, H)).algebra))
    block = direct_sum(build_max_extension(H).algebra, build_max_extension(H).algebra)
    c.check("block sum after canonical permutation", algebras_equal(permute_basis(block, R.permutation), R.algebra))
    c.check("torus dim 4", R.s == 4)
    c.finish()


def brute_invariant_count(R, m):
    """Count cochain labels (index set, target) whose torus weights balance,
    straight from the weight matrix."""
    n = R.nilradical_dim
    cols = [tuple(R.torus.weights.column(i)) for i in range(n)]
    zero = (0,) * R.s
    total = 0
    for subset in combinations(range(n), m):
        weight = tuple(sum(x) for x in zip(*(cols[i] for i in subset))) if subset else zero
        total += sum(1 for t in range(n) if cols[t] == weight)
    return total


def multiplicity_one_extensions():
    for name in catalog_list():
        entry = catalog_entry(name)
        if entry.kind == "extension":
            R = catalog_build(name)
        elif entry.kind == "nilpotent" and maximal_torus(catalog_build(name)).s:
            R = build_max_extension(catalog_build(name))
        else:
            continue
        if root_decomposition(R).multiplicity_one:
            yield name, R


def test_criterion_14_counting_identities():
    c = Criterion(14, "root counting identities", 120)
    seen = 0
    for name, R in multiplicity_one_extensions():
        seen += 1
        roots = root_decomposition(R)
        for m in range(min(3, R.nilradical_dim) + 1):
            formula = invariant_count_formula(roots, m)
            c.check(f"{name} m={m} formula vs enumeration", formula == brute_invariant_count(R, m))
            count = formula + q_valued_count(roots, m)
            c.check(f"{name} m={m} count vs cochains", count == invariant_cochain_basis(R, m, "literal").dim)
            rank_m = restricted_coboundary_rank(R, m)
            if m >= 1:
                c.check(f"{name} m={m} rank bound", rank_m <= sm_bound(roots, m))
            rank_prev = restricted_coboundary_rank(R, m - 1) if m else 0
            c.check(f"{name} m={m} cohomology arithmetic",
                    count - rank_m - rank_prev == invariant_cohomology_dim(R, m))
    c.check("some extensions exercised", seen >= 5)
    c.finish()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))

"""Named algebras: nilradicals, their extensions and published comparison tables.

Tables are written with 1-based indices, as printed, and converted on the
way in.  Each entry may carry ``expected`` facts; :func:`derive_fact`
recomputes any of them from the built object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InputError
from .extension import SolvableExtension, extension_from_weights, from_algebra
from .lie import LieAlgebra, direct_sum

__all__ = [
    "Param",
    "CatalogEntry",
    "REGISTRY",
    "catalog_build",
    "catalog_list",
    "catalog_entry",
    "derive_fact",
    "parse_param",
]


@dataclass(frozen=True)
class Param:
    name: str
    default: object
    minimum: int = 0
    kind: str = "int"  # "int" or "ints" (comma-separated list)
    choices: tuple | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "nilpotent", "extension" or "algebra"
    builder: Callable
    params: tuple = ()
    expected: Callable | dict | None = None
    description: str = ""

    def defaults(self) -> dict:
        return {p.name: p.default for p in self.params}

    def expected_for(self, params: dict) -> dict:
        if self.expected is None:
            return {}
        if callable(self.expected):
            return self.expected(**params)
        return dict(self.expected)


REGISTRY: dict[str, CatalogEntry] = {}


def _register(name, kind, params=(), expected=None, description=""):
    def wrap(fn):
        REGISTRY[name] = CatalogEntry(name, kind, fn, tuple(params), expected, description)
        return fn
    return wrap


def _table(dim: int, products, names=None, *, validate=True) -> LieAlgebra:
    """``products`` holds 1-based ``(i, j, t, coeff)`` meaning
    ``[e_i, e_j] = ... + coeff e_t``; repeated pairs accumulate."""
    acc: dict = {}
    for i, j, t, c in products:
        key = (i - 1, j - 1)
        if key[0] > key[1]:
            key, c = (key[1], key[0]), _neg(c)
        acc.setdefault(key, []).append((t - 1, c))
    return LieAlgebra(dim, acc, names, validate=validate)


def _neg(c):
    if isinstance(c, str):
        return c[1:] if c.startswith("-") else "-" + c
    return -c


def _names(n: int, s: int = 0, letter: str = "x") -> list[str]:
    return [f"e{i}" for i in range(1, n + 1)] + [f"{letter}{j}" for j in range(1, s + 1)]


# ---------------------------------------------------------------------------
# small and classical algebras
# ---------------------------------------------------------------------------

@_register("abelian", "nilpotent", [Param("n", 2, 1)],
           expected=lambda n: {"torus_dim": n, "dim_der": n * n},
           description="abelian algebra of dimension n")
def abelian(n: int = 2) -> LieAlgebra:
    return LieAlgebra(n)


@_register("heisenberg3", "nilpotent",
           expected={"torus_dim": 2, "generators": (2, 3), "lower_central": (3, 1, 0)},
           description="three-dimensional Heisenberg algebra H1")
def heisenberg3() -> LieAlgebra:
    return _table(3, [(2, 3, 1, 1)])


@_register("solvable_r_h1", "extension",
           expected={"center_dim": 0, "derived": (5, 3, 1, 0), "dim_der": 5},
           description="five-dimensional maximal extension of H1")
def solvable_r_h1() -> SolvableExtension:
    L = _table(5, [
        (2, 3, 1, 1), (2, 4, 2, 1), (1, 4, 1, 1), (3, 5, 3, 1), (1, 5, 1, 1),
    ], _names(3, 2))
    return from_algebra(L, 3)


@_register("g5_36", "algebra", description="real form g_{5,36} (data only)")
def g5_36() -> LieAlgebra:
    return _table(5, [
        (2, 3, 1, 1), (1, 4, 1, 1), (2, 4, 2, 1), (2, 5, 2, -1), (3, 5, 3, 1),
    ], _names(3, 2))


@_register("g5_37", "algebra", description="real form g_{5,37} (data only)")
def g5_37() -> LieAlgebra:
    return _table(5, [
        (2, 3, 1, 1), (1, 4, 1, 2), (2, 4, 2, 1), (3, 4, 3, 1), (2, 5, 3, -1), (3, 5, 2, 1),
    ], _names(3, 2))


@_register("sl2", "algebra", expected={"derived": (3, 3)},
           description="sl2 in the basis e, f, h")
def sl2() -> LieAlgebra:
    return _table(3, [(1, 2, 3, 1), (3, 1, 1, 2), (3, 2, 2, -2)], ["e", "f", "h"])


@_register("borel_sl2", "extension", expected={"cohomology": {0: 0, 1: 0, 2: 0}},
           description="Borel subalgebra of sl2, nilradical first")
def borel_sl2() -> SolvableExtension:
    return from_algebra(_table(2, [(2, 1, 1, 2)], ["e", "h"]), 1)


@_register("borel_sl3", "extension", expected={"cohomology": {0: 0, 1: 0, 2: 0}},
           description="Borel subalgebra of sl3 in the basis e1, e2, e3=[e1,e2], h1, h2")
def borel_sl3() -> SolvableExtension:
    L = _table(5, [
        (1, 2, 3, 1),
        (4, 1, 1, 2), (4, 2, 2, -1), (4, 3, 3, 1),
        (5, 1, 1, -1), (5, 2, 2, 2), (5, 3, 3, 1),
    ], ["e1", "e2", "e3", "h1", "h2"])
    return from_algebra(L, 3)


# ---------------------------------------------------------------------------
# characteristically nilpotent example and its two extensions
# ---------------------------------------------------------------------------

_N7 = [
    (1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (1, 6, 7, 1),
    (2, 3, 6, 1), (2, 4, 7, 1), (2, 5, 7, 1), (3, 4, 7, -1),
]


@_register("gorbatsevich_n7", "nilpotent",
           expected={"characteristically_nilpotent": True, "torus_dim": 0},
           description="seven-dimensional characteristically nilpotent algebra N7")
def gorbatsevich_n7() -> LieAlgebra:
    return _table(7, _N7)


@_register("gorbatsevich_nilradical", "nilpotent", expected={"torus_dim": 1},
           description="N7 plus a one-dimensional abelian factor")
def gorbatsevich_nilradical() -> LieAlgebra:
    return direct_sum(gorbatsevich_n7(), LieAlgebra(1), _names(8))


@_register("gorbatsevich_r", "algebra",
           [Param("variant", 1, 1, choices=(1, 2))],
           expected=lambda variant: {"dim_der": 13 if variant == 1 else 12},
           description="the two non-isomorphic extensions R1, R2 of N7 + C")
def gorbatsevich_r(variant: int = 1) -> LieAlgebra:
    if variant not in (1, 2):
        raise InputError("variant must be 1 or 2")
    products = list(_N7) + [(8, 9, 8, 1)]
    if variant == 2:
        products.append((2, 9, 7, 1))
    return _table(9, products, _names(8) + ["x"])


# ---------------------------------------------------------------------------
# the eleven-dimensional algebra violating condition A
# ---------------------------------------------------------------------------

_EX34 = [
    (2, 1, 8, 1), (1, 4, 10, 1), (5, 7, 10, 1), (1, 3, 9, 1),
    (5, 6, 9, 1), (4, 3, 11, 1), (7, 6, 11, 1), (2, 3, 10, 1),
]

EXAMPLE34_TORUS = (
    (1, 0, 0, -1, 1, 0, -1, 1, 1, 0, -1),
    (0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1),
    (0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 2),
)


@_register("example34", "nilpotent",
           expected={"dim_der": 36, "torus_dim": 3, "generators": tuple(range(1, 8)),
                     "condition_A_pair": (4, 7)},
           description="11-dimensional nilradical whose torus violates condition A")
def example34() -> LieAlgebra:
    return _table(11, _EX34)


@_register("example34_ext", "extension", expected={"root_multiplicity": ((-1, 1, 1), 2)},
           description="extension of example34 by the published torus")
def example34_ext() -> SolvableExtension:
    return extension_from_weights(example34(), EXAMPLE34_TORUS)


# ---------------------------------------------------------------------------
# Q_{2n}
# ---------------------------------------------------------------------------

def _q2n_products(n):
    out = [(1, k, k + 1, 1) for k in range(2, 2 * n - 1)]
    out += [(k, 2 * n + 1 - k, 2 * n, (-1) ** k) for k in range(2, n + 1)]
    return out


@_register("q2n", "nilpotent", [Param("n", 3, 3)],
           expected=lambda n: {"torus_dim": 2, "rank_se": 2 * n - 2, "generators": (1, 2)},
           description="filiform-type algebra Q_{2n}, n >= 3")
def q2n(n: int = 3) -> LieAlgebra:
    return _table(2 * n, _q2n_products(n))


@_register("r_q2n", "extension", [Param("n", 3, 3)],
           description="published maximal extension R(Q_{2n}); [e1,x1]=e1 read for the printed x1")
def r_q2n(n: int = 3) -> SolvableExtension:
    d = 2 * n
    x1, x2 = d + 1, d + 2
    products = _q2n_products(n) + [(1, x1, 1, 1)]
    products += [(k, x1, k, k - 2) for k in range(3, d)]
    products += [(d, x1, d, d - 3)]
    products += [(k, x2, k, 1) for k in range(2, d)]
    products += [(d, x2, d, 2)]
    return from_algebra(_table(d + 2, products, _names(d, 2)), d)


@_register("r2n2", "algebra", [Param("n", 3, 3)],
           description="r_{2n+2} with [x2, e_k] = e_k starting at k = 2")
def r2n2(n: int = 3, *, printed: bool = False) -> LieAlgebra:
    """``printed=True`` keeps the range ``1 <= k`` as printed, which breaks
    Jacobi; it exists so the correction can be tested."""
    d = 2 * n
    x1, x2 = d + 1, d + 2
    products = _q2n_products(n)
    products += [(x1, k, k, k) for k in range(1, d)] + [(x1, d, d, d + 1)]
    start = 1 if printed else 2
    products += [(x2, k, k, 1) for k in range(start, d)] + [(x2, d, d, 2)]
    return _table(d + 2, products, _names(d, 2), validate=not printed)


# ---------------------------------------------------------------------------
# N-bar
# ---------------------------------------------------------------------------

def _nbar_products(n):
    return [(n, i, i - 1, 1) for i in range(2, n - 1)]


@_register("nbar", "nilpotent", [Param("n", 6, 5)],
           expected={"torus_dim": 3},
           description="split algebra [e_n, e_i] = e_{i-1}, 2 <= i <= n-2")
def nbar(n: int = 6) -> LieAlgebra:
    return _table(n, _nbar_products(n))


@_register("r_nbar", "extension", [Param("n", 6, 5)],
           description="published maximal extension R(N-bar)")
def r_nbar(n: int = 6) -> SolvableExtension:
    x1, x2, x3 = n + 1, n + 2, n + 3
    products = _nbar_products(n)
    products += [(i, x1, i, n - i - 2) for i in range(1, n - 2)]
    products += [(i, x2, i, 1) for i in range(1, n - 1)]
    products += [(n, x1, n, 1), (n - 1, x3, n - 1, 1)]
    return from_algebra(_table(n + 3, products, _names(n, 3)), n)


@_register("nbar_ext_h", "algebra", [Param("n", 6, 5)],
           description="published (n+3)-dimensional algebra with nilradical N-bar, a = b = 0")
def nbar_ext_h(n: int = 6) -> LieAlgebra:
    h1, h2, h3 = n + 1, n + 2, n + 3
    products = _nbar_products(n)
    products += [(h1, n, n, 1)]
    products += [(h1, i, i, n - i - 2) for i in range(1, n - 2)]
    products += [(h3, n - 1, n - 1, 1)]
    products += [(h2, i, i, 1) for i in range(1, n - 1)]
    return _table(n + 3, products, _names(n, 3, "h"))


# ---------------------------------------------------------------------------
# n_{n,1}
# ---------------------------------------------------------------------------

def _nn1_products(n):
    return [(k, n, k - 1, 1) for k in range(2, n)]


@_register("nn1", "nilpotent", [Param("n", 5, 4)],
           expected={"torus_dim": 2},
           description="n_{n,1}: [e_k, e_n] = e_{k-1}, 2 <= k <= n-1")
def nn1(n: int = 5) -> LieAlgebra:
    return _table(n, _nn1_products(n))


@_register("r_nn1", "extension", [Param("n", 5, 4)],
           description="published maximal extension R(n_{n,1})")
def r_nn1(n: int = 5) -> SolvableExtension:
    x1, x2 = n + 1, n + 2
    products = _nn1_products(n)
    products += [(i, x1, i, n - i - 1) for i in range(1, n - 1)]
    products += [(i, x2, i, 1) for i in range(1, n)]
    products += [(n, x1, n, 1)]
    return from_algebra(_table(n + 2, products, _names(n, 2)), n)


@_register("s_n2", "algebra", [Param("n", 5, 4)],
           description="published algebra s_{n+2} with nilradical n_{n,1}")
def s_n2(n: int = 5) -> LieAlgebra:
    f1, f2 = n + 1, n + 2
    products = _nn1_products(n) + [(f1, n, n, 1)]
    products += [(f1, k, k, n - 1 - k) for k in range(1, n)]
    products += [(f2, k, k, 1) for k in range(1, n)]
    return _table(n + 2, products, _names(n, 2, "f"))


# ---------------------------------------------------------------------------
# two-dimensional abelian nilradical and g4
# ---------------------------------------------------------------------------

@_register("s412", "algebra", description="s_{4,12} over Q(i)")
def s412() -> LieAlgebra:
    return _table(4, [(1, 3, 1, 1), (2, 3, 2, 1), (1, 4, 2, -1), (2, 4, 1, 1)])


@_register("g4", "nilpotent", expected={"torus_dim": 2},
           description="g: [e2, e4] = e1, [e3, e4] = e2")
def g4() -> LieAlgebra:
    return _table(4, [(2, 4, 1, 1), (3, 4, 2, 1)])


@_register("r_g4", "extension", description="published maximal extension of g4")
def r_g4() -> SolvableExtension:
    L = _table(6, [
        (2, 4, 1, 1), (3, 4, 2, 1),
        (1, 5, 1, 2), (2, 5, 2, 1), (4, 5, 4, 1),
        (1, 6, 1, 1), (2, 6, 2, 1), (3, 6, 3, 1),
    ], _names(4, 2))
    return from_algebra(L, 4)


@_register("s6242", "algebra", description="s_{6,242} with nilradical g4")
def s6242() -> LieAlgebra:
    return _table(6, [
        (2, 4, 1, 1), (3, 4, 2, 1),
        (5, 1, 1, 2), (5, 2, 2, 1), (5, 4, 4, 1),
        (6, 1, 1, 1), (6, 2, 2, 1), (6, 3, 3, 1),
    ])


# ---------------------------------------------------------------------------
# cohomology examples
# ---------------------------------------------------------------------------

def _ancochea_layout(k, sizes):
    if len(sizes) != k:
        raise InputError(f"expected {k} block sizes, got {len(sizes)}")
    if any(m < 1 for m in sizes):
        raise InputError("block sizes must be positive")
    offsets = [0]
    for m in sizes[:-1]:
        offsets.append(offsets[-1] + m)
    return offsets, sum(sizes) + 1


def _ancochea_products(k, sizes):
    offsets, dim = _ancochea_layout(k, sizes)
    out = [(i, 1, i + 1, 1) for i in range(2, sizes[0] + 1)]
    for j in range(1, k):
        o = offsets[j]
        out += [(o + i, 1, o + i + 1, 1) for i in range(2, sizes[j] + 1)]
    return out, offsets, dim


@_register("ancochea_family", "nilpotent",
           [Param("k", 2, 1), Param("sizes", (3, 2), 1, kind="ints")],
           expected=lambda k, sizes: {"torus_dim": k + 1},
           description="sum of model filiform chains sharing e1; blocks of sizes n_1..n_k")
def ancochea_family(k: int = 2, sizes=(3, 2)) -> LieAlgebra:
    products, _, dim = _ancochea_products(k, tuple(sizes))
    return _table(dim, products)


@_register("ancochea_ext", "extension",
           [Param("k", 2, 1), Param("sizes", (3, 2), 1, kind="ints")],
           description="published extension of ancochea_family by x_1..x_{k+1}")
def ancochea_ext(k: int = 2, sizes=(3, 2)) -> SolvableExtension:
    sizes = tuple(sizes)
    products, offsets, dim = _ancochea_products(k, sizes)
    x = [dim + j for j in range(1, k + 2)]
    products.append((1, x[0], 1, 1))
    products += [(i, x[0], i, i - 2) for i in range(3, sizes[0] + 2)]
    products += [(i, x[1], i, 1) for i in range(2, sizes[0] + 2)]
    for j in range(1, k):
        o = offsets[j]
        products += [(o + i, x[0], o + i, i - 2) for i in range(3, sizes[j] + 2)]
        products += [(o + i, x[j + 1], o + i, 1) for i in range(2, sizes[j] + 2)]
    products = [p for p in products if p[3] != 0]
    return from_algebra(_table(dim + k + 1, products, _names(dim, k + 1)), dim)


_EX75 = [(1, 2, 4, 1), (1, 3, 5, 1), (2, 3, 6, 1), (4, 3, 7, 1), (6, 1, 7, -1)]


@_register("example75_nil", "nilpotent",
           expected={"torus_dim": 3, "generators": (1, 2, 3)},
           description="7-dimensional nilradical with dim H^2(R, R) = 1")
def example75_nil() -> LieAlgebra:
    return _table(7, _EX75)


@_register("example75", "extension",
           expected={"cohomology": {2: 1}, "theorem63": False, "theorem64": False},
           description="published maximal extension of example75_nil")
def example75() -> SolvableExtension:
    products = list(_EX75)
    for x, support in ((8, (1, 4, 5, 7)), (9, (2, 4, 6, 7)), (10, (3, 5, 6, 7))):
        products += [(i, x, i, 1) for i in support]
    return from_algebra(_table(10, products, _names(7, 3)), 7)


# ---------------------------------------------------------------------------
# access
# ---------------------------------------------------------------------------

def catalog_list() -> list[str]:
    return sorted(REGISTRY)


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise InputError(f"unknown catalog entry {name!r}") from None


def parse_param(entry: CatalogEntry, name: str, text: str):
    for p in entry.params:
        if p.name == name:
            try:
                if p.kind == "ints":
                    return tuple(int(v) for v in text.split(",") if v.strip())
                return int(text)
            except ValueError:
                raise InputError(f"parameter {name} expects {p.kind}, got {text!r}") from None
    raise InputError(f"{entry.name} has no parameter {name!r}")


def catalog_build(name: str, **params):
    entry = catalog_entry(name)
    values = entry.defaults()
    for key, value in params.items():
        if key not in values:
            raise InputError(f"{name} has no parameter {key!r}")
        values[key] = value
    for p in entry.params:
        v = values[p.name]
        items = v if p.kind == "ints" else (v,)
        for item in items:
            if not isinstance(item, int) or item < p.minimum:
                raise InputError(f"{name}: {p.name} must be integer >= {p.minimum}, got {v!r}")
        if p.choices and v not in p.choices:
            raise InputError(f"{name}: {p.name} must be one of {p.choices}")
    return entry.builder(**values)


# ---------------------------------------------------------------------------
# recomputing expected facts
# ---------------------------------------------------------------------------

def derive_fact(key: str, obj, expected=None):
    """Recompute ``key`` for a built catalog object.

    ``expected`` is consulted only for keys whose question depends on it
    (the degrees in ``cohomology``, the root in ``root_multiplicity``).
    """
    from . import cohomology as coh
    from . import lie, roots, torus
    from .derivations import derivation_space, is_characteristically_nilpotent

    L = obj.algebra if isinstance(obj, SolvableExtension) else obj
    if key == "torus_dim":
        return torus.maximal_torus(L).s
    if key == "rank_se":
        return torus.weight_equations(L).rank
    if key == "dim_der":
        return derivation_space(L).dim
    if key == "generators":
        return tuple(i + 1 for i in lie.generator_indices(L))
    if key == "lower_central":
        return tuple(s.dim for s in lie.lower_central_series(L))
    if key == "derived":
        return tuple(s.dim for s in lie.derived_series(L))
    if key == "center_dim":
        return lie.center(L).dim
    if key == "characteristically_nilpotent":
        return is_characteristically_nilpotent(L)
    if key == "condition_A_pair":
        report = torus.condition_A_check(L, torus.maximal_torus(L))
        pairs = {(i + 1, j + 1) for i, j in report.violations}
        return tuple(expected) if tuple(expected) in pairs else tuple(sorted(pairs))
    if key == "cohomology":
        return {p: coh.hochschild_serre_dim(obj, p) for p in expected}
    if key in ("theorem63", "theorem64"):
        return getattr(roots.vanish_predictor(obj), key)
    if key == "root_multiplicity":
        alpha, _ = expected
        return (tuple(alpha), roots.root_decomposition(obj).p(alpha))
    raise InputError(f"unknown fact {key!r}")

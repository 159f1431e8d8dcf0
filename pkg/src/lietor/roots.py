"""Root decomposition of the nilradical and the counting criteria built on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod

from .errors import ConsistencyError, InputError, PreconditionError
from .extension import SolvableExtension
from .lie import lower_central_series
from .linalg import Vector

__all__ = [
    "RootSystemData",
    "VanishReport",
    "root_decomposition",
    "sm_bound",
    "distinct_triple_condition",
    "literal_triple_condition",
    "vanish_predictor",
    "invariant_count_formula",
    "q_valued_count",
]


def _add(*vectors: Vector) -> Vector:
    return tuple(sum(parts, 0) for parts in zip(*vectors))


@dataclass(frozen=True)
class RootSystemData:
    """Root spaces ``N_alpha`` of the nilradical under the torus.

    ``W`` lists roots in order of their first basis vector.  ``spaces`` maps
    each root to its basis indices (0-based).
    """

    s: int
    W: tuple
    spaces: dict = field(hash=False, compare=False)

    def p(self, alpha) -> int:
        return len(self.spaces.get(tuple(alpha), ()))

    @property
    def multiplicity_one(self) -> bool:
        return all(len(v) == 1 for v in self.spaces.values())

    def multiplicities(self) -> dict:
        return {a: len(v) for a, v in self.spaces.items()}

    def zero(self) -> Vector:
        return tuple(0 for _ in range(self.s))


def root_decomposition(R: SolvableExtension) -> RootSystemData:
    n = R.nilradical_dim
    W = R.torus.weights
    cols = [W.column(i) for i in range(n)]
    spaces: dict = {}
    for i, c in enumerate(cols):
        spaces.setdefault(c, []).append(i)
    N = R.nilradical
    for (i, j), row in N.table.items():
        target = _add(cols[i], cols[j])
        for t, _ in row:
            if cols[t] != target:
                raise ConsistencyError(
                    f"grading fails: [e{i + 1}, e{j + 1}] has a component on e{t + 1} outside N_(alpha+beta)"
                )
    return RootSystemData(
        R.s, tuple(spaces), {a: tuple(v) for a, v in spaces.items()}
    )


def sm_bound(roots: RootSystemData, m: int) -> int:
    """Sum over sets of ``m+1`` distinct roots of
    ``p(d_1) ... p(d_{m+1}) * p(d_1 + ... + d_{m+1})``."""
    if m < 1:
        raise InputError("sm_bound needs m >= 1")
    total = 0
    for tup in combinations(roots.W, m + 1):
        target = roots.p(_add(*tup))
        if target:
            total += prod(roots.p(a) for a in tup) * target
    return total


def distinct_triple_condition(roots: RootSystemData) -> bool:
    """No three pairwise distinct roots sum to a root."""
    Wset = set(roots.W)
    return not any(_add(*t) in Wset for t in combinations(roots.W, 3))


def literal_triple_condition(roots: RootSystemData) -> bool:
    """Ordered reading: every ``(a, b, c)`` in ``W^3`` with ``a + b + c`` in
    ``W`` has ``c == b`` or ``c == a``."""
    Wset = set(roots.W)
    for a, b, c in product(roots.W, repeat=3):
        if _add(a, b, c) in Wset and c != a and c != b:
            return False
    return True


@dataclass(frozen=True)
class VanishReport:
    theorem63: bool
    theorem64: bool
    multiplicity_one: bool
    triple_condition: bool
    n_cubed_zero: bool
    warnings: tuple = ()


def vanish_predictor(R: SolvableExtension) -> VanishReport:
    roots = root_decomposition(R)
    mult1 = roots.multiplicity_one
    triple = distinct_triple_condition(roots)
    series = lower_central_series(R.nilradical)
    cubed_zero = len(series) < 3 or series[2].dim == 0
    warnings = []
    if cubed_zero and not mult1:
        warnings.append(
            "N^3 = 0 but some root space has dimension > 1; the N^3 = 0 criterion is not applied"
        )
    return VanishReport(
        theorem63=mult1 and triple,
        theorem64=mult1 and cubed_zero,
        multiplicity_one=mult1,
        triple_condition=triple,
        n_cubed_zero=cubed_zero,
        warnings=tuple(warnings),
    )


def _require_multiplicity_one(roots: RootSystemData) -> None:
    if not roots.multiplicity_one:
        raise PreconditionError(
            "closed-form count needs one-dimensional root spaces; use invariant_cochain_basis instead"
        )


def invariant_count_formula(roots: RootSystemData, m: int) -> int:
    """Number of ``m``-sets of distinct roots whose sum is a root.

    With one-dimensional root spaces this is the dimension of the
    ``N``-valued invariant ``m``-cochains.
    """
    if m < 0:
        raise InputError("degree must be non-negative")
    _require_multiplicity_one(roots)
    Wset = set(roots.W)
    zero = roots.zero()
    return sum(
        1 for t in combinations(roots.W, m) if (_add(*t) if t else zero) in Wset
    )


def q_valued_count(roots: RootSystemData, m: int) -> int:
    """``s`` times the number of ``m``-sets of distinct roots summing to 0:
    the invariant cochains with values in the torus."""
    if m < 0:
        raise InputError("degree must be non-negative")
    _require_multiplicity_one(roots)
    zero = roots.zero()
    hits = sum(1 for t in combinations(roots.W, m) if (_add(*t) if t else zero) == zero)
    return roots.s * hits

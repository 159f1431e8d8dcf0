"""Exact arithmetic for nilpotent Lie algebras and their maximal solvable
extensions over the Gaussian rationals."""

from .catalog import catalog_build, catalog_list
from .cohomology import (
    ModuleAction,
    adjoint_action,
    coboundary_matrix,
    cohomology_dim,
    hochschild_serre_dim,
    invariant_cochain_basis,
    invariant_cohomology_dim,
    restricted_coboundary_rank,
    restriction_action,
)
from .derivations import (
    all_nilpotent,
    derivation_space,
    inner_derivations,
    is_characteristically_nilpotent,
    is_derivation,
)
from .errors import (
    ConsistencyError,
    InputError,
    InstanceTooLarge,
    JacobiError,
    LietorError,
    ParseError,
    PreconditionError,
)
from .extension import (
    SolvableExtension,
    build_max_extension,
    build_split_extension,
    extension_from_weights,
    from_algebra,
    verify_nilradical_certificate,
)
from .io import AlgebraDocument, document_from_algebra, emit_algebra, parse_algebra, parse_matrix
from .lie import (
    LieAlgebra,
    Subspace,
    ad_matrix,
    algebras_equal,
    apply_basechange,
    bracket,
    center,
    derived_series,
    direct_sum,
    generator_indices,
    is_nilpotent,
    is_solvable,
    jacobi_violations,
    lower_central_series,
    permute_basis,
)
from .linalg import Matrix, nullspace_basis, rank, rref, solve_linear
from .roots import (
    invariant_count_formula,
    q_valued_count,
    root_decomposition,
    sm_bound,
    vanish_predictor,
)
from .scalar import I, ONE, ZERO, Scalar, parse_scalar
from .torus import condition_A_check, maximal_torus, weight_equations

__version__ = "0.1.0"

"""Exact diagonal reduction of matrices over computable commutative rings,
with executable verifiers for the module-theoretic facts the reduction rests
on (refinement, localization, cancellation, radical lifting)."""

from .errors import (
    BudgetExceeded,
    MismatchedRings,
    RinglabError,
    UnsupportedRing,
    element_budget,
    search_budget,
)
from .rings import (
    BivariatePolynomialRing,
    CornerRing,
    EuclideanOps,
    IdempotentBasis,
    IntegerRing,
    ModularRing,
    PolynomialRing,
    PrimeField,
    ProductRing,
    QuotientRing,
    Ring,
    RingElement,
    TrivialExtensionRing,
    bezout_gcd,
    idempotent_power,
    idempotents,
    is_regular_element,
    is_unit,
    jacobson_radical_and_quotient,
    maximal_ideals,
    parse_ring,
    primitive_idempotent_decomposition,
    try_inverse,
)
from .monoids import (
    CancellationReport,
    MonoidElement,
    MonoidPresentation,
    RefinementWitness,
    cancellation_law_check,
    conical_check,
    refine,
)
from .matrices import (
    DiagonalReduction,
    RingMatrix,
    diagonal_reduction,
    elementary_divisor_chain_check,
    hermite_reduce,
    is_regular_matrix,
    is_total_divisor,
    matrix_from_document,
    matrix_to_document,
    reduce_matrix,
    reduction_to_document,
    smith_normal_form,
    verify_reduction,
)
from .modules import (
    FiniteModule,
    LocalizedView,
    ProjectiveModule,
    RankVerdict,
    VerifierReport,
    annihilator_submodule,
    cancellation_and_reduction_verify,
    constant_rank_free_check,
    cyclic_submodule,
    diagonal_refinement_check,
    direct_sum,
    find_module_isomorphism,
    free_module,
    free_projective,
    jacobson_lift_verify,
    kernel_image_cokernel,
    local_global_verify,
    localize_at_element,
    localize_at_maximal,
    module_iso,
    partition_of_unity_verify,
    projective_module,
    projective_monoid,
    quotient_by_cyclic,
    ring_module,
    stably_free_check,
    to_finite_module,
)
from .counterexamples import (
    HermiteSearchReport,
    NotPrincipalUpTo,
    PrincipalWitness,
    bounded_principality_check,
    default_hermite_vector,
    trivial_extension_hermite_search,
)

__version__ = "0.1.0"

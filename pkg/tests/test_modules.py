"""Finite modules, projective multiplicity classes, and theorem verifiers."""

import pytest

from ringlab import (
    BudgetExceeded,
    FiniteModule,
    IdempotentBasis,
    IntegerRing,
    MismatchedRings,
    ModularRing,
    ProjectiveModule,
    RingMatrix,
    TrivialExtensionRing,
    UnsupportedRing,
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
    maximal_ideals,
    module_iso,
    partition_of_unity_verify,
    projective_module,
    projective_monoid,
    quotient_by_cyclic,
    ring_module,
    stably_free_check,
    to_finite_module,
)

Z4 = ModularRing(4)
Z6 = ModularRing(6)
Z8 = ModularRing(8)
Z12 = ModularRing(12)


# ---------------------------------------------------------------------------
# explicit carriers


def test_axioms_reject_broken_addition():
    ring = ModularRing(2)
    bad_add = lambda x, y: x  # not commutative: 0+1=0 but 1+0=1
    with pytest.raises(ValueError):
        FiniteModule(ring, [0, 1], 0, bad_add, lambda r, x: (r * x) % 2)


def test_carrier_validation():
    ring = ModularRing(2)
    add = lambda x, y: (x + y) % 2
    scale = lambda r, x: (r * x) % 2
    with pytest.raises(ValueError):
        FiniteModule(ring, [0, 1, 1], 0, add, scale)
    with pytest.raises(ValueError):
        FiniteModule(ring, [1], 0, add, scale)
    with pytest.raises(UnsupportedRing):
        FiniteModule(IntegerRing(), [0], 0, add, scale)


def test_standard_carriers_over_z6():
    assert len(ring_module(Z6)) == 6
    assert len(free_module(Z6, 2)) == 36
    assert sorted(cyclic_submodule(Z6.make(3)).points) == [0, 3]
    assert sorted(annihilator_submodule(Z6.make(3)).points) == [0, 2, 4]
    assert len(quotient_by_cyclic(Z6.make(3))) == 3


def test_ideal_and_annihilator_sizes_multiply_to_ring_order():
    for ring in (Z4, Z6, Z8, Z12):
        for d in ring.elements():
            assert len(cyclic_submodule(d)) * len(annihilator_submodule(d)) == ring.cardinality()


def test_free_module_budget():
    with pytest.raises(BudgetExceeded):
        free_module(Z12, 4)


def test_generators_are_greedy_and_minimal():
    assert ring_module(Z6).generators() == (1,)
    assert cyclic_submodule(Z6.make(3)).generators() == (3,)
    pair = free_module(ModularRing(2), 2)
    assert len(pair.generators()) == 2


def test_direct_sum_shape():
    m = direct_sum(cyclic_submodule(Z6.make(3)), cyclic_submodule(Z6.make(4)))
    assert len(m) == 6
    assert m.label == "3R(+)4R"
    with pytest.raises(MismatchedRings):
        direct_sum(ring_module(Z4), ring_module(Z6))


def test_annihilators():
    m = ring_module(Z6)
    assert m.element_annihilator(3) == frozenset({0, 2, 4})
    assert m.annihilator() == frozenset({0})
    assert annihilator_submodule(Z6.make(3)).annihilator() == frozenset({0, 3})


# ---------------------------------------------------------------------------
# isomorphism search


def test_ring_decomposes_into_corner_sum():
    total = direct_sum(cyclic_submodule(Z6.make(3)), cyclic_submodule(Z6.make(4)))
    phi = find_module_isomorphism(total, ring_module(Z6))
    assert phi is not None
    # the found map must be additive, scalar-compatible, and bijective
    assert sorted(phi.values()) == [0, 1, 2, 3, 4, 5]
    for x in total.points:
        for y in total.points:
            assert phi[total.add(x, y)] == (phi[x] + phi[y]) % 6
        for r in range(6):
            assert phi[total.scale(r, x)] == (r * phi[x]) % 6


def test_quotient_matches_annihilator_over_z4():
    # over Z/4 the quotient R/2R and the ideal ann(2) = 2R are both F_2
    assert module_iso(quotient_by_cyclic(Z4.make(2)), annihilator_submodule(Z4.make(2)))


def test_cardinality_mismatch_is_cheap_no():
    assert find_module_isomorphism(
        cyclic_submodule(Z6.make(3)), cyclic_submodule(Z6.make(4))
    ) is None


def test_annihilator_mismatch_is_cheap_no():
    left = ring_module(Z4)
    right = direct_sum(cyclic_submodule(Z4.make(2)), cyclic_submodule(Z4.make(2)))
    assert len(left) == len(right)
    assert find_module_isomorphism(left, right) is None


def test_non_isomorphic_same_size_same_annihilator():
    # Z/4 x Z/4 against Z/4 x Z/2 x Z/2: equal card, equal annihilator
    left = direct_sum(ring_module(Z4), ring_module(Z4))
    two = cyclic_submodule(Z4.make(2))
    right = direct_sum(ring_module(Z4), direct_sum(two, two))
    assert len(left) == len(right) == 16
    assert left.annihilator() == right.annihilator()
    assert find_module_isomorphism(left, right) is None


def test_isomorphism_search_budget():
    left = direct_sum(ring_module(Z4), ring_module(Z4))
    with pytest.raises(BudgetExceeded):
        find_module_isomorphism(left, left, budget=1)


def test_isomorphism_needs_common_ring():
    with pytest.raises(MismatchedRings):
        find_module_isomorphism(ring_module(Z4), ring_module(Z6))


# ---------------------------------------------------------------------------
# projective modules


def test_projective_construction_and_size():
    m = projective_module(Z6, (2, 1))
    assert m.describe() == "2(3R) + 1(4R)"
    assert m.component_sizes() == (2, 3)
    assert m.carrier_cardinality() == 12
    assert not m.is_zero()
    assert projective_module(Z6, (0, 0)).is_zero()


def test_projective_validation():
    with pytest.raises(ValueError):
        projective_module(Z6, (1,))
    with pytest.raises(ValueError):
        projective_module(Z6, (1, -1))


def test_projective_iso_is_multiplicity_equality():
    assert module_iso(projective_module(Z6, (1, 2)), projective_module(Z6, (1, 2)))
    assert not module_iso(projective_module(Z6, (1, 2)), projective_module(Z6, (2, 1)))
    with pytest.raises(MismatchedRings):
        module_iso(projective_module(Z6, (1, 1)), projective_module(Z4, (1,)))


def test_projective_iso_rejects_reordered_basis():
    basis = IdempotentBasis(Z6, (Z6.make(4), Z6.make(3)))
    reordered = ProjectiveModule(Z6, basis, (1, 2))
    with pytest.raises(ValueError):
        module_iso(projective_module(Z6, (2, 1)), reordered)


def test_projective_expands_to_explicit_carrier():
    m = to_finite_module(projective_module(Z6, (2, 1)))
    assert len(m) == 12
    with pytest.raises(BudgetExceeded):
        to_finite_module(free_projective(Z6, 2), budget=10)


def test_mixed_iso_crosses_representations():
    assert module_iso(projective_module(Z6, (1, 1)), ring_module(Z6))
    assert module_iso(projective_module(Z6, (1, 0)), cyclic_submodule(Z6.make(3)))
    assert not module_iso(projective_module(Z6, (1, 0)), cyclic_submodule(Z6.make(4)))


def test_projective_monoid_is_free_on_corners():
    presentation, basis = projective_monoid(Z6)
    assert presentation.is_free
    assert presentation.generator_count == len(basis) == 2
    presentation, _ = projective_monoid(Z4)
    assert presentation.generator_count == 1


# ---------------------------------------------------------------------------
# localization


def test_localize_at_maximal_gives_free_rank():
    m = projective_module(Z6, (2, 1))
    view = localize_at_maximal(m, 0)
    assert view.free_rank == 2
    assert view.factor.cardinality() == 2
    view = localize_at_maximal(m, 1)
    assert view.free_rank == 1
    assert view.factor.cardinality() == 3
    assert "maximal ideal #1" in view.describe()


def test_localize_at_maximal_accepts_the_ideal_itself():
    m = projective_module(Z6, (2, 1))
    ideal = maximal_ideals(Z6)[0]
    assert localize_at_maximal(m, ideal).free_rank == 2
    with pytest.raises(ValueError):
        localize_at_maximal(m, 5)
    with pytest.raises(ValueError):
        localize_at_maximal(m, frozenset({Z6.make(0)}))


def test_localize_at_element_projective():
    m = projective_module(Z6, (2, 1))
    view = localize_at_element(m, Z6.make(3))
    assert view.result.multiplicities == (2,)
    view = localize_at_element(m, Z6.make(4))
    assert view.result.multiplicities == (1,)
    # a unit inverts everything: nothing is cut away
    view = localize_at_element(m, Z6.make(5))
    assert view.result.multiplicities == (2, 1)


def test_localize_at_nilpotent_is_zero():
    m = projective_module(Z4, (2,))
    view = localize_at_element(m, Z4.make(2))
    assert view.result.is_zero()
    assert view.factor.cardinality() == 1


def test_localize_finite_module_at_element():
    view = localize_at_element(ring_module(Z6), Z6.make(3))
    assert len(view.result) == 2
    assert sorted(view.result.points) == [0, 3]


# ---------------------------------------------------------------------------
# kernels, images, cokernels


def test_kernel_image_cokernel_of_scalar():
    f = RingMatrix.from_rows(Z6, [[2]])
    ker, im, coker = kernel_image_cokernel(f)
    assert sorted(ker.points) == [(0,), (3,)]
    assert sorted(im.points) == [(0,), (2,), (4,)]
    assert len(coker) == 2


def test_kernel_image_cokernel_of_diagonal():
    f = RingMatrix.diagonal(Z6, [Z6.make(2), Z6.make(3)])
    ker, im, coker = kernel_image_cokernel(f)
    assert len(ker) == 6
    assert len(im) == 6
    assert len(coker) == 6


def test_kernel_budget():
    f = RingMatrix.from_rows(Z6, [[1, 0], [0, 1]])
    with pytest.raises(BudgetExceeded):
        kernel_image_cokernel(f, budget=10)


# ---------------------------------------------------------------------------
# rank verdicts


def test_constant_rank_free():
    verdict = constant_rank_free_check(projective_module(Z6, (2, 2)))
    assert verdict.free and verdict.rank == 2
    assert verdict.localized_ranks == (2, 2)
    assert "free of rank 2" in verdict.describe()


def test_non_constant_rank_is_not_free():
    verdict = constant_rank_free_check(projective_module(Z6, (2, 1)))
    assert not verdict.free
    assert verdict.localized_ranks == (2, 1)


def test_stably_free_is_free():
    verdict = stably_free_check(projective_module(Z6, (1, 1)), 1, 2)
    assert verdict.free and verdict.rank == 1
    with pytest.raises(ValueError):
        stably_free_check(projective_module(Z6, (2, 1)), 1, 3)


# ---------------------------------------------------------------------------
# theorem verifiers


def test_local_global_verify_holds():
    report = local_global_verify(Z6, 2)
    assert report.holds
    assert report.checked == 81
    assert report.name == "local-global"
    assert any("2 maximal ideals" in d for d in report.details)
    lines = report.lines()
    assert lines[0].startswith("check=local-global instance=modular(6)")
    assert "verdict=holds" in lines[0]


def test_partition_of_unity_verify_holds():
    report = partition_of_unity_verify(Z6, [Z6.make(3), Z6.make(4)], 2)
    assert report.holds
    assert report.checked == 81
    report = partition_of_unity_verify(Z12, [Z12.make(4), Z12.make(9)], 1)
    assert report.holds


def test_partition_of_unity_needs_generating_set():
    with pytest.raises(ValueError):
        partition_of_unity_verify(Z6, [Z6.make(2)], 2)


def test_diagonal_refinement_on_regular_diagonal():
    f = RingMatrix.diagonal(Z6, [Z6.make(3), Z6.make(4)])
    report = diagonal_refinement_check(f)
    assert report.holds
    assert report.name == "diagonal-refinement"


def test_diagonal_refinement_non_square_notes_free_summand():
    f = RingMatrix.from_rows(Z6, [[2, 0]])
    report = diagonal_refinement_check(f)
    assert report.holds
    assert any("trailing kernel summand" in d for d in report.details)


def test_diagonal_refinement_requires_regular_input():
    with pytest.raises(ValueError):
        diagonal_refinement_check(RingMatrix.from_rows(Z4, [[2]]))


def test_diagonal_refinement_requires_finite_ring():
    f = RingMatrix.identity(IntegerRing(), 1)
    with pytest.raises(UnsupportedRing):
        diagonal_refinement_check(f)


def test_cancellation_and_reduction_verify_z4():
    report = cancellation_and_reduction_verify(Z4, 2)
    assert report.holds
    assert any("169/256" in d for d in report.details)


def test_cancellation_and_reduction_rejects_other_rings():
    with pytest.raises(UnsupportedRing):
        cancellation_and_reduction_verify(TrivialExtensionRing(Z4), 2)


def test_jacobson_lift_verify():
    report = jacobson_lift_verify(Z4)
    assert report.holds
    assert any("{0, 2}" in d for d in report.details)
    assert any("gf(2)" in d for d in report.details)
    report = jacobson_lift_verify(Z6)
    assert report.holds
    assert any("{0}" in d for d in report.details)

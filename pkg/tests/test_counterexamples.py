"""Bounded refutation searches: non-principal ideals and a non-Hermite row."""

import pytest

from ringlab import (
    BivariatePolynomialRing,
    BudgetExceeded,
    IntegerRing,
    ModularRing,
    NotPrincipalUpTo,
    PolynomialRing,
    PrimeField,
    PrincipalWitness,
    RingMatrix,
    TrivialExtensionRing,
    UnsupportedRing,
    bounded_principality_check,
    default_hermite_vector,
    trivial_extension_hermite_search,
)

Z4X = PolynomialRing(ModularRing(4), bound=3)
F2XY = BivariatePolynomialRing(PrimeField(2), bound=2)


# ---------------------------------------------------------------------------
# principality over Z/4[X]


def test_ideal_2_x_is_not_principal_up_to_degree_3():
    verdict = bounded_principality_check([Z4X.make(2), Z4X.gen()], 3)
    assert isinstance(verdict, NotPrincipalUpTo)
    assert verdict.bound == 3
    # members of (2, X) up to degree 3 are the 2*4^3 polynomials with an even
    # constant term; minus zero that is 127 candidates
    assert verdict.candidates_examined == 127
    assert "bounded evidence, not a proof" in verdict.describe()


def test_singleton_generator_is_trivially_principal():
    verdict = bounded_principality_check([Z4X.make(2)], 1)
    assert isinstance(verdict, PrincipalWitness)
    assert verdict.generator == Z4X.make(2)
    assert verdict.cofactors == (Z4X.one(),)
    assert verdict.combination == (Z4X.one(),)
    assert "generated by" in verdict.describe()


def test_two_generator_principal_ideal_finds_common_factor():
    two, two_x = Z4X.make(2), Z4X.make([0, 2])
    verdict = bounded_principality_check([two, two_x], 3)
    assert isinstance(verdict, PrincipalWitness)
    assert verdict.generator == two
    # the witness re-multiplies: f_i = g * c_i and g = sum f_i * h_i
    for f, c in zip((two, two_x), verdict.cofactors):
        assert verdict.generator * c == f
    total = Z4X.zero()
    for f, h in zip((two, two_x), verdict.combination):
        total = total + f * h
    assert total == verdict.generator


def test_principality_validates_inputs():
    with pytest.raises(ValueError):
        bounded_principality_check([], 2)
    with pytest.raises(ValueError):
        bounded_principality_check([Z4X.make([0, 0, 0, 0, 1])], 3)
    with pytest.raises(UnsupportedRing):
        bounded_principality_check([ModularRing(4).make(2)], 2)


def test_principality_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        bounded_principality_check([Z4X.make(2), Z4X.gen()], 4)


# ---------------------------------------------------------------------------
# principality over F_2[X, Y]


def test_ideal_x_y_is_not_principal_up_to_degree_2():
    gx, gy = F2XY.gens()
    verdict = bounded_principality_check([gx, gy], 2)
    assert isinstance(verdict, NotPrincipalUpTo)
    # members are spanned by the five monomials X, Y, X^2, XY, Y^2: 31 nonzero
    assert verdict.candidates_examined == 31


def test_single_variable_ideal_is_principal():
    gx, _ = F2XY.gens()
    verdict = bounded_principality_check([gx, gx * gx], 2)
    assert isinstance(verdict, PrincipalWitness)
    assert verdict.generator == gx


# ---------------------------------------------------------------------------
# the non-Hermite row over T(Z, Z)


def test_default_vector_is_2_epsilon():
    v = default_hermite_vector()
    assert [e.literal() for e in v.entries] == [[2, 0], [0, 1]]


def test_no_bounded_reduction_for_2_epsilon():
    report = trivial_extension_hermite_search(height=2)
    assert not report.found
    assert report.checked == 625 * 625
    assert report.transform is None
    assert "bounded evidence" in report.describe()


def test_kill_columns_exist_but_determinants_are_even():
    # independent arithmetic: (a,m)(b,n) = (ab, an+bm); the second column of
    # any candidate transform must kill (2, e), and every such column forces
    # an even determinant, so the search fails for a structural reason rather
    # than for lack of candidates
    mul = lambda p, q: (p[0] * q[0], p[0] * q[1] + p[1] * q[0])
    add = lambda p, q: (p[0] + q[0], p[1] + q[1])
    span = [(a, b) for a in range(-2, 3) for b in range(-2, 3)]
    v1, v2 = (2, 0), (0, 1)
    kills = [
        (x, y)
        for x in span
        for y in span
        if add(mul(v1, x), mul(v2, y)) == (0, 0)
    ]
    assert len(kills) == 15
    for x, y in kills:
        for a in span:
            for b in span:
                det = mul(a, y)[0] - mul(b, x)[0]
                assert det % 2 == 0


def test_reducible_row_is_found():
    ring = TrivialExtensionRing(IntegerRing())
    v = RingMatrix.from_rows(ring, [[(1, 0), (0, 0)]])
    report = trivial_extension_hermite_search(v, height=1)
    assert report.found
    product = v @ report.transform
    assert product.entries == (report.diagonal, ring.zero())
    assert ring.try_inverse(report.diagonal) is not None


def test_hermite_search_validation():
    ring = TrivialExtensionRing(IntegerRing())
    with pytest.raises(ValueError):
        trivial_extension_hermite_search(RingMatrix.identity(ring, 2))
    with pytest.raises(ValueError):
        trivial_extension_hermite_search(height=0)
    with pytest.raises(UnsupportedRing):
        trivial_extension_hermite_search(
            RingMatrix.from_rows(
                TrivialExtensionRing(ModularRing(4)), [[(1, 0), (2, 0)]]
            )
        )


def test_hermite_search_budget():
    with pytest.raises(BudgetExceeded):
        trivial_extension_hermite_search(height=5)


def test_searches_are_deterministic():
    a = trivial_extension_hermite_search(height=1)
    b = trivial_extension_hermite_search(height=1)
    assert a == b
    x = bounded_principality_check([Z4X.make(2), Z4X.gen()], 2)
    y = bounded_principality_check([Z4X.make(2), Z4X.gen()], 2)
    assert x == y

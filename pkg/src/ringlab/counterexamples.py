"""Bounded refutation searches for two non-principality claims and one
non-reducibility claim.

``bounded_principality_check`` asks whether a finitely generated polynomial
ideal can be generated by a single element, exhaustively over candidate
generators and cofactors of bounded degree.  A negative answer is bounded
evidence only and is labeled that way; a positive answer carries verified
witnesses.

``trivial_extension_hermite_search`` scans for an invertible change of
columns reducing a 1x2 row over T(Z,Z) to (d 0), with the entry heights
boxed.  The interesting rows are the ones where nothing is found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceeded, UnsupportedRing, search_budget
from .matrices import RingMatrix
from .rings import (
    BivariatePolynomialRing,
    IntegerRing,
    PolynomialRing,
    Ring,
    RingElement,
    TrivialExtensionRing,
)


@dataclass(frozen=True)
class PrincipalWitness:
    """A verified single generator: each ideal generator equals
    ``generator * cofactor``, and ``generator`` is the recorded combination
    of the ideal generators."""

    generator: RingElement
    cofactors: tuple[RingElement, ...]
    combination: tuple[RingElement, ...]

    def describe(self) -> str:
        return f"principal: generated by {self.generator.literal()}"


@dataclass(frozen=True)
class NotPrincipalUpTo:
    """No single generator exists within the degree bound.  This is bounded
    evidence about the searched box, not a proof for the full ring."""

    bound: int
    candidates_examined: int

    def describe(self) -> str:
        return (
            f"no single generator of degree <= {self.bound}"
            f" ({self.candidates_examined} candidates examined;"
            " bounded evidence, not a proof)"
        )


def _degree_tools(ring: Ring):
    if isinstance(ring, PolynomialRing):
        if not ring.base.is_finite():
            raise UnsupportedRing("principality search needs finite coefficients")
        return ring.degree, ring.elements_up_to_degree
    if isinstance(ring, BivariatePolynomialRing):
        return ring.total_degree, ring.elements_up_to_total_degree
    raise UnsupportedRing(
        f"principality search works over polynomial rings, got {ring.descriptor()}"
    )


def bounded_principality_check(
    generators: Sequence[RingElement], bound: int, budget: int | None = None
):
    """Search for one element generating the same ideal as ``generators``,
    all degrees capped at ``bound``.

    Membership of a candidate g in the ideal is decided against the full set
    of combinations sum(f_i * h_i) with cofactor degrees <= bound, enumerated
    once; the reverse inclusion demands each f_i = g * c_i with deg(c_i) <=
    bound.  Returns a verified PrincipalWitness or NotPrincipalUpTo."""
    if not generators:
        raise ValueError("need at least one ideal generator")
    ring = generators[0].ring
    for f in generators:
        ring._own(f)
    degree_of, enumerate_up_to = _degree_tools(ring)
    for f in generators:
        if not f.is_zero() and degree_of(f) > bound:
            raise ValueError(
                f"generator {f.literal()} exceeds the degree bound {bound}"
            )
    candidates = list(enumerate_up_to(bound))
    combo_count = len(candidates) ** len(generators)
    cap = search_budget(budget)
    if combo_count > cap:
        raise BudgetExceeded(
            f"{combo_count} cofactor combinations exceed the search budget {cap}"
        )
    products = [[f * h for h in candidates] for f in generators]
    members: dict = {}
    for combo in itertools.product(range(len(candidates)), repeat=len(generators)):
        total = ring.zero()
        for row, idx in zip(products, combo):
            total = total + row[idx]
        if total.payload not in members:
            members[total.payload] = combo
    examined = 0
    for g in candidates:
        if g.is_zero():
            continue
        if g.payload not in members:
            continue
        examined += 1
        cofactors = []
        for f in generators:
            match = next((c for c in candidates if g * c == f), None)
            if match is None:
                break
            cofactors.append(match)
        if len(cofactors) != len(generators):
            continue
        combination = tuple(candidates[i] for i in members[g.payload])
        recombined = ring.zero()
        for f, h in zip(generators, combination):
            recombined = recombined + f * h
        if recombined != g:
            raise AssertionError("combination witness failed; this is a bug")
        for f, c in zip(generators, cofactors):
            if g * c != f:
                raise AssertionError("cofactor witness failed; this is a bug")
        return PrincipalWitness(g, tuple(cofactors), combination)
    return NotPrincipalUpTo(bound, examined)


@dataclass(frozen=True)
class HermiteSearchReport:
    """Result of the boxed search for a column transform v @ Q = (d 0)."""

    vector: RingMatrix
    height: int
    found: bool
    transform: Optional[RingMatrix]
    diagonal: Optional[RingElement]
    checked: int

    def describe(self) -> str:
        if self.found:
            return (
                f"reduction found: d = {self.diagonal.literal()},"
                f" Q = {[e.literal() for e in self.transform.entries]}"
            )
        return (
            f"no reduction found within bounds (entry height <= {self.height},"
            f" {self.checked} column pairs examined; bounded evidence)"
        )


def default_hermite_vector() -> RingMatrix:
    """The 1x2 row (2, e) over T(Z,Z), e the square-zero generator: the zero
    column of any reduction forces an even determinant, so no bounded search
    can find an invertible transform."""
    ring = TrivialExtensionRing(IntegerRing())
    return RingMatrix.from_rows(ring, [[(2, 0), (0, 1)]])


def trivial_extension_hermite_search(
    vector: RingMatrix | None = None, height: int = 2, budget: int | None = None
) -> HermiteSearchReport:
    """Exhaust all 2x2 column transforms over T(Z,Z) with entries of height
    at most ``height``: Q must be invertible (unit determinant) and kill the
    second coordinate of the row.  Reports the first find or the exhaustion."""
    if vector is None:
        vector = default_hermite_vector()
    ring = vector.ring
    if not isinstance(ring, TrivialExtensionRing) or not isinstance(
        ring.base, IntegerRing
    ):
        raise UnsupportedRing("the search is implemented over trivial(integers)")
    if (vector.rows, vector.cols) != (1, 2):
        raise ValueError("the search expects a 1x2 row")
    if height < 1:
        raise ValueError("height must be positive")
    span = range(-height, height + 1)
    entries = [(a, b) for a in span for b in span]
    columns = list(itertools.product(entries, repeat=2))
    total = len(columns) ** 2
    cap = search_budget(budget)
    if total > cap:
        raise BudgetExceeded(
            f"{total} column pairs exceed the search budget {cap}"
        )
    v1, v2 = (e.payload for e in vector.entries)
    mul, add, neg = ring._mul, ring._add, ring._neg
    zero = ring._zero()
    checked = 0
    for col2 in columns:
        x, y = col2
        if add(mul(v1, x), mul(v2, y)) != zero:
            checked += len(columns)
            continue
        for col1 in columns:
            checked += 1
            a, b = col1
            det = add(mul(a, y), neg(mul(b, x)))
            if ring.try_inverse(RingElement(ring, det)) is None:
                continue
            q = RingMatrix.from_rows(ring, [[a, x], [b, y]])
            d = RingElement(ring, add(mul(v1, a), mul(v2, b)))
            product = vector @ q
            if product.entries != (d, ring.zero()):
                raise AssertionError("transform failed re-verification; a bug")
            return HermiteSearchReport(vector, height, True, q, d, checked)
    return HermiteSearchReport(vector, height, False, None, None, checked)

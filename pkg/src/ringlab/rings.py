"""Computable commutative rings with canonical element payloads.

Every ring canonicalizes element payloads on construction, so two elements
are equal exactly when their payloads are identical.  Payload conventions:

* integers: a Python int
* modular integers and prime fields: an int in ``[0, n)``
* univariate polynomials: a tuple of base payloads with no trailing zeros
  (the zero polynomial is the empty tuple)
* bivariate polynomials: a sorted tuple of ``((i, j), coeff)`` pairs with
  nonzero coefficients
* products: a tuple of component payloads
* trivial extensions: a pair ``(r, m)`` of base payloads, multiplying as
  ``(r1*r2, r1*m2 + m1*r2)``

Finite rings expose a fixed enumeration order; every exhaustive search in
the package walks that order, which is what makes witnesses deterministic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Iterator, Optional

from .errors import BudgetExceeded, MismatchedRings, UnsupportedRing, element_budget


# ---------------------------------------------------------------------------
# elements and the ring base class


@dataclass(frozen=True)
class RingElement:
    """An element of a concrete ring; the payload is canonical and hashable."""

    ring: "Ring"
    payload: Any

    def __add__(self, other: "RingElement") -> "RingElement":
        return self.ring.add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self.ring.sub(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return self.ring.mul(self, other)

    def __neg__(self) -> "RingElement":
        return self.ring.neg(self)

    def __pow__(self, exponent: int) -> "RingElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = self.ring.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.payload == self.ring._zero()

    def literal(self) -> Any:
        """JSON-ready literal form of this element."""
        return self.ring._payload_literal(self.payload)

    def __repr__(self) -> str:
        return f"<{json.dumps(self.literal())} in {self.ring.descriptor()}>"


class Ring:
    """Base class: commutative ring with canonical payload arithmetic."""

    _descriptor: str

    # -- payload layer, provided by subclasses ------------------------------

    def _canon(self, raw: Any) -> Any:
        raise NotImplementedError

    def _add(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def _neg(self, x: Any) -> Any:
        raise NotImplementedError

    def _mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def _zero(self) -> Any:
        raise NotImplementedError

    def _one(self) -> Any:
        raise NotImplementedError

    def _payload_literal(self, x: Any) -> Any:
        return x

    def _payloads(self) -> Iterator[Any]:
        raise UnsupportedRing(f"{self.descriptor()} is not enumerable")

    # -- identity ------------------------------------------------------------

    def descriptor(self) -> str:
        return self._descriptor

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self._descriptor == other._descriptor

    def __hash__(self) -> int:
        return hash(self._descriptor)

    def __repr__(self) -> str:
        return self._descriptor

    # -- element layer -------------------------------------------------------

    def make(self, raw: Any) -> RingElement:
        if isinstance(raw, RingElement):
            if raw.ring != self:
                raise MismatchedRings(f"{raw!r} does not belong to {self.descriptor()}")
            return raw
        return RingElement(self, self._canon(raw))

    def zero(self) -> RingElement:
        return RingElement(self, self._zero())

    def one(self) -> RingElement:
        return RingElement(self, self._one())

    def _own(self, a: RingElement) -> None:
        if a.ring != self:
            raise MismatchedRings(
                f"element of {a.ring.descriptor()} used in {self.descriptor()}"
            )

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        self._own(a)
        self._own(b)
        return RingElement(self, self._add(a.payload, b.payload))

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        self._own(a)
        self._own(b)
        return RingElement(self, self._add(a.payload, self._neg(b.payload)))

    def neg(self, a: RingElement) -> RingElement:
        self._own(a)
        return RingElement(self, self._neg(a.payload))

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        self._own(a)
        self._own(b)
        return RingElement(self, self._mul(a.payload, b.payload))

    # -- finiteness ----------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return False

    def is_finite(self) -> bool:
        return False

    def cardinality(self) -> int:
        raise UnsupportedRing(f"{self.descriptor()} is not finite")

    def elements(self, budget: int | None = None) -> tuple[RingElement, ...]:
        """All elements in the ring's fixed enumeration order."""
        if not self.is_finite():
            raise UnsupportedRing(f"{self.descriptor()} is not finite")
        cap = element_budget(budget)
        if self.cardinality() > cap:
            raise BudgetExceeded(
                f"{self.descriptor()} has {self.cardinality()} elements, "
                f"exceeding the enumeration budget {cap}"
            )
        cached = getattr(self, "_elements_cache", None)
        if cached is None:
            cached = tuple(RingElement(self, p) for p in self._payloads())
            self._elements_cache = cached
        return cached

    # -- units ----------------------------------------------------------------

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        """Multiplicative inverse of ``a``, or None when ``a`` is not a unit."""
        self._own(a)
        if self.is_finite():
            one = self.one()
            for b in self.elements():
                if a * b == one:
                    return b
            return None
        raise UnsupportedRing(f"unit testing is not supported over {self.descriptor()}")


# ---------------------------------------------------------------------------
# concrete rings


def _check_int(raw: Any) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ValueError(f"expected an integer literal, got {raw!r}")
    return raw


class IntegerRing(Ring):
    """The ring of integers."""

    def __init__(self) -> None:
        self._descriptor = "integers"

    def _canon(self, raw: Any) -> int:
        return _check_int(raw)

    def _add(self, x: int, y: int) -> int:
        return x + y

    def _neg(self, x: int) -> int:
        return -x

    def _mul(self, x: int, y: int) -> int:
        return x * y

    def _zero(self) -> int:
        return 0

    def _one(self) -> int:
        return 1

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        self._own(a)
        if a.payload in (1, -1):
            return a
        return None


class ModularRing(Ring):
    """Integers modulo n, with payloads in ``[0, n)``."""

    def __init__(self, modulus: int) -> None:
        modulus = _check_int(modulus)
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        self.modulus = modulus
        self._descriptor = f"modular({modulus})"

    def _canon(self, raw: Any) -> int:
        return _check_int(raw) % self.modulus

    def _add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def _neg(self, x: int) -> int:
        return (-x) % self.modulus

    def _mul(self, x: int, y: int) -> int:
        return (x * y) % self.modulus

    def _zero(self) -> int:
        return 0

    def _one(self) -> int:
        return 1 % self.modulus

    def is_finite(self) -> bool:
        return True

    def cardinality(self) -> int:
        return self.modulus

    def _payloads(self) -> Iterator[int]:
        return iter(range(self.modulus))

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        self._own(a)
        try:
            return RingElement(self, pow(a.payload, -1, self.modulus))
        except ValueError:
            return None


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField(ModularRing):
    """The field with p elements, p prime (checked)."""

    def __init__(self, p: int) -> None:
        super().__init__(p)
        if not _is_prime(p):
            raise ValueError(f"gf({p}) requires a prime, got {p}")
        self._descriptor = f"gf({p})"

    @property
    def is_field(self) -> bool:
        return True


class PolynomialRing(Ring):
    """Univariate polynomials over a base ring.

    Payloads are coefficient tuples, constant term first, with no trailing
    zeros.  The optional degree bound is carried for bounded searches only;
    arithmetic itself is unbounded.
    """

    def __init__(self, base: Ring, bound: int | None = None) -> None:
        if bound is not None:
            bound = _check_int(bound)
            if bound <= 0:
                raise ValueError(f"degree bound must be positive, got {bound}")
        self.base = base
        self.bound = bound
        if bound is None:
            self._descriptor = f"poly({base.descriptor()})"
        else:
            self._descriptor = f"poly({base.descriptor()}, bound={bound})"

    def _trim(self, coeffs: list[Any]) -> tuple[Any, ...]:
        zero = self.base._zero()
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        return tuple(coeffs)

    def _canon(self, raw: Any) -> tuple[Any, ...]:
        if isinstance(raw, (list, tuple)):
            items = list(raw)
        else:
            items = [raw]
        return self._trim([self.base._canon(c) for c in items])

    def _add(self, x: tuple, y: tuple) -> tuple:
        if len(x) < len(y):
            x, y = y, x
        merged = list(x)
        for i, c in enumerate(y):
            merged[i] = self.base._add(merged[i], c)
        return self._trim(merged)

    def _neg(self, x: tuple) -> tuple:
        return tuple(self.base._neg(c) for c in x)

    def _mul(self, x: tuple, y: tuple) -> tuple:
        if not x or not y:
            return ()
        zero = self.base._zero()
        out = [zero] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a == zero:
                continue
            for j, b in enumerate(y):
                out[i + j] = self.base._add(out[i + j], self.base._mul(a, b))
        return self._trim(out)

    def _zero(self) -> tuple:
        return ()

    def _one(self) -> tuple:
        one = self.base._one()
        if one == self.base._zero():
            return ()
        return (one,)

    def _payload_literal(self, x: tuple) -> list:
        return [self.base._payload_literal(c) for c in x]

    def degree(self, a: RingElement) -> int:
        """Degree of ``a``; the zero polynomial has degree -1."""
        self._own(a)
        return len(a.payload) - 1

    def gen(self) -> RingElement:
        """The indeterminate X."""
        return RingElement(self, (self.base._zero(), self.base._one()))

    def elements_up_to_degree(
        self, max_degree: int, include_zero: bool = True
    ) -> Iterator[RingElement]:
        """Enumerate polynomials of degree <= max_degree, ascending by degree.

        Requires a finite base.  Within each degree, coefficient tuples run in
        base enumeration order with the last coefficient varying fastest.
        """
        if not self.base.is_finite():
            raise UnsupportedRing("degree-bounded enumeration needs a finite base")
        payloads = [e.payload for e in self.base.elements()]
        nonzero = [p for p in payloads if p != self.base._zero()]
        if include_zero:
            yield self.zero()
        for deg in range(max_degree + 1):
            if deg == 0:
                for lead in nonzero:
                    yield RingElement(self, (lead,))
                continue
            for body in itertools.product(payloads, repeat=deg):
                for lead in nonzero:
                    yield RingElement(self, body + (lead,))

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        self._own(a)
        coeffs = a.payload
        if not coeffs:
            return None
        base = self.base
        const = RingElement(base, coeffs[0])
        const_inv = base.try_inverse(const)
        if const_inv is None:
            return None
        if len(coeffs) == 1:
            return RingElement(self, (const_inv.payload,))
        if not base.is_finite():
            return None
        # a = c0 + h is a unit iff c0 is a unit and every coefficient of h is
        # nilpotent; the inverse is a finite geometric series.
        for c in coeffs[1:]:
            if not _is_nilpotent(RingElement(base, c)):
                return None
        u = RingElement(self, (const_inv.payload,))
        g = self.one() - a * u  # nilpotent
        total = self.one()
        term = g
        steps = 0
        while not term.is_zero():
            total = total + term
            term = term * g
            steps += 1
            if steps > 4 * base.cardinality():
                raise AssertionError("nilpotent series failed to terminate")
        inv = u * total
        assert a * inv == self.one()
        return inv


class BivariatePolynomialRing(Ring):
    """Polynomials in two variables over a prime field, with a total-degree
    bound used by bounded searches (arithmetic is unbounded).

    Payloads are sorted tuples of ``((i, j), coeff)`` with nonzero coeff,
    where ``(i, j)`` are the exponents of X and Y.
    """

    def __init__(self, base: PrimeField, bound: int) -> None:
        if not isinstance(base, PrimeField):
            raise UnsupportedRing("bivariate polynomials require a prime field base")
        bound = _check_int(bound)
        if bound <= 0:
            raise ValueError(f"total degree bound must be positive, got {bound}")
        self.base = base
        self.bound = bound
        self._descriptor = f"poly2({base.descriptor()}, bound={bound})"

    def _from_dict(self, terms: dict) -> tuple:
        zero = self.base._zero()
        return tuple(
            (monomial, coeff)
            for monomial, coeff in sorted(terms.items())
            if coeff != zero
        )

    def _canon(self, raw: Any) -> tuple:
        if not isinstance(raw, (list, tuple)):
            raise ValueError(f"expected a list of [i, j, coeff] terms, got {raw!r}")
        terms: dict = {}
        for item in raw:
            if not isinstance(item, (list, tuple)) or len(item) != 3:
                raise ValueError(f"expected an [i, j, coeff] term, got {item!r}")
            i, j, c = item
            i = _check_int(i)
            j = _check_int(j)
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            key = (i, j)
            coeff = self.base._canon(c)
            if key in terms:
                coeff = self.base._add(terms[key], coeff)
            terms[key] = coeff
        return self._from_dict(terms)

    def _add(self, x: tuple, y: tuple) -> tuple:
        terms = dict(x)
        for key, coeff in y:
            if key in terms:
                terms[key] = self.base._add(terms[key], coeff)
            else:
                terms[key] = coeff
        return self._from_dict(terms)

    def _neg(self, x: tuple) -> tuple:
        return tuple((key, self.base._neg(c)) for key, c in x)

    def _mul(self, x: tuple, y: tuple) -> tuple:
        terms: dict = {}
        for (i1, j1), c1 in x:
            for (i2, j2), c2 in y:
                key = (i1 + i2, j1 + j2)
                prod = self.base._mul(c1, c2)
                if key in terms:
                    terms[key] = self.base._add(terms[key], prod)
                else:
                    terms[key] = prod
        return self._from_dict(terms)

    def _zero(self) -> tuple:
        return ()

    def _one(self) -> tuple:
        return (((0, 0), self.base._one()),)

    def _payload_literal(self, x: tuple) -> list:
        return [[i, j, c] for (i, j), c in x]

    def total_degree(self, a: RingElement) -> int:
        self._own(a)
        if not a.payload:
            return -1
        return max(i + j for (i, j), _ in a.payload)

    def gens(self) -> tuple[RingElement, RingElement]:
        one = self.base._one()
        return (
            RingElement(self, (((1, 0), one),)),
            RingElement(self, (((0, 1), one),)),
        )

    def elements_up_to_total_degree(
        self, max_degree: int, include_zero: bool = True
    ) -> Iterator[RingElement]:
        """Enumerate all polynomials of total degree <= max_degree."""
        monomials = sorted(
            (i, j)
            for i in range(max_degree + 1)
            for j in range(max_degree + 1 - i)
        )
        payloads = [e.payload for e in self.base.elements()]
        zero = self.base._zero()
        for assignment in itertools.product(payloads, repeat=len(monomials)):
            terms = tuple(
                (monomial, coeff)
                for monomial, coeff in zip(monomials, assignment)
                if coeff != zero
            )
            if not terms and not include_zero:
                continue
            yield RingElement(self, terms)

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        self._own(a)
        if len(a.payload) == 1 and a.payload[0][0] == (0, 0):
            inv = self.base.try_inverse(RingElement(self.base, a.payload[0][1]))
            if inv is not None:
                return RingElement(self, (((0, 0), inv.payload),))
        return None


class ProductRing(Ring):
    """A finite direct product of rings, with componentwise operations."""

    def __init__(self, factors: tuple[Ring, ...] | list[Ring]) -> None:
        factors = tuple(factors)
        if len(factors) < 2:
            raise ValueError("a product ring needs at least two factors")
        self.factors = factors
        inner = ", ".join(f.descriptor() for f in factors)
        self._descriptor = f"product({inner})"

    def _canon(self, raw: Any) -> tuple:
        if not isinstance(raw, (list, tuple)) or len(raw) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} components, got {raw!r}"
            )
        return tuple(f._canon(c) for f, c in zip(self.factors, raw))

    def _add(self, x: tuple, y: tuple) -> tuple:
        return tuple(f._add(a, b) for f, a, b in zip(self.factors, x, y))

    def _neg(self, x: tuple) -> tuple:
        return tuple(f._neg(a) for f, a in zip(self.factors, x))

    def _mul(self, x: tuple, y: tuple) -> tuple:
        return tuple(f._mul(a, b) for f, a, b in zip(self.factors, x, y))

    def _zero(self) -> tuple:
        return tuple(f._zero() for f in self.factors)

    def _one(self) -> tuple:
        return tuple(f._one() for f in self.factors)

    def _payload_literal(self, x: tuple) -> list:
        return [f._payload_literal(c) for f, c in zip(self.factors, x)]

    def is_finite(self) -> bool:
        return all(f.is_finite() for f in self.factors)

    def cardinality(self) -> int:
        total = 1
        for f in self.factors:
            total *= f.cardinality()
        return total

    def _payloads(self) -> Iterator[tuple]:
        return itertools.product(*(f._payloads() for f in self.factors))

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        self._own(a)
        parts = []
        for f, c in zip(self.factors, a.payload):
            inv = f.try_inverse(RingElement(f, c))
            if inv is None:
                return None
            parts.append(inv.payload)
        return RingElement(self, tuple(parts))


class TrivialExtensionRing(Ring):
    """The trivial extension of a ring by itself.

    Elements are pairs ``(r, m)`` with componentwise addition and
    multiplication ``(r1, m1)(r2, m2) = (r1*r2, r1*m2 + m1*r2)``; the second
    coordinate is a square-zero ideal.
    """

    def __init__(self, base: Ring) -> None:
        self.base = base
        self._descriptor = f"trivial({base.descriptor()})"

    def _canon(self, raw: Any) -> tuple:
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise ValueError(f"expected an [r, m] pair, got {raw!r}")
        return (self.base._canon(raw[0]), self.base._canon(raw[1]))

    def _add(self, x: tuple, y: tuple) -> tuple:
        return (self.base._add(x[0], y[0]), self.base._add(x[1], y[1]))

    def _neg(self, x: tuple) -> tuple:
        return (self.base._neg(x[0]), self.base._neg(x[1]))

    def _mul(self, x: tuple, y: tuple) -> tuple:
        r1, m1 = x
        r2, m2 = y
        return (
            self.base._mul(r1, r2),
            self.base._add(self.base._mul(r1, m2), self.base._mul(m1, r2)),
        )

    def _zero(self) -> tuple:
        return (self.base._zero(), self.base._zero())

    def _one(self) -> tuple:
        return (self.base._one(), self.base._zero())

    def _payload_literal(self, x: tuple) -> list:
        return [self.base._payload_literal(x[0]), self.base._payload_literal(x[1])]

    def is_finite(self) -> bool:
        return self.base.is_finite()

    def cardinality(self) -> int:
        return self.base.cardinality() ** 2

    def _payloads(self) -> Iterator[tuple]:
        return itertools.product(self.base._payloads(), self.base._payloads())

    def try_inverse(self, a: RingElement) -> Optional[RingElement]:
        # (r, m) is a unit iff r is, with inverse (r^-1, -m * r^-2).
        self._own(a)
        r, m = a.payload
        rinv = self.base.try_inverse(RingElement(self.base, r))
        if rinv is None:
            return None
        ri = rinv.payload
        mm = self.base._neg(self.base._mul(m, self.base._mul(ri, ri)))
        inv = RingElement(self, (ri, mm))
        assert a * inv == self.one()
        return inv


class CornerRing(Ring):
    """The unital subring ``e*R`` of a finite ring, with identity ``e``.

    ``e`` must be idempotent.  When ``e`` is zero this is the zero ring, in
    which 0 = 1 and the single element is a unit.
    """

    def __init__(self, ambient: Ring, e: RingElement) -> None:
        if not ambient.is_finite():
            raise UnsupportedRing("corner rings are defined for finite rings only")
        ambient._own(e)
        if e * e != e:
            raise ValueError(f"{e!r} is not idempotent")
        self.ambient = ambient
        self.unit_element = e
        members: list[Any] = []
        seen = set()
        for r in ambient.elements():
            p = (e * r).payload
            if p not in seen:
                seen.add(p)
                members.append(p)
        self._members = tuple(members)
        self._member_set = seen
        literal = json.dumps(ambient._payload_literal(e.payload))
        self._descriptor = f"corner({ambient.descriptor()}, {literal})"

    def _canon(self, raw: Any) -> Any:
        p = self.ambient._canon(raw)
        if p not in self._member_set:
            raise ValueError(f"{raw!r} is not in the corner {self.descriptor()}")
        return p

    def from_ambient(self, a: RingElement) -> RingElement:
        """Project an ambient element into the corner (multiply by e)."""
        self.ambient._own(a)
        return RingElement(self, (self.unit_element * a).payload)

    def to_ambient(self, a: RingElement) -> RingElement:
        self._own(a)
        return RingElement(self.ambient, a.payload)

    def _add(self, x: Any, y: Any) -> Any:
        return self.ambient._add(x, y)

    def _neg(self, x: Any) -> Any:
        return self.ambient._neg(x)

    def _mul(self, x: Any, y: Any) -> Any:
        return self.ambient._mul(x, y)

    def _zero(self) -> Any:
        return self.ambient._zero()

    def _one(self) -> Any:
        return self.unit_element.payload

    def _payload_literal(self, x: Any) -> Any:
        return self.ambient._payload_literal(x)

    def is_finite(self) -> bool:
        return True

    def cardinality(self) -> int:
        return len(self._members)

    def _payloads(self) -> Iterator[Any]:
        return iter(self._members)


class QuotientRing(Ring):
    """A finite ring modulo an ideal, with first-in-order coset representatives.

    The ideal is validated to be closed under addition and absorption; each
    element's payload is the payload of the canonical representative of its
    coset, so payload equality remains element equality.
    """

    def __init__(self, base: Ring, ideal: frozenset) -> None:
        if not base.is_finite():
            raise UnsupportedRing("quotients are implemented for finite rings only")
        self.base = base
        self.ideal = frozenset(ideal)
        if base._zero() not in self.ideal:
            raise ValueError("ideal must contain zero")
        members = [RingElement(base, p) for p in self.ideal]
        for a in members:
            for b in members:
                if (a + b).payload not in self.ideal:
                    raise ValueError("ideal is not closed under addition")
            for r in base.elements():
                if (a * r).payload not in self.ideal:
                    raise ValueError("ideal does not absorb ring multiplication")
        rep: dict = {}
        order = []
        for elt in base.elements():
            if elt.payload in rep:
                continue
            order.append(elt.payload)
            for j in self.ideal:
                rep[base._add(elt.payload, j)] = elt.payload
        self._rep = rep
        self._reps = tuple(order)
        ideal_literals = sorted(
            json.dumps(base._payload_literal(p)) for p in self.ideal
        )
        self._descriptor = f"quotient({base.descriptor()}, [{', '.join(ideal_literals)}])"

    def project(self, a: RingElement) -> RingElement:
        """The image of a base-ring element in the quotient."""
        self.base._own(a)
        return RingElement(self, self._rep[a.payload])

    def _canon(self, raw: Any) -> Any:
        return self._rep[self.base._canon(raw)]

    def _add(self, x: Any, y: Any) -> Any:
        return self._rep[self.base._add(x, y)]

    def _neg(self, x: Any) -> Any:
        return self._rep[self.base._neg(x)]

    def _mul(self, x: Any, y: Any) -> Any:
        return self._rep[self.base._mul(x, y)]

    def _zero(self) -> Any:
        return self._rep[self.base._zero()]

    def _one(self) -> Any:
        return self._rep[self.base._one()]

    def _payload_literal(self, x: Any) -> Any:
        return self.base._payload_literal(x)

    def is_finite(self) -> bool:
        return True

    def cardinality(self) -> int:
        return len(self._reps)

    def _payloads(self) -> Iterator[Any]:
        return iter(self._reps)


# ---------------------------------------------------------------------------
# descriptor grammar


def parse_ring(text: str) -> Ring:
    """Parse a ring descriptor such as ``modular(12)``, ``gf(5)``,
    ``poly(modular(4), bound=3)``, ``poly2(gf(2), bound=2)``,
    ``product(modular(2), modular(3))``, ``trivial(integers)``."""
    parser = _DescriptorParser(text)
    ring = parser.parse_ring()
    parser.expect_end()
    return ring


class _DescriptorParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _fail(self, message: str) -> None:
        raise ValueError(f"bad ring descriptor at position {self.pos}: {message}")

    def _word(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos:
            self._fail("expected a name")
        return self.text[start : self.pos]

    def _expect(self, token: str) -> None:
        self._skip_ws()
        if not self.text.startswith(token, self.pos):
            self._fail(f"expected {token!r}")
        self.pos += len(token)

    def _peek(self, token: str) -> bool:
        self._skip_ws()
        return self.text.startswith(token, self.pos)

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek("-"):
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail("expected an integer")
        return int(self.text[start : self.pos])

    def _bound(self) -> int:
        self._expect(",")
        self._expect("bound")
        self._expect("=")
        return self._int()

    def parse_ring(self) -> Ring:
        name = self._word()
        if name == "integers":
            return IntegerRing()
        if name == "modular":
            self._expect("(")
            n = self._int()
            self._expect(")")
            return ModularRing(n)
        if name == "gf":
            self._expect("(")
            p = self._int()
            self._expect(")")
            return PrimeField(p)
        if name == "poly":
            self._expect("(")
            base = self.parse_ring()
            bound = self._bound() if self._peek(",") else None
            self._expect(")")
            return PolynomialRing(base, bound)
        if name == "poly2":
            self._expect("(")
            base = self.parse_ring()
            if not isinstance(base, PrimeField):
                self._fail("poly2 requires a gf(p) base")
            bound = self._bound()
            self._expect(")")
            return BivariatePolynomialRing(base, bound)
        if name == "product":
            self._expect("(")
            factors = [self.parse_ring()]
            while self._peek(","):
                self._expect(",")
                factors.append(self.parse_ring())
            self._expect(")")
            return ProductRing(factors)
        if name == "trivial":
            self._expect("(")
            base = self.parse_ring()
            self._expect(")")
            return TrivialExtensionRing(base)
        self._fail(f"unknown ring constructor {name!r}")
        raise AssertionError("unreachable")

    def expect_end(self) -> None:
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail("trailing input")


# ---------------------------------------------------------------------------
# Euclidean payload helpers (integers and polynomials over a prime field)


def _int_egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd with d >= 0 and s*a + t*b == d; (0, 0) maps to (0, 0, 0)."""
    if a == 0 and b == 0:
        return (0, 0, 0)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class EuclideanOps:
    """Payload-level division helpers for the Euclidean rings in the family:
    the integers and univariate polynomials over a prime field."""

    def __init__(self, ring: Ring) -> None:
        if isinstance(ring, IntegerRing):
            self.kind = "int"
        elif isinstance(ring, PolynomialRing) and isinstance(ring.base, PrimeField):
            self.kind = "poly"
        else:
            raise UnsupportedRing(
                f"{ring.descriptor()} is not Euclidean here; supported: "
                "integers, poly(gf(p))"
            )
        self.ring = ring

    # basic ops on payloads
    def add(self, x, y):
        return self.ring._add(x, y)

    def sub(self, x, y):
        return self.ring._add(x, self.ring._neg(y))

    def mul(self, x, y):
        return self.ring._mul(x, y)

    def neg(self, x):
        return self.ring._neg(x)

    def zero(self):
        return self.ring._zero()

    def one(self):
        return self.ring._one()

    def is_zero(self, x) -> bool:
        return x == self.ring._zero()

    def size(self, x) -> int:
        """Euclidean size: 0 exactly for the zero element."""
        if self.kind == "int":
            return abs(x)
        return len(x)

    def divmod(self, x, y):
        if self.is_zero(y):
            raise ZeroDivisionError("division by zero")
        if self.kind == "int":
            return divmod(x, y)
        ring = self.ring
        field = ring.base
        p = field.modulus
        rem = list(x)
        lead_inv = pow(y[-1], -1, p)
        dy = len(y) - 1
        quot = [0] * max(len(x) - dy, 0)
        while len(rem) - 1 >= dy and rem:
            shift = len(rem) - 1 - dy
            factor = (rem[-1] * lead_inv) % p
            quot[shift] = factor
            for i, c in enumerate(y):
                rem[shift + i] = (rem[shift + i] - factor * c) % p
            while rem and rem[-1] == 0:
                rem.pop()
        return ring._trim(quot), tuple(rem)

    def divides(self, x, y) -> bool:
        """Whether x divides y."""
        if self.is_zero(x):
            return self.is_zero(y)
        _, r = self.divmod(y, x)
        return self.is_zero(r)

    def exact_div(self, x, y):
        q, r = self.divmod(x, y)
        if not self.is_zero(r):
            raise ValueError("division is not exact")
        return q

    def egcd(self, x, y):
        """(d, s, t) with s*x + t*y = d, d canonical (nonnegative or monic)."""
        if self.kind == "int":
            return _int_egcd(x, y)
        if self.is_zero(x) and self.is_zero(y):
            z = self.zero()
            return z, z, z
        old_r, r = x, y
        old_s, s = self.one(), self.zero()
        old_t, t = self.zero(), self.one()
        while not self.is_zero(r):
            q, rem = self.divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, self.sub(old_s, self.mul(q, s))
            old_t, t = t, self.sub(old_t, self.mul(q, t))
        u = self.canonical_unit(old_r)
        return self.mul(u, old_r), self.mul(u, old_s), self.mul(u, old_t)

    def canonical_unit(self, x):
        """Unit u such that u*x is the canonical associate of x."""
        if self.kind == "int":
            return -1 if x < 0 else 1
        if self.is_zero(x):
            return self.one()
        p = self.ring.base.modulus
        return (pow(x[-1], -1, p),)

    def is_canonical(self, x) -> bool:
        return self.canonical_unit(x) == self.one() or self.is_zero(x)


# ---------------------------------------------------------------------------
# ring operations


def is_unit(a: RingElement) -> bool:
    return a.ring.try_inverse(a) is not None


def try_inverse(a: RingElement) -> Optional[RingElement]:
    return a.ring.try_inverse(a)


def _is_nilpotent(a: RingElement) -> bool:
    ring = a.ring
    if isinstance(ring, IntegerRing):
        return a.payload == 0
    if not ring.is_finite():
        raise UnsupportedRing(f"nilpotency test unsupported over {ring.descriptor()}")
    power = a
    for _ in range(ring.cardinality()):
        if power.is_zero():
            return True
        power = power * a
    return power.is_zero()


def bezout_gcd(a: RingElement, b: RingElement) -> tuple[RingElement, RingElement, RingElement]:
    """(d, s, t) with s*a + t*b = d and d dividing both a and b.

    Supported over the integers, polynomials over a prime field, and modular
    rings (computed on integer lifts).  Both inputs zero yields (0, 0, 0).
    The identity is re-verified before returning.
    """
    ring = a.ring
    ring._own(b)
    if isinstance(ring, ModularRing):
        d, s, t = _int_egcd(a.payload, b.payload)
        out = (ring.make(d), ring.make(s), ring.make(t))
    else:
        ops = EuclideanOps(ring)
        d, s, t = ops.egcd(a.payload, b.payload)
        out = (RingElement(ring, d), RingElement(ring, s), RingElement(ring, t))
    dd, ss, tt = out
    assert ss * a + tt * b == dd, "internal Bezout identity check failed"
    return out


def is_regular_element(a: RingElement) -> tuple[bool, Optional[RingElement]]:
    """Whether some g satisfies a*g*a == a, with the first such witness.

    Exhaustive over finite rings; over the integers only 0, 1, -1 qualify.
    """
    ring = a.ring
    if isinstance(ring, IntegerRing):
        if a.payload == 0:
            return True, ring.zero()
        if a.payload in (1, -1):
            return True, a
        return False, None
    if ring.is_finite():
        for g in ring.elements():
            if a * g * a == a:
                return True, g
        return False, None
    raise UnsupportedRing(f"regularity is undecidable here over {ring.descriptor()}")


@lru_cache(maxsize=None)
def idempotents(ring: Ring, budget: int | None = None) -> tuple[RingElement, ...]:
    """All solutions of e*e == e, in enumeration order."""
    return tuple(e for e in ring.elements(budget) if e * e == e)


@dataclass(frozen=True)
class IdempotentBasis:
    """A complete orthogonal family of primitive idempotents, in enumeration
    order.  Validated on construction."""

    ring: Ring
    elements: tuple[RingElement, ...]

    def __post_init__(self) -> None:
        ring = self.ring
        total = ring.zero()
        all_idempotents = idempotents(ring)
        for i, e in enumerate(self.elements):
            ring._own(e)
            if e * e != e:
                raise ValueError(f"{e!r} is not idempotent")
            if e.is_zero():
                raise ValueError("zero cannot be a basis idempotent")
            for f in self.elements[i + 1 :]:
                if not (e * f).is_zero():
                    raise ValueError(f"{e!r} and {f!r} are not orthogonal")
            for f in all_idempotents:
                if not f.is_zero() and f != e and f * e == f:
                    raise ValueError(f"{e!r} is not primitive ({f!r} lies under it)")
            total = total + e
        if total != ring.one():
            raise ValueError("idempotents do not sum to 1")

    def __len__(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=None)
def primitive_idempotent_decomposition(ring: Ring) -> IdempotentBasis:
    """The primitive (minimal nonzero) idempotents of a finite ring."""
    idems = idempotents(ring)
    nonzero = [e for e in idems if not e.is_zero()]
    primitive = tuple(
        e
        for e in nonzero
        if not any(f != e and f * e == f for f in nonzero)
    )
    return IdempotentBasis(ring, primitive)


def _radical_int(n: int) -> int:
    rad = 1
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            rad *= d
            while rest % d == 0:
                rest //= d
        d += 1
    if rest > 1:
        rad *= rest
    return rad


def _verify_projection(ring: Ring, quotient: Ring, project, radical) -> None:
    elements = ring.elements()
    image = set()
    for a in elements:
        image.add(project(a).payload)
        for b in elements:
            if project(a + b) != project(a) + project(b):
                raise AssertionError("projection does not respect addition")
            if project(a * b) != project(a) * project(b):
                raise AssertionError("projection does not respect multiplication")
    if project(ring.one()) != quotient.one():
        raise AssertionError("projection does not send 1 to 1")
    if len(image) != quotient.cardinality():
        raise AssertionError("projection is not surjective")
    kernel = {a.payload for a in elements if project(a).is_zero()}
    if kernel != {a.payload for a in radical}:
        raise AssertionError("projection kernel differs from the radical")


@lru_cache(maxsize=None)
def jacobson_radical_and_quotient(
    ring: Ring,
) -> tuple[tuple[RingElement, ...], Ring, Callable[[RingElement], RingElement]]:
    """The radical {a : 1 - r*a is a unit for all r}, the quotient ring, and
    the verified projection map.

    For modular rings the quotient is again a modular ring (modulo the
    squarefree part of n); otherwise it is a generic coset-representative
    quotient.
    """
    if not ring.is_finite():
        raise UnsupportedRing("the radical is computed for finite rings only")
    elements = ring.elements()
    one = ring.one()
    radical = tuple(
        a for a in elements if all(is_unit(one - r * a) for r in elements)
    )
    if isinstance(ring, ModularRing):
        m = _radical_int(ring.modulus)
        quotient: Ring = PrimeField(m) if _is_prime(m) else ModularRing(m)

        def project(a: RingElement, _ring=ring, _quotient=quotient, _m=m) -> RingElement:
            _ring._own(a)
            return RingElement(_quotient, a.payload % _m)

    else:
        ideal = frozenset(a.payload for a in radical)
        quotient = QuotientRing(ring, ideal)
        project = quotient.project
    _verify_projection(ring, quotient, project, radical)
    return radical, quotient, project


def _verify_maximal_ideal(ring: Ring, ideal: frozenset) -> None:
    elements = ring.elements()
    one = ring.one()
    if one in ideal:
        raise AssertionError("ideal is not proper")
    members = tuple(ideal)
    for a in members:
        for b in members:
            if a + b not in ideal:
                raise AssertionError("ideal is not closed under addition")
        for r in elements:
            if a * r not in ideal:
                raise AssertionError("ideal does not absorb multiplication")
    for a in elements:
        if a in ideal:
            continue
        if not any(p + a * r == one for p in members for r in elements):
            raise AssertionError("ideal is not maximal")


@lru_cache(maxsize=None)
def maximal_ideals(ring: Ring) -> tuple[frozenset, ...]:
    """One maximal ideal per primitive idempotent: elements whose component
    at that idempotent falls in the radical.  Each ideal is verified to be
    proper, closed, absorbing, and maximal."""
    basis = primitive_idempotent_decomposition(ring)
    radical, _, _ = jacobson_radical_and_quotient(ring)
    radical_payloads = {a.payload for a in radical}
    ideals = []
    for e in basis.elements:
        ideal = frozenset(
            a for a in ring.elements() if (a * e).payload in radical_payloads
        )
        _verify_maximal_ideal(ring, ideal)
        ideals.append(ideal)
    return tuple(ideals)


def idempotent_power(f: RingElement) -> RingElement:
    """The unique idempotent among the powers f, f^2, ... in a finite ring."""
    ring = f.ring
    if not ring.is_finite():
        raise UnsupportedRing("idempotent powers exist in finite rings only")
    power = f
    for _ in range(2 * ring.cardinality() + 1):
        if power * power == power:
            return power
        power = power * f
    raise AssertionError("no idempotent power found; ring arithmetic is broken")

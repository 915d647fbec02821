"""Witnessed diagonal reduction of matrices over exact rings.

``smith_normal_form`` works over the Euclidean rings of the family (the
integers and polynomials over a prime field) and returns the diagonal form
together with explicit invertible transforms and their inverses, so every
reduction can be re-verified by plain matrix multiplication.
``diagonal_reduction`` handles modular rings by lifting to the integers,
reducing there, and mapping everything back; determinant-one transforms
stay invertible under the projection.

Diagonal entries are canonical associates (nonnegative integers, monic
polynomials, or the mod-n image of the lifted form), zeros sit at the end,
and each entry divides the next.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from .errors import BudgetExceeded, MismatchedRings, UnsupportedRing, search_budget
from .rings import (
    EuclideanOps,
    IntegerRing,
    ModularRing,
    PolynomialRing,
    PrimeField,
    Ring,
    RingElement,
    is_regular_element,
    parse_ring,
)


@dataclass(frozen=True)
class RingMatrix:
    """An immutable matrix with entries in one ring, stored row-major."""

    ring: Ring
    rows: int
    cols: int
    entries: tuple[RingElement, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            self.ring._own(e)

    @classmethod
    def from_rows(cls, ring: Ring, rows: Iterable[Iterable[Any]]) -> "RingMatrix":
        grid = [[ring.make(v) for v in row] for row in rows]
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("rows have inconsistent lengths")
        return cls(ring, len(grid), width, tuple(v for row in grid for v in row))

    @classmethod
    def identity(cls, ring: Ring, size: int) -> "RingMatrix":
        zero, one = ring.zero(), ring.one()
        return cls(
            ring,
            size,
            size,
            tuple(one if i == j else zero for i in range(size) for j in range(size)),
        )

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "RingMatrix":
        zero = ring.zero()
        return cls(ring, rows, cols, (zero,) * (rows * cols))

    @classmethod
    def diagonal(
        cls, ring: Ring, diag: Iterable[Any], rows: int | None = None, cols: int | None = None
    ) -> "RingMatrix":
        diag = [ring.make(v) for v in diag]
        m = rows if rows is not None else len(diag)
        n = cols if cols is not None else len(diag)
        if len(diag) > min(m, n):
            raise ValueError("too many diagonal entries for the requested shape")
        zero = ring.zero()
        return cls(
            ring,
            m,
            n,
            tuple(
                diag[i] if i == j and i < len(diag) else zero
                for i in range(m)
                for j in range(n)
            ),
        )

    def entry(self, i: int, j: int) -> RingElement:
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[RingElement]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            self.ring,
            self.cols,
            self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ring != other.ring:
            raise MismatchedRings("matrix product across different rings")
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        ring = self.ring
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ring.zero()
                for k in range(self.cols):
                    acc = acc + self.entry(i, k) * other.entry(k, j)
                out.append(acc)
        return RingMatrix(ring, self.rows, other.cols, tuple(out))

    def map_entries(self, target: Ring, fn: Callable[[RingElement], RingElement]) -> "RingMatrix":
        return RingMatrix(target, self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def is_diagonal(self) -> bool:
        return all(
            self.entry(i, j).is_zero()
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal_entries(self) -> tuple[RingElement, ...]:
        return tuple(self.entry(i, i) for i in range(min(self.rows, self.cols)))

    def apply(self, vector: tuple[RingElement, ...]) -> tuple[RingElement, ...]:
        """Multiply this matrix by a column vector of ring elements."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        ring = self.ring
        out = []
        for i in range(self.rows):
            acc = ring.zero()
            for j in range(self.cols):
                acc = acc + self.entry(i, j) * vector[j]
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class DiagonalReduction:
    """Witnessed equivalence P @ A @ Q = D with stored inverses."""

    P: RingMatrix
    P_inv: RingMatrix
    Q: RingMatrix
    Q_inv: RingMatrix
    D: RingMatrix

    def diagonal(self) -> tuple[RingElement, ...]:
        return self.D.diagonal_entries()


def verify_reduction(A: RingMatrix, red: DiagonalReduction) -> bool:
    """Exact check: D diagonal, P @ A @ Q == D, and both transform pairs
    multiply to the identity.  Raises on shape mismatch."""
    m, n = A.rows, A.cols
    if red.P.rows != m or red.P.cols != m or red.Q.rows != n or red.Q.cols != n:
        raise ValueError("transform shapes do not match the matrix")
    if red.D.rows != m or red.D.cols != n:
        raise ValueError("diagonal matrix shape does not match the input")
    if not red.D.is_diagonal():
        return False
    eye_m = RingMatrix.identity(A.ring, m)
    eye_n = RingMatrix.identity(A.ring, n)
    if red.P @ red.P_inv != eye_m or red.Q @ red.Q_inv != eye_n:
        return False
    return red.P @ A @ red.Q == red.D


# ---------------------------------------------------------------------------
# the payload-level reduction engine


class _ReductionState:
    """Mutable matrix plus transform accumulators, all on raw payloads."""

    def __init__(self, ring: Ring, ops: EuclideanOps, grid: list[list[Any]]) -> None:
        self.ring = ring
        self.ops = ops
        self.M = [row[:] for row in grid]
        self.m = len(grid)
        self.n = len(grid[0])
        zero, one = ops.zero(), ops.one()
        self.P = [[one if i == j else zero for j in range(self.m)] for i in range(self.m)]
        self.Pi = [[one if i == j else zero for j in range(self.m)] for i in range(self.m)]
        self.Q = [[one if i == j else zero for j in range(self.n)] for i in range(self.n)]
        self.Qi = [[one if i == j else zero for j in range(self.n)] for i in range(self.n)]

    # row operations: M <- L @ M, P <- L @ P, Pi <- Pi @ L^-1

    def row_swap(self, i: int, j: int) -> None:
        if i == j:
            return
        self.M[i], self.M[j] = self.M[j], self.M[i]
        self.P[i], self.P[j] = self.P[j], self.P[i]
        for row in self.Pi:
            row[i], row[j] = row[j], row[i]

    def row_addmul(self, i: int, j: int, c: Any) -> None:
        """row_i += c * row_j; inverse is subtraction on Pi columns."""
        ops = self.ops
        if ops.is_zero(c):
            return
        self.M[i] = [ops.add(a, ops.mul(c, b)) for a, b in zip(self.M[i], self.M[j])]
        self.P[i] = [ops.add(a, ops.mul(c, b)) for a, b in zip(self.P[i], self.P[j])]
        for row in self.Pi:
            row[j] = ops.sub(row[j], ops.mul(c, row[i]))

    def row_scale(self, i: int, u: Any, u_inv: Any) -> None:
        ops = self.ops
        self.M[i] = [ops.mul(u, a) for a in self.M[i]]
        self.P[i] = [ops.mul(u, a) for a in self.P[i]]
        for row in self.Pi:
            row[i] = ops.mul(row[i], u_inv)

    def row_bezout(self, i: int, j: int, col: int) -> None:
        """Combine rows i and j so entry (i, col) becomes gcd of the two
        column entries; the 2x2 block transform has determinant one."""
        ops = self.ops
        a, b = self.M[i][col], self.M[j][col]
        d, s, t = ops.egcd(a, b)
        if ops.is_zero(d):
            return
        ab, bb = ops.exact_div(a, d), ops.exact_div(b, d)
        for target in (self.M, self.P):
            ri, rj = target[i], target[j]
            new_i = [ops.add(ops.mul(s, x), ops.mul(t, y)) for x, y in zip(ri, rj)]
            new_j = [
                ops.sub(ops.mul(ab, y), ops.mul(bb, x)) for x, y in zip(ri, rj)
            ]
            target[i], target[j] = new_i, new_j
        for row in self.Pi:
            x, y = row[i], row[j]
            row[i] = ops.add(ops.mul(ab, x), ops.mul(bb, y))
            row[j] = ops.add(ops.mul(ops.neg(t), x), ops.mul(s, y))

    # column operations: M <- M @ C, Q <- Q @ C, Qi <- C^-1 @ Qi

    def col_swap(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.M:
            row[i], row[j] = row[j], row[i]
        for row in self.Q:
            row[i], row[j] = row[j], row[i]
        self.Qi[i], self.Qi[j] = self.Qi[j], self.Qi[i]

    def col_addmul(self, j: int, i: int, c: Any) -> None:
        """col_j += c * col_i; inverse subtracts on Qi rows."""
        ops = self.ops
        if ops.is_zero(c):
            return
        for row in self.M:
            row[j] = ops.add(row[j], ops.mul(c, row[i]))
        for row in self.Q:
            row[j] = ops.add(row[j], ops.mul(c, row[i]))
        self.Qi[i] = [
            ops.sub(a, ops.mul(c, b)) for a, b in zip(self.Qi[i], self.Qi[j])
        ]

    def col_scale(self, j: int, u: Any, u_inv: Any) -> None:
        ops = self.ops
        for row in self.M:
            row[j] = ops.mul(row[j], u)
        for row in self.Q:
            row[j] = ops.mul(row[j], u)
        self.Qi[j] = [ops.mul(u_inv, a) for a in self.Qi[j]]

    def col_bezout(self, i: int, j: int, row: int) -> None:
        """Combine columns i and j so entry (row, i) becomes the gcd."""
        ops = self.ops
        a, b = self.M[row][i], self.M[row][j]
        d, s, t = ops.egcd(a, b)
        if ops.is_zero(d):
            return
        ab, bb = ops.exact_div(a, d), ops.exact_div(b, d)
        for target in (self.M, self.Q):
            for r in target:
                x, y = r[i], r[j]
                r[i] = ops.add(ops.mul(x, s), ops.mul(y, t))
                r[j] = ops.sub(ops.mul(y, ab), ops.mul(x, bb))
        qi, qj = self.Qi[i], self.Qi[j]
        self.Qi[i] = [ops.add(ops.mul(ab, x), ops.mul(bb, y)) for x, y in zip(qi, qj)]
        self.Qi[j] = [
            ops.add(ops.mul(ops.neg(t), x), ops.mul(s, y)) for x, y in zip(qi, qj)
        ]


def _find_pivot(state: _ReductionState, k: int) -> Optional[tuple[int, int]]:
    """Smallest nonzero entry by Euclidean size in the trailing submatrix,
    ties broken row-major."""
    ops = state.ops
    best = None
    best_size = None
    for i in range(k, state.m):
        for j in range(k, state.n):
            x = state.M[i][j]
            if ops.is_zero(x):
                continue
            size = ops.size(x)
            if best_size is None or size < best_size:
                best, best_size = (i, j), size
    return best


def _clear_position(state: _ReductionState, k: int) -> None:
    """Make row k and column k zero outside the pivot at (k, k)."""
    ops = state.ops
    guard = 0
    while True:
        guard += 1
        if guard > 10_000:
            raise AssertionError("reduction failed to stabilize")
        progress = False
        for i in range(k + 1, state.m):
            x = state.M[i][k]
            if ops.is_zero(x):
                continue
            pivot = state.M[k][k]
            if ops.divides(pivot, x):
                q = ops.exact_div(x, pivot)
                state.row_addmul(i, k, ops.neg(q))
            else:
                state.row_bezout(k, i, k)
            progress = True
        for j in range(k + 1, state.n):
            x = state.M[k][j]
            if ops.is_zero(x):
                continue
            pivot = state.M[k][k]
            if ops.divides(pivot, x):
                q = ops.exact_div(x, pivot)
                state.col_addmul(j, k, ops.neg(q))
            else:
                state.col_bezout(k, j, k)
            progress = True
        col_clear = all(ops.is_zero(state.M[i][k]) for i in range(k + 1, state.m))
        row_clear = all(ops.is_zero(state.M[k][j]) for j in range(k + 1, state.n))
        if col_clear and row_clear:
            return
        if not progress:
            raise AssertionError("no progress while clearing a pivot")


def _enforce_divisibility(state: _ReductionState) -> None:
    """Repair the chain d_i | d_{i+1} by merging adjacent diagonal entries."""
    ops = state.ops
    r = min(state.m, state.n)
    for _ in range(r * r + 1):
        changed = False
        for i in range(r - 1):
            a, b = state.M[i][i], state.M[i + 1][i + 1]
            if ops.is_zero(b) or ops.divides(a, b):
                continue
            # fold column i+1 into column i, re-extract the gcd, clean up
            state.col_addmul(i, i + 1, ops.one())
            state.row_bezout(i, i + 1, i)
            extra = state.M[i][i + 1]
            if not ops.is_zero(extra):
                q = ops.exact_div(extra, state.M[i][i])
                state.col_addmul(i + 1, i, ops.neg(q))
            changed = True
        if not changed:
            return
    raise AssertionError("divisibility chain failed to stabilize")


def _sort_zeros_to_end(state: _ReductionState) -> None:
    r = min(state.m, state.n)
    ops = state.ops
    nonzero = [i for i in range(r) if not ops.is_zero(state.M[i][i])]
    for target, source in enumerate(nonzero):
        if target != source:
            state.row_swap(target, source)
            state.col_swap(target, source)


def _canonicalize_diagonal(state: _ReductionState) -> None:
    ops = state.ops
    for i in range(min(state.m, state.n)):
        x = state.M[i][i]
        if ops.is_zero(x):
            continue
        u = ops.canonical_unit(x)
        if u != ops.one():
            u_inv = _unit_inverse(ops, u)
            state.row_scale(i, u, u_inv)


def _unit_inverse(ops: EuclideanOps, u: Any) -> Any:
    if ops.kind == "int":
        if u not in (1, -1):
            raise AssertionError(f"{u} is not a unit of the integers")
        return u
    if len(u) != 1:
        raise AssertionError(f"{u} is not a unit polynomial")
    p = ops.ring.base.modulus
    return (pow(u[0], -1, p),)


def _wrap(ring: Ring, grid: list[list[Any]]) -> RingMatrix:
    return RingMatrix(
        ring,
        len(grid),
        len(grid[0]),
        tuple(RingElement(ring, x) for row in grid for x in row),
    )


def smith_normal_form(A: RingMatrix) -> DiagonalReduction:
    """Witnessed diagonal form over the integers or polynomials over a prime
    field: canonical diagonal entries, zeros last, each entry dividing the
    next.  The returned witnesses are re-verified before returning."""
    ops = EuclideanOps(A.ring)
    grid = [[e.payload for e in row] for row in A.row_list()]
    state = _ReductionState(A.ring, ops, grid)
    for k in range(min(state.m, state.n)):
        pivot = _find_pivot(state, k)
        if pivot is None:
            break
        state.row_swap(k, pivot[0])
        state.col_swap(k, pivot[1])
        _clear_position(state, k)
    _sort_zeros_to_end(state)
    _enforce_divisibility(state)
    _sort_zeros_to_end(state)
    _canonicalize_diagonal(state)
    red = DiagonalReduction(
        P=_wrap(A.ring, state.P),
        P_inv=_wrap(A.ring, state.Pi),
        Q=_wrap(A.ring, state.Q),
        Q_inv=_wrap(A.ring, state.Qi),
        D=_wrap(A.ring, state.M),
    )
    if not verify_reduction(A, red):
        raise AssertionError("reduction verification failed; this is a bug")
    return red


def diagonal_reduction(A: RingMatrix) -> DiagonalReduction:
    """Witnessed diagonal form over a modular ring (prime fields included),
    computed by lifting the canonical representatives to the integers, reducing
    there, and projecting the whole witness family mod n."""
    ring = A.ring
    if not isinstance(ring, ModularRing):
        raise UnsupportedRing(
            f"diagonal_reduction expects a modular ring, got {ring.descriptor()}"
        )
    zz = IntegerRing()
    lifted = A.map_entries(zz, lambda e: RingElement(zz, e.payload))
    lifted_red = smith_normal_form(lifted)
    n = ring.modulus

    def project(matrix: RingMatrix) -> RingMatrix:
        return matrix.map_entries(ring, lambda e: RingElement(ring, e.payload % n))

    red = DiagonalReduction(
        P=project(lifted_red.P),
        P_inv=project(lifted_red.P_inv),
        Q=project(lifted_red.Q),
        Q_inv=project(lifted_red.Q_inv),
        D=project(lifted_red.D),
    )
    if not verify_reduction(A, red):
        raise AssertionError("modular reduction verification failed; this is a bug")
    return red


def reduce_matrix(A: RingMatrix) -> DiagonalReduction:
    """Dispatch to the Euclidean or modular reduction by ring kind."""
    if isinstance(A.ring, ModularRing):
        return diagonal_reduction(A)
    return smith_normal_form(A)


def hermite_reduce(v: RingMatrix) -> DiagonalReduction:
    """Reduce a 1x2 row (d 0) or 2x1 column (d 0)^T with a determinant-one
    transform built from one Bezout identity."""
    ring = v.ring
    if (v.rows, v.cols) not in ((1, 2), (2, 1)):
        raise ValueError("hermite_reduce expects a 1x2 or 2x1 matrix")
    if isinstance(ring, ModularRing):
        lift_ring: Ring = IntegerRing()
        lift = [e.payload for e in v.entries]
        back: Callable[[Any], Any] = lambda x: x % ring.modulus
        ops = EuclideanOps(lift_ring)
    else:
        ops = EuclideanOps(ring)
        lift = [e.payload for e in v.entries]
        back = lambda x: x
    a, b = lift
    d, s, t = ops.egcd(a, b)
    if ops.is_zero(d):
        # both entries zero; identity transform suffices
        two_by_two = [[ops.one(), ops.zero()], [ops.zero(), ops.one()]]
        two_inv = [[ops.one(), ops.zero()], [ops.zero(), ops.one()]]
    else:
        ab, bb = ops.exact_div(a, d), ops.exact_div(b, d)
        two_by_two = [[s, ops.neg(bb)], [t, ab]]
        two_inv = [[ab, bb], [ops.neg(t), s]]
    one_by_one = [[ops.one()]]

    def wrap(grid: list[list[Any]]) -> RingMatrix:
        return RingMatrix(
            ring,
            len(grid),
            len(grid[0]),
            tuple(RingElement(ring, back(x)) for row in grid for x in row),
        )

    if v.rows == 1:
        red = DiagonalReduction(
            P=wrap(one_by_one),
            P_inv=wrap(one_by_one),
            Q=wrap(two_by_two),
            Q_inv=wrap(two_inv),
            D=wrap([[d, ops.zero()]]),
        )
    else:
        transpose = lambda g: [list(col) for col in zip(*g)]
        red = DiagonalReduction(
            P=wrap(transpose(two_by_two)),
            P_inv=wrap(transpose(two_inv)),
            Q=wrap(one_by_one),
            Q_inv=wrap(one_by_one),
            D=wrap([[d], [ops.zero()]]),
        )
    if not verify_reduction(v, red):
        raise AssertionError("hermite reduction verification failed; this is a bug")
    return red


def is_total_divisor(a: RingElement, b: RingElement) -> bool:
    """Whether b lies in the ideal generated by a (in a commutative ring).

    Decided by exact division over the Euclidean rings and by exhaustive
    search over finite rings."""
    ring = a.ring
    ring._own(b)
    if isinstance(ring, IntegerRing) or (
        isinstance(ring, PolynomialRing) and isinstance(ring.base, PrimeField)
    ):
        return EuclideanOps(ring).divides(a.payload, b.payload)
    if ring.is_finite():
        return any(a * r == b for r in ring.elements())
    raise UnsupportedRing(f"divisibility is undecidable here over {ring.descriptor()}")


def elementary_divisor_chain_check(red: DiagonalReduction) -> bool:
    """Whether successive diagonal entries divide each other."""
    diag = red.diagonal()
    return all(is_total_divisor(diag[i], diag[i + 1]) for i in range(len(diag) - 1))


def is_regular_matrix(
    f: RingMatrix, method: str = "auto", budget: int | None = None
) -> tuple[bool, Optional[RingMatrix]]:
    """Whether some g satisfies f @ g @ f == f, with a verified witness.

    ``structural`` reduces f and tests each diagonal entry for regularity,
    assembling the witness from the transforms; ``brute`` scans all candidate
    matrices of a finite ring in enumeration order.  ``auto`` prefers the
    structural route for modular rings and falls back to brute force for
    other finite rings."""
    ring = f.ring
    if method == "auto":
        method = "structural" if isinstance(ring, ModularRing) else "brute"
    if method == "structural":
        red = diagonal_reduction(f)
        diag = red.diagonal()
        witnesses = []
        for d in diag:
            ok, g = is_regular_element(d)
            if not ok:
                return False, None
            witnesses.append(g)
        # G is the transposed-shape diagonal of the entry witnesses
        G = RingMatrix.diagonal(ring, witnesses, rows=f.cols, cols=f.rows)
        g = red.Q @ G @ red.P
        if f @ g @ f != f:
            raise AssertionError("structural regularity witness failed; this is a bug")
        return True, g
    if method == "brute":
        if not ring.is_finite():
            raise UnsupportedRing("brute-force regularity needs a finite ring")
        elements = ring.elements()
        slots = f.rows * f.cols
        count = len(elements) ** slots
        cap = search_budget(budget)
        if count > cap:
            raise BudgetExceeded(
                f"{count} candidate matrices exceed the search budget {cap}"
            )
        for combo in itertools.product(elements, repeat=slots):
            g = RingMatrix(ring, f.cols, f.rows, combo)
            if f @ g @ f == f:
                return True, g
        return False, None
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# interchange format


def matrix_to_document(A: RingMatrix) -> dict:
    """JSON-ready document: ring descriptor, shape, row-major entry literals."""
    return {
        "ring": A.ring.descriptor(),
        "rows": A.rows,
        "cols": A.cols,
        "entries": [e.literal() for e in A.entries],
    }


def matrix_from_document(doc: dict) -> RingMatrix:
    """Parse the interchange format produced by :func:`matrix_to_document`.

    ``entries`` may be the flat row-major list the writer emits or a list of
    ``rows`` rows with ``cols`` literals each.
    """
    if not isinstance(doc, dict):
        raise ValueError("matrix document must be a JSON object")
    for key in ("ring", "rows", "cols", "entries"):
        if key not in doc:
            raise ValueError(f"matrix document is missing {key!r}")
    ring = parse_ring(doc["ring"])
    rows, cols = doc["rows"], doc["cols"]
    if not isinstance(rows, int) or not isinstance(cols, int):
        raise ValueError("rows and cols must be integers")
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise ValueError("entries must be a list")
    nested = len(entries) == rows and all(
        isinstance(r, list) and len(r) == cols for r in entries
    )
    if nested and len(entries) != rows * cols:
        entries = [e for row in entries for e in row]
    elif nested:
        # one-column shapes fit both layouts; prefer flat, fall back
        try:
            return RingMatrix(ring, rows, cols, tuple(ring.make(e) for e in entries))
        except (ValueError, TypeError):
            entries = [e for row in entries for e in row]
    if len(entries) != rows * cols:
        raise ValueError("entry list does not match the declared shape")
    return RingMatrix(ring, rows, cols, tuple(ring.make(e) for e in entries))


def reduction_to_document(
    A: RingMatrix, red: DiagonalReduction, include_witness: bool
) -> dict:
    doc = matrix_to_document(red.D)
    doc["diagonal"] = [e.literal() for e in red.diagonal()]
    doc["divisibility_chain"] = elementary_divisor_chain_check(red)
    if include_witness:
        doc["witness"] = {
            "P": matrix_to_document(red.P),
            "P_inv": matrix_to_document(red.P_inv),
            "Q": matrix_to_document(red.Q),
            "Q_inv": matrix_to_document(red.Q_inv),
        }
    doc["verified"] = verify_reduction(A, red)
    return doc

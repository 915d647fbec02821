"""Command-line front end.

Subcommands cover witnessed reduction (``snf``, ``reduce``, ``bezout``),
monoid refinement and cancellation (``refine``, ``check-cancellation``),
module queries (``localize``, ``iso``), the theorem suite over one ring
(``verify``), and the bounded counterexample searches (``counterexample``).

Exit codes: 0 when every check passed, 1 when a property was violated (the
counterexample payload is printed), 2 when a bound or budget ran out before
an answer was reached, 3 for input errors.  Output is line oriented with a
stable field order and is byte-identical across runs of the same request.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from typing import Optional, Sequence

from .counterexamples import (
    NotPrincipalUpTo,
    PrincipalWitness,
    bounded_principality_check,
    trivial_extension_hermite_search,
)
from .errors import BudgetExceeded, RinglabError, UnsupportedRing
from .matrices import (
    RingMatrix,
    matrix_from_document,
    reduce_matrix,
    reduction_to_document,
    smith_normal_form,
)
from .monoids import (
    EqResult,
    MonoidPresentation,
    cancellation_law_check,
    conical_check,
    normalize_and_eq,
    refine,
)
from .modules import (
    ProjectiveModule,
    cancellation_and_reduction_verify,
    diagonal_refinement_check,
    jacobson_lift_verify,
    local_global_verify,
    localize_at_element,
    localize_at_maximal,
    module_iso,
    partition_of_unity_verify,
    projective_module,
    projective_monoid,
)
from .rings import (
    BivariatePolynomialRing,
    IntegerRing,
    ModularRing,
    PolynomialRing,
    PrimeField,
    Ring,
    is_regular_element,
    parse_ring,
)

PASS, VIOLATION, EXHAUSTED, INPUT_ERROR = 0, 1, 2, 3


def _read_matrix(path: str) -> RingMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"matrix input is not valid JSON: {exc}") from exc
    return matrix_from_document(doc)


def _parse_exponents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_element(ring: Ring, text: str):
    try:
        literal = json.loads(text)
    except json.JSONDecodeError:
        literal = text
    return ring.make(literal)


def _presentation_from_args(args: argparse.Namespace) -> MonoidPresentation:
    if args.monoid is not None:
        try:
            doc = json.loads(args.monoid)
        except json.JSONDecodeError as exc:
            raise ValueError(f"--monoid is not valid JSON: {exc}") from exc
        return MonoidPresentation.from_json(doc)
    if args.generators is None:
        raise ValueError("pass --generators K for a free monoid or --monoid JSON")
    return MonoidPresentation(generator_count=args.generators, relations=())


def _cmd_snf(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input)
    reduction = smith_normal_form(matrix)
    doc = reduction_to_document(matrix, reduction, args.emit_witness)
    print(json.dumps(doc, indent=2))
    return PASS if doc["verified"] else VIOLATION


def _cmd_reduce(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input)
    reduction = reduce_matrix(matrix)
    doc = reduction_to_document(matrix, reduction, args.emit_witness)
    print(json.dumps(doc, indent=2))
    return PASS if doc["verified"] else VIOLATION


def _cmd_bezout(args: argparse.Namespace) -> int:
    from .rings import bezout_gcd

    ring = parse_ring(args.ring)
    a = _parse_element(ring, args.a)
    b = _parse_element(ring, args.b)
    d, s, t = bezout_gcd(a, b)
    print(f"ring={ring.descriptor()}")
    print(f"a={json.dumps(a.literal())} b={json.dumps(b.literal())}")
    print(
        f"d={json.dumps(d.literal())} s={json.dumps(s.literal())}"
        f" t={json.dumps(t.literal())}"
    )
    print(f"identity: s*a + t*b = d verified={s * a + t * b == d}")
    return PASS


def _cmd_refine(args: argparse.Namespace) -> int:
    pres = _presentation_from_args(args)
    x1, x2, y1, y2 = (
        pres.element(_parse_exponents(v)) for v in (args.x1, args.x2, args.y1, args.y2)
    )
    witness = refine(x1, x2, y1, y2, args.bound)
    print(f"monoid={pres.describe()}")
    if witness is None:
        print(f"refine=exhausted bound={args.bound}")
        return EXHAUSTED
    grid = witness.grid()
    for label, row in zip(("z11 z12", "z21 z22"), grid):
        names = label.split()
        for name, entry in zip(names, row):
            print(f"{name}={','.join(map(str, entry.exponents))}")
    # sums need only agree up to the congruence, not exponent by exponent
    sums = witness.row_sums() + witness.column_sums()
    verified = all(
        normalize_and_eq(got, want, max(args.bound, 8)) == EqResult.EQUAL
        for got, want in zip(sums, (x1, x2, y1, y2))
    )
    print(f"verified={verified}")
    return PASS


def _cmd_check_cancellation(args: argparse.Namespace) -> int:
    pres = _presentation_from_args(args)
    unit = pres.element(_parse_exponents(args.unit))
    k = pres.generator_count
    candidates = [
        pres.element(v)
        for v in itertools.product(range(args.max_entry + 1), repeat=k)
    ]
    report = cancellation_law_check(unit, candidates, args.bound)
    print(f"monoid={pres.describe()}")
    print(f"unit={','.join(map(str, unit.exponents))}")
    print(f"pairs_checked={report.pairs_checked}")
    print(f"cancellation={report.describe()}")
    return PASS if report.holds else VIOLATION


def _cmd_localize(args: argparse.Namespace) -> int:
    ring = parse_ring(args.ring)
    module = projective_module(ring, _parse_exponents(args.module))
    if (args.at_element is None) == (args.at_maximal is None):
        raise ValueError("pass exactly one of --at-element or --at-maximal")
    if args.at_element is not None:
        f = _parse_element(ring, args.at_element)
        view = localize_at_element(module, f)
    else:
        view = localize_at_maximal(module, args.at_maximal)
    print(f"ring={ring.descriptor()}")
    print(f"module={module.describe()}")
    print(view.describe())
    result = view.result
    if isinstance(result, ProjectiveModule):
        print(f"result={result.describe()} over {result.ring.descriptor()}")
    else:
        print(f"result={result.describe()}")
    if view.free_rank is not None:
        print(f"free_rank={view.free_rank}")
    print("multiplicative_set_inverts=True")
    return PASS


def _cmd_iso(args: argparse.Namespace) -> int:
    ring = parse_ring(args.ring)
    left = projective_module(ring, _parse_exponents(args.left))
    right = projective_module(ring, _parse_exponents(args.right))
    answer = module_iso(left, right)
    print(f"ring={ring.descriptor()}")
    print(f"left={left.describe()}")
    print(f"right={right.describe()}")
    print(f"iso={answer}")
    return PASS if answer else VIOLATION


def _default_partition_generators(ring: Ring) -> list:
    basis = projective_monoid(ring)[1]
    e = basis.elements[0]
    if len(basis) == 1:
        return [ring.one()]
    return [e, ring.one() - e]


def _refinement_report_lines(ring: Ring, splittings: int, bound: int) -> list[str]:
    presentation, basis = projective_monoid(ring)
    lines = [
        f"check=refinement instance={ring.descriptor()}"
        f" monoid={presentation.describe()}"
    ]
    generators = [
        presentation.element(
            tuple(1 if j == i else 0 for j in range(len(basis)))
        )
        for i in range(len(basis))
    ]
    conical = conical_check(generators)
    rng = random.Random(0)
    k = presentation.generator_count
    failures = 0
    for _ in range(splittings):
        grid = [
            tuple(rng.randint(0, 10) for _ in range(k)) for _ in range(4)
        ]
        z11, z12, z21, z22 = (presentation.element(g) for g in grid)
        x1, x2 = z11 + z12, z21 + z22
        y1, y2 = z11 + z21, z12 + z22
        witness = refine(x1, x2, y1, y2, bound=max(20, bound))
        if witness is None:
            failures += 1
            continue
        if witness.row_sums() != (x1, x2) or witness.column_sums() != (y1, y2):
            failures += 1
    holds = conical and failures == 0
    lines[0] += f" verdict={'holds' if holds else 'violated'} checked={splittings}"
    lines.append(f"  free={presentation.is_free} conical={conical}")
    lines.append(f"  splittings refined: {splittings - failures}/{splittings}")
    return lines if holds else lines + ["  counterexample: a splitting failed"]


def _cmd_verify(args: argparse.Namespace) -> int:
    ring = parse_ring(args.ring)
    if not isinstance(ring, ModularRing):
        raise UnsupportedRing(
            f"the verify suite runs over modular rings, got {ring.descriptor()}"
        )
    bound = args.bound
    failures = 0
    lines = _refinement_report_lines(ring, splittings=100, bound=bound)
    if "verdict=violated" in lines[0]:
        failures += 1
    for line in lines:
        print(line)
    reports = [local_global_verify(ring, bound)]
    if args.generators is not None:
        gens = [
            _parse_element(ring, part) for part in args.generators.split(",")
        ]
    else:
        gens = _default_partition_generators(ring)
    reports.append(partition_of_unity_verify(ring, gens, min(bound, 2)))
    reports.append(cancellation_and_reduction_verify(ring, bound))
    reports.append(jacobson_lift_verify(ring))
    for report in reports:
        for line in report.lines():
            print(line)
        if not report.holds:
            failures += 1
    decomposition_checked = 0
    decomposition_failures = 0
    for a in ring.elements():
        regular, _ = is_regular_element(a)
        if not regular:
            continue
        decomposition_checked += 1
        rep = diagonal_refinement_check(RingMatrix.from_rows(ring, [[a]]))
        if not rep.holds:
            decomposition_failures += 1
    verdict = "holds" if decomposition_failures == 0 else "violated"
    print(
        f"check=decomposition instance={ring.descriptor()} regular 1x1"
        f" verdict={verdict} checked={decomposition_checked}"
    )
    if decomposition_failures:
        failures += 1
    print(f"result={'pass' if failures == 0 else 'violation'}")
    return PASS if failures == 0 else VIOLATION


def _print_principality(verdict, instance: str) -> int:
    print(f"instance={instance}")
    if isinstance(verdict, PrincipalWitness):
        print("verdict=principal")
        print(f"generator={json.dumps(verdict.generator.literal())}")
        for i, c in enumerate(verdict.cofactors):
            print(f"cofactor[{i}]={json.dumps(c.literal())}")
        for i, h in enumerate(verdict.combination):
            print(f"combination[{i}]={json.dumps(h.literal())}")
        print("note: the claimed counterexample is refuted by this witness")
        return VIOLATION
    print(f"verdict=not-principal-up-to bound={verdict.bound}")
    print(f"candidates_examined={verdict.candidates_examined}")
    print(f"note: {verdict.describe()}")
    return PASS


def _cmd_counterexample(args: argparse.Namespace) -> int:
    if args.which == "ex31":
        ring = PolynomialRing(ModularRing(4), bound=args.degree)
        generators = [ring.make((2,)), ring.gen()]
        verdict = bounded_principality_check(generators, args.degree)
        return _print_principality(
            verdict,
            f"{ring.descriptor()} ideal=(2, X) degree<={args.degree}",
        )
    if args.which == "ex33":
        ring = BivariatePolynomialRing(PrimeField(args.p), args.degree)
        gx, gy = ring.gens()
        verdict = bounded_principality_check([gx, gy], args.degree)
        return _print_principality(
            verdict,
            f"{ring.descriptor()} ideal=(X, Y) total degree<={args.degree}",
        )
    report = trivial_extension_hermite_search(height=args.height)
    print(f"instance={report.vector.ring.descriptor()} row=(2, e) height<={report.height}")
    print(f"column_pairs_examined={report.checked}")
    if report.found:
        print("verdict=reduction-found")
        print(report.describe())
        print("note: the claimed counterexample is refuted by this transform")
        return VIOLATION
    print("verdict=no-reduction-within-bounds")
    print(f"note: {report.describe()}")
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description=(
            "Witnessed diagonal reduction over exact rings, refinement-monoid"
            " checks, and bounded counterexample searches."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", help="Smith normal form over integers or gf(p)[X]")
    p.add_argument("--input", default="-", help="matrix JSON file, - for stdin")
    p.add_argument("--emit-witness", action="store_true")
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("reduce", help="diagonal reduction (modular rings included)")
    p.add_argument("--input", default="-", help="matrix JSON file, - for stdin")
    p.add_argument("--emit-witness", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("bezout", help="extended gcd with verified identity")
    p.add_argument("--ring", default="integers")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_bezout)

    p = sub.add_parser("refine", help="2x2 refinement grid for x1+x2 = y1+y2")
    p.add_argument("--generators", type=int, help="rank of a free monoid")
    p.add_argument("--monoid", help='presentation JSON {"generators":..,"relations":..}')
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("x1")
    p.add_argument("x2")
    p.add_argument("y1")
    p.add_argument("y2")
    p.set_defaults(func=_cmd_refine)

    p = sub.add_parser("check-cancellation", help="2u+A = u+B implies u+A = B")
    p.add_argument("--generators", type=int, help="rank of a free monoid")
    p.add_argument("--monoid", help="presentation JSON")
    p.add_argument("--unit", required=True, help="exponents of u, comma separated")
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(func=_cmd_check_cancellation)

    p = sub.add_parser("localize", help="localize a projective module")
    p.add_argument("--ring", required=True)
    p.add_argument("--module", required=True, help="multiplicities, comma separated")
    p.add_argument("--at-element", help="ring element literal")
    p.add_argument("--at-maximal", type=int, help="maximal ideal index")
    p.set_defaults(func=_cmd_localize)

    p = sub.add_parser("iso", help="projective module isomorphism")
    p.add_argument("--ring", required=True)
    p.add_argument("--left", required=True, help="multiplicities, comma separated")
    p.add_argument("--right", required=True, help="multiplicities, comma separated")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("verify", help="theorem suite over one modular ring")
    p.add_argument("--ring", required=True)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument(
        "--generators",
        help="comma-separated elements for the partition-of-unity check",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("counterexample", help="bounded refutation searches")
    p.add_argument("which", choices=("ex31", "ex33", "ex34"))
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--p", type=int, default=2, help="prime for ex33 coefficients")
    p.add_argument("--height", type=int, default=2, help="entry height for ex34")
    p.set_defaults(func=_cmd_counterexample)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; that slot means "bound exhausted" here
        return PASS if exc.code in (0, None) else INPUT_ERROR
    if args.command == "counterexample" and args.degree is None:
        args.degree = 3 if args.which == "ex31" else 2
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"exhausted: {exc}")
        return EXHAUSTED
    except (UnsupportedRing, ValueError, OSError) as exc:
        print(f"input error: {exc}")
        return INPUT_ERROR
    except RinglabError as exc:
        print(f"error: {exc}")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

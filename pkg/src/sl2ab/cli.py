"""Command-line front end.

Subcommands: `compute` (structure formulas for a field form plus S), `oracle`
(brute-force enumeration over a small finite ring), `table` (classification
tables over a range), and `verify` (cross-validation suites).

Exit codes: 0 success; 1 a verification or comparison found a mismatch;
2 theorem precondition failure (finite unit group with no known case);
3 the polynomial order is not maximal at 2 or 3; 4 usage or validation error;
5 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import reduce

from .abgroup import TRIVIAL_GROUP, direct_sum
from .oracle import (
    DEFAULT_RING_CAP,
    BudgetExceededError,
    FiniteRingSpec,
    enumerate_sl2_direct,
    prop_local_formula,
    sl2_abelianization,
)
from .polyarith import IntPoly, euler_phi, is_squarefree, primes_dividing
from .splitting import (
    Cyclotomic,
    FieldSpec,
    GeneralPoly,
    NotPMaximalError,
    Quadratic,
    Rational,
    RationalFunction,
    field_degree,
    field_spec_to_json,
    signature,
)
from .theorems import (
    ArithmeticRingSpec,
    ComputeOutcome,
    FiniteUnitsError,
    SSet,
    compute,
    s_for_inverted,
    sl2ab_cyclotomic,
    sl2ab_quadratic_positive,
)
from .verify import SUITES

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PRECONDITION = 2
EXIT_NOT_MAXIMAL = 3
EXIT_USAGE = 4
EXIT_BUDGET = 5


class CliError(Exception):
    """Usage or validation error at the command layer (exit code 4)."""


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which would collide with the
    # precondition-failure exit code; raise instead and map to 4 in run().
    def error(self, message: str):  # type: ignore[override]
        raise CliError(message)


def dump_json(obj) -> str:
    """The one JSON serialization used everywhere: stable keys, 2-space
    indent, trailing newline, so emitted documents round-trip byte-identically."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="sl2ab",
        description=(
            "Abelianization of SL2 over rings of S-integers, determined by "
            "the splitting of 2 and 3."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_compute = sub.add_parser(
        "compute", help="compute the abelianization for a field form plus S"
    )
    which = p_compute.add_mutually_exclusive_group(required=True)
    which.add_argument("--rational", action="store_true", help="the field Q")
    which.add_argument(
        "--quadratic", type=int, metavar="D", help="Q(sqrt(D)), squarefree D"
    )
    which.add_argument("--cyclotomic", type=int, metavar="N", help="Q(zeta_N)")
    which.add_argument(
        "--poly",
        metavar="C0,C1,...",
        help="Q[x]/(f) for monic f with these coefficients, constant term first",
    )
    which.add_argument(
        "--function-field",
        type=int,
        metavar="Q",
        help="the rational function field F_Q(t), Q a prime power",
    )
    p_compute.add_argument(
        "--invert",
        metavar="N1,N2,...",
        help="(--rational only) put the prime divisors of these integers in S",
    )
    p_compute.add_argument(
        "--remove-prime",
        action="append",
        default=[],
        metavar="P:IDX",
        help="put the IDX-th printed prime above P in S (P is 2 or 3); "
        "repeatable, comma-separable",
    )
    p_compute.add_argument(
        "--extra-s-primes",
        type=int,
        default=0,
        metavar="K",
        help="count K further inverted primes not above 2 or 3",
    )
    p_compute.add_argument("--json", action="store_true", help="emit a JSON report")

    p_oracle = sub.add_parser(
        "oracle", help="brute-force the abelianization over a small finite ring"
    )
    ring = p_oracle.add_mutually_exclusive_group(required=True)
    ring.add_argument("--zmod", type=int, metavar="N", help="the ring Z/N")
    ring.add_argument(
        "--ring", metavar="FILE", help="path to a JSON ring description"
    )
    p_oracle.add_argument(
        "--compare",
        action="store_true",
        help="compare against the local-ring formula (per factor)",
    )
    p_oracle.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_RING_CAP,
        metavar="B",
        help=f"ring-order budget for the |R|^4 scan (default {DEFAULT_RING_CAP})",
    )
    p_oracle.add_argument("--json", action="store_true", help="emit a JSON report")

    p_table = sub.add_parser("table", help="print a classification table")
    tsub = p_table.add_subparsers(dest="table_kind", required=True, metavar="kind")
    t_quad = tsub.add_parser("quadratic", help="real quadratic fields by radicand")
    t_quad.add_argument("d_min", type=int)
    t_quad.add_argument("d_max", type=int)
    t_cyc = tsub.add_parser("cyclotomic", help="cyclotomic fields Q(zeta_N)")
    t_cyc.add_argument("n_max", type=int)
    t_zinv = tsub.add_parser("z-inv-n", help="the rings Z[1/n]")
    t_zinv.add_argument("n_max", type=int)

    p_verify = sub.add_parser("verify", help="run a cross-validation suite")
    p_verify.add_argument("suite", choices=[*SUITES, "all"])

    return parser


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _parse_int_list(text: str, flag: str) -> list[int]:
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            out.append(int(chunk))
        except ValueError:
            raise CliError(f"{flag}: {chunk!r} is not an integer") from None
    if not out:
        raise CliError(f"{flag}: empty list")
    return out


def _field_from_args(args: argparse.Namespace) -> FieldSpec:
    if args.rational:
        return Rational()
    if args.quadratic is not None:
        return Quadratic(args.quadratic)
    if args.cyclotomic is not None:
        return Cyclotomic(args.cyclotomic)
    if args.poly is not None:
        return GeneralPoly(IntPoly.from_csv(args.poly))
    return RationalFunction(args.function_field)


def _s_from_args(args: argparse.Namespace) -> SSet:
    removed2: set[int] = set()
    removed3: set[int] = set()
    other = args.extra_s_primes
    if args.invert is not None:
        if not args.rational:
            raise CliError(
                "--invert applies only to --rational; use --remove-prime P:IDX"
            )
        inverted: set[int] = set()
        for n in _parse_int_list(args.invert, "--invert"):
            if n < 2:
                raise CliError(f"--invert: need integers >= 2, got {n}")
            inverted.update(primes_dividing(n))
        if 2 in inverted:
            removed2.add(0)
        if 3 in inverted:
            removed3.add(0)
        other += len(inverted - {2, 3})
    for item in args.remove_prime:
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            head, sep, tail = part.partition(":")
            try:
                p, idx = int(head), int(tail)
            except ValueError:
                sep = ""
            if not sep:
                raise CliError(f"--remove-prime: expected P:IDX, got {part!r}")
            if p == 2:
                removed2.add(idx)
            elif p == 3:
                removed3.add(idx)
            else:
                raise CliError(f"--remove-prime: P must be 2 or 3, got {p}")
    return SSet(frozenset(removed2), frozenset(removed3), other)


def _field_str(spec: FieldSpec) -> str:
    if isinstance(spec, Rational):
        return "Q"
    if isinstance(spec, Quadratic):
        return f"Q(sqrt({spec.d}))"
    if isinstance(spec, Cyclotomic):
        return f"Q(zeta_{spec.n})"
    if isinstance(spec, GeneralPoly):
        return f"Q[x]/({spec.poly})"
    if isinstance(spec, RationalFunction):
        return f"F_{spec.q}(t)"
    return f"user-supplied field of degree {field_degree(spec)}"


def _s_str(s: SSet, infinite_places: int) -> str:
    parts = [f"{infinite_places} infinite place(s)"]
    if s.removed_above_2:
        parts.append(f"inverted above 2: indexes {sorted(s.removed_above_2)}")
    if s.removed_above_3:
        parts.append(f"inverted above 3: indexes {sorted(s.removed_above_3)}")
    if s.other_finite_primes:
        parts.append(f"{s.other_finite_primes} other inverted prime(s)")
    if s.finite_count == 0:
        parts.append("no finite primes inverted")
    return "; ".join(parts)


def _print_compute_report(
    field: FieldSpec, s: SSet, outcome: ComputeOutcome
) -> None:
    print(f"field: {_field_str(field)}")
    if isinstance(field, RationalFunction):
        print(f"characteristic: {field.characteristic} (q = {field.q})")
        print(f"S: {_s_str(s, 1)}")
        places = [q for sp in outcome.splittings for q in sp.primes]
        if places:
            print("degree-one places with small residue field:")
            for i, q in enumerate(places):
                print(f"  [{i}] {q.label}: e={q.e}, f={q.f}")
        else:
            print("degree-one places with small residue field: none (q >= 4)")
    else:
        sig = signature(field)
        print(f"degree: {field_degree(field)}; signature: ({sig.r1}, {sig.r2})")
        print(f"S: {_s_str(s, sig.infinite_places)}")
        for sp in outcome.splittings:
            print(f"splitting of {sp.p}:")
            for i, q in enumerate(sp.primes):
                print(f"  [{i}] {q.label}: e={q.e}, f={q.f}")
    print(f"route: {outcome.route}")
    if outcome.contributions:
        print("contributions:")
        for c in outcome.contributions:
            print(f"  {c.prime} -> {c.summand}")
    else:
        print("contributions: none")
    for w in outcome.warnings:
        print(f"warning: {w}")
    group_str = str(outcome.group)
    primary = outcome.group.primary_str()
    if primary != group_str:
        print(f"group: {group_str}  (= {primary})")
    else:
        print(f"group: {group_str}")


def _cmd_compute(args: argparse.Namespace) -> int:
    field = _field_from_args(args)
    s = _s_from_args(args)
    outcome = compute(ArithmeticRingSpec(field, s))
    if args.json:
        doc = {
            "input": {"field": field_spec_to_json(field), "s": s.to_json()},
            "route": outcome.route,
            "group": outcome.group.to_json(),
            "contributions": [
                {"prime": c.prime, "summand": c.summand}
                for c in outcome.contributions
            ],
            "warnings": list(outcome.warnings),
            "splittings": [sp.to_json() for sp in outcome.splittings],
        }
        sys.stdout.write(dump_json(doc))
    else:
        _print_compute_report(field, s, outcome)
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def _ring_spec_from_args(args: argparse.Namespace) -> FiniteRingSpec:
    if args.zmod is not None:
        return FiniteRingSpec.zmod(args.zmod)
    try:
        with open(args.ring, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read ring spec file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"ring spec file is not valid JSON: {exc}") from None
    try:
        return FiniteRingSpec.from_json(data)
    except (KeyError, TypeError) as exc:
        raise CliError(f"malformed ring spec: {exc!r}") from None


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.cap < 1:
        raise CliError(f"--cap must be >= 1, got {args.cap}")
    spec = _ring_spec_from_args(args)
    group = enumerate_sl2_direct(spec, cap=args.cap)
    ab = sl2_abelianization(spec, cap=args.cap)
    match = True
    formula = None
    if args.compare:
        formula = reduce(
            direct_sum,
            (prop_local_formula(f) for f in spec.factors),
            TRIVIAL_GROUP,
        )
        match = formula == ab
    if args.json:
        doc = {
            "ring": spec.to_json(),
            "ring_order": spec.order,
            "sl2_order": len(group),
            "group": ab.to_json(),
        }
        if formula is not None:
            doc["compare"] = {"formula_group": formula.to_json(), "match": match}
        sys.stdout.write(dump_json(doc))
    else:
        print(f"ring: {spec.describe()} (order {spec.order})")
        print(f"|SL2(R)| = {len(group)}")
        print(f"abelianization: {ab}")
        if formula is not None:
            if match:
                print("comparison: matches the local-ring formula")
            else:
                print(
                    f"comparison: MISMATCH, the local-ring formula gives {formula}"
                )
    return EXIT_OK if match else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _cmd_table(args: argparse.Namespace) -> int:
    if args.table_kind == "quadratic":
        if args.d_min <= 1 or args.d_min > args.d_max:
            raise CliError(
                f"need 1 < d_min <= d_max, got {args.d_min}..{args.d_max}"
            )
        print(f"{'d':>5}  {'d mod 24':>8}  group")
        for d in range(args.d_min, args.d_max + 1):
            if not is_squarefree(d):
                print(f"{d:>5}  {d % 24:>8}  (skipped: not squarefree)")
                continue
            print(f"{d:>5}  {d % 24:>8}  {sl2ab_quadratic_positive(d)}")
    elif args.table_kind == "cyclotomic":
        if args.n_max < 1:
            raise CliError(f"need N_max >= 1, got {args.n_max}")
        print(f"{'N':>4}  {'phi(N)':>6}  group")
        for n in range(1, args.n_max + 1):
            print(f"{n:>4}  {euler_phi(n):>6}  {sl2ab_cyclotomic(n)}")
    else:
        if args.n_max < 2:
            raise CliError(f"need n_max >= 2, got {args.n_max}")
        print(f"{'n':>4}  {'2|n':>4}  {'3|n':>4}  group")
        for n in range(2, args.n_max + 1):
            outcome = compute(ArithmeticRingSpec(Rational(), s_for_inverted(n)))
            two = "yes" if n % 2 == 0 else "no"
            three = "yes" if n % 3 == 0 else "no"
            print(f"{n:>4}  {two:>4}  {three:>4}  {outcome.group}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    total = failed = 0
    for name in names:
        print(f"suite {name}:")
        for case in SUITES[name]():
            total += 1
            if case.ok:
                print(f"  PASS {case.name}")
            else:
                failed += 1
                print(f"  FAIL {case.name}: {case.detail}")
    print(f"{total - failed}/{total} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


_HANDLERS = {
    "compute": _cmd_compute,
    "oracle": _cmd_oracle,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    """Parse and execute one command line; return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FiniteUnitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NotPMaximalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_MAXIMAL
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())

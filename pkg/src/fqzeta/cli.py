"""Command-line front end.

Subcommands: count | zeta | compare | find-pair | solve.

Exit codes are a stable contract:

    0  success (for ``solve``: every trace difference is forced)
    1  ``solve`` left unforced degrees, or an unclassified error
    2  malformed variety spec
    3  enumeration budget exceeded
    4  no consistent rational zeta fit for the given counts and profile
    5  duality (functional equation) violation
    6  the compared varieties live over different fields

JSON output (--format=json) is canonical: sorted keys, no whitespace, one
line; rationals print as num/den in lowest terms.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetExceededError,
    DualityViolationError,
    FqZetaError,
    InsufficientCountsError,
    MalformedSpecError,
    NonIntegralCoefficientsError,
    NoRationalFitError,
    RoundingMismatchError,
    WeightSeparationError,
)
from .pairsearch import find_pairs
from .tracesolver import build_constraint_system, solve_forced
from .varieties import DEFAULT_BUDGET, count_series, load_spec
from .zeta import (
    CohomologyProfile,
    check_functional_equation,
    check_riemann_hypothesis,
    connected_denominator,
    counts_from_zeta,
    factor_by_weights,
    zeta_from_counts,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MALFORMED_SPEC = 2
EXIT_BUDGET = 3
EXIT_NO_FIT = 4
EXIT_DUALITY = 5
EXIT_FIELD_MISMATCH = 6

_FIT_ERRORS = (
    NoRationalFitError,
    NonIntegralCoefficientsError,
    InsufficientCountsError,
    WeightSeparationError,
    RoundingMismatchError,
)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _poly_str(coeffs) -> str:
    parts = []
    for e, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) or "0"


def _load_profile(path) -> CohomologyProfile:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return CohomologyProfile.from_dict(data)


def _reconstruct_zeta(spec, profile, budget, extra_terms=0):
    """Counts -> zeta for a connected variety with the given profile."""
    known_den = connected_denominator(spec.q, profile.d)
    free = profile.odd_total + profile.even_total - (len(known_den) - 1)
    terms = max(free, 1) + extra_terms
    series = count_series(spec, terms, budget=budget)
    zeta = zeta_from_counts(
        series,
        profile.odd_total,
        profile.even_total,
        known_denominator=known_den,
    )
    return series, zeta


def _cmd_count(args) -> int:
    spec = load_spec(args.spec)
    series = count_series(spec, args.terms, budget=args.budget)
    if args.format == "json":
        _emit_json({"label": spec.label, "q": series.q, "counts": list(series.counts)})
    else:
        for c in series.counts:
            print(c)
    return EXIT_OK


def _cmd_zeta(args) -> int:
    spec = load_spec(args.spec)
    profile = _load_profile(args.profile)
    series, zeta = _reconstruct_zeta(spec, profile, args.budget, args.extra_terms)
    factorization = factor_by_weights(zeta, profile, tol=args.tolerance)
    duality = check_functional_equation(factorization)
    rh = check_riemann_hypothesis(factorization, tol=args.tolerance)
    if args.format == "json":
        _emit_json(
            {
                "label": spec.label,
                "counts": list(series.counts),
                "zeta": zeta.to_dict(),
                "factorization": factorization.to_dict(),
                "duality": duality,
                "riemann_hypothesis": rh,
            }
        )
    else:
        print(f"label: {spec.label}")
        print(f"counts: {list(series.counts)}")
        print(f"zeta = ({_poly_str(zeta.num)}) / ({_poly_str(zeta.den)})")
        for i, f in enumerate(factorization.factors):
            print(f"P_{i} = {_poly_str(f)}")
        print("duality check: ok")
        print(f"riemann hypothesis check: {'ok' if rh['ok'] else 'VIOLATED'}")
        for v in rh["violations"]:
            print(
                f"  degree {v['degree']}: root modulus {v['modulus']:.12g}, "
                f"expected {v['expected']:.12g}"
            )
    return EXIT_OK


def _cmd_compare(args) -> int:
    spec_a = load_spec(args.spec_a)
    spec_b = load_spec(args.spec_b)
    if spec_a.q != spec_b.q:
        print(
            f"field mismatch: {args.spec_a} has q={spec_a.q}, "
            f"{args.spec_b} has q={spec_b.q}",
            file=sys.stderr,
        )
        return EXIT_FIELD_MISMATCH
    profile = _load_profile(args.profile)
    _, zeta_a = _reconstruct_zeta(spec_a, profile, args.budget)
    _, zeta_b = _reconstruct_zeta(spec_b, profile, args.budget)
    equal = zeta_a == zeta_b
    divergence = None
    if not equal:
        horizon = len(zeta_a.num) + len(zeta_a.den) + len(zeta_b.num) + len(zeta_b.den)
        ca = counts_from_zeta(zeta_a, horizon).counts
        cb = counts_from_zeta(zeta_b, horizon).counts
        for n, (x, y) in enumerate(zip(ca, cb), start=1):
            if x != y:
                divergence = {"n": n, "count_a": x, "count_b": y}
                break
        assert divergence is not None, "distinct zetas must diverge within the horizon"
    if args.format == "json":
        _emit_json(
            {
                "verdict": "EQUAL" if equal else "DIFFER",
                "zeta_a": zeta_a.to_dict(),
                "zeta_b": zeta_b.to_dict(),
                "first_divergence": divergence,
            }
        )
    else:
        print("EQUAL" if equal else "DIFFER")
        if divergence:
            print(
                f"first divergence at n={divergence['n']}: "
                f"{divergence['count_a']} vs {divergence['count_b']}"
            )
    return EXIT_OK


def _cmd_find_pair(args) -> int:
    results = find_pairs(args.p_min, args.p_max)
    if args.format == "json":
        _emit_json([r.to_dict() for r in results])
    else:
        if not results:
            print("no pairs found")
        for r in results:
            print(
                f"p={r.p}  A=(a={r.curve_a.a}, b={r.curve_a.b})  "
                f"B=(a={r.curve_b.a}, b={r.curve_b.b})  "
                f"counts={list(r.counts)}  "
                f"zeta=({_poly_str(r.zeta.num)}) / ({_poly_str(r.zeta.den)})"
            )
    return EXIT_OK


def _cmd_solve(args) -> int:
    if not 1 <= args.d <= args.max_d:
        print(f"d must be in 1..{args.max_d}", file=sys.stderr)
        return EXIT_FAILURE
    system = build_constraint_system(
        args.d,
        include_albanese=args.albanese,
        include_hard_lefschetz=args.hard_lefschetz,
        include_trivial=args.trivial,
    )
    report = solve_forced(system)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        flags = report.flags
        print(
            f"d={report.d}  albanese={'on' if flags.albanese else 'off'}  "
            f"hard_lefschetz={'on' if flags.hard_lefschetz else 'off'}  "
            f"trivial={'on' if flags.trivial else 'off'}"
        )
        forced = " ".join(str(i) for i in report.forced) or "(none)"
        suffix = " (all)" if report.fully_forced else ""
        print(f"forced degrees: {forced}{suffix}")
        if report.residual:
            print("residual relations:")
            for rel in report.residual:
                print(f"  {rel}")
        else:
            print("residual relations: (none)")
    return EXIT_OK if report.fully_forced else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="max ambient points to enumerate (default 10^8)",
    )
    common.add_argument(
        "--format", choices=("human", "json"), default="human", help="output format"
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="relative tolerance for the numeric root-modulus checks",
    )

    parser = argparse.ArgumentParser(
        prog="fqzeta",
        description="Zeta functions over finite fields and forced trace equalities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[common], help="print N_1..N_n")
    p_count.add_argument("spec", help="variety spec JSON file")
    p_count.add_argument("-n", "--terms", type=int, required=True)
    p_count.set_defaults(func=_cmd_count)

    p_zeta = sub.add_parser(
        "zeta", parents=[common], help="zeta function, weight factors, checks"
    )
    p_zeta.add_argument("spec", help="variety spec JSON file")
    p_zeta.add_argument("--profile", required=True, help="cohomology profile JSON file")
    p_zeta.add_argument(
        "--extra-terms",
        type=int,
        default=0,
        help="extra counts beyond the minimum, used as consistency checks",
    )
    p_zeta.set_defaults(func=_cmd_zeta)

    p_cmp = sub.add_parser("compare", parents=[common], help="EQUAL or DIFFER")
    p_cmp.add_argument("spec_a")
    p_cmp.add_argument("spec_b")
    p_cmp.add_argument("--profile", required=True)
    p_cmp.set_defaults(func=_cmd_compare)

    p_find = sub.add_parser(
        "find-pair", parents=[common], help="equal-zeta non-isomorphic curve pairs"
    )
    p_find.add_argument("--p-min", type=int, default=5)
    p_find.add_argument("--p-max", type=int, default=31)
    p_find.set_defaults(func=_cmd_find_pair)

    p_solve = sub.add_parser(
        "solve", parents=[common], help="forced trace equalities in dimension d"
    )
    p_solve.add_argument("-d", type=int, required=True, help="dimension")
    p_solve.add_argument(
        "--albanese", action=argparse.BooleanOptionalAction, default=True
    )
    p_solve.add_argument(
        "--hard-lefschetz", action=argparse.BooleanOptionalAction, default=True
    )
    p_solve.add_argument(
        "--trivial", action=argparse.BooleanOptionalAction, default=True
    )
    p_solve.add_argument("--max-d", type=int, default=8)
    p_solve.set_defaults(func=_cmd_solve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedSpecError as exc:
        print(f"malformed spec: {exc}", file=sys.stderr)
        return EXIT_MALFORMED_SPEC
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _FIT_ERRORS as exc:
        print(f"no consistent zeta fit: {exc}", file=sys.stderr)
        return EXIT_NO_FIT
    except DualityViolationError as exc:
        print(f"duality violation: {exc}", file=sys.stderr)
        return EXIT_DUALITY
    except (FqZetaError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

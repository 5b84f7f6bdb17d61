"""Batch command-line frontend.

One verification suite per subcommand, reports to stdout as JSON
(default), CSV or text.  Exit status: 0 when every check passes, 1 on a
check failure, 2 on invalid parameters.  Randomized spot checks are
driven by an explicit seed, so identical configurations produce
byte-identical output.  The environment variable HECKE_MAX_ELEMS caps
group enumeration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import distinction as dst
from . import gelfand as gf
from .hecke import CharacterData, HeckeAlgebra, chi, verify_presentation
from .scalars import LaurentPoly, format_rational, parse_rational, scalar_inverse, scalar_power
from .spherical import SphericalParams, matrix_coefficient_scalar, verify_eigen_generator, verify_eigen_pi
from .tensor import PlaceOperator, ev, t_operator
from .weyl import (
    AffinePermutation,
    EnumerationCapExceeded,
    ExtendedWeylElement,
    all_reduced_words,
    enumerate_by_length,
    generator,
    multiply,
)

__all__ = ["main", "build_parser", "run"]

DEFAULT_SEED = 12345
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckezonal",
        description="Exact verification suites for affine Hecke algebra identities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, default=3, help="rank (number of tensor places)")
    common.add_argument("--f", type=int, default=1, help="block size parameter")
    common.add_argument("--q0", type=int, default=2, help="residue size, at least 2")
    common.add_argument("--L", type=int, default=8, help="length truncation")
    common.add_argument("--chi-pi", default="1", help="rational unit value for chi(pi)")
    common.add_argument(
        "--output", choices=("json", "csv", "text"), default="json", help="report format"
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    common.add_argument("--samples", type=int, default=25, help="number of sampled checks")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("presentation", parents=[common], help="defining relations of the algebra")
    sub.add_parser("eigen", parents=[common], help="truncated eigen-equation of the spherical vector")
    sub.add_parser("coefficient", parents=[common], help="operator model vs closed coefficient form")
    sub.add_parser("growth", parents=[common], help="BFS growth counts vs closed-form series")
    poincare = sub.add_parser("poincare", parents=[common], help="exact Poincare series values")
    poincare.add_argument(
        "--points",
        default=None,
        help="comma-separated rationals in (-1,1); default scans -1/q0**f grids",
    )
    dist = sub.add_parser("distinction", parents=[common], help="truncated double-coset sum")
    dist.add_argument(
        "--expect-closed-form",
        default=None,
        help="optional rational the closed form must equal (for CI pinning)",
    )
    sub.add_parser("gelfand", parents=[common], help="shipped finite pairing examples")
    sub.add_parser("all", parents=[common], help="run every suite with the given parameters")
    return parser


def _validate(args) -> None:
    if args.e < 2:
        raise UsageError("--e must be at least 2")
    if args.f < 1:
        raise UsageError("--f must be at least 1")
    if args.q0 < 2:
        raise UsageError("--q0 must be at least 2")
    if args.L < 0:
        raise UsageError("--L must be nonnegative")
    if args.samples < 0:
        raise UsageError("--samples must be nonnegative")
    try:
        parse_rational(args.chi_pi)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--chi-pi: {exc}") from exc
    if args.command == "distinction" and args.e % 2 == 0:
        raise UsageError("distinction requires odd --e")


def _random_element(e: int, rng: random.Random, max_len: int = 4) -> ExtendedWeylElement:
    w = ExtendedWeylElement.identity(e)
    for _ in range(rng.randrange(0, max_len + 1)):
        w = multiply(generator(e, rng.randrange(e)), w)
    shift = ExtendedWeylElement(rng.randrange(-1, 2), AffinePermutation.identity(e))
    return multiply(shift, w)


def cmd_presentation(args) -> tuple[int, dict]:
    report = verify_presentation(args.e)
    rng = random.Random(args.seed)
    algebra = HeckeAlgebra(args.e, LaurentPoly.variable("q1"))
    assoc_ok = True
    for _ in range(args.samples):
        h = [
            algebra.basis(_random_element(args.e, rng)) + algebra.basis(_random_element(args.e, rng))
            for _ in range(3)
        ]
        if (h[0] * h[1]) * h[2] != h[0] * (h[1] * h[2]):
            assoc_ok = False
    out = report.to_json()
    out["associativity_samples"] = args.samples
    out["associativity_ok"] = assoc_ok
    out["seed"] = args.seed
    ok = report.ok and assoc_ok
    out["ok"] = ok
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), out


def cmd_eigen(args) -> tuple[int, dict]:
    chi_pi = parse_rational(args.chi_pi)
    if chi_pi == 0:
        raise UsageError("--chi-pi must be a unit")
    p = SphericalParams.generic(args.e, chi_pi=chi_pi)
    reports = [verify_eigen_generator(i, args.L, p) for i in range(args.e)]
    reports.append(verify_eigen_pi(args.L, p, K=2))
    ok = all(r.ok for r in reports)
    out = {
        "e": args.e,
        "L": args.L,
        "chi_pi": format_rational(chi_pi),
        "mode": "generic-q1",
        "reports": [r.to_json() for r in reports],
        "ok": ok,
    }
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), out


def cmd_coefficient(args) -> tuple[int, dict]:
    p = SphericalParams.numeric(args.e, args.f, args.q0)
    neg_inv_q1 = -scalar_inverse(p.q1)
    layers = enumerate_by_length(args.e, args.L)
    checked = mismatches = 0
    for ell, layer in enumerate(layers):
        for w0 in layer:
            closed = matrix_coefficient_scalar(w0, 0, p)
            for k in range(args.e):
                operator = ev(ExtendedWeylElement(k, w0), p)
                checked += 1
                if scalar_power(neg_inv_q1, ell) * operator.scale != closed:
                    mismatches += 1
                if matrix_coefficient_scalar(w0, k, p) != closed:
                    mismatches += 1
    word_limit = min(args.L, 6)
    word_ok = True
    words_checked = 0
    for layer in enumerate_by_length(args.e, word_limit):
        for w0 in layer:
            perms = set()
            for word in all_reduced_words(w0):
                op = PlaceOperator.identity(args.e)
                for idx in word:
                    op = op.compose(t_operator(idx, args.e))
                perms.add(op.perm)
            words_checked += 1
            if len(perms) != 1:
                word_ok = False
    rng = random.Random(args.seed)
    sampled_ok = True
    for _ in range(args.samples):
        w = _random_element(args.e, rng)
        k2 = rng.randrange(-args.e, args.e + 1)
        shifted = ExtendedWeylElement(w.k + k2, w.w0)
        if ev(w, p).scale != ev(shifted, p).scale:
            sampled_ok = False
    ok = mismatches == 0 and word_ok and sampled_ok
    out = {
        "e": args.e,
        "f": args.f,
        "q0": args.q0,
        "L": args.L,
        "checked": checked,
        "mismatches": mismatches,
        "reduced_word_independence": {"elements": words_checked, "ok": word_ok},
        "sampled_k_invariance_ok": sampled_ok,
        "seed": args.seed,
        "ok": ok,
    }
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), out


def growth_rows(e: int, L: int) -> list[dict]:
    bfs = dst.growth_bfs(e, L)
    closed = dst.growth_closed_form(e, L)
    return [
        {
            "length": ell,
            "count_bfs": bfs.counts[ell],
            "count_closed_form": closed.counts[ell],
            "equal": bfs.counts[ell] == closed.counts[ell],
        }
        for ell in range(L + 1)
    ]


def cmd_growth(args) -> tuple[int, dict]:
    rows = growth_rows(args.e, args.L)
    ok = all(r["equal"] for r in rows)
    out = {"e": args.e, "L": args.L, "rows": rows, "ok": ok}
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), out


def _poincare_points(args) -> list[Fraction]:
    if getattr(args, "points", None):
        return [parse_rational(tok) for tok in args.points.split(",")]
    points = [Fraction(0)]
    for q0 in (2, 3, 4, 5):
        for f in (1, 2):
            points.append(Fraction(-1, q0**f))
    return sorted(set(points))


def cmd_poincare(args) -> tuple[int, dict]:
    points = _poincare_points(args)
    for x in points:
        if not -1 < x < 1:
            raise UsageError(f"sample point {x} outside (-1, 1)")
    report = dst.nonvanishing_scan(args.e, points)
    ok = report["all_positive"]
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), report


def cmd_distinction(args) -> tuple[int, dict]:
    report = dst.distinction_integral(args.e, args.f, args.q0, args.L)
    out = report.to_json()
    ok = report.per_term_ok and report.abs_error <= report.tail_bound
    expect = getattr(args, "expect_closed_form", None)
    if expect is not None:
        expected = parse_rational(expect)
        out["expected_closed_form"] = format_rational(expected)
        if report.closed_form != expected:
            ok = False
    out["ok"] = ok
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), out


def cmd_gelfand(args) -> tuple[int, dict]:
    results = []
    ok = True
    for item in gf.load_catalog():
        rep = item["rep"]
        rep.validate_closure()
        report = gf.check_pairing(rep, item["subgroup"])
        expected = item["expected"]
        nonzero = report.pairing is not None and report.pairing != 0
        entry_ok = (
            report.dim_fixed == expected["dim_fixed"]
            and report.dim_fixed_dual == expected["dim_fixed_dual"]
            and nonzero == expected["nonzero_pairing"]
            and gf.is_irreducible(rep)
        )
        ok = ok and entry_ok
        entry = {"name": item["name"], "ok": entry_ok}
        entry.update(report.to_json())
        results.append(entry)
    out = {"examples": results, "ok": ok}
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), out


def cmd_all(args) -> tuple[int, dict]:
    sections = {}
    worst = EXIT_OK
    for name, fn in (
        ("presentation", cmd_presentation),
        ("eigen", cmd_eigen),
        ("coefficient", cmd_coefficient),
        ("growth", cmd_growth),
        ("poincare", cmd_poincare),
        ("gelfand", cmd_gelfand),
    ):
        code, report = fn(args)
        sections[name] = report
        worst = max(worst, code)
    if args.e % 2 == 1:
        code, report = cmd_distinction(args)
        sections["distinction"] = report
        worst = max(worst, code)
    sections["ok"] = worst == EXIT_OK
    return worst, sections


COMMANDS = {
    "presentation": cmd_presentation,
    "eigen": cmd_eigen,
    "coefficient": cmd_coefficient,
    "growth": cmd_growth,
    "poincare": cmd_poincare,
    "distinction": cmd_distinction,
    "gelfand": cmd_gelfand,
    "all": cmd_all,
}


def _emit_csv(command: str, report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if command == "growth":
        writer.writerow(["length", "count_bfs", "count_closed_form", "equal"])
        for row in report["rows"]:
            writer.writerow(
                [row["length"], row["count_bfs"], row["count_closed_form"], row["equal"]]
            )
    else:
        writer.writerow(["key", "value"])
        for key in sorted(report):
            value = report[key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            writer.writerow([key, value])
    return buf.getvalue()


def _emit_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_emit_text(value, indent + 1))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: {json.dumps(value, sort_keys=True)}")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def emit(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _emit_csv(command, report)
    return _emit_text(report) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        code, report = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(emit(args.command, report, args.output))
    return code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

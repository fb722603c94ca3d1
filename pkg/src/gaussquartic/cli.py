"""Command-line interface.

    gaussquartic solve --epsilon +1 --c i [--assume-rank-zero] [--format json]
    gaussquartic torsion --a -1 --b 0 [--bound N] [--format json]
    gaussquartic factor 2 [--format json]
    gaussquartic search --a 0 --b -4 --height 30 [--format json]

Exit status: 0 success, 2 argument/parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .curve import Curve, Point, SingularCurveError
from .gaussian import GaussianInt, factor, parse_gaussian
from .quartic import (
    QuarticProblem,
    RankCertificate,
    RankCertificateError,
    bounded_point_search,
    classify,
    default_certificate,
    reduce_to_curve,
)
from .torsion import StructureError, torsion_subgroup

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

# Options whose values may start with "-" (e.g. "-i", "-1+i"); argparse
# would otherwise read them as flags.
_VALUE_OPTIONS = {"--epsilon", "--c", "--a", "--b", "--bound", "--height"}


class DomainError(Exception):
    pass


def _gaussian_arg(text: str) -> GaussianInt:
    try:
        return parse_gaussian(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _unit_arg(text: str) -> GaussianInt:
    g = _gaussian_arg(text)
    if not g.is_unit():
        raise argparse.ArgumentTypeError(f"{text!r} is not a unit of Z[i]")
    return g


def _epsilon_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value not in (1, -1):
        raise argparse.ArgumentTypeError(f"epsilon must be +1 or -1, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussquartic",
        description="Torsion over Q(i) and the quartics x^4 +- y^4 = c*z^2 in Z[i].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", help="classify the solutions of x^4 + eps*y^4 = c*z^2")
    p.add_argument("--epsilon", type=_epsilon_arg, required=True)
    p.add_argument("--c", type=_unit_arg, required=True, help="a unit: 1, -1, i or -i")
    p.add_argument(
        "--assume-rank-zero",
        action="store_true",
        help="accept rank 0 of the reduced curve when no published computation covers it",
    )
    fmt(p)

    p = sub.add_parser("torsion", help="torsion subgroup of y^2 = x^3 + A*x + B over Q(i)")
    p.add_argument("--a", type=_gaussian_arg, required=True)
    p.add_argument("--b", type=_gaussian_arg, required=True)
    p.add_argument("--bound", type=_positive_int, default=None, help="order search bound")
    fmt(p)

    p = sub.add_parser("factor", help="factor a Gaussian integer")
    p.add_argument("value", type=_gaussian_arg)
    fmt(p)

    p = sub.add_parser("search", help="heuristic bounded-height search for points")
    p.add_argument("--a", type=_gaussian_arg, required=True)
    p.add_argument("--b", type=_gaussian_arg, required=True)
    p.add_argument("--height", type=_positive_int, required=True)
    fmt(p)
    return parser


def _protect_values(argv: Sequence[str]) -> list[str]:
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    # a lone negative literal for `factor`
    if len(out) >= 2 and out[0] == "factor" and out[1].startswith("-") and out[1] != "--":
        try:
            parse_gaussian(out[1])
        except ValueError:
            pass
        else:
            out.insert(1, "--")
    return out


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _unique_x(points) -> list[str]:
    xs = {P.x for P in points}
    return [str(x) for x in sorted(xs, key=lambda x: x.sort_key())]


def _run_solve(args) -> str:
    problem = QuarticProblem(args.epsilon, args.c)
    curve, _ = reduce_to_curve(problem)
    cert = default_certificate(curve)
    if cert is RankCertificate.ABSENT:
        if not args.assume_rank_zero:
            raise DomainError(
                f"{curve} has no published rank computation; rerun with --assume-rank-zero"
            )
        cert = RankCertificate.CALLER_SUPPLIED
    result = classify(problem, cert)
    if args.format == "json":
        return _dump(result.to_json())
    sub = result.substitution
    lines = [
        f"equation: {problem}",
        f"reduced curve: {result.curve}  (r = ({sub.u_r})*b, s*t = ({sub.u_a})*a)",
        f"torsion: {result.torsion.structure}, {len(result.torsion.points)} points, "
        f"b in {{{', '.join(_unique_x(result.torsion.affine_points))}}}",
        f"rank certificate: {cert.value} (rank 0)",
    ]
    if result.only_trivial:
        lines.append("outcome: only trivial solutions (xyz = 0) in Z[i]")
    else:
        lines.append(
            f"outcome: {len(result.primitive_solutions)} primitive nontrivial solutions "
            f"in {len(result.families)} families"
        )
        zs = sorted({str(z) for _, _, z in result.primitive_solutions})
        lines.append(f"  z in {{{', '.join(zs)}}}")
        for fam in result.families:
            lines.append(f"  family x/y = +-({fam.s}), z/y^2 = +-({fam.t}):")
            for x, y, z in fam.primitive_solutions:
                lines.append(f"    (x, y, z) = ({x}, {y}, {z})")
    lines.append(f"over Q(i): {result.qi_statement()}")
    return "\n".join(lines)


def _run_torsion(args) -> tuple[str, Optional[str]]:
    curve = Curve(args.a, args.b)
    warning = None
    if not curve.has_rational_coefficients():
        warning = "coefficients are not rational; the order bound 12 is not justified for this curve"
        if args.bound is None:
            raise DomainError(warning + "; pass --bound explicitly")
        warning = "warning: " + warning
    group = torsion_subgroup(curve, args.bound)
    if args.format == "json":
        return _dump(group.to_json()), warning
    pts = group.points
    lines = [
        f"curve: {curve}",
        f"4A^3 + 27B^2 = {curve.discriminant_quantity()}",
        f"candidates: {group.candidate_count}",
        f"torsion: {group.structure}, {len(pts)} points",
        *(f"  {P}  order {curve.point_order(P, len(pts))}" for P in pts),
    ]
    return "\n".join(lines), warning


def _run_factor(args) -> str:
    if args.value.is_zero():
        raise DomainError("cannot factor zero")
    try:
        fac = factor(args.value)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.format == "json":
        return _dump({
            "value": args.value.to_json(),
            "unit": fac.unit.to_json(),
            "factors": [{"prime": p.to_json(), "exponent": e} for p, e in fac.factors],
            "text": str(fac),
        })
    return str(fac)


def _run_search(args) -> str:
    curve = Curve(args.a, args.b)
    points = sorted(bounded_point_search(curve, args.height), key=Point.sort_key)
    bound = 12 if curve.has_rational_coefficients() else None
    rows = []
    for P in points:
        order = curve.point_order(P, bound) if bound else None
        rows.append((P, order))
    if args.format == "json":
        return _dump({
            "curve": curve.to_json(),
            "height_bound": args.height,
            "heuristic": True,
            "points": [
                {"point": P.to_json(), "text": str(P), "order": order} for P, order in rows
            ],
        })
    lines = [
        f"curve: {curve}",
        f"height bound: {args.height} (heuristic: cannot certify rank 0)",
        f"affine points found: {len(rows)}",
    ]
    for P, order in rows:
        tag = f"order {order}" if order else "non-torsion" if bound else "order unknown"
        lines.append(f"  {P}  {tag}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "solve":
            out = _run_solve(args)
        elif args.command == "torsion":
            out, warning = _run_torsion(args)
            if warning:
                print(warning, file=sys.stderr)
        elif args.command == "factor":
            out = _run_factor(args)
        else:
            out = _run_search(args)
    except (DomainError, SingularCurveError, RankCertificateError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

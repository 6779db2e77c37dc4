"""Command-line front end: basis generation, reduction, verification,
immersion checks.  All output is deterministic for fixed arguments."""

from __future__ import annotations

import argparse
import json
import sys

from .buchberger_oracle import (
    DEFAULT_CAP,
    OracleCapExceeded,
    oracle_equals_family,
)
from .cohomology import normal_form, standard_basis
from .dual_classes import wbar_recurrence
from .f2poly import ParseError, Poly, format_poly, grlex_key, parse
from .groebner_family import GrassmannContext, GroebnerFamily, build_family
from .steenrod import immersion_obstruction_check

__all__ = ["run", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassgb",
        description="Groebner-basis computations in the mod-2 cohomology "
        "of real Grassmann manifolds.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("generate", help="print the reduced Groebner basis")
    gen.add_argument("-k", type=int, required=True)
    gen.add_argument("-n", type=int, required=True)
    gen.add_argument("--format", choices=("text", "json"), default="text")
    gen.add_argument(
        "--only-m",
        metavar="M2,...,MK",
        help="restrict output to the element with this multi-index",
    )

    red = sub.add_parser("reduce", help="normal form of a polynomial")
    red.add_argument("-k", type=int, required=True)
    red.add_argument("-n", type=int, required=True)
    red.add_argument("poly", help="polynomial text, e.g. 'w1^2*w2 + w2^2'")

    dual = sub.add_parser("dual", help="print a dual Stiefel-Whitney class")
    dual.add_argument("-k", type=int, required=True)
    dual.add_argument("-r", type=int, required=True)

    ver = sub.add_parser("verify", help="compare the family with the oracle")
    ver.add_argument("-k", type=int, required=True)
    ver.add_argument("-n", type=int, required=True)
    ver.add_argument("--cap", type=int, default=DEFAULT_CAP)

    imm = sub.add_parser("immersion-check", help="run the obstruction checks")
    imm.add_argument("-n", type=int, required=True)

    bas = sub.add_parser("basis", help="list the standard monomials")
    bas.add_argument("-k", type=int, required=True)
    bas.add_argument("-n", type=int, required=True)

    return parser


def _context(args) -> GrassmannContext:
    return GrassmannContext(args.k, args.n)


def _family_records(family: GroebnerFamily, only_m=None):
    indices = [only_m] if only_m is not None else family.multi_indices()
    for m in indices:
        g = family.element(m)
        ordered = sorted(g.terms, key=grlex_key, reverse=True)
        yield m, g, ordered


def _cmd_generate(args) -> int:
    ctx = _context(args)
    only_m = None
    if args.only_m is not None:
        only_m = tuple(int(x) for x in args.only_m.split(","))
        if len(only_m) != ctx.k - 1 or any(x < 0 for x in only_m):
            raise ValueError(f"--only-m needs {ctx.k - 1} nonnegative entries")
        if sum(only_m) > ctx.n + 1:
            raise ValueError("--only-m index has entry sum above n+1")
    family = GroebnerFamily(ctx) if only_m is not None else build_family(ctx)
    if args.format == "json":
        records = [
            {
                "M": list(m),
                "lt": list(family.leading_term(m)),
                "poly": [list(t) for t in ordered],
            }
            for m, _, ordered in _family_records(family, only_m)
        ]
        print(json.dumps(records, indent=2))
    else:
        for m, g, _ in _family_records(family, only_m):
            label = ",".join(str(x) for x in m)
            print(f"g[{label}] = {format_poly(g)}")
    return 0


def _cmd_reduce(args) -> int:
    ctx = _context(args)
    f = parse(args.poly, ctx.k)
    print(format_poly(normal_form(ctx, f).value))
    return 0


def _cmd_dual(args) -> int:
    if args.r < 1:
        raise ValueError("-r must be >= 1")
    print(format_poly(wbar_recurrence(args.r, args.k)))
    return 0


def _cmd_verify(args) -> int:
    ctx = _context(args)
    if oracle_equals_family(ctx, cap=args.cap):
        count = len(build_family(ctx))
        print(f"OK: reduced Groebner basis matches oracle ({count} elements)")
        return 0
    print(f"MISMATCH: family and oracle disagree for k={args.k}, n={args.n}")
    return 1


def _cmd_immersion_check(args) -> int:
    report = immersion_obstruction_check(args.n)
    n = args.n
    print(f"n: {n}")
    print(f"Sq1(w4*w5^{n - 1}) = {report.sq1_value}")
    print(f"(Sq2 + w1^2 + w2)(w2*w5^{n - 1}) = {report.k1_obstruction_value}")
    print(f"lift_possible: {'yes' if report.lift_possible else 'no'}")
    return 0


def _cmd_basis(args) -> int:
    ctx = _context(args)
    monos = standard_basis(ctx)
    for m in monos:
        print(format_poly(Poly.monomial(m)))
    print(f"count: {len(monos)}")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "reduce": _cmd_reduce,
    "dual": _cmd_dual,
    "verify": _cmd_verify,
    "immersion-check": _cmd_immersion_check,
    "basis": _cmd_basis,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.subcommand](args)
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

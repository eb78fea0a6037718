"""Command line interface.

Usage::

    ginkit report ideal.txt --order lex --format json
    ginkit gin ideal.txt --seed 7 --trials 5
    cat ideal.txt | ginkit reduction

Exit codes: 0 success, 1 computation error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .betti import ek_betti, extremal_betti
from .errors import GinkitError, ParseError
from .gin import DEFAULT_BOUND, DEFAULT_TRIALS, check_homogeneous, gin
from .groebner import reduced_groebner_basis
from .monomial_ideal import krull_dimension
from .poly import TermOrder
from .reduction import bh_reduction, reduction_number
from .report import DEFAULT_MAX_DEGREE, ReportConfig, invariant_report, monomial_input

INVARIANT_FIELDS = (
    "ring", "order", "seed", "trials", "gin", "dimension", "delta", "reg_profile", "astar_profile",
    "reg", "astar", "reg_ideal", "routes", "routes_agree", "notes", "timings",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="ideal file (default: standard input)")
    common.add_argument("--order", choices=[o.value for o in TermOrder], default="degrevlex")
    common.add_argument("--char", type=int, default=None, help="override the characteristic declared in the file")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--coeff-bound", type=int, default=DEFAULT_BOUND)
    common.add_argument("--no-gin", action="store_true", help="treat the (monomial) input as the gin")
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="degree bound for oracle checks")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in the output")

    parser = argparse.ArgumentParser(prog="ginkit", description="Groebner bases, gin, regularity profiles and reduction numbers.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    sub.add_parser("in", parents=[common], help="initial ideal")
    sub.add_parser("gin", parents=[common], help="generic initial ideal")
    sub.add_parser("invariants", parents=[common], help="reg_t and a*_t profiles by every route")
    sub.add_parser("betti", parents=[common], help="Eliahou-Kervaire Betti table of the gin")
    sub.add_parser("reduction", parents=[common], help="reduction number of S/I")
    rep = sub.add_parser("report", parents=[common], help="full pipeline")
    rep.add_argument("--figures", metavar="DIR", default=None, help="write report figures (PNG) into DIR")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _config(args) -> ReportConfig:
    return ReportConfig(
        order=TermOrder.parse(args.order),
        trials=args.trials,
        seed=args.seed,
        bound=args.coeff_bound,
        use_gin=not args.no_gin,
        max_degree=args.max_degree,
    )


def _monomial_side(args, polys):
    if args.no_gin:
        return monomial_input(polys), None
    res = gin(polys, args.order, args.trials, args.seed, args.coeff_bound)
    return res.gin, res


def _run(args) -> str:
    ring, polys = io.parse_ideal(_read(args.input), args.char)
    if not polys:
        raise ValueError("the ideal file lists no polynomials")
    order = TermOrder.parse(args.order)
    fmt = args.format
    base = {"ring": io.ring_dict(ring), "order": order.value}

    if args.command == "gb":
        G = reduced_groebner_basis(polys, order)
        data = dict(base, basis=[g.to_string(order) for g in G])
        text = "\n".join(data["basis"]) + "\n"
    elif args.command == "in":
        J = reduced_groebner_basis(polys, order).initial_ideal()
        data = dict(base, initial_ideal=J.to_strings())
        text = f"{J}\n"
    elif args.command == "gin":
        res = gin(polys, order, args.trials, args.seed, args.coeff_bound)
        data = dict(
            base,
            seed=args.seed,
            trials=args.trials,
            coeff_bound=args.coeff_bound,
            gin=res.gin.to_strings(),
            agreement=res.agreement,
            borel_fixed=res.borel_fixed,
            seeds_used=list(res.seeds_used),
            matrices=[list(map(list, g)) for g in res.matrices],
        )
        text = f"{res.gin}\n"
    elif args.command == "report":
        rep = invariant_report(polys, _config(args))
        if args.figures:
            from .plots import write_report_figures

            write_report_figures(rep, args.figures)
        return io.render_report(rep, fmt, args.timings)
    elif args.command == "invariants":
        rep = invariant_report(polys, _config(args))
        full = io.report_dict(rep, args.timings)
        data = {k: full[k] for k in INVARIANT_FIELDS if k in full}
        text = io.render_report(rep, "text", args.timings)
    elif args.command == "betti":
        J, _ = _monomial_side(args, polys)
        table = ek_betti(J).quotient()
        ext = extremal_betti(table)
        data = dict(
            base,
            gin=J.to_strings(),
            betti={"subject": "S/J", "entries": [list(e) for e in table.entries()], "b": list(table.b_sequence)},
            extremal_betti=[list(e) for e in ext],
        )
        data = io.jsonable(data)
        text = (
            f"ideal    : {J}\n"
            + "".join(f"beta_{i},{j} = {v}\n" for i, j, v in table.entries())
            + "extremal : " + ", ".join(f"beta_{l},{l + m}={v}" for l, m, v in ext) + "\n"
        )
    elif args.command == "reduction":
        if args.no_gin:
            J = monomial_input(polys)
            res = bh_reduction(J, krull_dimension(J))
        else:
            check_homogeneous(polys)
            res = reduction_number(polys, args.trials, args.seed, args.coeff_bound)
        return io.render_report(res, fmt)
    else:  # pragma: no cover - argparse enforces the choices
        raise ValueError(args.command)

    return io.to_json(io.jsonable(data)) if fmt == "json" else text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _run(args)
    except ParseError as exc:
        if args.format == "json":
            sys.stdout.write(io.to_json(exc.to_dict()))
        print(f"ginkit: {exc}", file=sys.stderr)
        return 2
    except GinkitError as exc:
        if args.format == "json":
            sys.stdout.write(io.to_json(exc.to_dict()))
        print(f"ginkit: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"ginkit: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Batch verification and exploratory evaluation from the command line.

Subcommands run a named claim suite and emit a deterministic report (text,
json, or latex).  Exit status: 0 when every claim passes, 1 when any claim
fails, 2 on configuration or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exterior, verify
from .coord import coord_algebra
from .fodc import catalog
from .freealg import ParseError, parse_expression, render
from .qea import uq_algebra
from .scalars import PowerBasis, ScalarError

REPORT_SCHEMA = "slqcalc-report/1"


def emit(report, fmt):
    """Serialize a report deterministically."""
    if fmt == "json":
        return json.dumps(report, indent=1, sort_keys=True) + "\n"
    lines = []
    if fmt == "latex":
        lines.append(r"\begin{tabular}{lll}")
        lines.append(r"claim & status & mode \\\hline")
        for c in report["claims"]:
            lines.append(
                "%s & %s & %s \\\\"
                % (c["id"].replace("_", r"\_"), c["status"], c["mode"])
            )
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    for c in report["claims"]:
        detail = (" -- " + c["detail"]) if c.get("detail") else ""
        lines.append("[%s] %-55s (%s)%s" % (c["status"].upper(), c["id"], c["mode"], detail))
    lines.append(
        "%d claims, %d failed"
        % (len(report["claims"]), sum(1 for c in report["claims"] if c["status"] != "pass"))
    )
    return "\n".join(lines) + "\n"


def _finish(claims, args):
    report = {"schema": REPORT_SCHEMA, "command": args.command, "claims": claims}
    text = emit(report, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c["status"] == "pass" for c in claims) else 1


def _sl3_args(args):
    pb = PowerBasis(args.q_power)
    if args.gamma is not None:
        return 1 if args.gamma == 1 else 2, None, None
    if args.alpha is None or args.beta is None:
        raise SystemExit2("verify-sl3 needs --gamma or both --alpha and --beta")
    return None, pb.parse(args.alpha), pb.parse(args.beta)


class SystemExit2(Exception):
    pass


def main(argv=None):
    ap = argparse.ArgumentParser(prog="slqcalc", description=__doc__)
    ap.add_argument("--format", choices=("text", "json", "latex"), default="text")
    ap.add_argument("--output", default=None, help="write the report to a file")
    ap.add_argument("--q-power", type=int, default=2, metavar="L",
                    help="realize q = v^L (default 2; L-functionals need 2N | L)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-sl2", help="the four three-dimensional calculi")
    p.add_argument("--r", type=int, choices=(1, 2, 3, 4), default=None)

    p = sub.add_parser("verify-sl3", help="the two-parameter family on SL_q(3)")
    p.add_argument("--gamma", type=int, choices=(1, 2), default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--dims", action="store_true", help="print graded dimensions only")

    p = sub.add_parser("verify-sln", help="the L-functional calculi on SL_q(N)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, choices=(1, 2), required=True)
    p.add_argument("--degree", type=int, default=3,
                   help="evidential verification degree (default 3)")

    p = sub.add_parser("exterior", help="closure, quadratic system and dimensions")
    p.add_argument("--calculus", required=True,
                   help="sl2:r<k> or sl3:g<k>, e.g. sl2:r1")

    p = sub.add_parser("sigma", help="the quadratic-relations involution on SL_q(3)")
    p.add_argument("--gamma", type=int, choices=(1, 2), required=True)

    p = sub.add_parser("dims", help="graded dimensions of a catalog calculus")
    p.add_argument("--calculus", required=True)
    p.add_argument("--n-max", type=int, default=None)

    sub.add_parser("limits", help="classical limits at v = 1")

    p = sub.add_parser("eval", help="normalize an expression in a coordinate algebra")
    p.add_argument("--algebra", choices=("sl2", "sl3"), required=True)
    p.add_argument("expression")

    p = sub.add_parser("two-form", help="mixed two-form membership reports")
    p.add_argument("--r", type=int, choices=(2, 3, 4), default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--specialize", default=None, metavar="V0",
                   help="exact rational specialization point for v")

    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None):
            raise SystemExit(2)
        raise

    try:
        return _dispatch(args)
    except (ParseError, ScalarError, SystemExit2, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


def _parse_calculus(spec, L):
    kind, _, param = spec.partition(":")
    if kind == "sl2" and param.startswith("r"):
        return catalog("sl2", r=int(param[1:]), L=L)
    if kind == "sl3" and param.startswith("g"):
        pb = PowerBasis(L)
        a, b = (pb.q(-1), pb.q(1)) if param == "g1" else (pb.q(1), pb.q(-1))
        return catalog("sl3", alpha=a, beta=b, L=L)
    raise SystemExit2("unknown calculus %r" % spec)


def _dispatch(args):
    if args.command == "verify-sl2":
        cats = {s: catalog("sl2", r=s, L=args.q_power) for s in (1, 2, 3, 4)}
        rs = (args.r,) if args.r else (1, 2, 3, 4)
        claims = []
        for r in rs:
            claims += verify.verify_sl2(r, cats)
        claims += verify.verify_sl2_displays(cats)
        return _finish(claims, args)

    if args.command == "verify-sl3":
        gamma, alpha, beta = _sl3_args(args)
        if gamma is None:
            claims = verify.verify_lemma4([(alpha, beta)], args.q_power)
            return _finish(claims, args)
        if args.dims:
            C = verify._sl3_catalog(gamma, L=args.q_power)
            C.lemma1_check()
            dd = exterior.dims(C)
            sys.stdout.write(" ".join(str(x) for x in dd if x) + "\n")
            return 0
        claims = verify.verify_sl3(gamma)
        return _finish(claims, args)

    if args.command == "verify-sln":
        L = args.q_power if args.q_power % (2 * args.n) == 0 else 2 * args.n
        C = catalog("sln", N=args.n, r=args.r, L=L)
        claims = verify.verify_sln(args.n, args.r, degree=args.degree, C=C)
        return _finish(claims, args)

    if args.command == "exterior":
        C = _parse_calculus(args.calculus, args.q_power)
        C.lemma1_check()
        sym = exterior.closure(C)
        es = exterior.exterior_system(C, sym)
        dd = exterior.dims(C, None, es)
        claims = [
            verify.claim("%s.closure-dim" % args.calculus, True, detail=str(sym.dim())),
            verify.claim("%s.rules" % args.calculus, True, detail=str(len(es[0]))),
            verify.claim("%s.dims" % args.calculus, True, detail=str(dd)),
        ]
        return _finish(claims, args)

    if args.command == "sigma":
        C = verify._sl3_catalog(args.gamma, L=args.q_power)
        C.lemma1_check()
        sym = exterior.closure(C)
        sg = exterior.sigma(C, sym)
        claims = [
            verify.claim("sigma.g%d.involution" % args.gamma, sg.is_involution()),
            verify.claim(
                "sigma.g%d.ranks" % args.gamma,
                sg.rank_minus_id(-1) == 28 and sg.rank_minus_id(+1) == 36,
                detail="rank(sigma-id)=%d rank(sigma+id)=%d"
                % (sg.rank_minus_id(-1), sg.rank_minus_id(+1)),
            ),
        ]
        return _finish(claims, args)

    if args.command == "dims":
        C = _parse_calculus(args.calculus, args.q_power)
        C.lemma1_check()
        dd = exterior.dims(C, args.n_max)
        sys.stdout.write(" ".join(str(x) for x in dd) + "\n")
        return 0

    if args.command == "limits":
        claims = verify.verify_limits()
        return _finish(claims, args)

    if args.command == "eval":
        L = args.q_power
        pb = PowerBasis(L)
        coord = coord_algebra(2 if args.algebra == "sl2" else 3, L)
        p = parse_expression(args.expression, coord.alphabet, pb, coord.aliases)
        nf = coord.nf(p)
        names = coord.alphabet.names
        if args.algebra == "sl2":
            names = ("a", "b", "c", "d")
        sys.stdout.write(render(nf, pb, names) + "\n")
        return 0

    if args.command == "two-form":
        pb = PowerBasis(args.q_power)
        v0 = Fraction(args.specialize) if args.specialize else None
        if args.r is not None:
            rep = exterior.lemma3_report(args.r, v0=v0, L=args.q_power)
            sys.stdout.write(json.dumps(rep, indent=1, sort_keys=True) + "\n")
            return 0 if not rep.get("refused") else 2
        if args.alpha is None or args.beta is None:
            raise SystemExit2("two-form needs --r or both --alpha and --beta")
        rep = exterior.lemma4_report(pb.parse(args.alpha), pb.parse(args.beta), args.q_power)
        sys.stdout.write(json.dumps(rep, indent=1, sort_keys=True) + "\n")
        return 0

    raise SystemExit2("unhandled command %r" % args.command)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: verify-35, verify-51, verify-37, groebner, semigroup, reduction,
koszul, analyze.  Global flags --json PATH (write the full report as JSON)
and --expect VERDICT (exit 0 only when the overall verdict matches).  Usage
errors exit 2; inconclusive computations exit 3.
"""
from __future__ import annotations

import argparse
import sys

from .fields import QQ, field_from_name
from .groebner import Ideal
from .parse import ParseError, infer_ring, parse_generator_list, parse_polynomial
from .patterns import InconclusiveError
from .pipelines import (
    PipelineError,
    verify_localization,
    verify_no_ulrich,
    verify_ulrich_equivalence,
)
from .report import Check, INFO, VerificationReport
from .semigroup import (
    NOT_FINITE_WITHIN_BOUND,
    AffineSemigroup,
    gap_set,
    hilbert_samuel,
    multiplicity,
)
from .subring import parse_ring_spec
from .reduction import is_reduction
from .sequences import analyze, parse_family_spec
from .koszul import koszul_cyclic, koszul_ideal_module
from .sequences import FreeModule, rep_tally


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--json", metavar="PATH", help="write the JSON report to PATH")
    p.add_argument("--expect", metavar="VERDICT", help="exit 0 only on this verdict")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulrich-forge",
        description="exact verification toolkit for Ulrich-existence certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p35 = sub.add_parser("verify-35", help="no-Ulrich certificate for the plane family")
    p35.add_argument("--n", type=int, required=True)
    p35.add_argument("--field", default="q", help="q or fp:P")
    _add_common(p35)

    p51 = sub.add_parser("verify-51", help="equivalence report for a monomial subring")
    p51.add_argument("--ring", required=True, metavar="FILE", help="ring spec file")
    _add_common(p51)

    p37 = sub.add_parser("verify-37", help="localization pipeline for the space family")
    p37.add_argument("--n", type=int, required=True)
    _add_common(p37)

    pg = sub.add_parser("groebner", help="Groebner basis utilities")
    pg.add_argument("--ideal", required=True)
    pg.add_argument("--nf", help="print the normal form of this polynomial")
    pg.add_argument("--colength", action="store_true")
    pg.add_argument("--equal", help="test ideal equality against this generator list")
    pg.add_argument("--vars", help="comma-separated ambient variables")
    _add_common(pg)

    ps = sub.add_parser("semigroup", help="affine semigroup utilities")
    ps.add_argument("--gens", required=True, help='e.g. "sg 2 {(2,0),(3,0),(1,1)}"')
    ps.add_argument("--gaps", action="store_true")
    ps.add_argument("--bound", type=int, default=24)
    ps.add_argument("--multiplicity", action="store_true")
    ps.add_argument("--hilbert", type=int, metavar="T")
    _add_common(ps)

    pr = sub.add_parser("reduction", help="reduction certificate I inside J")
    pr.add_argument("--ideal", required=True, help="generators of I")
    pr.add_argument("--in", dest="within", required=True, help="generators of J")
    pr.add_argument("--tmax", type=int, default=12)
    pr.add_argument("--vars", help="comma-separated ambient variables")
    _add_common(pr)

    pk = sub.add_parser("koszul", help="Koszul homology tallies")
    pk.add_argument("--module", required=True,
                    help='"cyclic (gens)", "ideal (gens)", or "free R"')
    pk.add_argument("--sop", required=True, help='parameter pair, e.g. "x^2,y^2"')
    pk.add_argument("--vars", help="comma-separated ambient variables")
    _add_common(pk)

    pa = sub.add_parser("analyze", help="asymptotic table for a module family")
    pa.add_argument("--family", required=True)
    pa.add_argument("--range", default="1..12", help="A..B index range")
    _add_common(pa)

    return parser


def _emit(report: VerificationReport, args, default_expect=None) -> int:
    for line in report.text_lines():
        print(line)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    expect = args.expect if args.expect is not None else default_expect
    if report.verdict == "INCONCLUSIVE":
        return 3
    if expect is None:
        return 0
    return 0 if report.verdict == expect else 1


def _simple_report(pipeline: str, inputs: dict, checks: list, verdict: str,
                   field) -> VerificationReport:
    return VerificationReport(pipeline=pipeline, inputs=inputs, checks=checks,
                              verdict=verdict, field_name=field.name)


def _parse_semigroup_spec(spec: str) -> AffineSemigroup:
    body = spec.strip()
    if not body.startswith("sg"):
        raise ValueError('semigroup spec must look like "sg 2 {(2,0),(1,1)}"')
    body = body[2:].strip()
    dim_text, _, rest = body.partition(" ")
    dim = int(dim_text)
    rest = rest.strip().strip("{}")
    gens = []
    for chunk in rest.replace("),", ");").split(";"):
        chunk = chunk.strip().strip("()")
        if not chunk:
            continue
        gens.append(tuple(int(v) for v in chunk.split(",")))
    return AffineSemigroup(dim, tuple(gens))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PipelineError as exc:
        print(f"pipeline aborted: {exc.clause}", file=sys.stderr)
        return 1
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        if exc.table is not None:
            print(f"table: {exc.table}", file=sys.stderr)
        return 3


def _dispatch(args) -> int:
    if args.command == "verify-35":
        report = verify_no_ulrich(args.n, field_from_name(args.field))
        return _emit(report, args, default_expect="NO_ULRICH")

    if args.command == "verify-51":
        with open(args.ring, encoding="utf-8") as fh:
            text = fh.read()
        subring, reduction = parse_ring_spec(text)
        report = verify_ulrich_equivalence(subring, reduction)
        return _emit(report, args)

    if args.command == "verify-37":
        report = verify_localization(args.n)
        default = "NO_ULRICH_AFTER_LOCALIZATION" if args.n >= 2 else None
        return _emit(report, args, default_expect=default)

    if args.command == "groebner":
        ring = infer_ring([args.ideal, args.nf or "", args.equal or ""],
                          variables=tuple(args.vars.split(",")) if args.vars else None)
        ideal = Ideal(parse_generator_list(args.ideal, ring))
        checks = []
        if args.nf:
            nf = ideal.normal_form(parse_polynomial(args.nf, ring))
            verdict = str(nf)
            checks.append(Check("normal form", "normal-form", INFO, str(nf)))
            print(nf)
        elif args.colength:
            c = ideal.colength()
            verdict = str(c)
            checks.append(Check("colength", "standard-monomial-count", INFO, str(c)))
            print(c)
        elif args.equal is not None:
            other = Ideal(parse_generator_list(args.equal, ring))
            verdict = str(ideal.equals(other)).lower()
            checks.append(Check("ideal equality", "mutual-membership", INFO, verdict))
            print(verdict)
        else:
            gb = [str(g) for g in ideal.groebner_basis()]
            verdict = "; ".join(gb)
            checks.append(Check("reduced basis", "groebner-basis", INFO, gb))
            for g in gb:
                print(g)
        report = _simple_report("groebner", {"ideal": args.ideal}, checks, verdict,
                                ring.field)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        if args.expect is not None:
            return 0 if verdict == args.expect else 1
        return 0

    if args.command == "semigroup":
        G = _parse_semigroup_spec(args.gens)
        checks = []
        if args.gaps:
            gaps = gap_set(G, args.bound)
            if gaps is NOT_FINITE_WITHIN_BOUND:
                verdict = "NOT_FINITE_WITHIN_BOUND"
                print(verdict)
            else:
                listed = sorted(gaps)
                verdict = f"gaps={listed} count={len(listed)}"
                print(f"gaps: {listed}")
                print(f"count: {len(listed)}")
            checks.append(Check("gap set", "gap-set-finiteness", INFO, verdict))
        elif args.multiplicity:
            e = multiplicity(G)
            verdict = str(e)
            checks.append(Check("multiplicity", "hilbert-samuel-stabilization", INFO, e))
            print(e)
        elif args.hilbert is not None:
            v = hilbert_samuel(G, args.hilbert)
            verdict = str(v)
            checks.append(Check(f"hilbert-samuel({args.hilbert})",
                                "order-filtration-count", INFO, v))
            print(v)
        else:
            verdict = repr(G)
            print(verdict)
        report = _simple_report("semigroup", {"gens": args.gens}, checks, verdict, QQ)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        if args.expect is not None:
            return 0 if verdict == args.expect else 1
        return 0

    if args.command == "reduction":
        ring = infer_ring([args.ideal, args.within],
                          variables=tuple(args.vars.split(",")) if args.vars else None)
        I = Ideal(parse_generator_list(args.ideal, ring))
        J = Ideal(parse_generator_list(args.within, ring))
        cert = is_reduction(I, J, args.tmax)
        verdict = cert.describe()
        print(verdict)
        report = _simple_report(
            "reduction", {"ideal": args.ideal, "in": args.within},
            [Check("reduction certificate", "reduction-criterion", INFO, verdict)],
            verdict, ring.field)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        if cert.kind == "INCONCLUSIVE":
            return 3
        if args.expect is not None:
            return 0 if verdict == args.expect else 1
        return 0

    if args.command == "koszul":
        spec = args.module.strip()
        kind, _, rest = spec.partition(" ")
        ring = infer_ring([rest if kind != "free" else "", args.sop],
                          variables=tuple(args.vars.split(",")) if args.vars else None)
        f_text, _, g_text = args.sop.partition(",")
        f = parse_polynomial(f_text, ring)
        g = parse_polynomial(g_text, ring)
        if kind == "cyclic":
            tally = koszul_cyclic(f, g, Ideal(parse_generator_list(rest, ring)))
        elif kind == "ideal":
            tally = koszul_ideal_module(f, g, Ideal(parse_generator_list(rest, ring)))
        elif kind == "free":
            tally = rep_tally(FreeModule(int(rest)), (f, g))
        else:
            raise ValueError(f"unknown module spec kind {kind!r}")
        verdict = f"h=({tally.h0},{tally.h1},{tally.h2}) chi={tally.chi} chi1={tally.chi1}"
        print(verdict)
        report = _simple_report(
            "koszul", {"module": args.module, "sop": args.sop},
            [Check("koszul tally", "koszul-homology", INFO,
                   {"h0": tally.h0, "h1": tally.h1, "h2": tally.h2})],
            verdict, ring.field)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        if args.expect is not None:
            return 0 if verdict == args.expect else 1
        return 0

    if args.command == "analyze":
        ring = infer_ring([], variables=("x", "y"))
        a, _, b = args.range.partition("..")
        family = parse_family_spec(args.family, ring, (int(a), int(b)))
        table = analyze(family)
        header = f"{'n':>4} {'nu':>6} {'e':>6} {'h0':>6} {'h1':>6} {'h2':>6} {'chi1':>6}  e/nu     h1/nu"
        print(header)
        for row in table.rows:
            print(f"{row.n:>4} {row.nu:>6} {row.e:>6} {row.h0:>6} {row.h1:>6} "
                  f"{row.h2:>6} {row.chi1:>6}  {row.e_over_nu!s:<8} {row.h1_over_nu!s}")
        if table.formulas:
            for key, value in table.formulas.items():
                print(f"formula {key} = {value}")
        print(f"verdict: {table.verdict} ({'exact' if table.exact else 'finite-index evidence'})")
        checks = [Check("asymptotic classification", "limit-trend-classification", INFO,
                        {"verdict": table.verdict, "exact": table.exact,
                         "formulas": table.formulas})]
        report = _simple_report("analyze", {"family": args.family, "range": args.range},
                                checks, table.verdict, ring.field)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        if table.verdict == "INCONCLUSIVE":
            return 3
        if args.expect is not None:
            return 0 if table.verdict == args.expect else 1
        return 0

    raise ValueError(f"unknown command {args.command}")


if __name__ == "__main__":
    sys.exit(main())

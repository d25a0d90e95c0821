"""Command line front end: build / verify / lift / fedder.

Exit codes: 0 when every check in the produced report passes, 1 when a
check fails, 2 on usage errors or inconsistent flag combinations.
Mathematical findings are report content and never crash the run.  A run
with identical flags (including --seed) produces byte-identical output;
JSON output is the stable machine contract, text output is for humans.

The environment variable SKOSZUL_THREADS caps internal parallelism of
the independent verification checks (default: no parallelism).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .endo import parse_endo
from .errors import (InvariantViolation, NoSolution, NonHomogeneous, NotACycle,
                     SkoszulError)
from .fedder import fedder_piece, generation_check
from .fields import parse_field
from .monomial import MonomialIdeal
from .phikoszul import PhiKoszulComplex
from .poly import parse_poly, used_variable_count
from .reporting import Report


def thread_cap() -> int:
    raw = os.environ.get("SKOSZUL_THREADS", "")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skoszul",
        description="Exact computations with twisted Koszul complexes over "
                    "skew polynomial rings and Fedder-style Frobenius algebra "
                    "pieces of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sequence=True):
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--endo", required=True,
                       help="frobenius:p=<p>,e=<e> | power:t=<t> | custom:<s1>;<s2>;...")
        p.add_argument("--field", required=True, help="q or gf:<p>")
        if sequence:
            p.add_argument("--sequence", default=None,
                           help="comma-separated polynomials y_1, ..., y_n "
                                "(default: the variables)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)

    p_build = sub.add_parser("build", help="construct and print the complex")
    common(p_build)

    p_verify = sub.add_parser("verify", help="run the symbolic identity checks")
    common(p_verify)
    p_verify.add_argument("--bounds", default="2,4",
                          help="E,d truncation for the injectivity check")
    p_verify.add_argument("--with-h0", action="store_true",
                          help="also check the augmentation / H0 report")
    p_verify.add_argument("--with-ses", action="store_true",
                          help="also check the short exact sequence of complexes")
    p_verify.add_argument("--samples", type=int, default=200,
                          help="sample count for the H0 report")

    p_lift = sub.add_parser("lift", help="sample truncated-kernel cycles and lift them")
    common(p_lift)
    p_lift.add_argument("--level", type=int, default=None,
                        help="single level to lift at (default: all 1..n)")
    p_lift.add_argument("--bounds", default="2,4", help="E,d cycle truncation")
    p_lift.add_argument("--count", type=int, default=10, help="cycles per level")

    p_fedder = sub.add_parser("fedder",
                              help="Frobenius algebra pieces of a monomial ideal")
    p_fedder.add_argument("--ideal", required=True,
                          help="comma-separated monomials, e.g. 'x*y, y*z, z*x'")
    p_fedder.add_argument("--p", type=int, required=True, help="the characteristic")
    p_fedder.add_argument("--emax", type=int, default=2, help="largest level to compute")
    p_fedder.add_argument("--n", type=int, default=None,
                          help="number of variables (default: inferred)")
    p_fedder.add_argument("--field", default=None, help="gf:<p>, must match --p")
    p_fedder.add_argument("--format", choices=("text", "json"), default="text")
    p_fedder.add_argument("--seed", type=int, default=0)
    return parser


def _parse_bounds(text: str) -> tuple[int, int]:
    try:
        e_bound, d_bound = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise SkoszulError(f"bad --bounds value {text!r}, expected 'E,d'") from exc
    if e_bound < 0 or d_bound < 0:
        raise SkoszulError("--bounds components must be nonnegative")
    return e_bound, d_bound


def _make_complex(args) -> PhiKoszulComplex:
    field = parse_field(args.field)
    endo = parse_endo(args.endo, field, args.n)
    sequence = None
    if getattr(args, "sequence", None):
        sequence = [parse_poly(part, field, args.n)
                    for part in args.sequence.split(",")]
    return PhiKoszulComplex.build(args.n, endo, sequence)


def _render_complex_text(cx: PhiKoszulComplex) -> str:
    lines = [f"phi-Koszul complex: n={cx.n}, field={cx.field.descriptor}, "
             f"endo={cx.endo.descriptor()}",
             "sequence: " + ", ".join(str(y) for y in cx.sequence),
             "ranks: " + " ".join(str(cx.rank(l)) for l in range(cx.n + 2))]
    for l in range(cx.n + 1, 0, -1):
        diff = cx.differential(l)
        lines.append(f"d_{l}: FK_{l} -> FK_{l - 1}  [{diff.rows} x {diff.cols}]")
        labels = cx.basis_labels(l)
        for i in range(diff.rows):
            row = ", ".join(str(diff[i, j]) for j in range(diff.cols))
            lines.append(f"  {labels[i]:>12} | {row}")
    return "\n".join(lines)


def _emit(args, obj, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _run_build(args) -> int:
    cx = _make_complex(args)
    _emit(args, cx.to_obj(), _render_complex_text(cx))
    return 0


def _run_verify(args) -> int:
    cx = _make_complex(args)
    bounds = _parse_bounds(args.bounds)
    report = cx.verify(bounds=bounds, threads=thread_cap())
    reports = [report]
    if args.with_h0:
        reports.append(cx.h0_check(samples=args.samples, seed=args.seed))
    if args.with_ses:
        reports.append(cx.ses_check())
    ok = all(r.ok for r in reports)
    _emit(args, {"reports": [r.to_obj() for r in reports], "ok": ok},
          "\n".join(r.render_text() for r in reports))
    return 0 if ok else 1


def _run_lift(args) -> int:
    cx = _make_complex(args)
    bounds = _parse_bounds(args.bounds)
    if args.level is not None and not 1 <= args.level <= args.n:
        raise SkoszulError(f"--level must lie in 1..{args.n}")
    levels = [args.level] if args.level is not None else list(range(1, args.n + 1))
    report = Report(f"cycle lifting, n={cx.n}, endo={cx.endo.descriptor()}, "
                    f"bounds={bounds}, count={args.count}, seed={args.seed}")
    witnesses = []
    for l in levels:
        cycles = cx.sample_cycles(l, bounds, args.count, seed=args.seed + l)
        for k, cycle in enumerate(cycles):
            try:
                witness = cx.lift_cycle(l, cycle)
            except (InvariantViolation, NoSolution, NonHomogeneous, NotACycle) as exc:
                report.add(f"lift l={l} cycle={k}", False, str(exc))
            else:
                report.add(f"lift l={l} cycle={k}", witness.verified)
                witnesses.append(witness)
    obj = report.to_obj()
    obj["witnesses"] = [w.to_obj() for w in witnesses]
    _emit(args, obj, report.render_text())
    return 0 if report.ok else 1


def _parse_ideal(args) -> MonomialIdeal:
    chunks = [chunk for chunk in args.ideal.split(",") if chunk.strip()]
    if not chunks:
        raise SkoszulError("--ideal needs at least one monomial")
    nvars = args.n or max(used_variable_count(chunk) for chunk in chunks)
    if nvars < 1:
        raise SkoszulError("could not infer the variable count; pass --n")
    field = parse_field(args.field) if args.field else parse_field(f"gf:{args.p}")
    if field.p != args.p:
        raise SkoszulError(f"--field {field.descriptor} does not match --p {args.p}")
    polys = [parse_poly(chunk, field, nvars) for chunk in chunks]
    return MonomialIdeal.from_polys(polys)


def _run_fedder(args) -> int:
    ideal = _parse_ideal(args)
    pieces = [fedder_piece(ideal, args.p, e) for e in range(1, args.emax + 1)]
    lines = [f"Frobenius algebra pieces of I = {ideal}, p = {args.p}"]
    for piece in pieces:
        colon = piece.colon_ideal
        gens = MonomialIdeal(colon.nvars, piece.socle_generators) \
            if piece.socle_generators else None
        lines.append(f"  e={piece.e}  (I^[{piece.q}] : I) = {colon}"
                     f"  generators mod I^[{piece.q}]: "
                     f"{gens if gens else '(none)'}")
    obj = {"ideal": ideal.to_obj(), "p": args.p,
           "pieces": [piece.to_obj() for piece in pieces]}
    ok = True
    if args.emax >= 2:
        report = generation_check(ideal, args.p, args.emax)
        ok = report.ok
        obj["generation"] = report.to_obj()
        lines.append(report.render_text())
        flag = report.payload["degree_one_generated"]
        lines.append(f"degree-one generated up to e={args.emax}: {flag}")
    _emit(args, obj, "\n".join(lines))
    return 0 if ok else 1


_RUNNERS = {"build": _run_build, "verify": _run_verify,
            "lift": _run_lift, "fedder": _run_fedder}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except SkoszulError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

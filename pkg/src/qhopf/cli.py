"""Command line interface `qhs`.

Exit codes: 0 all checks pass (findings allowed), 1 a check failed,
2 usage, parse or I/O error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .hopf import TensorElement, hopf_structure, tensor_text
from .ncalg import RewriteBudgetExceeded, preset
from .parser import ParseError, parse_expression
from .quotient import coinvariants, embedding, plane_quotient, sphere_quotient
from .report import emit_report
from .scalar import InexactDivision, p_polynomial, render, symbol

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

PRESETS = ("plane", "glq2", "suq2", "cq2", "sphere", "sphere_pq", "sphere_mu_eq_nu")
SCENARIOS = ("plane", "sphere", "sphere-mu-eq-nu", "axioms", "galois")
QUOTIENT_SCENARIOS = ("plane", "sphere", "sphere-mu-eq-nu")


class UsageError(Exception):
    pass


def _quotient(scenario: str, N: int, field_mode: str, c_bound: int):
    if scenario == "plane":
        return plane_quotient(N, c_bound)[0]
    if scenario == "sphere":
        return sphere_quotient("sphere_pq" if field_mode == "pq" else "sphere", N)[0]
    return sphere_quotient("sphere_mu_eq_nu", N)[0]


def cmd_normalize(args, out) -> int:
    x = parse_expression(args.expr, preset(args.preset))
    print(str(x) if x else "0", file=out)
    return EXIT_OK


def cmd_coproduct(args, out) -> int:
    pres = preset(args.preset)
    x = parse_expression(args.expr, pres)
    if args.preset in ("glq2", "suq2", "cq2"):
        hs = hopf_structure(args.preset)
        terms = {}
        for w, c in x.terms.items():
            for k, v in hs.coproduct_word(w).items():
                terms[k] = terms.get(k, 0) + c * v
        terms = {k: v for k, v in terms.items() if v}
        print(tensor_text((pres, pres), terms), file=out)
        return EXIT_OK
    # comodule presets: print the left coaction into GL_q(2) or SU_q(2)
    co = embedding(args.preset)[0].coaction
    print(str(TensorElement(co.targets, co.apply(x.terms))), file=out)
    return EXIT_OK


def cmd_quotient_basis(args, out) -> int:
    Q = _quotient(args.scenario, args.max_degree, args.field_mode, args.c_bound)
    for r in Q.reps:
        print(f"{Q.rep_text(r)}\t{Q.H.word_text(r) or '1'}", file=out)
    return EXIT_OK


def cmd_coinvariants(args, out) -> int:
    Q = _quotient(args.scenario, args.max_degree, args.field_mode, args.c_bound)
    for b in coinvariants(Q, args.max_degree):
        print(str(b), file=out)
    return EXIT_OK


def cmd_det(args, out) -> int:
    from .scenarios import sphere_determinant

    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.as_polynomial:
        coeffs = p_polynomial(args.n - 1).coeffs
        terms = [f"{c}*x^{k}" if k else f"{c}" for k, c in enumerate(coeffs) if c]
        print(" + ".join(terms), file=out)
    else:
        print(render(sphere_determinant(args.n, symbol("p"))), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from . import scenarios as sc

    N = args.max_degree
    if args.scenario == "plane":
        rep = sc.run_plane(N or 4, args.c_bound)
    elif args.scenario == "sphere":
        rep = sc.run_sphere(N or 4, args.field_mode)
    elif args.scenario == "sphere-mu-eq-nu":
        rep = sc.run_sphere_mu_eq_nu(N or 3)
    elif args.scenario == "axioms":
        rep = sc.run_axioms(args.preset, N or 3, args.c_bound)
    else:
        rep = sc.run_galois(N or 2)
    try:
        text = emit_report(rep, args.format, args.out)
    except OSError as e:
        print(f"qhs: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if not args.out:
        out.write(text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhs", description="Exact checks for quantum "
                                 "homogeneous spaces and their quotient coalgebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("normalize", cmd_normalize, "print the normal form"),
                            ("coproduct", cmd_coproduct, "print Δ (or Δ_L for comodules)")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--preset", required=True, choices=PRESETS)
        p.add_argument("expr")
        p.set_defaults(func=fn)

    for name, fn in (("quotient-basis", cmd_quotient_basis), ("coinvariants", cmd_coinvariants)):
        p = sub.add_parser(name)
        p.add_argument("--scenario", required=True, choices=QUOTIENT_SCENARIOS)
        p.add_argument("--max-degree", type=int, required=True)
        p.add_argument("--c-bound", type=int, default=2)
        p.add_argument("--field-mode", choices=("pq", "munu"), default="pq")
        p.set_defaults(func=fn)

    p = sub.add_parser("det", help="D_n for the sphere scenario")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--as-polynomial", action="store_true",
                   help="print P_(n-1)(x) with x = p^2")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", help="run a verification scenario")
    p.add_argument("--scenario", required=True, choices=SCENARIOS)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--c-bound", type=int, default=2)
    p.add_argument("--field-mode", choices=("pq", "munu"), default="pq")
    p.add_argument("--preset", choices=PRESETS, action="append",
                   help="axioms scenario only; repeatable, default all")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if getattr(args, "max_degree", None) is not None and args.max_degree < 1:
        print("qhs: --max-degree must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, UsageError, KeyError) as e:
        print(f"qhs: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InexactDivision, RewriteBudgetExceeded) as e:
        print(f"qhs: internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

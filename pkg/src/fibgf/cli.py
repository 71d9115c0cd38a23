"""Command-line surface: compute, guess, verify, and scan.

Every subcommand is a thin adapter over the library; outputs are JSON (and
plain triangle/DOT text where noted).  Exit codes: 0 ok/pass, 1 check
failed, 2 usage error, 3 no rational fit found.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from .checks import SCAN_CHECKS, VERIFY_CHECKS, run_check
from .guess import guess_rational
from .polynomials import (
    ProductSpec,
    TPoly,
    build_product,
    fibonacci_product_spec,
    kbonacci_product_spec,
    stern_product_spec,
)
from .sequences import RecurrentSeq
from .stats import CorrSpec, corr_series, residue_series
from .triangle import format_row, triangle_rows
from .poset import build_poset

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_FIT = 3


def _parse_t(raw: str):
    if raw == "symbolic":
        return TPoly.t()
    return int(raw)


def _resolve_spec(args) -> ProductSpec:
    t = _parse_t(getattr(args, "t", "1") or "1")
    name = args.seq
    if name == "fib":
        return fibonacci_product_spec(0, t=t)
    if name.startswith("kbonacci:"):
        return kbonacci_product_spec(int(name.split(":", 1)[1]), 0, t=t)
    if name == "stern":
        if not (isinstance(t, int) and t == 1):
            raise ValueError("--t is not supported for the stern spec")
        return stern_product_spec(0)
    if name.startswith("custom:"):
        path = name.split(":", 1)[1]
        with open(path, "r", encoding="utf-8") as handle:
            seq = RecurrentSeq.from_json(handle.read())
        raw = [int(v) for v in (args.factor_coeffs or "1").split(",")]
        if isinstance(t, int) and t == 1:
            coeffs = tuple(raw)
        else:
            coeffs = tuple(v * t for v in raw)
        return ProductSpec(exponent_seq=seq, n=0, h=len(coeffs), a=coeffs, offset=args.offset)
    raise ValueError(f"unknown --seq {name!r}")


def _encode_value(v) -> object:
    if isinstance(v, TPoly):
        return [str(c) for c in (v.c or (0,))]
    return str(v)


def cmd_vsum(args) -> int:
    spec = _resolve_spec(args)
    alpha = CorrSpec(tuple(int(v) for v in args.alpha.split(",")))
    values = corr_series(spec, alpha, args.nmax)
    print(json.dumps([_encode_value(v) for v in values]))
    return EXIT_OK


def cmd_congruence(args) -> int:
    spec = _resolve_spec(args)
    counts = residue_series(spec, args.m, args.nmax)
    print(json.dumps([str(row[args.a]) for row in counts]))
    return EXIT_OK


def cmd_product(args) -> int:
    spec = _resolve_spec(args)
    poly = build_product(replace(spec, n=args.nmax))
    print(poly.to_json())
    return EXIT_OK


def cmd_triangle(args) -> int:
    t = TPoly.t() if args.symbolic else _parse_t(args.t or "1")
    if args.action == "show":
        for row in triangle_rows(args.rows, t=t):
            print(format_row(row))
        return EXIT_OK
    if args.action == "dot":
        print(build_poset(args.rows).to_dot())
        return EXIT_OK
    raise ValueError(f"unknown triangle action {args.action!r}")


def cmd_guess(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as handle:
            raw = handle.read()
    else:
        raw = sys.stdin.read()
    seq = [int(v) for v in json.loads(raw)]
    fitted = guess_rational(seq, den_max=args.den_max, num_extra=args.num_extra, holdout=args.holdout)
    if fitted is None:
        print(json.dumps(None))
        return EXIT_NO_FIT
    num, den = fitted.integer_pair()
    print(json.dumps({"num": [str(v) for v in num], "den": [str(v) for v in den]}))
    return EXIT_OK


def _report_line(rep) -> str:
    return f"{rep.check}: {rep.status} ({rep.elapsed_ms} ms)"


def _emit_report(rep, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rep.to_json_dict()))
    else:
        print(_report_line(rep))


def _check_params(args) -> dict:
    params = {}
    if args.nmax is not None:
        params["nmax"] = args.nmax
    return params


def cmd_verify(args) -> int:
    if args.name == "all":
        names = sorted(VERIFY_CHECKS)
        failed = False
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = {name: pool.submit(run_check, "verify", name) for name in names}
            for name in names:
                rep = futures[name].result()
                _emit_report(rep, args.json)
                failed = failed or rep.status == "fail"
        return EXIT_CHECK_FAILED if failed else EXIT_OK
    if args.name not in VERIFY_CHECKS:
        raise KeyError(f"unknown check {args.name!r}; known: {', '.join(sorted(VERIFY_CHECKS))}")
    rep = run_check("verify", args.name, **_check_params(args))
    _emit_report(rep, args.json)
    return EXIT_OK if rep.status == "pass" else EXIT_CHECK_FAILED


def cmd_scan(args) -> int:
    if args.name not in SCAN_CHECKS:
        raise KeyError(f"unknown scan {args.name!r}; known: {', '.join(sorted(SCAN_CHECKS))}")
    params = {}
    if args.k is not None and args.name in ("conj-v3k", "conj-jrkx", "conj-h-k"):
        params["ks"] = (args.k,)
    if args.r is not None and args.name in ("conj-jrkx", "conj-drx"):
        params["rs"] = (args.r,)
    if args.kmax is not None and args.name == "conj-drx":
        params["kmax"] = args.kmax
    if args.terms is not None:
        params["terms" if args.name in ("conj-v3k", "conj-jrkx", "conj-drx") else "depth"] = args.terms
    rep = run_check("scan", args.name, **params)
    _emit_report(rep, args.json)
    return EXIT_OK if rep.status in ("pass", "inconclusive") else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibgf",
        description="Exact coefficient statistics of recurrence-exponent products, "
        "grouped triangles/posets, and rational generating-function tooling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p):
        p.add_argument("--seq", default="fib", help="fib | kbonacci:K | stern | custom:FILE")
        p.add_argument("--t", default="1", help="integer weight or 'symbolic'")
        p.add_argument("--offset", type=int, default=0, help="exponent index offset for custom specs")
        p.add_argument("--factor-coeffs", default=None, help="CSV window coefficients for custom specs")

    p_vsum = sub.add_parser("vsum", help="correlation power sums along the product")
    add_spec_flags(p_vsum)
    p_vsum.add_argument("--alpha", required=True, help="CSV window exponents, e.g. 2 or 1,0,1")
    p_vsum.add_argument("--nmax", type=int, required=True)
    p_vsum.set_defaults(func=cmd_vsum)

    p_cong = sub.add_parser("congruence", help="counts of coefficients in a residue class")
    add_spec_flags(p_cong)
    p_cong.add_argument("--m", type=int, required=True)
    p_cong.add_argument("--a", type=int, required=True)
    p_cong.add_argument("--nmax", type=int, required=True)
    p_cong.set_defaults(func=cmd_congruence)

    p_prod = sub.add_parser("product", help="dump the expanded product as JSON")
    add_spec_flags(p_prod)
    p_prod.add_argument("--nmax", type=int, required=True)
    p_prod.set_defaults(func=cmd_product)

    p_tri = sub.add_parser("triangle", help="print triangle rows or export the poset")
    p_tri.add_argument("action", choices=("show", "dot"))
    p_tri.add_argument("--rows", type=int, required=True)
    p_tri.add_argument("--t", default="1")
    p_tri.add_argument("--symbolic", action="store_true")
    p_tri.set_defaults(func=cmd_triangle)

    p_guess = sub.add_parser("guess", help="fit a rational generating function to a JSON sequence")
    p_guess.add_argument("input", nargs="?", default="-", help="file of JSON integers, or - for stdin")
    p_guess.add_argument("--den-max", type=int, default=10, dest="den_max")
    p_guess.add_argument("--num-extra", type=int, default=0, dest="num_extra")
    p_guess.add_argument("--holdout", type=int, default=6)
    p_guess.set_defaults(func=cmd_guess)

    p_verify = sub.add_parser("verify", help="run a named cross-verification (or 'all')")
    p_verify.add_argument("name")
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=4)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="run a conjecture scan (evidence, never proof)")
    p_scan.add_argument("name")
    p_scan.add_argument("--k", type=int, default=None)
    p_scan.add_argument("--kmax", type=int, default=None)
    p_scan.add_argument("--r", type=int, default=None)
    p_scan.add_argument("--terms", type=int, default=None)
    p_scan.add_argument("--json", action="store_true")
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, TypeError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

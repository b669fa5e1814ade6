"""Command-line frontend.

    cyclic-sieve poly check "x^2+x+2" -q 3
    cyclic-sieve code info --pcheck "x^2+x+2" -q 3 -n 8
    cyclic-sieve csp check --pcheck "x^2+x+2" -q 3 -n 8 --stat inv --format json
    cyclic-sieve lfsr run --poly "x^2+x+2" -q 3 --seed 0,1 --len 8
    cyclic-sieve scan characterization -q 5 -k 3
    cyclic-sieve scan cyclic-codes -q 2 -n 7 --stat maj
    cyclic-sieve verify-paper --section all

Exit status: 0 on success, 1 when ``verify-paper`` finds a mismatch, 2 on
usage or input errors. A CSP that does not hold is a verdict, not an error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import verify
from .codes import (
    code_from_generator,
    code_from_parity_check,
    codeword_matrix,
    is_free_on_nonzero,
    orbit_decomposition,
    orbit_size_counts,
)
from .csp import CspReport, ScanRow, check_csp_many, scan_characterization
from .gf import AlphabetOrder, FieldSpec, default_order, field_from_q
from .lfsr import Lfsr, format_sequence
from .polyring import (
    Poly,
    check_cap,
    format_poly,
    is_irreducible,
    is_primitive,
    monic_divisors_xn,
    order_of_x,
    parse_coeffs,
    parse_poly,
)


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _csv_line(values) -> str:
    return ",".join("" if v is None else str(v) for v in values)


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def field_of(args) -> FieldSpec:
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.split(",")]
    return field_from_q(args.q, modulus)


def poly_of(args, spec: FieldSpec, text: str) -> Poly:
    if args.coeffs:
        return parse_coeffs(spec, text)
    return parse_poly(spec, text)


def order_of(args, spec: FieldSpec) -> AlphabetOrder:
    if not getattr(args, "order", None):
        return default_order(spec)
    order = AlphabetOrder.from_sequence(args.order.split(","))
    if len(order.rank) != spec.q:
        raise UsageError(f"--order must list all {spec.q} elements")
    return order


def code_of(args, spec: FieldSpec):
    if args.gen is not None:
        return code_from_generator(poly_of(args, spec, args.gen), args.n)
    return code_from_parity_check(poly_of(args, spec, args.pcheck), args.n)


def _vector(text: str) -> list[int]:
    return [int(a) for a in text.split(",") if a.strip()]


# ---------------------------------------------------------------------------
# commands; each writes to ``out`` and returns an exit status
# ---------------------------------------------------------------------------


def cmd_poly_check(args, out) -> int:
    F = field_of(args)
    f = poly_of(args, F, args.poly)
    if f.is_zero():
        raise UsageError("the zero polynomial has no properties to check")
    irreducible = is_irreducible(f)
    order = None
    if f.is_monic() and irreducible and f.coeffs != (0, 1):
        order = order_of_x(f)
    info = {
        "poly": format_poly(f),
        "coeffs": list(f.coeffs),
        "q": F.q,
        "degree": f.degree,
        "irreducible": irreducible,
        "primitive": is_primitive(f),
        "order_x": order,
    }
    if args.format == "json":
        print(_dumps(info), file=out)
    elif args.format == "csv":
        print(",".join(info), file=out)
        row = dict(info, coeffs=" ".join(map(str, f.coeffs)))
        print(_csv_line(row.values()), file=out)
    else:
        for key, value in info.items():
            print(f"{key}: {value}", file=out)
    return 0


def cmd_code(args, out) -> int:
    F = field_of(args)
    code = code_of(args, F)
    if args.action == "info":
        check_cap(code.size, "codewords", args.cap)
        sizes = orbit_size_counts(codeword_matrix(code, args.cap))
        info = code.to_json()
        info["size"] = code.size
        info["free_on_nonzero"] = is_free_on_nonzero(code)
        info["orbit_sizes"] = {str(s): c for s, c in sizes.items()}
        if args.format == "json":
            print(_dumps(info), file=out)
        else:
            print(f"field: {F}", file=out)
            if F.legend():
                print(f"elements: {F.legend()}", file=out)
            print(f"n: {code.n}", file=out)
            print(f"k: {code.k}", file=out)
            print(f"size: {code.size}", file=out)
            print(f"g: {format_poly(code.g)}", file=out)
            print(f"gperp: {format_poly(code.gperp)}", file=out)
            print(f"free_on_nonzero: {info['free_on_nonzero']}", file=out)
            print("orbits: " + ", ".join(f"{c} of size {s}" for s, c in sizes.items()), file=out)
        return 0
    if args.action == "words":
        words = codeword_matrix(code, args.cap)
        if args.format == "json":
            print(_dumps({"n": code.n, "words": words.tolist()}), file=out)
        else:
            for row in words:
                print(",".join(map(str, row.tolist())), file=out)
        return 0
    # orbits
    check_cap(code.size, "codewords", args.cap)
    decomp = orbit_decomposition(code)
    if args.format == "json":
        print(_dumps({"n": code.n, "orbits": [[list(w.entries) for w in o] for o in decomp.orbits]}),
              file=out)
    else:
        for orbit in decomp.orbits:
            print(f"{len(orbit)}: " + " ".join(str(w) for w in orbit), file=out)
    return 0


def _emit_reports(reports: list[CspReport], fmt: str, out) -> None:
    if fmt == "json":
        print(_dumps([r.to_json() for r in reports]), file=out)
    elif fmt == "csv":
        print(",".join(CspReport.CSV_COLUMNS), file=out)
        for r in reports:
            print(_csv_line(r.csv_row()), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
            for row in r.rows:
                mark = "ok" if row.ok else "MISMATCH"
                extra = f" residue={row.residue}" if row.residue else ""
                print(f"  d={row.d}: fixed points {row.fixed_points} {mark}{extra}", file=out)


def _kinds(stat: str) -> tuple[str, ...]:
    return ("maj", "inv") if stat == "both" else (stat,)


def cmd_csp_check(args, out) -> int:
    F = field_of(args)
    code = code_of(args, F)
    label = f"g={format_poly(code.g)}"
    reports = check_csp_many(code, _kinds(args.stat), order_of(args, F), label=label, cap=args.cap)
    _emit_reports(list(reports.values()), args.format, out)
    return 0


def cmd_lfsr(args, out) -> int:
    F = field_of(args)
    reg = Lfsr.of(poly_of(args, F, args.poly))
    seed = tuple(_vector(args.seed)) if args.seed else reg.unit_seed
    if args.action == "run":
        length = args.len if args.len is not None else F.q**reg.k - 1
        seq = reg.sequence(seed, length)
        try:
            period = reg.period(seed)
        except ValueError:  # singular register, the seed is not periodic
            period = None
        if args.format == "json":
            print(_dumps({"poly": list(reg.f.coeffs), "seed": list(seed), "period": period,
                          "sequence": seq}), file=out)
        else:
            print(format_sequence(seq, period), file=out)
    elif args.action == "period":
        period = reg.period(seed)
        if args.format == "json":
            print(_dumps({"poly": list(reg.f.coeffs), "seed": list(seed), "period": period}), file=out)
        else:
            print(period, file=out)
    else:
        ok = reg.window_property(args.cap)
        if args.format == "json":
            print(_dumps({"poly": list(reg.f.coeffs), "window_property": ok}), file=out)
        else:
            print(str(ok).lower(), file=out)
    return 0


def cmd_scan_characterization(args, out) -> int:
    F = field_of(args)
    order = order_of(args, F)
    rows = []
    if args.format == "csv":
        print(",".join(ScanRow.CSV_COLUMNS), file=out)
    for row in scan_characterization(F, args.k, csp=not args.no_csp, order=order):
        rows.append(row)
        if args.format == "csv":
            print(_csv_line(row.csv_row()), file=out)
        elif args.format == "text":
            poly = format_poly(Poly(F, row.gperp))
            print(f"{poly}: primitive={row.primitive} order={row.order_x} cdes={row.cdes} "
                  f"wt={row.wt} formula_match={row.formula_match} "
                  f"maj_csp={row.maj_csp} inv_csp={row.inv_csp}", file=out)
        out.flush()
    summary = {
        "q": F.q,
        "k": args.k,
        "rows": len(rows),
        "primitive": sum(r.primitive for r in rows),
        "formula_match": sum(r.formula_match for r in rows),
        "match_without_primitive": sum(r.formula_match and not r.primitive for r in rows),
    }
    if args.format == "json":
        print(_dumps({"rows": [r.to_json() for r in rows], "summary": summary}), file=out)
    elif args.format == "text":
        print("summary: " + " ".join(f"{k}={v}" for k, v in summary.items()), file=out)
    return 0


def cmd_scan_cyclic_codes(args, out) -> int:
    F = field_of(args)
    order = order_of(args, F)
    reports = []
    if args.format == "csv":
        print(",".join(CspReport.CSV_COLUMNS), file=out)
    for g in monic_divisors_xn(F, args.n):
        code = code_from_generator(g, args.n)
        batch = check_csp_many(code, _kinds(args.stat), order, label=f"g={format_poly(g)}",
                               cap=args.cap)
        for r in batch.values():
            reports.append(r)
            if args.format == "csv":
                print(_csv_line(r.csv_row()), file=out)
            elif args.format == "text":
                print(r.summary(), file=out)
        out.flush()
    if args.format == "json":
        print(_dumps({"reports": [r.to_json() for r in reports],
                      "summary": {"codes": len(reports), "hold": sum(r.holds for r in reports)}}),
              file=out)
    elif args.format == "text":
        print(f"summary: reports={len(reports)} hold={sum(r.holds for r in reports)}", file=out)
    return 0


def cmd_verify_paper(args, out) -> int:
    def show(res):
        if args.format == "text":
            print(res.line(), file=out)
            out.flush()

    results = verify.run_checks(args.section, on_result=show)
    failed = [r.number for r in results if not r.passed]
    if args.format == "json":
        print(_dumps({"results": [{"number": r.number, "title": r.title, "passed": r.passed,
                                   "detail": r.detail} for r in results],
                      "failed": failed}), file=out)
    else:
        print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", type=_positive, default=2, help="field order p^m (default 2)")
    common.add_argument("--modulus", help="ascending coefficients of the F_p modulus for p^m")
    common.add_argument("--coeffs", action="store_true",
                        help="read polynomial arguments as ascending coefficient lists, e.g. 1,2,1")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cap", type=_positive, default=None,
                        help="enumeration cap (default from CYCLIC_SIEVE_MAX_ENUM or 2^20)")
    common.add_argument("--output", help="write the report to this file")

    parser = argparse.ArgumentParser(prog="cyclic-sieve",
                                     description="Cyclic codes, cyclic sieving and LFSRs over F_q.")
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly").add_subparsers(dest="action", required=True)
    p = poly.add_parser("check", parents=[common], help="irreducibility, primitivity, order of x")
    p.add_argument("poly")
    p.set_defaults(func=cmd_poly_check)

    def code_args(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--gen", help="generator polynomial g")
        group.add_argument("--pcheck", help="parity check polynomial (x^n-1)/g")
        p.add_argument("-n", type=_positive, required=True, help="code length")

    code = sub.add_parser("code").add_subparsers(dest="action", required=True)
    for action in ("info", "words", "orbits"):
        p = code.add_parser(action, parents=[common])
        code_args(p)
        p.set_defaults(func=cmd_code)

    csp = sub.add_parser("csp").add_subparsers(dest="action", required=True)
    p = csp.add_parser("check", parents=[common])
    code_args(p)
    p.add_argument("--stat", choices=("maj", "inv", "both"), default="maj")
    p.add_argument("--order", help="increasing order of the alphabet, e.g. 0,2,1")
    p.set_defaults(func=cmd_csp_check)

    lfsr = sub.add_parser("lfsr").add_subparsers(dest="action", required=True)
    for action in ("run", "period", "window"):
        p = lfsr.add_parser(action, parents=[common])
        p.add_argument("--poly", required=True, help="monic feedback polynomial")
        p.add_argument("--seed", help="initial state, default 0,...,0,1")
        if action == "run":
            p.add_argument("--len", type=int, default=None, help="sequence length (default q^k-1)")
        p.set_defaults(func=cmd_lfsr)

    scan = sub.add_parser("scan").add_subparsers(dest="action", required=True)
    p = scan.add_parser("characterization", parents=[common])
    p.add_argument("-k", type=_positive, required=True, help="degree of gperp")
    p.add_argument("--no-csp", action="store_true", help="skip the CSP columns")
    p.add_argument("--order", help="increasing order of the alphabet")
    p.set_defaults(func=cmd_scan_characterization)
    p = scan.add_parser("cyclic-codes", parents=[common])
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--stat", choices=("maj", "inv", "both"), default="maj")
    p.add_argument("--order", help="increasing order of the alphabet")
    p.set_defaults(func=cmd_scan_cyclic_codes)

    p = sub.add_parser("verify-paper", help="run every reproduction check")
    p.add_argument("--section", choices=("3", "4", "all"), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            out = sys.stdout
            if args.output:
                out = stack.enter_context(open(args.output, "w", encoding="utf-8"))
            return args.func(args, out)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

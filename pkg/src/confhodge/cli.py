"""
Command line front end.

    confhodge gf --genus 1 --punctures 1 --tmax 4
    confhodge table --genus 2 --punctures 1 --n 3 --format csv
    confhodge oracle --genus 3 --n 8 --compare
    confhodge strand --which i_eq_n --genus 1 --punctures 1 --imax 6
    confhodge specialize --mode betti --genus 1 --punctures 2 --tmax 5
    confhodge check --suite all --max-genus 3

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import dgcomplex as dg
from . import genfun as gf
from . import verify
from .algebra import format_poly

MAX_TMAX = 64
MAX_GENUS = 16

STRAND_ALIASES = {"diagonal": gf.I_EQ_N, "superdiagonal": gf.I_EQ_N_MINUS_1,
                  gf.I_EQ_N: gf.I_EQ_N, gf.I_EQ_N_MINUS_1: gf.I_EQ_N_MINUS_1}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render(header: dict, columns: list[str], rows: list[tuple], fmt: str, text_head: str = "") -> str:
    if fmt == "json":
        return dumps({**header, "entries": [dict(zip(columns, r)) for r in rows]})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return buf.getvalue()
    out = [text_head] if text_head else []
    out.append("  ".join(f"{k}={v}" for k, v in header.items()))
    widths = [max([len(c)] + [len(str(r[k])) for r in rows]) for k, c in enumerate(columns)]
    out.append("  ".join(c.rjust(wd) for c, wd in zip(columns, widths)))
    for r in rows:
        out.append("  ".join(str(v).rjust(wd) for v, wd in zip(r, widths)))
    return "\n".join(out) + "\n"


def series_rows(series):
    return [tuple(e) + (c,) for e, c in series.items()]


# ---------------------------------------------------------------------------
# commands


def _guard(args):
    genus = getattr(args, "genus", 0)
    bounds = [v for v in (getattr(args, k, None) for k in ("tmax", "n", "imax")) if v is not None]
    if genus < 0 or any(v < 0 for v in bounds):
        raise UsageError("genus and degree bounds must be nonnegative")
    if not getattr(args, "force", False):
        if genus > MAX_GENUS:
            raise UsageError(f"genus {genus} > {MAX_GENUS}; pass --force to run anyway")
        if max(bounds, default=0) > MAX_TMAX:
            raise UsageError(f"degree bound {max(bounds)} > {MAX_TMAX}; pass --force to run anyway")
    r = getattr(args, "punctures", None)
    if r is not None and r < 1:
        raise UsageError("punctures must be >= 1: the closed-surface case (r = 0) is out of scope")


def cmd_gf(args) -> tuple[int, str]:
    series = gf.expand_surface(args.genus, args.punctures, args.tmax)
    header = {"genus": args.genus, "punctures": args.punctures, "tmax": args.tmax}
    head = f"f = {format_poly(series.poly)} + O(t^{args.tmax + 1})"
    return 0, render(header, ["x", "y", "u", "t", "c"], series_rows(series), args.format, head)


def cmd_table(args) -> tuple[int, str]:
    if (args.n is None) == (args.tmax is None):
        raise UsageError("table needs exactly one of --n or --tmax")
    bound = args.n if args.n is not None else args.tmax
    tab = gf.hodge_table(args.genus, args.punctures, bound)
    rows = tab.sorted_entries()
    if args.n is not None:
        rows = [r for r in rows if r[0] == args.n]
    columns = ["n", "i", "w1", "w2", "h"]
    if args.signed:
        columns.append("c")
        rows = [r + ((-1) ** r[1] * r[4],) for r in rows]
    header = {"genus": args.genus, "punctures": args.punctures, "tmax": bound}
    return 0, render(header, columns, rows, args.format)


def _oracle_diff(genus, n):
    oracle = dg.cohomology_hilbert(genus, n).hodge_view()
    series = gf.expand_surface(genus, 1, n)
    formula = {k: (-1) ** k[2] * c for k, c in series.terms.items() if k[3] == n}
    diff = []
    for k in sorted(set(oracle) | set(formula), key=lambda k: (k[3], k[2], k[0], k[1])):
        a, b = oracle.get(k, 0), formula.get(k, 0)
        if a != b:
            w1, w2, i, m = k
            diff.append({"n": m, "i": i, "w1": w1, "w2": w2, "oracle": a, "formula": b})
    return diff


def cmd_oracle(args) -> tuple[int, str]:
    table = dg.cohomology_hilbert(args.genus, args.n)
    columns = ["n", "p", "q", "w1", "w2", "dim"]
    header = {"genus": args.genus, "n": args.n}
    if not args.compare:
        return 0, render(header, columns, table.sorted_entries(), args.format)
    diff = _oracle_diff(args.genus, args.n)
    if diff:
        return 1, dumps({**header, "match": False, "diff": diff})
    return 0, render({**header, "match": True}, columns, table.sorted_entries(), args.format)


def cmd_strand(args) -> tuple[int, str]:
    which = STRAND_ALIASES[args.which]
    rgf = gf.strand_gf(which, args.genus, args.punctures)
    series = gf.expand_strand(which, args.genus, args.punctures, args.imax)
    header = {"genus": args.genus, "punctures": args.punctures, "strand": which, "imax": args.imax}
    if args.format == "json":
        header = {**header, "numerator": str(rgf.numerator),
                  "denominator": rgf.denominator_str()}
    return 0, render(header, ["x", "y", "z", "c"], series_rows(series), args.format, f"F(z) = {rgf}")


def cmd_specialize(args) -> tuple[int, str]:
    series = gf.specialize(gf.expand_surface(args.genus, args.punctures, args.tmax), args.mode)
    header = {"genus": args.genus, "punctures": args.punctures, "tmax": args.tmax, "mode": args.mode}
    head = f"{args.mode}: {format_poly(series.poly)} + O(t^{args.tmax + 1})"
    return 0, render(header, ["x", "y", "u", "t", "c"], series_rows(series), args.format, head)


def cmd_check(args) -> tuple[int, str]:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    bounds = verify.Bounds(max_genus=args.max_genus, max_punctures=args.max_punctures,
                           max_n=args.max_n, tmax=args.tmax, i_max=args.i_max)
    reports = verify.run_suites(names, bounds)
    passed = all(r.passed for r in reports)
    if args.format == "text":
        text = "\n".join(r.line() for r in reports) + "\n"
    else:
        text = dumps({"passed": passed, "reports": [r.to_dict() for r in reports]})
    return (0 if passed else 1), text


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="confhodge",
                                description="Mixed Hodge numbers of configuration spaces of punctured surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, punctures=True):
        sp.add_argument("--genus", type=int, required=True)
        if punctures:
            sp.add_argument("--punctures", type=int, required=True)
        sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
        sp.add_argument("--force", action="store_true", help="lift the genus/degree resource guard")

    sp = sub.add_parser("gf", help="signed series coefficients")
    common(sp)
    sp.add_argument("--tmax", type=int, required=True)
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("table", help="mixed Hodge numbers h^{w1,w2;i}(Conf_n)")
    common(sp)
    sp.add_argument("--n", type=int)
    sp.add_argument("--tmax", type=int)
    sp.add_argument("--signed", action="store_true", help="also emit the signed coefficient c = (-1)^i h")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("oracle", help="dg-complex cohomology dimensions at level n")
    common(sp, punctures=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--compare", action="store_true", help="diff against the generating function (r = 1)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("strand", help="strand series i = n or n = i + 1")
    common(sp)
    sp.add_argument("--which", choices=sorted(STRAND_ALIASES), required=True)
    sp.add_argument("--imax", type=int, default=10)
    sp.set_defaults(func=cmd_strand)

    sp = sub.add_parser("specialize", help="Betti, Euler or E-polynomial specialization")
    common(sp)
    sp.add_argument("--mode", choices=list(gf.SPECIALIZATIONS), required=True)
    sp.add_argument("--tmax", type=int, required=True)
    sp.set_defaults(func=cmd_specialize)

    sp = sub.add_parser("check", help="run verification suites")
    sp.add_argument("--suite", choices=sorted(verify.SUITES) + ["all"], default="all")
    sp.add_argument("--max-genus", type=int, default=3)
    sp.add_argument("--max-punctures", type=int, default=3)
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--tmax", type=int, default=12)
    sp.add_argument("--i-max", type=int, default=10)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            if not args.force and args.max_genus > MAX_GENUS:
                raise UsageError(f"genus {args.max_genus} > {MAX_GENUS}; pass --force to run anyway")
        else:
            _guard(args)
        code, text = args.func(args)
    except UsageError as exc:
        parser.exit(2, f"confhodge: error: {exc}\n")
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

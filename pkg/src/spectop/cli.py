"""Command-line entry point.

Exit codes: 0 success, 1 a recomputed table cell disagrees with its
published value, 2 input error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .errors import InternalInconsistency, SpectopError
from .examples import BUILTINS, builtin
from .latfile import load_lattice
from .report import analyze_context, analyze_semiring, fmt_value, plain, render_struct, render_text
from .semiring import bni, product
from .tables import bni_case_analysis, bni_table_sweep, paper_tables, render_paper_tables
from .xtop import XTopContext

_BNI = re.compile(r"\s*bni\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*")


class InputError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not m:
        raise InputError(f"expected N,I, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _product_spec(text: str) -> list[tuple[int, int]]:
    parts = text.split("x")
    factors = []
    for part in parts:
        m = _BNI.fullmatch(part)
        if not m:
            raise InputError(f"expected 'bni(N1,I1) x bni(N2,I2)', got {text!r}")
        factors.append((int(m.group(1)), int(m.group(2))))
    if len(factors) != 2:
        raise InputError("a product takes exactly two factors")
    return factors


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spectop", description=(
        "Decide topological and order-theoretic properties of finite X-top lattices "
        "and prime spectra of finite semirings."))
    p.add_argument("--limit-subspaces", type=int, metavar="K",
                   help="largest space checked by subspace enumeration (default 12, or SPECTOP_LIMIT)")
    p.add_argument("--format", choices=("text", "struct"), default="text")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="analyze one lattice or semiring")
    a.add_argument("file", nargs="?", help="a .lat lattice file")
    a.add_argument("--x", help="comma-separated subset X (overrides the file's x line)")
    a.add_argument("--bni", metavar="N,I", help="the semiring B(N,I)")
    a.add_argument("--product", metavar="SPEC", help='e.g. "bni(3,2) x bni(3,2)"')
    a.add_argument("--example", choices=tuple(BUILTINS), help="a built-in example")
    t = sub.add_parser("paper-tables", help="recompute both published summary tables")
    # the shared options are also accepted after the subcommand
    for q in (a, t):
        q.add_argument("--limit-subspaces", type=int, metavar="K", dest="sub_limit")
        q.add_argument("--format", choices=("text", "struct"), dest="sub_format")
    return p


def _analyze(args, limit) -> dict:
    sources = [s for s in (args.file, args.bni, args.product, args.example) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of FILE, --bni, --product, --example")
    x = [s for s in args.x.split(",") if s] if args.x is not None else None
    if args.bni is not None or args.product is not None:
        if x is not None:
            raise InputError("--x is not allowed for semiring sources (X is the spectrum)")
        if args.bni is not None:
            n, i = _pair(args.bni)
            return analyze_semiring(bni(n, i), f"bni({n},{i})", limit)
        (n1, i1), (n2, i2) = _product_spec(args.product)
        R = product(bni(n1, i1), bni(n2, i2))
        return analyze_semiring(R, f"bni({n1},{i1}) x bni({n2},{i2})", limit)
    if args.example is not None:
        ctx = builtin(args.example)
        if x is not None:
            ctx = XTopContext.of(ctx.lattice, x)
        return analyze_context(ctx, f"example:{args.example}", limit)
    lat = load_lattice(args.file)
    x = x if x is not None else lat.x
    if not x:
        raise InputError("lattice sources need X: add an 'x:' line or pass --x")
    return analyze_context(XTopContext.of(lat.lattice, x), args.file, limit)


def _tables(fmt: str) -> tuple[str, bool]:
    tables = paper_tables()
    cases = bni_case_analysis()
    sweep = bni_table_sweep()
    ok = not any(t.mismatches for t in tables)
    if fmt == "struct":
        model = {
            t.title: {r.label: {"computed": r.computed, "published": r.expected,
                                "mismatches": r.mismatches, "info": r.info}
                      for r in t.rows}
            for t in tables
        }
        model["case analysis n<=12"] = {f"B({c.n},{c.i})": c.agrees for c in cases}
        model["row sweep n<=12"] = [
            {"n": n, "i": i, "row": row, "column": col, "published": exp, "computed": got}
            for n, i, row, col, exp, got in sweep]
        return render_struct(model), ok
    text = render_paper_tables(tables)
    bad = [c for c in cases if not c.agrees]
    text += (f"\nSpec(B(n,i)) case analysis, 2 <= n <= 12: {len(cases) - len(bad)}/{len(cases)} "
             f"instances agree\n")
    for c in bad:
        text += f"  DISAGREES B({c.n},{c.i}): computed {fmt_value(list(map(sorted, c.computed)))}\n"
    text += f"published rows applied to every B(n,i), 2 <= n <= 12: {len(sweep)} cells differ\n"
    for n, i, row, col, exp, got in sweep:
        text += f"  B({n},{i}) row {row} {col}: published {exp}, computed {got}\n"
    return text, ok


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    limit = args.sub_limit if getattr(args, "sub_limit", None) is not None else args.limit_subspaces
    fmt = args.sub_format or args.format
    try:
        if args.command == "paper-tables":
            out, ok = _tables(fmt)
            sys.stdout.write(out)
            return 0 if ok else 1
        model = _analyze(args, limit)
    except InternalInconsistency:
        raise
    except (SpectopError, InputError, OSError) as e:
        witness = getattr(e, "witness", None)
        extra = f" (witness: {fmt_value(plain(witness))})" if witness is not None else ""
        print(f"error: {e}{extra}", file=sys.stderr)
        return 2
    sys.stdout.write(render_struct(model) if fmt == "struct" else render_text(model))
    return 0


if __name__ == "__main__":
    sys.exit(main())

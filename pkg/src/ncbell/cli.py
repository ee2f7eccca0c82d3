"""Command-line surface: generate, render, and cross-verify the algebra.

Verbs: bell, partial, qbell, trees, quasidet, hopf, mobius, series, and
verify. Polynomial output honors --format text|latex|json; the json form
round-trips through from_json_dict to the identical polynomial. verify
prints one pass/fail line per suite and exits nonzero when any suite
fails, as do the self-checking series commands.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hopf, mobius, quasidet, trees, verify
from .algebra import (
    NCPoly,
    render_latex,
    render_qpoly,
    render_text,
    to_json_dict,
)
from .bell import bell, bell_partial, bell_scaled, qbell, qbell_coefficient, qbell_grouped
from .series import (
    FormalSeries,
    MultiPoly,
    VectorField,
    bell_apply,
    compose,
    flow_pullback_taylor,
    reversion,
)


def _emit_poly(p, fmt: str, symbol: str = "d", algebra: str | None = None) -> None:
    if fmt == "latex":
        print(render_latex(p, symbol))
    elif fmt == "json":
        print(json.dumps(to_json_dict(p, algebra)))
    else:
        print(render_text(p, symbol))


def _emit_series(s: FormalSeries, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(s.to_json_dict()))
        return
    chunks = []
    for n in range(s.order):
        c = s.coeff(n)
        if not c:
            continue
        mag = abs(c)
        if fmt == "latex":
            body = "" if n == 0 else ("t" if n == 1 else f"t^{{{n}}}")
            num = str(mag) if mag.denominator == 1 else f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            body = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            num = str(mag)
        if not body:
            s_txt = num
        elif mag == 1:
            s_txt = body
        else:
            s_txt = f"{num}{' ' if fmt == 'latex' else '*'}{body}"
        chunks.append((c < 0, s_txt))
    if not chunks:
        print("0")
        return
    out = ("-" if chunks[0][0] else "") + chunks[0][1]
    for neg, txt in chunks[1:]:
        out += (" - " if neg else " + ") + txt
    print(out)


def _load_json(args) -> dict:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _variant(args, default_nc: bool) -> str:
    if getattr(args, "nc", False):
        return "nc"
    if getattr(args, "c", False):
        return "c"
    return "nc" if default_nc else "c"


def cmd_bell(args) -> int:
    variant = _variant(args, default_nc=True)
    if args.q:
        if args.k is None:
            raise ValueError("--q needs -k (q-coefficients are per word length)")
        if args.scaled:
            raise ValueError("--q and --scaled cannot be combined")
        for parts in sorted(qbell(args.n, args.k)):
            qc = qbell_coefficient(parts)
            word = render_text(NCPoly.from_word(parts))
            print(f"{word}: {render_qpoly(qc)}")
        return 0
    if args.scaled:
        p = bell_scaled(args.n, args.k)
    elif args.k is not None:
        p = bell_partial(args.n, args.k, variant)
    else:
        p = bell(args.n, variant)
    _emit_poly(p, args.format)
    return 0


def cmd_partial(args) -> int:
    variant = _variant(args, default_nc=True)
    _emit_poly(bell_partial(args.n, args.k, variant), args.format)
    return 0


def cmd_qbell(args) -> int:
    table = qbell_grouped(args.n, args.k) if args.grouped else qbell(args.n, args.k)
    if args.format == "json":
        rows = [{"word": list(parts), "coeff": {str(p): str(c) for p, c in qc.terms.items()}}
                for parts, qc in sorted(table.items())]
        print(json.dumps({"algebra": "q-bell", "terms": rows}))
        return 0
    for parts, qc in sorted(table.items()):
        word = render_text(NCPoly.from_word(parts))
        print(f"{word}: {render_qpoly(qc)}")
    return 0


def cmd_trees(args) -> int:
    tp = trees.tree_bell(args.n, planar=not args.nonplanar)
    if args.format == "json":
        rows = [{"tree": trees.serialize(t), "coeff": str(c)}
                for t, c in sorted(tp.items())]
        print(json.dumps({"algebra": "trees", "terms": rows}))
    else:
        print(trees.render_tree_poly(tp))
    return 0


def cmd_quasidet(args) -> int:
    if args.bell_matrix:
        if args.n is None:
            raise ValueError("--bell-matrix needs -n")
        variant = _variant(args, default_nc=True)
        _emit_poly(quasidet.bell_via_quasidet(args.n, variant), args.format)
        return 0
    if not args.file:
        raise ValueError("give either --bell-matrix -n or --file <matrix.json>")
    rows = _load_json(args)
    A = [[Fraction(e) for e in row] for row in rows]
    p = args.row or 1
    q = args.col or len(A)
    print(quasidet.numeric_quasidet(A, p, q))
    return 0


def cmd_hopf(args) -> int:
    variant = "fdb" if args.fdb else "dfdb"
    if args.coproduct:
        t = hopf.coproduct_gen(args.n, variant)
        if args.format == "json":
            print(json.dumps(hopf.tensor_to_json(t, variant)))
        else:
            print(hopf.render_tensor(t, variant, latex=(args.format == "latex")))
        return 0
    if args.method == "qdet":
        p = hopf.antipode_quasidet(args.n, variant)
    else:
        p = hopf.antipode_recursive(args.n, variant, args.side)
    _emit_poly(p, args.format, symbol="X")
    return 0


def cmd_mobius(args) -> int:
    variant = "nc" if args.nc else "c"
    if args.invert:
        p = mobius.mobius_invert(args.n, variant)
        algebra = "b-symbols" if variant == "nc" else None
        _emit_poly(p, args.format, symbol="B", algebra=algebra)
        return 0
    _emit_poly(mobius.antipode_m(args.n, variant, args.side), args.format)
    return 0


def _flow_check(field: VectorField, psi: MultiPoly, order: int) -> bool:
    taylor = flow_pullback_taylor(field, psi, order)
    return all(bell_apply(field, psi, n) == taylor[n]
               for n in range(order + 1))


def _default_flow_instance() -> tuple:
    x = MultiPoly.var(2, 0)
    y = MultiPoly.var(2, 1)
    field = VectorField(2, [x * y, y * y + 1])
    return field, x + x * y


def cmd_series(args) -> int:
    if args.compose:
        data = _load_json(args)
        f = FormalSeries.from_json_dict(data["f"])
        g = FormalSeries.from_json_dict(data["g"])
        _emit_series(compose(f, g, args.order), args.format)
        return 0
    if args.reversion:
        data = _load_json(args)
        g = FormalSeries.from_json_dict(data.get("g", data))
        _emit_series(reversion(g, args.order), args.format)
        return 0
    order = args.order or 5
    if args.file:
        data = _load_json(args)
        field = VectorField.from_json_dict(data["field"])
        psi = MultiPoly.from_json_dict(data["psi"])
    else:
        field, psi = _default_flow_instance()
    ok = _flow_check(field, psi, order)
    print(f"flow pullback vs Bell words through order {order}: "
          + ("ok" if ok else "MISMATCH"))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    results = verify.run_suites(args.suite, args.max_degree, args.seed)
    print(verify.format_report(results))
    return 0 if all(ok for _, ok, _ in results) else 1


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("text", "latex", "json"),
                     default="text", help="output format")


def _add_variant_flags(sub) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--nc", action="store_true", help="noncommutative (default)")
    group.add_argument("--c", action="store_true", help="commutative")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncbell",
        description="Exact Bell polynomials, quasideterminants, and their Hopf algebras.",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    p = subs.add_parser("bell", help="Bell polynomial B_n (or B_{n,k}, Q_n, q-analog)")
    _add_variant_flags(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, default=None, help="restrict to word length k")
    p.add_argument("--scaled", action="store_true", help="scaled polynomial Q")
    p.add_argument("--q", action="store_true", help="q-coefficients (needs -k)")
    _add_format(p)
    p.set_defaults(func=cmd_bell)

    p = subs.add_parser("partial", help="partial Bell polynomial B_{n,k}")
    _add_variant_flags(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_partial)

    p = subs.add_parser("qbell", help="q-Bell coefficient table for (n, k)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--grouped", action="store_true",
                   help="group words with the same letter multiset")
    _add_format(p)
    p.set_defaults(func=cmd_qbell)

    p = subs.add_parser("trees", help="Bell polynomial as a sum of rooted trees")
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--planar", action="store_true", help="planar trees (default)")
    group.add_argument("--nonplanar", action="store_true", help="collapse to nonplanar trees")
    _add_format(p)
    p.set_defaults(func=cmd_trees)

    p = subs.add_parser("quasidet", help="quasideterminants: Bell matrix or numeric file")
    p.add_argument("--bell-matrix", action="store_true",
                   help="quasideterminant of the n-th Bell matrix")
    _add_variant_flags(p)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--file", default=None, help="JSON matrix of rationals")
    p.add_argument("--row", type=int, default=None, help="1-based row (default 1)")
    p.add_argument("--col", type=int, default=None, help="1-based column (default n)")
    _add_format(p)
    p.set_defaults(func=cmd_quasidet)

    p = subs.add_parser("hopf", help="coproducts and antipodes of the two Hopf algebras")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--fdb", action="store_true", help="commutative variant")
    group.add_argument("--dfdb", action="store_true", help="free variant (default)")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--coproduct", action="store_true")
    what.add_argument("--antipode", action="store_true")
    p.add_argument("--method", choices=("rec", "qdet"), default="rec",
                   help="antipode algorithm")
    p.add_argument("--side", choices=("left", "right"), default="right",
                   help="recursion side for --method rec")
    p.add_argument("-n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_hopf)

    p = subs.add_parser("mobius", help="d-alphabet bialgebra: inversion and antipode")
    p.add_argument("--nc", action="store_true", help="noncommutative variant")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--invert", action="store_true",
                      help="write d_n in the Bell symbols")
    what.add_argument("--antipode", action="store_true")
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("-n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_mobius)

    p = subs.add_parser("series", help="compose or revert series; check flow pullbacks")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--compose", action="store_true",
                      help='compose the series in {"f":..., "g":...} as g then f')
    what.add_argument("--reversion", action="store_true",
                      help="compositional inverse of the input series")
    what.add_argument("--flow-check", action="store_true",
                      help="compare a flow pullback with its Bell-word expansion")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--file", default=None,
                   help="JSON input (defaults to stdin; flow-check has a built-in example)")
    _add_format(p)
    p.set_defaults(func=cmd_series)

    p = subs.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", default="all",
                   help="suite name or 'all' (default)")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

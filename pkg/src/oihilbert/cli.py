"""Command-line front end: `oih <command> <file> [flags]`.

Exit codes: 0 success, 2 schema or usage error, 3 internal error
(engine exceptions, oracle mismatches, unstable fits).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .analysis import (
    artinian_test,
    asymptotic_dimension,
    asymptotic_multiplicity,
    validate_shape,
)
from .decomposition import compute_decomposition
from .errors import OihError, SchemaError
from .oicore import Monomial, hilbert_width
from .polyarith import BiPoly, render_poly
from .schema import load_document, monomial_to_obj
from .series import module_series
from .words import decode, encode, word_from_str, word_to_str


def _thread_count():
    try:
        return max(1, int(os.environ.get("OIH_THREADS", "1")))
    except ValueError:
        return 1


def _width_tables(p, n_max, j_max, quotient):
    def dims(n):
        return hilbert_width(p, n, quotient).dims(j_max)

    workers = _thread_count()
    if workers == 1:
        return [dims(n) for n in range(n_max + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(dims, range(n_max + 1)))


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def mono_text(m):
    vars_ = [
        f"x[{i + 1},{j + 1}]" + (f"^{e}" if e > 1 else "")
        for j, col in enumerate(m.cols)
        for i, e in enumerate(col)
        if e
    ]
    out = "*".join(vars_) if vars_ else "1"
    if m.pi:
        out += " e(" + ",".join(str(v) for v in m.pi) + ")"
    out += f" [width {m.width}]"
    if m.summand:
        out += f" [summand {m.summand}]"
    return out


def _factor_text(t_power, growth):
    base = (BiPoly.one() - BiPoly.t()) ** t_power \
        - BiPoly.s() * BiPoly.from_uni_t(growth)
    return render_poly(base)


def _shape_obj(rep):
    return {
        "conformant": rep.conformant,
        "one_minus_t_power": rep.one_minus_t_power,
        "factors": [
            {"t_power": tp, "growth": list(f.coeffs)}
            for tp, f in rep.factors
        ],
        "leftover": None if rep.leftover is None else render_poly(rep.leftover),
    }


def _print_shape(rep):
    print("shape:", "conformant" if rep.conformant else "NOT conformant")
    print(f"  (1-t)-power: {rep.one_minus_t_power}")
    for tp, f in rep.factors:
        print(f"  factor: {_factor_text(tp, f)}")
    if rep.leftover is not None:
        print(f"  leftover: {render_poly(rep.leftover)}")


def cmd_hilbert(args):
    doc = load_document(args.file)
    p = doc.effective_presentation()
    res = module_series(p, quotient=doc.quotient, reduce=args.reduce)
    rep = validate_shape(res, p.c)
    if args.json:
        _emit({
            "series": res.render(),
            "t_prefactor": res.t_prefactor,
            "mode": "quotient" if doc.quotient else "submodule",
            "reduced": res.reduced,
            "automaton_states": list(res.automaton_states),
            "shape": _shape_obj(rep),
        })
    else:
        print(res.render())
        _print_shape(rep)
    return 0


def cmd_expand(args):
    doc = load_document(args.file)
    p = doc.effective_presentation()
    res = module_series(p, quotient=doc.quotient)
    win = res.window(args.N, args.J)
    table = [[win[(n, j)] for j in range(args.J + 1)]
             for n in range(args.N + 1)]
    if args.json:
        _emit({"n_max": args.N, "j_max": args.J, "dims": table})
    else:
        head = "n\\j " + " ".join(f"{j:>6}" for j in range(args.J + 1))
        print(head)
        for n, row in enumerate(table):
            print(f"{n:>3} " + " ".join(f"{v:>6}" for v in row))
    return 0


def cmd_oracle(args):
    doc = load_document(args.file)
    p = doc.effective_presentation()
    res = module_series(p, quotient=doc.quotient)
    win = res.window(args.N, args.J)
    tables = _width_tables(p, args.N, args.J, doc.quotient)
    for n in range(args.N + 1):
        for j in range(args.J + 1):
            if win[(n, j)] != tables[n][j]:
                print(f"mismatch at n={n} j={j}: "
                      f"series gives {win[(n, j)]}, "
                      f"width-wise gives {tables[n][j]}")
                return 3
    print("OK")
    return 0


def _window_arg(text):
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"window must look like 3:8, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad window bounds {text!r}")
    return lo, hi


def cmd_analyze(args):
    doc = load_document(args.file)
    p = doc.effective_presentation()
    dim = asymptotic_dimension(p, window=args.window, quotient=doc.quotient)
    mult = asymptotic_multiplicity(p, window=args.window,
                                   quotient=doc.quotient)
    res = module_series(p, quotient=doc.quotient, reduce=True)
    rep = validate_shape(res, p.c)
    cert = artinian_test(p) if doc.quotient else None
    if args.json:
        out = {
            "series": res.render(),
            "dimension": {"slope": dim.slope, "intercept": dim.intercept,
                          "window": list(dim.window),
                          "dims": list(dim.dims)},
            "multiplicity": {"base": mult.base,
                             "poly_exponent": mult.poly_exponent,
                             "limit_estimate": [
                                 mult.limit_estimate.numerator,
                                 mult.limit_estimate.denominator],
                             "exact": mult.exact,
                             "degrees": list(mult.degrees)},
            "shape": _shape_obj(rep),
        }
        if cert is not None:
            out["artinian"] = cert.verdict
        _emit(out)
    else:
        print(f"series: {res.render()}")
        print(f"dimension: {dim.slope}*n + {dim.intercept} "
              f"on window {dim.window[0]}:{dim.window[1]}")
        print(f"multiplicity: base {mult.base}, poly exponent "
              f"{mult.poly_exponent}, tail estimate {mult.limit_estimate}"
              + ("" if mult.exact else " (ratios still converging)"))
        if cert is not None:
            print(f"artinian: {'true' if cert.verdict else 'false'}")
        _print_shape(rep)
    return 0


def cmd_decompose(args):
    doc = load_document(args.file)
    p = doc.effective_presentation()
    try:
        e = tuple(int(v) for v in args.e.split(","))
    except ValueError:
        raise SchemaError(f"--e must be comma-separated integers, got {args.e!r}")
    dec = compute_decomposition(p, e)
    d = p.summands[0][0]
    if args.json:
        _emit({
            "e": list(dec.e),
            "m": dec.m,
            "marked": None if dec.marked is None else [
                monomial_to_obj(g) for g in dec.marked.generators],
            "unmarked": [monomial_to_obj(g) for g in dec.unmarked.generators],
        })
    else:
        print(f"generation width m = {dec.m}, e = ({args.e})")
        if dec.marked is None:
            print("marked part: absent (rank parameter is 0)")
        else:
            print(f"marked part (rank {d - 1}):")
            for g in dec.marked.generators:
                print(f"  {mono_text(g)}")
            if not dec.marked.generators:
                print("  (zero)")
        print(f"unmarked part (rank {d}):")
        for g in dec.unmarked.generators:
            print(f"  {mono_text(g)}")
        if not dec.unmarked.generators:
            print("  (zero)")
    return 0


def _parse_exponents_arg(text, c, width):
    try:
        cols = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"--exponents: invalid JSON: {exc}")
    if (not isinstance(cols, list) or len(cols) != width
            or any(not isinstance(col, list) or len(col) != c
                   or any(not isinstance(v, int) or v < 0 for v in col)
                   for col in cols)):
        raise SchemaError(
            f"--exponents needs {width} columns of {c} non-negative ints")
    return tuple(tuple(col) for col in cols)


def cmd_words(args):
    if args.action == "encode":
        try:
            pi = tuple(int(v) for v in args.pi.split(",")) if args.pi else ()
        except ValueError:
            raise SchemaError(f"--pi must be comma-separated integers, got {args.pi!r}")
        cols = (_parse_exponents_arg(args.exponents, args.c, args.width)
                if args.exponents else ((0,) * args.c,) * args.width)
        mon = Monomial(args.c, args.width, cols, pi)
        print(word_to_str(encode(mon)))
    else:
        word = word_from_str(args.word)
        mon = decode(word, args.c, args.d)
        print(mono_text(mon))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="oih",
        description="Equivariant Hilbert series of monomial OI-modules.")
    sub = ap.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", help="compute the two-variable series")
    h.add_argument("file")
    h.add_argument("--reduce", action="store_true",
                   help="cancel the fraction before printing")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    ex = sub.add_parser("expand", help="print the dimension table")
    ex.add_argument("file")
    ex.add_argument("-N", type=int, required=True, help="max width")
    ex.add_argument("-J", type=int, required=True, help="max degree")
    ex.add_argument("--json", action="store_true")
    ex.set_defaults(func=cmd_expand)

    orc = sub.add_parser(
        "oracle", help="compare the series against width-wise recursion")
    orc.add_argument("file")
    orc.add_argument("-N", type=int, required=True)
    orc.add_argument("-J", type=int, required=True)
    orc.set_defaults(func=cmd_oracle)

    an = sub.add_parser("analyze", help="growth invariants and shape")
    an.add_argument("file")
    an.add_argument("--window", type=_window_arg, default=(3, 8),
                    help="width window a:b for the fits (default 3:8)")
    an.add_argument("--json", action="store_true")
    an.set_defaults(func=cmd_analyze)

    de = sub.add_parser("decompose", help="width-descent decomposition")
    de.add_argument("file")
    de.add_argument("--e", required=True,
                    help="column-1 exponent vector, e.g. 0,2")
    de.add_argument("--json", action="store_true")
    de.set_defaults(func=cmd_decompose)

    w = sub.add_parser("words", help="monomial/word round-trips")
    wsub = w.add_subparsers(dest="action", required=True)
    we = wsub.add_parser("encode")
    we.add_argument("--c", type=int, required=True)
    we.add_argument("--width", type=int, required=True)
    we.add_argument("--pi", default="",
                    help="comma-separated basis tuple, e.g. 1,3")
    we.add_argument("--exponents", default="",
                    help='column-major JSON, e.g. "[[1],[0]]"')
    we.set_defaults(func=cmd_words)
    wd = wsub.add_parser("decode")
    wd.add_argument("--c", type=int, required=True)
    wd.add_argument("--d", type=int, required=True)
    wd.add_argument("word", help='space-separated letters, e.g. "x1 t1"')
    wd.set_defaults(func=cmd_words)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OihError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

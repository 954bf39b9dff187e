"""Command-line interface: ``nnlab <subcommand> ... [--format F] [--cap N]``."""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import analysis, excite, naruse, shapes, staircase, tables, verify
from .errors import ConsistencyError, NNLabError, PreconditionError
from .exact import det_exact

EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _q(x):
    return str(Fraction(x))


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


# Each command returns (payload for json, csv text, plain text).


def cmd_coeffs(args):
    I = shapes.parse_descent_set(args.descents)
    C = naruse.nn_coefficients(I, args.cap)
    payload = {"descent_set": list(I), "s": C.s, "coefficients": [str(c) for c in C]}
    width = max(C.s + 1, 1)
    text_csv = _csv(
        ["I", "s"] + [f"C_{i}" for i in range(width)], [[tables.format_set(I), C.s] + list(C)]
    )
    text = f"C = {', '.join(map(str, C))}; s = {C.s}"
    return payload, text_csv, text


def cmd_ribbon(args):
    I = shapes.parse_descent_set(args.descents)
    sh = shapes.descent_to_skew(I)
    cells = sorted(sh.cells())
    payload = {
        "descent_set": list(I),
        "outer": list(sh.outer),
        "inner": list(sh.inner),
        "s": sh.inner.part(1),
        "w": shapes.w_index(I),
        "deep": shapes.is_deep(I),
        "cells": [[c.row, c.col] for c in cells],
    }
    text_csv = _csv(["row", "col"], [[c.row, c.col] for c in cells])
    text = (
        f"lambda = {sh.outer}; mu = {sh.inner}; s = {payload['s']}; w = {payload['w']}"
        f" ({'deep' if payload['deep'] else 'shallow'})\ncells: " + " ".join(str(c) for c in cells)
    )
    return payload, text_csv, text


def cmd_excited(args):
    sh = shapes.SkewShape(shapes.parse_partition(args.outer), shapes.parse_partition(args.inner))
    ds = excite.enumerate_excited(sh, args.cap)
    payload = {
        "outer": list(sh.outer),
        "inner": list(sh.inner),
        "count": len(ds),
        "diagrams": [[[c.row, c.col] for c in d] for d in ds],
    }
    text_csv = _csv(["index", "cells"], [[i, " ".join(str(c) for c in d)] for i, d in enumerate(ds)])
    text = f"{len(ds)} excited diagrams of {sh}\n" + "\n".join(str(d) for d in ds)
    return payload, text_csv, text


def cmd_count(args):
    outer = shapes.parse_partition(args.outer)
    inner = shapes.parse_partition(args.inner) if args.inner is not None else shapes.Partition()
    sh = shapes.SkewShape(outer, inner)
    n = naruse.skew_syt_count(sh, args.cap)
    payload = {"outer": list(outer), "inner": list(inner), "count": str(n)}
    return payload, _csv(["outer", "inner", "count"], [[str(outer), str(inner), n]]), str(n)


def cmd_dpoly(args):
    I = shapes.parse_descent_set(args.descents)
    v = naruse.descent_poly_eval(I, args.n, args.cap)
    payload = {"descent_set": list(I), "n": args.n, "value": str(v)}
    return payload, _csv(["I", "n", "value"], [[tables.format_set(I), args.n, v]]), str(v)


def cmd_ratio(args):
    I = shapes.parse_descent_set(args.descents)
    r = analysis.ratio(I, args.a, args.b, args.cap)
    payload = {"descent_set": list(I), "a": args.a, "b": args.b, "ratio": _q(r)}
    return payload, _csv(["I", "a", "b", "ratio"], [[tables.format_set(I), args.a, args.b, _q(r)]]), _q(r)


def cmd_appendix(args):
    rows = tables.appendix_rows(args.max, args.cap)
    payload = [{"descent_set": list(I), "s": len(C) - 1, "coefficients": [str(c) for c in C]} for I, C in rows]
    text = "\n".join(f"{tables.format_set(I)}  s = {len(C) - 1}  C = {', '.join(map(str, C))}" for I, C in rows)
    return payload, tables.appendix_csv(args.max, args.cap).rstrip("\n"), text


def cmd_triangle(args):
    T = staircase.triangle(args.B)
    payload = {"rows": [[str(c) for c in row] for row in T.rows]}
    text_csv = _csv(["b"] + [f"C_{i}" for i in range(args.B + 1)], [[b] + list(row) for b, row in enumerate(T.rows)])
    text = "\n".join(" ".join(map(str, row)) for row in T.rows)
    return payload, text_csv, text


def cmd_fitpoly(args):
    P = staircase.fit_ratio_poly(args.k).poly
    payload = {"k": args.k, "coefficients": [str(c) for c in P.coeffs]}
    text_csv = _csv(["degree", "coefficient"], [[i, str(c)] for i, c in enumerate(P.coeffs)])
    return payload, text_csv, f"P_{args.k}(t) = {P.format('t')}"


def cmd_dettilde(args):
    k = args.k
    closed = staircase.det_tilde_closed_form(k)
    at_k = det_exact(staircase.tilde_matrix(k, k))
    payload = {
        "k": k,
        "closed_form": [str(c) for c in closed.coeffs],
        "roots": [_q(r) for r in staircase.closed_form_roots(k)],
        "system_determinant": _q(at_k),
    }
    text_csv = _csv(["degree", "coefficient"], [[i, str(c)] for i, c in enumerate(closed.coeffs)])
    text = (
        f"det(A~_{k}(x)) = {closed.format('x')}\n"
        f"roots: {', '.join(payload['roots'])}\n"
        f"det(A_{k}) = {payload['system_determinant']}"
    )
    return payload, text_csv, text


def cmd_verify(args):
    results = verify.run_suite(args.suite)
    passed = sum(r.passed for r in results)
    payload = {
        "suite": args.suite,
        "passed": passed,
        "failed": len(results) - passed,
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    text_csv = _csv(["check", "passed", "detail"], [[r.name, r.passed, r.detail] for r in results])
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    lines.append(f"{passed}/{len(results)} checks passed")
    return payload, text_csv, "\n".join(lines)


def build_parser():
    def options(default_format, default_cap):
        opts = _Parser(add_help=False)
        opts.add_argument("--format", choices=["text", "json", "csv"], default=default_format)
        opts.add_argument("--cap", type=_positive, default=default_cap, help="excited-diagram enumeration cap")
        return opts

    # Subcommand copies must not overwrite flags given before the subcommand.
    common = options(argparse.SUPPRESS, argparse.SUPPRESS)
    p = _Parser(prog="nnlab", description="Naruse-Newton coefficients of descent sets.", parents=[options("text", None)])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    add("coeffs", cmd_coeffs, "Naruse-Newton coefficients").add_argument("descents")
    add("ribbon", cmd_ribbon, "lambda^I, mu^I and ribbon cells").add_argument("descents")
    sp = add("excited", cmd_excited, "excited diagrams of outer/inner")
    sp.add_argument("outer")
    sp.add_argument("inner")
    sp = add("count", cmd_count, "standard (skew) tableaux count")
    sp.add_argument("outer")
    sp.add_argument("inner", nargs="?")
    sp = add("dpoly", cmd_dpoly, "descent polynomial value d_I(n)")
    sp.add_argument("descents")
    sp.add_argument("n", type=int)
    sp = add("ratio", cmd_ratio, "coefficient ratio C_a/C_b")
    sp.add_argument("descents")
    sp.add_argument("a", type=_nonneg)
    sp.add_argument("b", type=_nonneg)
    add("appendix", cmd_appendix, "coefficient table over subsets of [max]").add_argument(
        "--max", type=_positive, default=7
    )
    add("triangle", cmd_triangle, "staircase triangle rows 0..B").add_argument("B", type=_nonneg)
    add("fitpoly", cmd_fitpoly, "ratio polynomial P_k").add_argument("k", type=_nonneg)
    add("dettilde", cmd_dettilde, "closed-form determinant of the k-th system").add_argument("k", type=_positive)
    add("verify", cmd_verify, "run a named invariant battery").add_argument("suite", choices=verify.suite_names())
    return p


def _error_object(kind, message, code):
    return json.dumps({"error": kind, "message": message, "exit_code": code}, sort_keys=True)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(_error_object("usage", str(exc), EXIT_USAGE), file=stderr)
        return EXIT_USAGE
    try:
        payload, text_csv, text = args.func(args)
    except NNLabError as exc:
        print(_error_object(exc.kind, str(exc), exc.exit_code), file=stderr)
        return exc.exit_code
    except ValueError as exc:
        print(_error_object(PreconditionError.kind, str(exc), PreconditionError.exit_code), file=stderr)
        return PreconditionError.exit_code
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True), file=stdout)
    elif args.format == "csv":
        print(text_csv, file=stdout)
    else:
        print(text, file=stdout)
    if args.command == "verify" and payload["failed"]:
        return ConsistencyError.exit_code
    return 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

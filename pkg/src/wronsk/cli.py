"""Command-line front end.

Exit codes: 0 success, 1 a negative mathematical verdict the caller asked
to test, 2 usage, parse or precondition errors.  Results go to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import geometry, rational, reduction, search
from .characterization import characterize_laurent, characterize_poly
from .errors import LinearlyDependentError, NotConstantWronskianError, WronskError
from .laurent import LaurentPoly
from .parser import ParseError, parse_curve, parse_laurent, parse_rational
from .wronskian import classify_result, wronskian

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _q(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _matrix_text(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(_q(x) for x in row) + "]" for row in rows) + "]"


# -- input ------------------------------------------------------------------


def _texts(args) -> list[str]:
    exprs = list(getattr(args, "exprs", None) or [])
    if args.input is not None:
        if exprs:
            raise UsageError("give expressions either positionally or with --input, not both")
        try:
            raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
            doc = json.loads(raw)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"--input is not valid JSON: {exc.msg} at offset {exc.pos}")
        fns = doc.get("functions") if isinstance(doc, dict) else None
        if not isinstance(fns, list) or not all(isinstance(s, str) for s in fns):
            raise UsageError('--input must hold {"functions": [string, ...]}')
        exprs = fns
    if not exprs:
        raise UsageError("no expressions given")
    return exprs


def _parse_one(text: str, index: int):
    """Laurent polynomial if possible, otherwise a factored rational function."""
    try:
        return parse_laurent(text)
    except ParseError as first:
        try:
            rf = parse_rational(text)
        except ParseError as second:
            exc = second if second.offset >= first.offset else first
            exc.component = index
            raise exc
        return rf.to_laurent() if rf.is_laurent() else rf


def _family(args, laurent_only=False) -> list:
    fam = [_parse_one(t, i) for i, t in enumerate(_texts(args))]
    if laurent_only and not all(isinstance(f, LaurentPoly) for f in fam):
        raise UsageError("this subcommand needs Laurent polynomials (no poles away from 0)")
    return fam


def _curve(args) -> list[LaurentPoly]:
    texts = _texts(args)
    if len(texts) == 1:
        return parse_curve(texts[0])
    return [_parse_one(t, i) for i, t in enumerate(texts)]


def _family_wronskian(fam, method):
    if all(isinstance(f, LaurentPoly) for f in fam):
        return wronskian(fam, method)
    return rational.wronskian_rational(fam, method)


# -- subcommands -------------------------------------------------------------


def cmd_wronskian(args):
    w = _family_wronskian(_family(args), args.method)
    if args.json:
        return classify_result(w).to_dict(), EXIT_OK
    return str(w), EXIT_OK


def cmd_classify(args):
    klass = classify_result(_family_wronskian(_family(args), args.method))
    return (klass.to_dict() if args.json else str(klass)), EXIT_OK


def cmd_reduce(args):
    fam = _family(args, laurent_only=True)
    try:
        if args.mode == "both":
            both = reduction.reduce_both(fam)
            outcomes = [both.max, both.min]
        else:
            step = reduction.reduce_distinct_max if args.mode == "max" \
                else reduction.reduce_distinct_min
            outcomes = [step(fam)]
    except LinearlyDependentError as exc:
        if args.json:
            return {"dependent": True, "reason": str(exc)}, EXIT_NEGATIVE
        return f"dependent: {exc}", EXIT_NEGATIVE
    if args.json:
        doc = {"dependent": False, "passes": [o.to_dict() for o in outcomes]}
        if args.mode == "both":
            doc["d"], doc["e"] = list(both.d), list(both.e)
            doc["transform"] = [[_q(x) for x in row] for row in both.transform]
        return doc, EXIT_OK
    lines = []
    for o in outcomes:
        lines.append(f"{o.mode} pass:")
        lines += [f"  q{i + 1} = {f}" for i, f in enumerate(o.reduced)]
        lines.append(f"  transform = {_matrix_text(o.transform)}")
        lines.append(f"  max degrees = {list(o.max_degrees)}")
        lines.append(f"  min degrees = {list(o.min_degrees)}")
    if args.mode == "both":
        lines.append(f"d = {list(both.d)}")
        lines.append(f"e = {list(both.e)}")
    return "\n".join(lines), EXIT_OK


def cmd_characterize(args):
    fam = _family(args, laurent_only=True)
    try:
        if all(f.is_polynomial() for f in fam):
            ch = characterize_poly(fam)
        else:
            ch = characterize_laurent(fam)
    except (NotConstantWronskianError, LinearlyDependentError) as exc:
        klass = getattr(exc, "klass", None) or classify_result(wronskian(fam))
        if args.json:
            return {"constant": False, "value": None, "A": None, "r": None,
                    "class": klass.tag.value, "result": str(klass.result)}, EXIT_NEGATIVE
        return str(klass), EXIT_NEGATIVE
    if args.json:
        return ch.to_dict(), EXIT_OK
    return "\n".join([
        f"constant: {_q(ch.value)}",
        f"A = {_matrix_text(ch.matrixA)}",
        f"r = {list(ch.exponents)}",
    ]), EXIT_OK


def cmd_hyperplane(args):
    curve = _curve(args)
    basis = geometry.hyperplane_basis(curve)
    if not basis:
        return ({"hyperplane": None} if args.json else "no hyperplane"), EXIT_NEGATIVE
    if args.json:
        doc = {"hyperplane": basis[0].to_dict()}
        if args.verbose:
            doc["basis"] = [h.to_dict() for h in basis]
        return doc, EXIT_OK
    shown = basis if args.verbose else basis[:1]
    return "\n".join(h.equation() for h in shown), EXIT_OK


def cmd_rnc(args):
    w = geometry.is_affine_rnc(_curve(args))
    if w is None:
        return ({"affine_rnc": False} if args.json else "not an affine rational normal curve"), \
            EXIT_NEGATIVE
    if args.json:
        return {"affine_rnc": True, **w.to_dict()}, EXIT_OK
    return f"M = {_matrix_text(w.M)}\nb = [{', '.join(_q(x) for x in w.b)}]", EXIT_OK


def cmd_invariant(args):
    rep = geometry.vanishing_invariant_report(_curve(args))
    if args.json:
        return rep.to_dict(), EXIT_OK
    roots = ", ".join(_q(r) for r in rep.rational_roots)
    return "\n".join([
        f"numerator = {rep.numerator}",
        f"constant = {str(rep.is_constant).lower()}",
        f"rational roots = [{roots}]",
        f"real roots = {rep.real_root_count}",
        f"non-real roots = {rep.complex_root_count}",
    ]), EXIT_OK


def cmd_check2(args):
    fam = _family(args)
    if len(fam) != 2:
        raise UsageError(f"check2 needs exactly 2 functions, got {len(fam)}")
    v = rational.check_n2_impossibility(*fam)
    code = EXIT_NEGATIVE if v.is_constant else EXIT_OK
    if args.json:
        return v.to_dict(), code
    wt = v.witness
    return "\n".join([
        str(v.klass),
        f"shift a = {_q(wt.shift)}",
        f"K = {wt.K}, L1 = {wt.L1}, beta1 = {_q(wt.beta1)}",
        f"f = {wt.f}",
        f"pole orders of W at (0, beta1): {list(wt.observed_orders)}",
        f"(K+1, L1+1) = {list(wt.cross_term_orders)}",
    ]), code


def cmd_search(args):
    config = search.SearchConfig(
        trials=args.trials, degree_bound=args.degree_bound, pole_bound=args.poles,
        order_bound=args.order_bound, coeff_bound=args.coeff_bound,
    )
    report = search.conjecture_search(args.n, config, args.seed, args.workers)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    code = EXIT_NEGATIVE if report.counterexamples else EXIT_OK
    if args.json:
        return json.loads(text), code
    counts = ", ".join(f"{k}={v}" for k, v in sorted(report.class_counts.items()))
    return f"trials={report.trials} {counts} counterexamples={len(report.counterexamples)}", code


# -- argument parsing --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser, exprs=True, curve=False):
    if exprs:
        help_ = "curve components, ';'-separated or as a JSON array" if curve else "expressions"
        p.add_argument("exprs", nargs="*", metavar="EXPR", help=help_)
        p.add_argument("--input", metavar="FILE",
                       help='JSON document {"functions": [...]} ("-" for stdin)')
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wronsk", description="Exact Wronskian toolkit over Q.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    for name, fn, help_ in (("wronskian", cmd_wronskian, "compute the Wronskian"),
                            ("classify", cmd_classify, "classify the Wronskian")):
        p = sub.add_parser(name, help=help_)
        _common(p)
        p.add_argument("--method", choices=("auto", "cofactor", "bareiss"), default="auto")
        p.set_defaults(func=fn)

    p = sub.add_parser("reduce", help="Gauss-like reduction to distinct extreme degrees")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--max", dest="mode", action="store_const", const="max")
    g.add_argument("--min", dest="mode", action="store_const", const="min")
    g.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(func=cmd_reduce, mode="both")

    p = sub.add_parser("characterize", help="witness (A, r) for a nonzero constant Wronskian")
    _common(p)
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("geometry", help="curve geometry")
    gsub = p.add_subparsers(dest="geometry_command", metavar="KIND", parser_class=_Parser)
    gsub.required = True
    for name, fn in (("hyperplane", cmd_hyperplane), ("rnc", cmd_rnc),
                     ("invariant", cmd_invariant)):
        q = gsub.add_parser(name)
        _common(q, curve=True)
        if name == "hyperplane":
            q.add_argument("--verbose", action="store_true", help="print the full relation basis")
        q.set_defaults(func=fn)

    p = sub.add_parser("rational", help="rational families with several poles")
    rsub = p.add_subparsers(dest="rational_command", metavar="KIND", parser_class=_Parser)
    rsub.required = True
    q = rsub.add_parser("check2", help="n = 2 impossibility check with witness")
    _common(q)
    q.set_defaults(func=cmd_check2)
    q = rsub.add_parser("search", help="seeded random search for n >= 3")
    _common(q, exprs=False)
    d = search.SearchConfig()
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--trials", type=int, default=d.trials)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--degree-bound", type=int, default=d.degree_bound)
    q.add_argument("--poles", type=int, default=d.pole_bound, help="maximum distinct poles")
    q.add_argument("--order-bound", type=int, default=d.order_bound)
    q.add_argument("--coeff-bound", type=int, default=d.coeff_bound)
    q.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: WRONSK_THREADS or CPU count)")
    q.add_argument("--out", metavar="FILE", help="also write the report here")
    q.set_defaults(func=cmd_search)
    return parser


def _report_parse_error(exc: ParseError, err):
    print(f"error: {exc}", file=err)
    if exc.text and "\n" not in exc.text:
        print(f"  {exc.text}", file=err)
        print(f"  {' ' * exc.offset}^", file=err)
    if exc.diagnostic.expected:
        print(f"  expected: {', '.join(exc.diagnostic.expected)}", file=err)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result, code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        _report_parse_error(exc, err)
        return EXIT_USAGE
    except WronskError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    if isinstance(result, (dict, list)):
        out.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        out.write(result + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

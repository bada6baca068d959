"""Command line entry point.

    superhaar preset list
    superhaar preset dump sl(1|1)
    superhaar nf sl(1|1) "E(1,2)*E(2,1)"
    superhaar pair sl(1|1) "T(1,2)" "E(1,2)"
    superhaar integral berezin(2) "th(1)*th(2)"
    superhaar integral --preset uq_sl --m 1 --n 1 --q 2 --word "Theta*Thetabar"
    superhaar verify --suite slq --m 1 --n 1 --json out.json

Exit codes: 0 success, 1 a check (or computation) failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import ParseError, SuperhaarError, UnknownSuite, UnsupportedRank

USAGE_ERRORS = (ParseError, UnknownSuite, UnsupportedRank)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _preset(args):
    from .presets import get_preset
    name = args.name or args.preset
    if name is None:
        raise UnsupportedRank("a preset name is required")
    return get_preset(name, args.m, args.n)


def _cmd_preset(args, out):
    from .presets import preset_names
    from .quantum import dump_presentation
    if args.action == "list":
        for name in preset_names():
            print(name, file=out)
        return 0
    if args.name is None:
        raise UnsupportedRank("preset dump needs a name")
    P = _preset(args)
    out.write(dump_presentation(P.p, P.hopf))
    return 0


def _cmd_nf(args, out):
    P = _preset(args)
    x = P.p.normal_form(P.parse(args.expr), max_steps=args.max_steps)
    print(P.p.format(x), file=out)
    return 0


def _cmd_pair(args, out):
    P = _preset(args)
    v = P.pairing.pair(P.word(args.word), P.parse(args.elem))
    print(_value(v, args.q), file=out)
    return 0


def _cmd_integral(args, out):
    from .haar import IntegralSpec, integral_eval
    P = _preset(args)
    text = args.word or args.word_opt
    if text is None:
        raise ParseError("integral needs a matrix word")
    w = P.words[text] if text in P.words else P.word(text)
    v = integral_eval(IntegralSpec(P, P.gamma), w)
    print(_value(v, args.q), file=out)
    return 0


def _cmd_verify(args, out):
    from .suites import run_suite
    suite = args.suite or args.name
    if suite is None:
        raise UnknownSuite("verify needs --suite")
    m, n = args.m, args.n
    if args.preset and (m is None or n is None):
        m, n = _preset_ranks(args.preset, m, n)
    report = run_suite(suite, m=m, n=n, seed=args.seed)
    text = report.to_json()
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return 0 if report.ok else 1


def _preset_ranks(name, m, n):
    from .presets import _FULL
    hit = _FULL.match(name.strip())
    if not hit:
        return m, n
    a, b = int(hit.group(2)), hit.group(3)
    b = int(b) if b is not None else None
    if hit.group(1) == "berezin":
        return m, a
    if hit.group(1) == "uq_osp" and b is not None:
        return m, b // 2
    return a, b


def _value(v, q):
    if q in (None, "generic"):
        return str(v)
    from .scalar import specialize_q
    try:
        qv = Fraction(q)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"--q expects 'generic' or a rational, got {q!r}") from exc
    return str(specialize_q(v, qv))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset")
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--q", default="generic", help="'generic' or a rational value")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-steps", type=int, default=None)

    ap = _Parser(prog="superhaar", description="Exact invariant integrals on Hopf superalgebras.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("preset", parents=[common], help="list or dump presets")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=_cmd_preset)

    p = sub.add_parser("nf", parents=[common], help="normal form of an element")
    p.add_argument("name", nargs="?")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_nf)

    p = sub.add_parser("pair", parents=[common], help="<matrix word, element>")
    p.add_argument("name", nargs="?")
    p.add_argument("word")
    p.add_argument("elem")
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("integral", parents=[common], help="integral of a matrix word")
    p.add_argument("name", nargs="?")
    p.add_argument("word", nargs="?")
    p.add_argument("--word", dest="word_opt")
    p.set_defaults(fn=_cmd_integral)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("name", nargs="?", help="suite name (same as --suite)")
    p.add_argument("--suite")
    p.add_argument("--json", help="write the report to this path")
    p.set_defaults(fn=_cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, out)
    except USAGE_ERRORS as exc:
        print(f"superhaar: error: {exc}", file=sys.stderr)
        return 2
    except SuperhaarError as exc:
        print(f"superhaar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

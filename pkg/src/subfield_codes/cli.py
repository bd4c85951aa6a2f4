"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 infeasible request
(enumeration too large or a bound's condition violated).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import bounds as bnd
from .codefile import CodeFile
from .codes import LinearCode, br_distribution, is_mlambda_d, trace_symplectic_dual
from .decoding import ChannelSpec, decode_nearest, simulate_channel
from .enumerator import enumerator_from_code, macwilliams_transform
from .errors import Infeasible, ParseError, SubfieldError
from .gf import build_field, format_vector, parse_vector
from .metric import as_lambda, br_weight
from .volume import ball_size

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _lambda_arg(text: str) -> Fraction:
    try:
        return as_lambda(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"invalid lambda {text!r}: {exc}") from None


def _fmt_minima(minima) -> str:
    pts = sorted(minima, key=lambda w: (-w.base, w.roof))
    return "{" + ",".join(f"({s},{t})" for s, t in pts) + "}"


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _field_from_args(args):
    if args.field:
        return CodeFile.read(args.field).field()
    if args.p is None or args.m is None:
        raise UsageError("give --field FILE or --p/--e/--m")
    modulus = [int(c) for c in args.modulus.split(",")] if args.modulus else None
    return build_field(args.p, args.e, args.m, modulus)


# ---------------------------------------------------------------------------
# commands


def cmd_weight(args, out):
    spec = _field_from_args(args)
    v = parse_vector(args.vector, spec)
    w = br_weight(v, spec)
    print(f"br_weight = {w}", file=out)
    for lam in args.lam or [Fraction(1)]:
        print(f"lambda_weight[{_fmt_frac(lam)}] = {_fmt_frac(w.value(lam))}", file=out)


def cmd_mindist(args, out):
    code = CodeFile.read(args.code).code()
    ds = br_distribution(code, threads=args.threads)
    if not ds.minima:
        raise Infeasible("the zero code has no minimum distance")
    d = ds.min_lambda(args.lam)
    print(f"d_lambda = {_fmt_frac(d)}; minima = {_fmt_minima(ds.minima)}", file=out)
    print(f"d_hamming = {_fmt_frac(ds.min_lambda(1))}", file=out)
    if isinstance(code, LinearCode) and args.lam >= 1:
        v = is_mlambda_d(code, args.lam, ds)
        print(f"mlambda_d = {'yes' if v.is_optimal else 'no'} "
              f"(floor((d-1)/lambda) = {v.lhs}, n-k = {v.singleton_rhs})", file=out)


def cmd_ball(args, out):
    size = ball_size(args.n, Fraction(args.r), args.lam, args.q, args.m)
    print(size, file=out)
    print(f"log_q^m = {math.log(size) / math.log(args.q ** args.m):.6f}", file=out)


def cmd_bounds(args, out):
    rows = bnd.bounds_table(args.q, args.m, args.lam, Fraction(args.d), args.n_from, args.n_to)
    text = bnd.bounds_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=out)
    else:
        out.write(text)


def _emit_enumerator(w, as_csv, out):
    out.write(w.to_csv() if as_csv else w.to_text() + "\n")


def cmd_enumerator(args, out):
    code = CodeFile.read(args.code).code()
    _emit_enumerator(enumerator_from_code(code, threads=args.threads), args.csv, out)


def cmd_macwilliams(args, out):
    cf = CodeFile.read(args.code)
    code = cf.code()
    spec = code.spec
    if spec.m != 2:
        raise UsageError("the MacWilliams transform needs m = 2")
    w = enumerator_from_code(code, threads=args.threads)
    _emit_enumerator(macwilliams_transform(w, code.size, spec.q), args.csv, out)


def cmd_dual(args, out):
    cf = CodeFile.read(args.code)
    code = cf.code()
    gamma = cf.gamma
    if args.gamma is not None:
        from .gf import parse_element

        gamma = parse_element(args.gamma, code.spec).value
    dual = trace_symplectic_dual(code, gamma, name=(cf.name + "_dual") if cf.name else "")
    used = gamma if gamma is not None else code.spec.default_gamma()
    out.write(CodeFile.from_code(dual, gamma=used).to_text())


def cmd_decode(args, out):
    code = CodeFile.read(args.code).code()
    word = parse_vector(args.word, code.spec)
    if len(word) != code.n:
        raise UsageError(f"word has length {len(word)}, code has length {code.n}")
    r = decode_nearest(code, word, args.lam)
    print(f"codeword = {format_vector(r.codeword, code.spec)}", file=out)
    print(f"distance = {_fmt_frac(r.distance)}", file=out)
    print(f"unique = {'true' if r.unique else 'false'}", file=out)
    print(f"ties = {r.ties}", file=out)


def cmd_simulate(args, out):
    code = CodeFile.read(args.code).code()
    try:
        channel = ChannelSpec(args.p_base, args.p_roof, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = simulate_channel(code, args.lam, channel, args.trials)
    for key, val in [("trials", r.trials), ("failures", r.failures),
                     ("word_error_rate", f"{r.word_error_rate:.6f}"),
                     ("ci_low", f"{r.ci_low:.6f}"), ("ci_high", f"{r.ci_high:.6f}"),
                     ("mean_base_errors", f"{r.mean_base_errors:.6f}"),
                     ("mean_roof_errors", f"{r.mean_roof_errors:.6f}"), ("ties", r.ties)]:
        print(f"{key} = {val}", file=out)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="subfield-codes", description="Codes in the lambda-subfield metric.")
    ap.add_argument("--threads", type=int, default=1, help="enumeration threads (default 1)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def lam_opt(p, required=True, **kw):
        p.add_argument("--lambda", dest="lam", type=_lambda_arg, required=required,
                       help="lambda as an integer or num/den", **kw)

    p = sub.add_parser("weight", help="BR and lambda weights of a vector")
    p.add_argument("vector")
    p.add_argument("--field", help="code file providing the field block")
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--m", type=int)
    p.add_argument("--modulus", help="comma-separated coefficients, low to high")
    lam_opt(p, required=False, action="append")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("mindist", help="BR-minimal distances and d_lambda")
    p.add_argument("code")
    lam_opt(p)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("ball", help="exact ball size")
    for k in ("n", "q", "m"):
        p.add_argument(f"--{k}", type=int, required=True)
    p.add_argument("--r", type=Fraction, required=True)
    lam_opt(p)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("bounds", help="CSV of log_{q^m} bounds over a range of n")
    for k in ("q", "m"):
        p.add_argument(f"--{k}", type=int, required=True)
    lam_opt(p)
    p.add_argument("--d", type=Fraction, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    for name, func, hlp in (("enumerator", cmd_enumerator, "subfield weight enumerator"),
                            ("macwilliams", cmd_macwilliams, "enumerator of the dual via MacWilliams")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("code")
        p.add_argument("--csv", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("dual", help="trace-symplectic dual as an additive code file")
    p.add_argument("code")
    p.add_argument("--gamma")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("decode", help="nearest codeword in the lambda-subfield metric")
    p.add_argument("code")
    p.add_argument("word")
    lam_opt(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="asymmetric channel Monte Carlo")
    p.add_argument("code")
    lam_opt(p)
    p.add_argument("--p-base", type=float, required=True)
    p.add_argument("--p-roof", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=err)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SubfieldError as exc:
        print(f"invalid input: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

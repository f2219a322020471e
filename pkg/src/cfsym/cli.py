"""Command-line front end: ``cfsym <subcommand> [flags]``."""

import argparse
import json
import sys
from fractions import Fraction

from .cf import (
    CFWord,
    detect_k_fold,
    evaluate,
    expand_rational,
    iter_expand_pair,
    normalize_to_simple,
    parse_cfword,
)
from .classifier import classify_fourteen, oracle_specializable, residue_report
from .errors import CFError
from .exact import Polynomial, format_polynomial, parse_polynomial, parse_rational
from .folding import FoldSpec, duplicate_build, k_fold_build
from .generators import (
    ExponentSpec,
    IterationSpec,
    chebyshev,
    folded_series_word,
    folded_sum_word,
    merged_exponents,
    parse_f,
    product_word,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _items(text):
    """Split ``a;b;c`` (or a single item) into strings."""
    return [t.strip() for t in text.split(";") if t.strip()]


def _scalar(text, poly):
    return parse_polynomial(text) if poly else parse_rational(text)


def _word(args):
    if not args.word:
        raise UsageError("--word is required")
    return parse_cfword(args.word)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")


def _show(word, args):
    if args.simple:
        if word.ring != "rational":
            raise UsageError("--simple needs a numeric word (use --at)")
        word = normalize_to_simple(word)
    return word


def _emit(word, args, out):
    if args.json:
        if word.ring == "rational":
            cf = [str(a) for a in word.quotients]
        else:
            cf = [format_polynomial(a) for a in word.quotients]
        out.write(json.dumps({"cf": cf}) + "\n")
    elif word.ring == "rational":
        out.write(str(word) + "\n")
    else:
        out.write(word.pretty() + "\n")


def cmd_expand(args, out):
    if args.rational is not None:
        word = expand_rational(parse_rational(args.rational))
    elif args.word:
        word = parse_cfword(args.word)
        if word.ring == "rational":
            word = expand_rational(evaluate(word))
        else:
            value = evaluate(word)
            word = CFWord(list(iter_expand_pair(value.num, value.den)))
    elif args.f is not None and args.g is not None:
        # g / f over Q(x)
        word = CFWord(list(iter_expand_pair(parse_f(args.g), parse_f(args.f))))
    else:
        raise UsageError("expand needs --rational, --word, or --f and --g")
    _emit(word, args, out)


def cmd_classify(args, out):
    _need(args, "f")
    f = parse_f(args.f)
    case = classify_fourteen(f)
    N = 4 if args.terms is None else args.terms
    verdict = oracle_specializable(f, N)
    if args.json:
        out.write(json.dumps({
            "case": case.id,
            "congruence": None if case.id is None else case.describe().split(": ", 1)[1],
            "oracle": verdict,
            "residues": {k: format_polynomial(v) for k, v in residue_report(f).items()},
        }) + "\n")
        return
    out.write(f"{case.describe()}; oracle: {verdict}\n")


def cmd_fold(args, out):
    word = _word(args)
    if args.xs is None:
        raise UsageError("--xs is required")
    poly = word.ring != "rational"
    xs = [_scalar(t, poly) for t in _items(args.xs)]
    if args.k is not None and args.k != len(xs) + 1:
        raise UsageError(f"--k {args.k} needs {args.k - 1} separators, got {len(xs)}")
    built = k_fold_build(FoldSpec(word[0], word.quotients[1:], xs))
    _emit(_show(built, args), args, out)


def cmd_duplicate(args, out):
    word = _word(args)
    if args.xs is None:
        raise UsageError("--xs is required")
    xs = _items(args.xs)
    if len(xs) != 1:
        raise UsageError("duplicate takes exactly one separator")
    built, _ = duplicate_build(word, _scalar(xs[0], word.ring != "rational"))
    _emit(_show(built, args), args, out)


def cmd_chebyshev(args, out):
    _need(args, "k")
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    T = chebyshev(args.k)
    if args.at is not None:
        out.write(f"{T(int(args.at))}\n")
    elif args.json:
        out.write(json.dumps({"coeffs": [str(c) for c in T.coeffs]}) + "\n")
    else:
        out.write(T.pretty() + "\n")


def _count(args):
    if args.terms is None:
        raise UsageError("--terms is required")
    if args.terms < 1:
        raise UsageError("--terms must be at least 1")
    return args.terms - 1


def cmd_sum(args, out):
    N = _count(args)
    if args.exps:
        if args.base is None:
            raise UsageError("--exps needs --base")
        specs = [ExponentSpec.parse(e) for e in args.exps]
        base = parse_f(args.base) if "," in args.base else Fraction(parse_rational(args.base))
        if isinstance(base, Polynomial):
            terms = [base ** e for e in merged_exponents(specs, N + 1)]
        else:
            if base.denominator != 1:
                raise UsageError("--base must be an integer or a polynomial")
            terms = [int(base) ** e for e in merged_exponents(specs, N + 1)]
        word, _ = folded_series_word(terms)
    else:
        _need(args, "f")
        word = folded_sum_word(IterationSpec(parse_f(args.f), N, args.at))
    _emit(_show(word, args), args, out)


def cmd_product(args, out):
    _need(args, "f")
    N = _count(args)
    word = product_word(IterationSpec(parse_f(args.f), N, args.at))
    _emit(_show(word, args), args, out)


def cmd_detect(args, out):
    word = _word(args)
    ks = [args.k] if args.k is not None else range(2, len(word) + 1)
    found = []
    for k in ks:
        if k < 2 or (len(word) - k) % k or len(word) - k < k:
            continue
        h = (len(word) - k) // k
        hit = detect_k_fold(word, h, k)
        if hit is not None:
            found.append((k, hit))
    if args.json:
        out.write(json.dumps({"folds": [
            {"k": k, "a0": str(h.a0), "w": [str(a) for a in h.w], "xs": [str(x) for x in h.xs]}
            for k, h in found]}) + "\n")
        return
    if not found:
        out.write("no k-fold pattern\n")
    for k, h in found:
        w = ", ".join(str(a) for a in h.w)
        out.write(f"k={k}: a0={h.a0}; w=[{w}]; xs={', '.join(str(x) for x in h.xs)}\n")


COMMANDS = {
    "expand": cmd_expand,
    "classify": cmd_classify,
    "fold": cmd_fold,
    "duplicate": cmd_duplicate,
    "chebyshev": cmd_chebyshev,
    "sum": cmd_sum,
    "product": cmd_product,
    "detect": cmd_detect,
}


def build_parser():
    p = _Parser(prog="cfsym", description="Continued-fraction symmetry toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--f", help="polynomial: coefficients c0,c1,... or chebyshev:l")
        s.add_argument("--g", help="second polynomial")
        s.add_argument("--at", type=int, help="integer specialization point")
        s.add_argument("--terms", type=int, help="number of series/product terms")
        s.add_argument("--k", type=int, help="fold count, or Chebyshev index")
        s.add_argument("--xs", help="separators, ';'-separated")
        s.add_argument("--word", help="continued fraction, e.g. [1, 2, 3] or [(0), (-1,1)]")
        s.add_argument("--base", help="base of a reciprocal-power sum")
        s.add_argument("--exps", action="append", help="geometric:l | factorial | scaled:c,l (repeatable)")
        s.add_argument("--rational", help="a rational number a/b")
        s.add_argument("--simple", action="store_true", help="normalize to a simple continued fraction")
        s.add_argument("--json", action="store_true", help="JSON output")
    return p


VALUE_FLAGS = {"--f", "--g", "--at", "--terms", "--k", "--xs", "--word", "--base", "--exps", "--rational"}


def _glue_negatives(argv):
    """Let ``--f -1,0,2`` through: argparse would read ``-1,0,2`` as a flag."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(_glue_negatives(list(argv)))
        if args.command is None:
            raise UsageError("a subcommand is required")
        COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    except CFError as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return 1
    except (ValueError, ZeroDivisionError) as e:
        # malformed numbers and polynomials are usage errors
        err.write(f"usage error: {e}\n")
        return 2
    return 0


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()

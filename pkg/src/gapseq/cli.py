"""Command-line front end: ``gapseq <command> ...`` or ``python -m gapseq``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 domain error (not a factor, d < 2, index out of range), 4 size cap or
integer range exceeded.
"""

import argparse
import json
import sys

from . import classify, gaps, kernel, oracle, positions, words
from .errors import DomainError

SCHEMA = 1

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_OVERFLOW = 0, 1, 2, 3, 4


def _word_arg(text):
    if not text or text.strip("ab"):
        raise argparse.ArgumentTypeError(f"word must be a nonempty string over {{a,b}}: {text!r}")
    return text


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def _show(w):
    return w if w else "ε"


def _kernel_index(args):
    return kernel.KernelIndex(args.d, args.m, args.i)


def cmd_gen(args):
    make = oracle.cutting_prefix if args.geometric else words.fixed_point_prefix
    word = make(args.d, args.n)
    return {"d": args.d, "n": args.n, "geometric": args.geometric, "word": word}, [word]


def _block(index, word, g0, prof):
    data = {
        "index": index.as_dict(),
        "name": str(index),
        "word": word,
        "length": len(word),
        "G_0": g0,
    }
    data.update(prof.to_json())
    lines = [
        f"word={word}",
        f"length={len(word)}",
        f"G_0={_show(g0)}",
        f"G_A={prof.gap_a}",
        f"G_B={prof.gap_b}",
        f"B={prof.switch}",
        f"sequence={_seq_name(prof)}",
    ]
    return data, lines


def _seq_name(prof):
    return "F" if prof.image_index is None else f"sigma_{prof.image_index}(F)"


def cmd_kernel(args):
    k = _kernel_index(args)
    word = kernel.kernel_word(k)
    return _block(k, word, gaps.gap_zero(word, k.d), gaps.kernel_gaps(k))


def cmd_envelope(args):
    k = _kernel_index(args)
    word = kernel.envelope_word(k)
    return _block(k, word, gaps.gap_zero(word, k.d), gaps.envelope_gaps(k))


def cmd_ker(args):
    k, pos = kernel.kernel_of(args.word, args.d)
    word = kernel.kernel_word(k)
    data = {"input": args.word, "kernel": k.as_dict(), "name": str(k), "word": word, "position": pos}
    return data, [f"kernel={k}", f"word={word}", f"position={pos}"]


def cmd_decompose(args):
    star = kernel.star_decompose(args.word, args.d)
    mu1, core, mu2 = star.pieces()
    data = dict(star.as_dict(), input=args.word, mu1=mu1, kernel=core, mu2=mu2)
    lines = [
        f"m={star.m} i={star.i} x={star.x} y={star.y}",
        f"mu1={_show(mu1)}",
        f"kernel={core}",
        f"mu2={_show(mu2)}",
    ]
    return data, lines


def cmd_gaps(args):
    star = kernel.star_decompose(args.word, args.d)
    prof = gaps.factor_gaps(args.word, args.d)
    labels = gaps.gap_sequence_labels(args.d, star.i, args.p)
    g0 = gaps.gap_zero(args.word, args.d)
    data = dict(prof.to_json(), input=args.word, kernel=star.kernel.as_dict(), labels=labels, G_0=g0)
    lines = [
        f"kernel={star.kernel}",
        f"G_0={_show(g0)}",
        f"G_A={prof.gap_a}",
        f"G_B={prof.gap_b}",
        f"B={prof.switch}",
        f"sequence={_seq_name(prof)}",
        f"labels={labels}",
    ]
    return data, lines


def cmd_pos(args):
    pos = positions.factor_position(args.word, args.d, args.p)
    return {"input": args.word, "p": args.p, "position": pos}, [str(pos)]


def cmd_classify(args):
    tag = classify.classify_type(args.word, args.d)
    rel = sorted(classify.relation_sets(args.word, args.d))
    pal = classify.palindrome_check_star(args.word, args.d)
    data = {"input": args.word, "type": tag.to_json(), "relations": rel, "palindrome": pal}
    lines = [f"type={tag}"]
    if tag.order_zero:
        lines.append(f"sign_match={tag.sign_match}")
    lines += [f"relations={','.join(rel)}", f"palindrome={'yes' if pal else 'no'}"]
    return data, lines


def cmd_palindromes(args):
    k = _kernel_index(args)
    found = classify.palindromes_with_kernel(k)
    return {"index": k.as_dict(), "palindromes": found}, found


def cmd_verify(args):
    report = oracle.verify_all(args.d, args.m_max, args.len_max, args.p_max)
    ok = oracle.all_pass(report)
    lines = []
    for r in report:
        line = f"{'PASS' if r['pass'] else 'FAIL'} {r['check']} cases={r['cases']}"
        if not r["pass"]:
            line += " counterexample=" + json.dumps(r["counterexample"], sort_keys=True)
        lines.append(line)
    return {"checks": report, "pass": ok}, lines


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS,
                        help="largest word to materialize, in letters")

    parser = argparse.ArgumentParser(prog="gapseq", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--cap", type=_positive, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("-d", type=int, required=True)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "prefix of F_{d,oo}")
    p.add_argument("-n", type=_nonneg, required=True)
    p.add_argument("--geometric", action="store_true", help="use the line-crossing generator")

    for name, func in (("kernel", cmd_kernel), ("envelope", cmd_envelope), ("palindromes", cmd_palindromes)):
        p = add(name, func, f"{name} of index (m, i)")
        p.add_argument("-m", type=int, required=True)
        p.add_argument("-i", type=int, required=True)

    for name, func in (("ker", cmd_ker), ("decompose", cmd_decompose), ("classify", cmd_classify)):
        p = add(name, func, f"{name} a word")
        p.add_argument("word", type=_word_arg)

    p = add("gaps", cmd_gaps, "gap profile and labels of a factor")
    p.add_argument("word", type=_word_arg)
    p.add_argument("-p", type=_nonneg, default=20, help="number of gap labels")

    p = add("pos", cmd_pos, "position of the p-th occurrence")
    p.add_argument("word", type=_word_arg)
    p.add_argument("-p", type=int, required=True)

    p = add("verify", cmd_verify, "run the brute-force cross-checks")
    p.add_argument("--m-max", type=_nonneg, default=3)
    p.add_argument("--len-max", type=_nonneg, default=12)
    p.add_argument("--p-max", type=_nonneg, default=50)
    return parser


def _emit(fmt, data, lines, out):
    if fmt == "json":
        out.write(json.dumps(dict(data, schema=SCHEMA), sort_keys=True) + "\n")
    else:
        for line in lines:
            out.write(f"{line}\n")


def _fail(fmt, kind, message, code):
    if fmt == "json":
        payload = {"schema": SCHEMA, "error": {"kind": kind, "message": message}}
        sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"error: {kind}: {message}\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    fmt = args.format
    try:
        if args.cap is not None:
            with words.size_cap(args.cap):
                data, lines = args.func(args)
        else:
            data, lines = args.func(args)
    except DomainError as exc:
        return _fail(fmt, exc.kind, str(exc), EXIT_DOMAIN)
    except OverflowError as exc:
        return _fail(fmt, "overflow", str(exc), EXIT_OVERFLOW)
    data["command"] = args.command
    _emit(fmt, data, lines, sys.stdout)
    if args.command == "verify" and not data["pass"]:
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

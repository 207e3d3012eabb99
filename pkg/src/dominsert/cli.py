"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Bars are written as a trailing apostrophe (3') or a leading minus (-3) on
input and rendered with the apostrophe on output.  All output is ASCII or
JSON; every command is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import insertion, series, signimbalance, tableaux, verify, words
from .partitions import as_partition, partition_str
from .polynomials import PARAMS
from .render import render_tableau
from .words import ColoredBiword


def _parse_shape(text):
    text = text.strip()
    if text in ("", "()", "-"):
        return ()
    return as_partition(int(p) for p in text.replace("(", "").replace(")", "").split(","))


def _spin_str(tab):
    return str(Fraction(tab.vertical_count(), 2))


def _insert_payload(word, core):
    if isinstance(word, ColoredBiword):
        p, q = insertion.biword_insert(word, core)
        frames = None
        source = str(word)
    else:
        result = insertion.insert_word(word, core)
        p, q = result.p, result.q
        frames = result.frames
        source = words.word_str(word)
    return source, p, q, frames


def cmd_insert(args):
    parsed = words.parse_biword(args.word)
    if "/" not in args.word and words.is_signed_permutation(parsed.bottom):
        word = parsed.bottom
    else:
        word = parsed
    source, p, q, frames = _insert_payload(word, args.core)
    if args.format == "json":
        payload = {
            "word": source,
            "core": args.core,
            "shape": list(p.shape()),
            "tc": words.total_color(word),
            "spin_p": _spin_str(p),
            "spin_q": _spin_str(q),
            "P": p.to_json(),
            "Q": q.to_json(),
        }
        if args.trace and frames is not None:
            payload["frames"] = [f.to_json() for f in frames]
        print(json.dumps(payload, indent=2))
        return 0
    if args.trace:
        if frames is None:
            print("(trace is available for signed permutations only)", file=sys.stderr)
        else:
            for i, frame in enumerate(frames, start=1):
                print(f"after step {i}:")
                print(render_tableau(frame))
                print()
    print(f"word: {source}   core: {args.core}")
    print(f"shape: {partition_str(p.shape())}   tc: {words.total_color(word)}"
          f"   sp(P): {_spin_str(p)}   sp(Q): {_spin_str(q)}")
    print("P:")
    print(render_tableau(p))
    print("Q:")
    print(render_tableau(q))
    return 0


def cmd_growth(args):
    word = words.parse_word(args.word)
    diagram = insertion.growth(word, args.core)
    if args.format == "json":
        print(json.dumps(diagram.to_json(), indent=2))
        return 0
    print(insertion.growth_str(diagram, cells=args.cells))
    return 0


def cmd_reverse(args):
    if args.input:
        with open(args.input) as handle:
            payload = json.load(handle)
    else:
        payload = json.load(sys.stdin)
    p = tableaux.DominoTableau.from_json(payload["P"])
    q = tableaux.DominoTableau.from_json(payload["Q"])
    core = int(payload.get("core", args.core))
    word = insertion.biword_reverse(p, q, core)
    perm = [bl.bottom for bl in word.letters]
    if words.is_signed_permutation(word.bottom) and all(
        bl.top.value == i for i, bl in enumerate(word.letters, start=1)
    ):
        text = words.word_str(perm)
    else:
        text = str(word)
    if args.format == "json":
        print(json.dumps({"word": text, "core": core}))
    else:
        print(text)
    return 0


def cmd_imbalance(args):
    if args.all_of:
        m = args.all_of
        poly = signimbalance.imbalance_polynomial(m)
        target = signimbalance.imbalance_target(m)
        if args.format == "json":
            print(json.dumps({"m": m, "polynomial": str(poly), "target": str(target),
                              "equal": poly == target}))
        else:
            print(f"sum over shapes of {m}: {poly}")
            print(f"(x + y)^{m // 2}:  {target}")
            print("equal" if poly == target else "DIFFERENT")
        return 0 if poly == target else 1
    lam = _parse_shape(args.shape)
    value = signimbalance.imbalance(lam)
    if args.format == "json":
        print(json.dumps({"shape": list(lam), "imbalance": value}))
    else:
        print(value)
    return 0


def _apply_params(series_value, params):
    if params:
        series_value = series_value.subs(params)
    return series_value


def cmd_series(args):
    params = {}
    if args.params:
        for piece in args.params.split(","):
            name, _, value = piece.partition("=")
            name = name.strip()
            if name not in PARAMS:
                raise ValueError(f"unknown parameter {name!r} (expected a, b, c, s)")
            params[name] = int(value)
    if args.action == "expand":
        if args.g_function:
            lam = _parse_shape(args.g_function)
            value = series.domino_function(lam, args.vars, args.degree)
        elif args.schur:
            lam = _parse_shape(args.schur)
            value = series.schur(lam, args.vars, args.degree)
        else:
            value = series.weighted_domino_sum(args.core, args.vars, args.degree)
        value = _apply_params(value, params)
        if args.format == "json":
            print(json.dumps({"terms": {value.monomial_str(e): str(c) for e, c in sorted(value.terms.items())}}))
        else:
            print(value)
        return 0
    # action == "check"
    cores = [int(c) for c in args.cores.split(",")]
    records = []
    for core in cores:
        records.append(verify.check_cauchy(core, args.vars, args.degree))
        records.append(verify.check_dual_cauchy(core, args.vars, args.degree))
        records.append(verify.check_weighted_series(core, args.vars, args.degree))
    records.append(verify.check_series_core_independence(args.vars, args.degree, tuple(cores)))
    records.append(verify.check_specializations(args.vars, args.degree))
    return _emit_records(records, args.format)


def cmd_enumerate(args):
    if args.what == "shapes":
        from .partitions import enumerate_with_core

        items = enumerate_with_core(args.core, args.n)
        if args.format == "json":
            print(json.dumps([list(lam) for lam in items]))
        else:
            for lam in items:
                print(partition_str(lam))
    elif args.what == "partitions":
        from .partitions import enumerate_partitions

        items = enumerate_partitions(args.n)
        if args.format == "json":
            print(json.dumps([list(lam) for lam in items]))
        else:
            for lam in items:
                print(partition_str(lam))
    elif args.what == "sdt":
        lam = _parse_shape(args.shape)
        tabs = tableaux.enumerate_standard(lam)
        if args.format == "json":
            print(json.dumps([t.to_json() for t in tabs]))
        else:
            print(f"{len(tabs)} standard tableaux of {partition_str(lam)}")
            for t in tabs:
                print(render_tableau(t))
                print()
    elif args.what == "ssdt":
        lam = _parse_shape(args.shape)
        tabs = tableaux.enumerate_semistandard(lam, args.max_value)
        if args.format == "json":
            print(json.dumps([t.to_json() for t in tabs]))
        else:
            print(f"{len(tabs)} semistandard tableaux of {partition_str(lam)} with entries <= {args.max_value}")
            for t in tabs:
                print(render_tableau(t))
                print()
    elif args.what == "involutions":
        items = words.enumerate_involutions(args.n)
        if args.format == "json":
            print(json.dumps([words.word_str(pi) for pi in items]))
        else:
            for pi in items:
                print(words.word_str(pi))
    return 0


def _emit_records(records, fmt):
    failures = sum(not rec["pass"] for rec in records)
    if fmt == "json":
        for rec in records:
            print(json.dumps(rec))
    else:
        for rec in records:
            status = "pass" if rec["pass"] else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in sorted(rec["params"].items()))
            print(f"[{status}] {rec['identity']} {params} ({rec['ms']} ms)")
            if not rec["pass"]:
                print(f"    lhs: {rec['lhs'][:400]}")
                print(f"    rhs: {rec['rhs'][:400]}")
    if fmt != "json":
        print(f"{len(records) - failures}/{len(records)} checks passed")
    return 1 if failures else 0


def cmd_verify(args):
    sizes = {
        "n": args.n,
        "length": args.length,
        "max_size": args.max_size,
        "vars": args.vars,
        "degree": args.degree,
        "poly_n": args.poly_n,
        "cores": tuple(int(c) for c in args.cores.split(",")),
    }
    records = verify.run_suite(args.suite, sizes, jobs=args.jobs)
    return _emit_records(records, args.format)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dominsert",
        description="Exact domino Schensted insertion, growth rules, and identity checks.",
    )
    parser.add_argument("--seed-free", action="store_true",
                        help="accepted for compatibility; nothing here is randomized")
    sub = parser.add_subparsers(dest="command", required=True)

    p_insert = sub.add_parser("insert", help="insert a signed word or biword")
    p_insert.add_argument("word", help="letters like \"3' 4 2 1'\" or pairs like \"1/2' 1/3\"")
    p_insert.add_argument("--core", type=int, default=0, help="staircase order of the 2-core")
    p_insert.add_argument("--trace", action="store_true", help="print the tableau after each step")
    p_insert.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_insert.set_defaults(func=cmd_insert)

    p_growth = sub.add_parser("growth", help="print the growth diagram of a signed permutation")
    p_growth.add_argument("word")
    p_growth.add_argument("--core", type=int, default=0)
    p_growth.add_argument("--cells", action="store_true", help="draw shapes as miniature diagrams")
    p_growth.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_growth.set_defaults(func=cmd_growth)

    p_reverse = sub.add_parser("reverse", help="recover the word from a JSON (P, Q) pair")
    p_reverse.add_argument("--input", help="JSON file; standard input when omitted")
    p_reverse.add_argument("--core", type=int, default=0)
    p_reverse.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_reverse.set_defaults(func=cmd_reverse)

    p_imb = sub.add_parser("imbalance", help="signed count of standard Young tableaux")
    p_imb.add_argument("shape", nargs="?", default="", help="shape like 3,3,2")
    p_imb.add_argument("--all-of", type=int, metavar="M",
                       help="four-variable polynomial over all shapes of M")
    p_imb.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_imb.set_defaults(func=cmd_imbalance)

    p_series = sub.add_parser("series", help="expand or check truncated series")
    p_series.add_argument("action", choices=("expand", "check"))
    p_series.add_argument("--vars", type=int, default=2)
    p_series.add_argument("--degree", type=int, default=3)
    p_series.add_argument("--core", type=int, default=0)
    p_series.add_argument("--cores", default="0,1,2", help="cores for the check action")
    p_series.add_argument("--g-function", metavar="SHAPE", help="expand one domino function")
    p_series.add_argument("--schur", metavar="SHAPE", help="expand one Schur polynomial")
    p_series.add_argument("--params", help="substitutions like a=0,b=1,c=1,s=1")
    p_series.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_series.set_defaults(func=cmd_series)

    p_enum = sub.add_parser("enumerate", help="list shapes, tableaux, or involutions")
    p_enum.add_argument("what", choices=("shapes", "partitions", "sdt", "ssdt", "involutions"))
    p_enum.add_argument("shape", nargs="?", default="", help="shape for sdt/ssdt")
    p_enum.add_argument("--n", type=int, default=0, help="dominoes (shapes) or size (partitions, involutions)")
    p_enum.add_argument("--core", type=int, default=0)
    p_enum.add_argument("--max-value", type=int, default=2)
    p_enum.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=verify.SUITES + ("all",))
    p_verify.add_argument("--n", type=int, default=4, help="word length bound")
    p_verify.add_argument("--length", type=int, default=4, help="biword length bound")
    p_verify.add_argument("--max-size", type=int, default=8, help="shape size bound for sign checks")
    p_verify.add_argument("--vars", type=int, default=2)
    p_verify.add_argument("--degree", type=int, default=3)
    p_verify.add_argument("--poly-n", type=int, default=6)
    p_verify.add_argument("--cores", default="0,1,2")
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_verify.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

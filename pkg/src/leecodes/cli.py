"""Command-line interface.

Payloads (JSON, CSV, point lists) go to stdout; progress and summaries go to
stderr. Exit status: 0 success, 1 usage error, 2 computation guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, criterion, lee, symfun, witness
from .modular import is_prime

EXIT_USAGE = 1
EXIT_GUARD = 2

DEFAULT_THRESHOLDS = (10, 100, 1000, 10000)
CONSTRUCTIONS = {"gw1": "dim1", "gw2": "dim2", "gwn1": "radius1"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text):
    v = int(text) if text.lstrip("-").isdigit() else None
    if v is None or v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def cmd_check(args, out):
    rep = criterion.check_n(args.n)
    if args.json:
        out.write(rep.to_json() + "\n")
    else:
        fields = rep.to_dict()
        out.write("\t".join(f"{k}={v if isinstance(v, str) else _dump(v)}"
                            for k, v in fields.items()) + "\n")
    print(f"n={rep.n}: {rep.verdict.value}", file=sys.stderr)


def cmd_scan(args, out):
    if args.thresholds is None:
        thresholds = [t for t in DEFAULT_THRESHOLDS if t < args.xmax] + [args.xmax]
    else:
        thresholds = args.thresholds
    sink_file = open(args.per_n, "w") if args.per_n else None
    try:
        sink = (lambda rep: sink_file.write(rep.to_json() + "\n")) if sink_file else None
        try:
            table = criterion.scan(args.xmax, thresholds, workers=args.threads, report_sink=sink)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    finally:
        if sink_file:
            sink_file.close()
    if args.csv:
        out.write(table.to_csv())
    else:
        out.write(f"{'threshold':>10} {'prime_count':>12} {'applicable_count':>17}\n")
        for t, pc, ac in table.rows():
            out.write(f"{t:>10} {pc:>12} {ac:>17}\n")
    if args.plot:
        from .plotting import plot_scan

        plot_scan(table, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)


def cmd_sphere(args, out):
    if args.q is not None and args.q < 2 * args.e + 1:
        raise UsageError(f"--q must be at least 2e+1 = {2 * args.e + 1}")
    if args.count_only:
        out.write(f"{lee.sphere_size(args.n, args.e)}\n")
        return
    out.write(lee.enumerate_sphere(args.n, args.e, args.q).dump())


def cmd_construct(args, out):
    code = codes.construct_gw(CONSTRUCTIONS[args.kind], args.param)
    text = json.dumps(code.to_dict(), indent=None, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"code written to {args.out}", file=sys.stderr)
    else:
        out.write(text)


def _load_code(path):
    try:
        with open(path) as fh:
            return codes.CodeSpec.from_dict(json.load(fh))
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read code file {path}: {exc}") from None


def cmd_verify(args, out):
    code = _load_code(args.codefile)
    if args.plot and code.n != 2:
        raise UsageError("--plot needs a two-dimensional code")
    try:
        result = codes.verify(code, max_points=args.max_points)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(result.to_json() + "\n")
    print(f"{result.status.value} (by {result.method})", file=sys.stderr)
    if args.plot:
        from .plotting import plot_tiling

        plot_tiling(code, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)


def cmd_search(args, out):
    try:
        outcome = witness.search(args.n, find_all=args.all, node_limit=args.node_limit,
                                 symmetry=not args.no_symmetry)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(_dump(outcome.to_dict()) + "\n")
    print(f"{len(outcome.witnesses)} witness(es), exhausted={outcome.exhausted}, "
          f"nodes={outcome.nodes_explored}", file=sys.stderr)


def verify_witness_report(n, x, kmax=None):
    p = criterion.sphere_prime(n)
    if not is_prime(p):
        raise UsageError(f"2n^2+2n+1 = {p} is composite")
    if len(x) != n:
        raise UsageError(f"expected {n} values, got {len(x)}")
    if kmax is None:
        kmax = max(1, min(10, (p - 3) // 2))
    w = witness.Witness(n, p, tuple(v % p for v in x))
    bijective = w.is_valid()
    rep = criterion.check_n(n)
    ps = symfun.power_sums(w.x, p, max(kmax, 2 * n + 4, n))
    eq1 = symfun.check_master_identity(ps, n, p, range(1, kmax + 1))
    lemma6 = lemma7 = None
    if bijective:
        chain = symfun.check_lemma_chain(w, rep.a, rep.b)
        lemma6 = {str(k): v for k, v in chain.lemma6.items()}
        lemma7 = {str(k): v for k, v in chain.lemma7.items()}
    e_n = symfun.newton_elementary(ps, n, p).e[n]
    return {
        "bijective": bijective,
        "eq1": {str(k): v for k, v in eq1.items()},
        "lemma6": lemma6,
        "lemma7": lemma7,
        "e_n_nonzero": e_n != 0,
        "n_in_X": criterion.x_set_member(n, rep.a, rep.b),
    }


def cmd_verify_witness(args, out):
    report = verify_witness_report(args.n, args.x, args.kmax)
    out.write(_dump(report) + "\n")
    print(f"bijective={report['bijective']}", file=sys.stderr)


def build_parser():
    parser = _Parser(prog="leecodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="apply the criterion to one n")
    p.add_argument("n", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="count prime and criterion-applicable n up to xmax")
    p.add_argument("xmax", type=_positive)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--thresholds", type=_int_list)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--per-n", metavar="OUT.jsonl")
    p.add_argument("--plot", metavar="FIG", help="also render the counts to an image file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("sphere", help="list the points of a Lee sphere")
    p.add_argument("n", type=_positive)
    p.add_argument("e", type=_nonneg)
    p.add_argument("--q", type=_positive)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_sphere)

    p = sub.add_parser("construct", help="emit a classical perfect Lee code as JSON")
    p.add_argument("kind", choices=sorted(CONSTRUCTIONS))
    p.add_argument("param", type=_positive)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a code file for perfectness")
    p.add_argument("codefile")
    p.add_argument("--max-points", type=_positive, default=codes.DEFAULT_MAX_POINTS)
    p.add_argument("--plot", metavar="FIG", help="render the tiling (n = 2 only)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-witness", help="search for bijective homomorphisms")
    p.add_argument("n", type=_positive)
    p.add_argument("--all", action="store_true")
    p.add_argument("--node-limit", type=_positive)
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-witness", help="run the algebraic checks on a candidate witness")
    p.add_argument("n", type=_positive)
    p.add_argument("x", type=_int_list)
    p.add_argument("--kmax", type=_positive)
    p.set_defaults(func=cmd_verify_witness)
    return parser


def run(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"leecodes {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except codes.TooLargeError as exc:
        print(f"leecodes {args.command}: too large for direct verification: {exc}", file=sys.stderr)
        return EXIT_GUARD
    return 0


def main(argv=None):
    sys.exit(run(argv))

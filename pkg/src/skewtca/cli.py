"""Command-line driver: ``skewtca <subcommand> [flags]``.

Exit status is 0 when every check passes (warnings included), 2 when one
fails, 3 when an enumeration guard is exceeded and 64 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Optional, Sequence

from skewtca import __version__, brauer, koszul, phi, schur, suites
from skewtca.partition import OddSizeWarning, Partition, q1_of_size
from skewtca.reports import Report, jsonable
from skewtca.superpoly import GuardExceeded

EXIT_OK, EXIT_FAIL, EXIT_GUARD, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings in reports")

    p = Parser(prog="skewtca", description="Exact checks for the skew tca of Sym^2 and its super avatar.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    s = sub.add_parser("q1", parents=[common], help="list Q1 partitions of a size")
    s.add_argument("--size", type=int, required=True)

    s = sub.add_parser("lr", parents=[common], help="one Littlewood-Richardson coefficient")
    s.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    s.add_argument("--mu", type=partition_arg, required=True)
    s.add_argument("--nu", type=partition_arg, required=True)

    s = sub.add_parser("rect", parents=[common], help="rectangle LR scan")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("decompose", parents=[common], help="Schur expansion of a plethysm with Sym^2")
    s.add_argument("--op", choices=("wedge", "sym"), required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)

    for name in ("pn-top", "unit-ideal", "iwasawa"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("hwv", parents=[common], help="highest weight vector check")
    s.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("ess-bound", parents=[common])
    s.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    s.add_argument("--n0", type=int, required=True)

    s = sub.add_parser("nzd", parents=[common])
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--degree", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)

    br = sub.add_parser("brauer", help="signed Brauer category").add_subparsers(
        dest="action", required=True, parser_class=Parser)
    s = br.add_parser("compose", parents=[common],
                      help='compose diagrams, e.g. --g "2->0 : (1 2) map -" --f "4->2 : (3 4) map 1:1 2:2"')
    s.add_argument("--g", required=True)
    s.add_argument("--f", required=True)
    s = br.add_parser("homdim", parents=[common])
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s = br.add_parser("functor-check", parents=[common])
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--max-size", type=int, default=6)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s = br.add_parser("associativity", parents=[common])
    s.add_argument("--max-size", type=int, default=6)

    ph = sub.add_parser("phi", help="the map into the Borel coordinate ring").add_subparsers(
        dest="action", required=True, parser_class=Parser)
    s = ph.add_parser("leading", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--gen", help='one generator such as "x[1,2]"; default lists all')
    s = ph.add_parser("inject", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--inject-duplicate", action="store_true", help="negative control")
    s = ph.add_parser("localize", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s = ph.add_parser("extend", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--degree", type=int, default=6)

    s = sub.add_parser("ext", parents=[common], help="Koszul Ext multiplicity")
    s.add_argument("--side", choices=("sym", "wedge"), required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    s.add_argument("--mu", type=partition_arg, required=True)
    s.add_argument("--branch", choices=koszul.BRANCHES + ("both",), default="both")

    s = sub.add_parser("ext-table", parents=[common], help="table of nonzero Ext multiplicities")
    s.add_argument("--side", choices=("sym", "wedge"), required=True)
    s.add_argument("--max-i", type=int, default=2)
    s.add_argument("--max-size", type=int, default=6)
    s.add_argument("--csv", action="store_true")

    s = sub.add_parser("remark", parents=[common])
    s.add_argument("--dmax", type=int, default=6)

    s = sub.add_parser("verify-all", parents=[common], help="run a whole profile")
    s.add_argument("--profile", choices=("quick", "full"), default="quick")
    s.add_argument("--seed", type=int, default=0)
    return p


# ------------------------------------------------------------------ output

def emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_text(r: Report) -> str:
    params = " ".join(f"{k}={jsonable(v)}" for k, v in sorted(r.params.items()))
    line = f"{r.status.upper():4}  {r.suite}  {params}"
    if r.timing is not None:
        line += f"  ({r.timing:.3f}s)"
    out = [line]
    if r.status != "pass":
        for w in r.witnesses[:5]:
            out.append(f"      witness: {json.dumps(jsonable(w), sort_keys=True, ensure_ascii=False)}")
        for d in r.details.get("discrepancies", []):
            out.append(f"      discrepancy: {d}")
    return "\n".join(out) + "\n"


def finish_reports(reports: list[Report], args, **meta) -> int:
    if args.format == "json":
        emit(dumps(suites.document(reports, **meta)), args.output)
    else:
        emit("".join(report_text(r) for r in reports), args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def finish_value(value, text: str, args) -> int:
    emit(dumps({"schema": suites.SCHEMA, "result": value}) if args.format == "json" else text + "\n",
         args.output)
    return EXIT_OK


# ---------------------------------------------------------------- commands

def run_reports(jobs, args, **meta) -> int:
    return finish_reports(suites.run_plan(jobs, timing=args.timing), args, **meta)


def dispatch(args) -> int:
    cmd = args.command
    if cmd == "q1":
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OddSizeWarning)
            parts = q1_of_size(args.size)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return finish_value([str(p) for p in parts], "\n".join(str(p) for p in parts), args)
    if cmd == "lr":
        c = schur.lr_coefficient(args.lam, args.mu, args.nu)
        return finish_value(c, str(c), args)
    if cmd == "decompose":
        fn = schur.wedge_of_sym2 if args.op == "wedge" else schur.sym_of_sym2
        vec = fn(args.d, args.n)
        return finish_value(vec.to_json(), str(vec), args)
    simple = {"rect": ("rect", {"n": "n", "k": "k"}),
              "pn-top": ("pn-top", {"n": "n"}),
              "unit-ideal": ("unit-ideal", {"n": "n"}),
              "iwasawa": ("iwasawa", {"n": "n"}),
              "remark": ("remark", {"dmax": "dmax"}),
              "nzd": ("nzd", {"n": "n", "degree_bound": "degree", "seed": "seed"})}
    if cmd in simple:
        job, mapping = simple[cmd]
        return run_reports([(job, {k: getattr(args, v) for k, v in mapping.items()})], args)
    if cmd == "hwv":
        return run_reports([("hwv", {"n": args.n, "lam": str(args.lam)})], args)
    if cmd == "ess-bound":
        return run_reports([("ess-bound", {"lam": str(args.lam), "n0": args.n0})], args)
    if cmd == "brauer":
        return dispatch_brauer(args)
    if cmd == "phi":
        return dispatch_phi(args)
    if cmd == "ext":
        branches = koszul.BRANCHES if args.branch == "both" else (args.branch,)
        q = koszul.ExtQuery(koszul.Side(args.side), args.i, args.lam, args.mu)
        rows = [koszul.ext_dim(q, b).to_dict() for b in branches]
        text = "\n".join(f"{r['branch']}: {r['multiplicity']}" for r in rows)
        return finish_value(rows, text, args)
    if cmd == "ext-table":
        rows = koszul.ext_table(koszul.Side(args.side), args.max_i, args.max_size)
        if args.csv:
            emit(koszul.table_csv(rows), args.output)
            return EXIT_OK
        text = "\n".join(f"{r['branch']:13} i={r['i']} lambda={r['lambda']} mu={r['mu']} "
                         f"mult={r['multiplicity']}" for r in rows)
        return finish_value(rows, text, args)
    if cmd == "verify-all":
        jobs = suites.plan(args.profile, args.seed)
        return run_reports(jobs, args, profile=args.profile, seed=args.seed)
    raise UsageError(f"unknown command {cmd}")


def dispatch_brauer(args) -> int:
    if args.action == "compose":
        try:
            sg, g = brauer.BrauerMorphism.parse(args.g)
            sf, f = brauer.BrauerMorphism.parse(args.f)
            s, h = brauer.compose(g, f)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sign = s * sg * sf
        return finish_value({"sign": sign, "morphism": str(h)}, f"{'+' if sign > 0 else '-'} {h}", args)
    if args.action == "homdim":
        d = brauer.hom_dim(args.p, args.q)
        return finish_value(d, str(d), args)
    if args.action == "functor-check":
        return run_reports([("brauer-functor", {"n": args.n, "max_size": args.max_size,
                                                "trials": args.trials, "seed": args.seed})], args)
    return run_reports([("brauer-associativity", {"max_size": args.max_size})], args)


def dispatch_phi(args) -> int:
    if args.action == "leading":
        ctx = phi.BbarContext(args.n)
        names = [args.gen] if args.gen else [v.name for v in ctx.source.table.variables]
        out = {}
        for name in names:
            if name not in ctx.source.table:
                raise UsageError(f"no generator {name} at rank {args.n}")
            img = phi.phi_image(ctx, name)
            out[name] = {"image": img.dump(),
                         "leading": ctx.table.format_monomial(ctx.leading_term(img))}
        text = "\n".join(f"{k}: {v['leading']}    [{v['image']}]" for k, v in out.items())
        return finish_value(out, text, args)
    if args.action == "inject":
        return run_reports([("phi-inject", {"n": args.n, "degree_bound": args.degree,
                                            "inject_duplicate": args.inject_duplicate})], args)
    if args.action == "localize":
        return run_reports([("phi-localize", {"n": args.n})], args)
    return run_reports([("phi-extend", {"n": args.n, "degree_bound": args.degree})], args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return dispatch(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError) as exc:
        print(f"skewtca: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

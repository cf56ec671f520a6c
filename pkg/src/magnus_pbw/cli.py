"""Command-line entry point: ``magnus-pbw <command> ...``."""
from __future__ import annotations

import argparse
import json
import random
import sys

from .free.perms import enumerate_lie_permutations
from .free.serialize import dumps, fraction_to_str, lie_to_json
from .mu import CONSTRUCTIONS, compute_mu, mu_dynkin
from .mu.series import alpha_coefficients, beta_coefficients, beta_tilde_coefficients
from .pbw import bch_series, build_free_nilpotent
from .render import (
    alpha_table_latex,
    beta_table_latex,
    lie_to_latex,
    lie_to_text,
    tree_to_text,
)
from .verify import SUITES, VerifyConfig, run_suite

BCH_NAMES = {1: "X", 2: "Y"}


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _pivot(value: str):
    if value == "averaged":
        return value
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pivot must be an integer or 'averaged', got {value!r}")


def cmd_mu(args) -> str:
    if args.pivot is not None:
        if args.construction != "dynkin":
            raise UsageError("--pivot only applies to the dynkin construction")
        result = mu_dynkin(args.n, args.pivot)
    else:
        result = compute_mu(args.n, args.construction)
    if args.format == "json":
        return dumps({"n": result.n, "construction": result.construction, "value": lie_to_json(result.value)})
    if args.format == "latex":
        return f"\\mu_{{{args.n}}} = {lie_to_latex(result.value)}"
    return f"mu_{args.n} = {lie_to_text(result.value)}"


def cmd_coeffs(args) -> str:
    m = args.max
    if args.kind == "alpha":
        table = alpha_coefficients(m, m)
        if args.format == "latex":
            return alpha_table_latex(table.as_matrix())
        if args.format == "json":
            return dumps({
                "kind": "alpha",
                "computed_through": table.computed_through,
                "values": [[fraction_to_str(v) for v in row] for row in table.as_matrix()],
            })
        return "\n".join(", ".join(str(v) for v in row) for row in table.as_matrix())
    series = beta_coefficients(m) if args.kind == "beta" else beta_tilde_coefficients(m)
    values = series.as_list()
    if args.format == "latex":
        return beta_table_latex(values)
    if args.format == "json":
        return dumps({
            "kind": args.kind,
            "computed_through": series.computed_through,
            "values": [fraction_to_str(v) for v in values],
        })
    return ", ".join(str(v) for v in values)


def cmd_bch(args) -> str:
    terms = bch_series(args.order)
    if args.format == "json":
        return dumps({"order": args.order, "generators": {"1": "X", "2": "Y"},
                      "terms": [lie_to_json(t) for t in terms]})
    if args.format == "latex":
        return "\n".join(f"\\mathrm{{BCH}}_{{{n}}} = {lie_to_latex(t, BCH_NAMES)}"
                         for n, t in enumerate(terms, start=1))
    return "\n".join(f"BCH_{n} = {lie_to_text(t, BCH_NAMES)}" for n, t in enumerate(terms, start=1))


def cmd_verify(args) -> tuple[str, int]:
    cfg = VerifyConfig(
        max_n=args.max_n,
        oracle_bound=args.oracle_bound,
        d=args.d,
        k=args.k,
        degree=args.degree,
        assoc_degree=args.assoc_degree,
        cases=args.cases,
        seed=args.seed,
    )
    report = run_suite(args.suite, cfg)
    code = 0 if report["passed"] else 1
    if args.format == "json":
        return dumps(report), code
    lines = []
    for suite, reports in report["results"].items():
        for r in reports:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(f"{status} {suite}: {r['name']} ({r['checked']} checks, {r['failures']} failures)")
    lines.append("PASS" if code == 0 else "FAIL")
    return "\n".join(lines), code


def cmd_pbw(args) -> str:
    alg = build_free_nilpotent(args.d, args.k)
    if args.format == "json":
        return dumps(alg.to_json())
    lines = [f"free {args.k}-step nilpotent algebra on {args.d} generators, dim {alg.dim}"]
    for i, tree in enumerate(alg.basis):
        lines.append(f"e{i} = {tree_to_text(tree)}")
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            vec = alg.bracket_basis(i, j)
            if vec:
                rhs = " + ".join(f"e{idx}" if c == 1 else f"({c}) e{idx}" for idx, c in sorted(vec.items()))
                lines.append(f"[e{i},e{j}] = {rhs}")
    return "\n".join(lines)


def cmd_lieperm(args) -> str:
    perms = enumerate_lie_permutations(args.n)
    if args.format == "json":
        return dumps({"n": args.n, "count": len(perms),
                      "lie_permutations": [[list(b) for b in lp.blocks] for lp in perms]})
    return "\n".join(" ".join("(" + ",".join(map(str, b)) + ")" for b in lp.blocks) for lp in perms)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magnus-pbw", description="Exact Dynkin-Magnus commutators and PBW maps.")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json", "latex")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("mu", help="print mu_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--construction", default="dynkin",
                   choices=sorted(set(CONSTRUCTIONS) | {c.replace("_", "-") for c in CONSTRUCTIONS}))
    p.add_argument("--pivot", type=_pivot, default=None)
    fmt(p)

    p = sub.add_parser("coeffs", help="print beta, beta-tilde or alpha coefficients")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--beta", dest="kind", action="store_const", const="beta")
    kind.add_argument("--beta-tilde", dest="kind", action="store_const", const="beta-tilde")
    kind.add_argument("--alpha", dest="kind", action="store_const", const="alpha")
    p.set_defaults(kind="beta")
    p.add_argument("--max", type=int, default=4)
    fmt(p)

    p = sub.add_parser("bch", help="print homogeneous BCH terms")
    p.add_argument("--order", type=int, default=4)
    fmt(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--oracle-bound", type=int, default=5)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--degree", type=int, default=3, help="degree bound for descent/round-trip checks")
    p.add_argument("--assoc-degree", type=int, default=5, help="total degree bound for associativity triples")
    p.add_argument("--cases", type=int, default=200, help="random co-shuffle cases")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    fmt(p, ("text", "json"))

    p = sub.add_parser("pbw", help="export a free nilpotent Lie algebra")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p, ("text", "json"))

    p = sub.add_parser("lieperm", help="enumerate Lie-permutations of {1..n}")
    p.add_argument("--n", type=int, required=True)
    fmt(p, ("text", "json"))
    return parser


def _validate(args) -> None:
    for name in ("n", "max", "order", "max_n", "oracle_bound", "degree", "assoc_degree", "cases"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    if args.command == "mu" and args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.command == "bch" and args.order < 1:
        raise UsageError("--order must be at least 1")
    if args.command == "verify" and args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    if args.command == "pbw" or (args.command == "verify" and (args.d or args.k)):
        for name in ("d", "k"):
            value = getattr(args, name)
            if value is not None and value < 1:
                raise UsageError(f"--{name} must be positive")


COMMANDS = {
    "mu": cmd_mu,
    "coeffs": cmd_coeffs,
    "bch": cmd_bch,
    "verify": cmd_verify,
    "pbw": cmd_pbw,
    "lieperm": cmd_lieperm,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        _validate(args)
        out = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"magnus-pbw: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    _emit(out, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``ellipk eval | table | rule | selftest``.

Exit codes: 0 success, 1 usage error, 2 domain/range error,
3 non-convergence, 4 self-test failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from typing import Optional, Sequence

from .cei1 import DEFAULT_EPS, Method, k_from_m
from .errors import DomainError, NonConvergence
from .quadrature import DEFAULT_ORDER, RuleFamily, get_rule
from .verification import run_all

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NONCONVERGENCE, EXIT_SELFTEST = 0, 1, 2, 3, 4

METHODS = [m.value for m in Method]
FORMATS = ("plain", "csv", "json")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _param(method: Method, eps: float, n: int) -> dict:
    if method in (Method.GAUSS_CHEBYSHEV, Method.GAUSS_LEGENDRE):
        return {"n": n}
    return {"eps": eps}


def _param_text(method: Method, eps: float, n: int) -> str:
    return " ".join(f"{key}={val:g}" for key, val in _param(method, eps, n).items())


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_eval(args) -> int:
    method = Method(args.method)
    m = args.m if args.m is not None else args.k * args.k
    if args.k is not None and not 0.0 <= args.k < 1.0:
        raise DomainError(f"modulus k must satisfy 0 <= k < 1, got {args.k!r}")
    value, diag = k_from_m(m, method, args.eps, args.n, max_terms=args.max_terms, full_output=True)
    k = args.k if args.k is not None else m**0.5
    if args.format == "plain":
        sys.stdout.write(f"{value:.7f}\n")
    elif args.format == "csv":
        sys.stdout.write(f"k,K\n{k!r},{value!r}\n")
    else:
        record = {"k": k, "K": value, "method": method.value, "param": _param(method, args.eps, args.n)}
        sys.stdout.write(json.dumps(record) + "\n")
    print(f"method={method.value} {diag.unit}={diag.count} {_param_text(method, args.eps, args.n)}",
          file=sys.stderr)
    return EXIT_OK


def k_grid(kmin: float, kmax: float, step: float) -> list[float]:
    """Points ``kmin, kmin + step, ...`` not past ``kmax``, computed by index to avoid drift."""
    if not step > 0:
        raise DomainError(f"step must be positive, got {step!r}")
    if not 0.0 <= kmin <= kmax < 1.0:
        raise DomainError(f"need 0 <= kmin <= kmax < 1, got kmin={kmin!r}, kmax={kmax!r}")
    count = int((kmax - kmin) / step + 1e-9) + 1
    return [round(kmin + i * step, 12) for i in range(count)]


def _k_decimals(kmin: float, step: float) -> int:
    places = [-Decimal(repr(v)).normalize().as_tuple().exponent for v in (kmin, step)]
    return max(2, *places)


def cmd_table(args) -> int:
    try:
        methods = [Method(name.strip()) for name in args.methods.split(",")]
    except ValueError as exc:
        raise DomainError(f"unknown method in --methods: {args.methods!r}") from exc
    ks = k_grid(args.kmin, args.kmax, args.step)
    rows = [(k, [k_from_m(k * k, m, args.eps, args.n) for m in methods]) for k in ks]

    if args.format == "plain" and args.out is not None and len(methods) == 1:
        method = methods[0]
        lines = [f"# k K(k) method={method.value} {_param_text(method, args.eps, args.n)}"]
        lines += [f"{k:.7f} {vals[0]:.7f}" for k, vals in rows]
        text = "\n".join(lines) + "\n"
    elif args.format == "plain":
        kd = _k_decimals(args.kmin, args.step)
        kw = kd + 3
        header = ["k".ljust(kw)] + [f"K_{m.value}".rjust(12) for m in methods]
        lines = ["  ".join(header).rstrip()]
        lines += ["  ".join([f"{k:<{kw}.{kd}f}"] + [f"{v:12.7f}" for v in vals]) for k, vals in rows]
        text = "\n".join(lines) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "K"] if len(methods) == 1 else ["k"] + [f"K_{m.value}" for m in methods])
        writer.writerows([repr(k)] + [repr(v) for v in vals] for k, vals in rows)
        text = buf.getvalue()
    else:
        records = [
            {"k": k, "K": v, "method": m.value, "param": _param(m, args.eps, args.n)}
            for k, vals in rows
            for m, v in zip(methods, vals)
        ]
        text = json.dumps(records, indent=1) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_rule(args) -> int:
    rule = get_rule(RuleFamily(args.family), args.n)
    triples = [(i + 1, x, w) for i, (x, w) in enumerate(zip(rule.nodes.tolist(), rule.weights.tolist()))]
    if args.format == "plain":
        text = "".join(f"{i:4d}  {x: .15g}  {w:.15g}\n" for i, x, w in triples)
    elif args.format == "csv":
        text = "index,node,weight\n" + "".join(f"{i},{x:.15g},{w:.15g}\n" for i, x, w in triples)
    else:
        records = [{"index": i, "node": float(f"{x:.15g}"), "weight": float(f"{w:.15g}")} for i, x, w in triples]
        text = json.dumps(records, indent=1) + "\n"
    sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    checks = run_all(perturb=args.inject_fault)
    for c in checks:
        line = f"{c.status.upper():4s}  [{c.criterion}] {c.name}"
        if args.verbose and c.measured is not None:
            line += f"  measured={c.measured:.3e}"
            if c.tolerance is not None:
                line += f" tol={c.tolerance:.0e}"
        if args.verbose and c.detail:
            line += f"  ({c.detail})"
        print(line)
    failed = sum(not c.ok for c in checks)
    flagged = sum(c.status == "flag" for c in checks)
    print(f"{len(checks) - failed - flagged} passed, {failed} failed, {flagged} flagged")
    return EXIT_SELFTEST if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ellipk", description="Complete elliptic integral of the first kind K(k).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate K at one point")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--k", type=float, help="modulus k, 0 <= k < 1")
    which.add_argument("--m", type=float, help="parameter m = k^2, 0 <= m < 1")
    p.add_argument("--method", choices=METHODS, default="agm")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--n", type=int, default=DEFAULT_ORDER)
    p.add_argument("--max-terms", type=int, default=10**7, help="series term cap")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="tabulate K over a grid of k")
    p.add_argument("--kmin", type=float, required=True)
    p.add_argument("--kmax", type=float, required=True)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--n", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("rule", help="print quadrature nodes and weights")
    p.add_argument("--family", choices=[f.value for f in RuleFamily], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_rule)

    p = sub.add_parser("selftest", help="run the verification suite")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--inject-fault", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:  # DomainError, InvalidOrder and bad eps/n values
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

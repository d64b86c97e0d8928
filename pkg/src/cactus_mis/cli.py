"""Command-line interface.

Exit codes: 0 success (and, for verify, no refuted claims), 1 refuted claims
or resource limit, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import asymptotics as asym
from .catalog import load_catalog
from .emit import emit
from .graphs import FAMILY_IDS, build_graph, graph_order
from .oracle import DEFAULT_VERTEX_LIMIT, VertexLimitExceeded, enumerate_mis
from .series import recurrence_sequence, series_in_x
from .verify import has_refuted, report_to_json, report_to_table, run_verification

VERTEX_LIMIT_ENV = "CACTUS_MIS_VERTEX_LIMIT"

PAPER_SYMBOLS = {
    "triangular": "T", "diamond": "D", "square": "S", "pentagonal": "P",
    "meta-pentagonal": "M", "meta-hexagonal": "H", "para-hexagonal": "G",
    "ortho-hexagonal": "Q",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 2 on usage problems, matching the contract
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cactus-mis",
                     description="Exact maximal-independent-set counts for polygonal cactus chains.")
    parser.add_argument("--vertex-limit", type=int, default=None,
                        help=f"enumeration size guard (default {DEFAULT_VERTEX_LIMIT}; "
                             f"env {VERTEX_LIMIT_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_arg(p, required=True):
        p.add_argument("--family", required=required, type=str.lower, choices=FAMILY_IDS,
                       help="family identifier")

    p_build = sub.add_parser("build", help="construct a graph and print it")
    add_family_arg(p_build)
    p_build.add_argument("--n", type=int, required=True, help="number of blocks (>= 0)")
    p_build.add_argument("--aux", choices=("bar", "tilde"), default=None,
                         help="attach the pendant gadget variant")
    p_build.add_argument("--format", choices=("dot", "json", "edges"), default="dot")
    p_build.add_argument("--output", default=None, help="write to a file instead of stdout")

    p_census = sub.add_parser("census", help="enumerate maximal independent sets by size")
    add_family_arg(p_census)
    p_census.add_argument("--n", type=int, required=True)
    p_census.add_argument("--aux", choices=("bar", "tilde"), default=None)
    p_census.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p_census.add_argument("--output", default=None)

    p_series = sub.add_parser("series", help="counting sequence, or size polynomials with --bivariate")
    add_family_arg(p_series)
    p_series.add_argument("--n-max", type=int, required=True)
    p_series.add_argument("--bivariate", action="store_true",
                          help="print the stated generating function's coefficients in y")
    p_series.add_argument("--output", default=None)

    p_est = sub.add_parser("estimate", help="asymptotic count estimate C/rho^(n+1)")
    add_family_arg(p_est)
    p_est.add_argument("--n", type=int, required=True)
    p_est.add_argument("--output", default=None)

    p_verify = sub.add_parser("verify", help="cross-verify claims against the enumeration oracle")
    p_verify.add_argument("--scope", choices=("all", "family", "identities", "asymptotics"),
                          default="all")
    add_family_arg(p_verify, required=False)
    p_verify.add_argument("--n-max", type=int, default=None, help="override the per-family depth")
    p_verify.add_argument("--format", choices=("json", "table"), default="json")
    p_verify.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                          help="worker processes for enumeration")
    p_verify.add_argument("--output", default=None)

    sub.add_parser("list-families", help="list family ids and their one-letter symbols")
    return parser


def _vertex_limit(args) -> int:
    if args.vertex_limit is not None:
        return args.vertex_limit
    env = os.environ.get(VERTEX_LIMIT_ENV)
    if env:
        return int(env)
    return DEFAULT_VERTEX_LIMIT


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_build(args) -> int:
    g = build_graph(args.family, args.n, args.aux)
    _write(emit(g, args.format, family=args.family, n=args.n, aux=args.aux), args.output)
    return 0


def _cmd_census(args) -> int:
    limit = _vertex_limit(args)
    order = graph_order(args.family, args.n, args.aux)
    if order > limit:
        sys.stderr.write(f"error: graph has {order} vertices, above the limit of {limit}; "
                         f"pass --vertex-limit to override\n")
        return 1
    dist = enumerate_mis(build_graph(args.family, args.n, args.aux), vertex_limit=limit)
    if args.format == "json":
        payload = {
            "family": args.family, "aux": args.aux, "n": args.n,
            "counts": {str(k): v for k, v in dist.items()}, "total": dist.total,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        rows = ["family,n,k,count"]
        for k, v in dist.items():
            rows.append(f"{args.family},{args.n},{k},{v}")
        rows.append(f"{args.family},{args.n},total,{dist.total}")
        text = "\n".join(rows) + "\n"
    else:
        rows = [f"{'k':>4}  count"]
        rows += [f"{k:>4}  {v}" for k, v in dist.items()]
        rows.append(f"total  {dist.total}")
        text = "\n".join(rows) + "\n"
    _write(text, args.output)
    return 0


def _cmd_series(args) -> int:
    catalog = load_catalog()
    record = catalog.family(args.family)
    if args.bivariate:
        coeffs = series_in_x(record.gf(), args.n_max)
        lines = [c.text("y") for c in coeffs]
        text = "\n".join(f"{n}: {line}" for n, line in enumerate(lines)) + "\n"
    else:
        totals = recurrence_sequence(record.recurrence.lags, record.recurrence.initial, args.n_max)
        text = "\n".join(f"{n}: {v}" for n, v in enumerate(totals)) + "\n"
    _write(text, args.output)
    return 0


def _cmd_estimate(args) -> int:
    catalog = load_catalog()
    record = catalog.family(args.family)
    est = asym.family_estimate(record)
    value = est.value(args.n)
    payload = {
        "family": args.family, "n": args.n,
        "rho": est.rho, "constant": est.constant, "estimate": value,
    }
    if args.n <= 500:
        exact = recurrence_sequence(record.recurrence.lags, record.recurrence.initial, args.n)[args.n]
        payload["exact"] = exact
        payload["relative_error"] = abs(value / exact - 1.0) if exact else None
    _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    if args.scope == "family" and args.family is None:
        sys.stderr.write("error: --scope family requires --family\n")
        return 2
    report = run_verification(
        scope=args.scope,
        family=args.family,
        n_max_override=args.n_max,
        vertex_limit=_vertex_limit(args),
        workers=max(1, args.workers),
    )
    text = report_to_json(report) if args.format == "json" else report_to_table(report)
    _write(text, args.output)
    return 1 if has_refuted(report) else 0


def _cmd_list_families(args) -> int:
    lines = [f"{fam:<16} {PAPER_SYMBOLS[fam]}" for fam in FAMILY_IDS]
    _write("\n".join(lines) + "\n", None)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "build": _cmd_build,
        "census": _cmd_census,
        "series": _cmd_series,
        "estimate": _cmd_estimate,
        "verify": _cmd_verify,
        "list-families": _cmd_list_families,
    }
    try:
        return handlers[args.command](args)
    except VertexLimitExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line: a thin client over the service layer.

Subcommands mirror the API endpoints one to one and print the same bytes
the service would send. Exit codes: 0 success, 2 parse/range errors, 3
closed form requested where no theorem applies, 4 sweep disagreement.
"""

from __future__ import annotations

import argparse
import sys

from . import service
from .connectivity import NoClosedFormError
from .sweep import sweep_range, tsv_line

__all__ = ["main", "build_parser"]


def cmd_kappa(args: argparse.Namespace) -> int:
    out = service.kappa_response(args.n, method=args.method, include_witness=args.witness)
    print(out.model_dump_json(exclude_none=True))
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    out = service.bounds_response(args.n)
    print(out.model_dump_json(exclude_none=True))
    return 0


def cmd_cutset(args: argparse.Namespace) -> int:
    out = service.cutset_response(args.n, args.which)
    print(out.model_dump_json(exclude_none=True))
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    out = service.quotient_response(args.n)
    print(out.model_dump_json(exclude_none=True))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep_range(args.lo, args.hi, oracle_cap=args.check_oracle_cap, jobs=args.jobs)
    if args.format == "tsv":
        for row in rows:
            print(tsv_line(row))
    else:
        for row in rows:
            print(service.sweep_row_out(row).model_dump_json())
    disagreements = sum(1 for row in rows if not row.agrees)
    print(f"rows={len(rows)} disagreements={disagreements}", file=sys.stderr)
    return 4 if disagreements else 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("powerkappa.api:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerkappa",
        description="Vertex connectivity of the power graph of the cyclic group C_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="connectivity of P(C_n)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=service.KAPPA_METHODS, default="auto")
    p.add_argument("--witness", action="store_true", help="include a witness cut")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("bounds", help="alpha_j, beta_j, gamma_ab and orderings")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cutset", help="emit and verify a constructed cut-set")
    p.add_argument("n", type=int)
    p.add_argument("--which", default="optimal", help="Y:j, Z:j, X:a,b or optimal")
    p.set_defaults(func=cmd_cutset)

    p = sub.add_parser("quotient", help="divisor quotient graph as JSON")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("sweep", help="reconcile solvers over a range of n")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--check-oracle-cap", type=int, default=0, metavar="C",
                   help="also run the naive explicit oracle for n <= C")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoClosedFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

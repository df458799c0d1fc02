"""Command line front end: ``partcat run`` for the check suites, ``partcat enumerate`` for listings."""

import argparse
import json
import os
import sys

from .category import ResourceBoundError, enumerate_all_normal_cones
from .core import enumerate_partitions, enumerate_singular, idempotents
from .partition import PartitionCategory
from .powerset import PowersetCategory, dual_objects
from .report import DEFAULT_BOUND, EXIT_PASS, EXIT_SKIPPED, SUITES, SEARCH_WEIGHT, run_suites

BOUND_ENV = "PARTCAT_BOUND"
KINDS = ("partitions", "transformations", "idempotents", "cones", "dual-objects")


def _size(text):
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return n


def _positive(text):
    b = int(text)
    if b <= 0:
        raise argparse.ArgumentTypeError("bound must be positive")
    return b


def _default_bound():
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return DEFAULT_BOUND
    try:
        return _positive(raw)
    except (ValueError, argparse.ArgumentTypeError):
        return DEFAULT_BOUND


def build_parser():
    parser = argparse.ArgumentParser(prog="partcat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_size, default=3, help="size of the base set (default 3)")
    common.add_argument("--bound", type=_positive, default=None,
                        help=f"resource cap in elementary steps (default ${BOUND_ENV} or {DEFAULT_BOUND})")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write the output here instead of stdout")

    run = sub.add_parser("run", parents=[common], help="run check suites")
    run.add_argument("--suite", action="append", choices=SUITES + ("all",),
                     help="suite to run; repeatable (default all)")

    enum = sub.add_parser("enumerate", parents=[common], help="list structures in canonical encoding")
    enum.add_argument("kind", choices=KINDS)
    enum.add_argument("--category", choices=("powerset", "partition"), default="powerset",
                      help="category whose normal cones are listed (kind cones)")
    return parser


def enumerate_records(kind, n, bound=DEFAULT_BOUND, category="powerset"):
    """Canonical records for one ``enumerate`` kind, in a stable order."""
    if kind == "partitions":
        return [p.encode() for p in enumerate_partitions(n, non_identity_only=True)]
    if kind == "transformations":
        return [t.encode() for t in enumerate_singular(n)]
    if kind == "idempotents":
        return [t.encode() for t in idempotents(n)]
    if kind == "dual-objects":
        return [{"kernel": h.kernel.encode(), "representative": h.representative.encode()} for h in dual_objects(n)]
    if kind == "cones":
        C = PowersetCategory(n) if category == "powerset" else PartitionCategory(n)
        cones = enumerate_all_normal_cones(C, bound=max(1, bound // SEARCH_WEIGHT))
        records = [g.encode() for g in cones]
        return sorted(records, key=lambda r: (json.dumps(r["vertex"]), json.dumps(r["components"])))
    raise ValueError(f"unknown kind {kind!r}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    bound = args.bound if args.bound is not None else _default_bound()
    if args.command == "run":
        report = run_suites(args.n, args.suite or ["all"], bound)
        _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)
        return report.exit_code
    try:
        records = enumerate_records(args.kind, args.n, bound, args.category)
    except ResourceBoundError as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_SKIPPED
    if args.format == "json":
        text = json.dumps({"kind": args.kind, "n": args.n, "records": records}, sort_keys=True) + "\n"
    else:
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    _emit(text, args.out)
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())

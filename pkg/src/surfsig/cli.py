"""Command-line front end.

Exit codes: 0 success / realized / pass, 1 definitive negative, 2 search
guard hit, 64 usage error, 65 data or format error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys

from . import catalog as catalog_mod
from .catalog import CatalogError, default_catalog, load_catalog, validate_catalog
from .enumeration import enumerate_potential, export_csv, export_json, export_text
from .groups import FiniteGroup, GroupError, cyclic, dihedral, direct_product
from .lattice import GuardExceeded, contains_genus, join_genus, meet_genus, verify_lattice
from .realization import actual_relative, table2_genus2_check, verify_omnipersistent_actual
from .signature import SignatureSyntaxError, format_signature, parse_signature
from .vectors import DEFAULT_NODE_LIMIT, SearchInconclusive, search, vector_to_json

EX_OK, EX_NEGATIVE, EX_INCONCLUSIVE = 0, 1, 2
EX_USAGE, EX_DATAERR = 64, 65

log = logging.getLogger("surfsig")


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise UsageError(message)


def genus_arg(text: str) -> int:
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if g < 2:
        raise argparse.ArgumentTypeError(f"genus must be >= 2, got {g}")
    return g


def positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


_NUM = re.compile(r"\d+")


def parse_group_spec(text: str) -> FiniteGroup:
    """``C:n``, ``D:n``, ``P:specA,specB`` or ``file:path#name``."""
    group, rest = _parse_spec(text, text)
    if rest:
        raise DataError(f"trailing text in group spec: {rest!r}")
    return group


def _parse_spec(s: str, whole: str) -> tuple[FiniteGroup, str]:
    kind, sep, body = s.partition(":")
    if not sep:
        raise DataError(f"bad group spec {whole!r}")
    if kind in ("C", "D"):
        m = _NUM.match(body)
        if not m or int(m.group()) < 1:
            raise DataError(f"bad group spec {whole!r}: expected {kind}:n with n >= 1")
        n = int(m.group())
        return (cyclic(n) if kind == "C" else dihedral(n)), body[m.end():]
    if kind == "P":
        left, rest = _parse_spec(body, whole)
        if not rest.startswith(","):
            raise DataError(f"bad group spec {whole!r}: expected P:specA,specB")
        right, rest = _parse_spec(rest[1:], whole)
        return direct_product(left, right), rest
    if kind == "file":
        path, sep, tail = body.partition("#")
        if not sep:
            raise DataError(f"bad group spec {whole!r}: expected file:path#name")
        name, comma, rest = tail.partition(",")
        cat = load_catalog(path)
        for g in cat:
            if g.name == name:
                return g, comma + rest
        raise DataError(f"no group named {name!r} in {path}")
    raise DataError(f"unknown group kind {kind!r} in {whole!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="surfsig", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list the potential signatures of a genus")
    e.add_argument("--genus", type=genus_arg, required=True)
    e.add_argument("--format", choices=["text", "json", "csv"], default="text")

    lat = sub.add_parser("lattice", help="genus-level order, meet and join")
    lat.add_argument("op", choices=["contains", "meet", "join"])
    lat.add_argument("genus", type=genus_arg)
    lat.add_argument("other", type=genus_arg)

    v = sub.add_parser("verify", help="empirical theorem checks")
    vsub = v.add_subparsers(dest="what", required=True, parser_class=_Parser)
    vl = vsub.add_parser("lattice")
    vl.add_argument("--max-genus", type=genus_arg, required=True)
    vl.add_argument("--jobs", type=positive_int, default=os.cpu_count() or 1)
    vo = vsub.add_parser("omnipersistent")
    vo.add_argument("--from", dest="lo", type=genus_arg, required=True)
    vo.add_argument("--to", dest="hi", type=genus_arg, required=True)
    vt = vsub.add_parser("table2", help="genus-2 tabulated signatures against a catalog")
    vt.add_argument("--catalog")

    s = sub.add_parser("search", help="find a generating vector in one group")
    s.add_argument("--group", required=True, help="C:n, D:n, P:A,B or file:path#name")
    s.add_argument("--signature", required=True)
    s.add_argument("--nodes", type=positive_int, default=DEFAULT_NODE_LIMIT)

    r = sub.add_parser("realize", help="actual signatures of a genus relative to a catalog")
    r.add_argument("--genus", type=genus_arg, required=True)
    r.add_argument("--catalog", help=f"extra catalog file (default ${catalog_mod.CATALOG_ENV})")
    r.add_argument("--complete-orders", default="",
                   help="comma-separated orders for which the catalog is complete")
    r.add_argument("--format", choices=["json", "csv"], default="json")
    r.add_argument("--nodes", type=positive_int, default=DEFAULT_NODE_LIMIT)
    r.add_argument("--jobs", type=positive_int, default=os.cpu_count() or 1)

    c = sub.add_parser("catalog", help="catalog file tools")
    csub = c.add_subparsers(dest="what", required=True, parser_class=_Parser)
    cv = csub.add_parser("validate")
    cv.add_argument("path")
    return p


def _catalog(path: str | None):
    cat = default_catalog()
    if path:
        cat = cat.merge(load_catalog(path))
    return cat


def _parse_orders(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        orders = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--complete-orders must be comma-separated integers: {text!r}") from None
    if any(n < 1 for n in orders):
        raise UsageError("--complete-orders entries must be positive")
    return orders


def cmd_enumerate(args, out) -> int:
    pset = enumerate_potential(args.genus)
    fmt = {"text": export_text, "json": export_json, "csv": export_csv}[args.format]
    out.write(fmt(pset))
    return EX_OK


def cmd_lattice(args, out) -> int:
    if args.op == "contains":
        out.write(("true" if contains_genus(args.genus, args.other) else "false") + "\n")
    elif args.op == "meet":
        out.write(f"{meet_genus(args.genus, args.other)}\n")
    else:
        out.write(f"{join_genus(args.genus, args.other)}\n")
    return EX_OK


def cmd_verify(args, out) -> int:
    if args.what == "lattice":
        try:
            reports = verify_lattice(args.max_genus, jobs=args.jobs)
        except GuardExceeded as exc:
            raise UsageError(str(exc)) from None
        json.dump([r.to_json() for r in reports], out, indent=1)
        out.write("\n")
        return EX_OK if all(r.match for r in reports) else EX_NEGATIVE
    if args.what == "omnipersistent":
        if args.hi < args.lo:
            raise UsageError(f"empty range {args.lo}..{args.hi}")
        results = verify_omnipersistent_actual(args.lo, args.hi)
        for res in results:
            parts = []
            for c in res.checks:
                status = "ok" if c.ok else f"FAIL condition {c.result.condition}: {c.result.detail}"
                if c.result and c.group_order != c.expected_order:
                    status = f"FAIL order {c.group_order} != {c.expected_order}"
                parts.append(f"{format_signature(c.signature)} in {c.group_name} "
                             f"(order {c.group_order}) {status}")
            out.write(f"genus {res.genus}: {'pass' if res.ok else 'fail'}; " + "; ".join(parts) + "\n")
        return EX_OK if all(r.ok for r in results) else EX_NEGATIVE
    records = table2_genus2_check(_catalog(args.catalog))
    for rec in records:
        out.write(f"{format_signature(rec.signature)}\t{rec.group_order}\t{rec.status}\t"
                  f"{rec.group_name or '-'}\n")
    return EX_OK


def cmd_search(args, out) -> int:
    try:
        sig = parse_signature(args.signature)
    except SignatureSyntaxError as exc:
        raise DataError(str(exc)) from None
    group = parse_group_spec(args.group)
    try:
        vec = search(group, sig, node_limit=args.nodes)
    except SearchInconclusive as exc:
        out.write(f"inconclusive: {exc}\n")
        return EX_INCONCLUSIVE
    if vec is None:
        out.write(f"definitive absence: no {format_signature(sig)}-generating vector "
                  f"in {group.name} (order {group.order})\n")
        return EX_NEGATIVE
    out.write(json.dumps(vector_to_json(vec, sig)) + "\n")
    return EX_OK


def cmd_realize(args, out) -> int:
    orders = _parse_orders(args.complete_orders)
    cat = _catalog(args.catalog)
    records = actual_relative(args.genus, cat, complete_orders=orders,
                              node_limit=args.nodes, jobs=args.jobs)
    if args.format == "json":
        doc = {
            "metadata": {
                "genus": args.genus,
                "catalog_sources": cat.sources,
                "complete_orders": args.complete_orders,
            },
            "records": [r.to_json() for r in records],
        }
        out.write(json.dumps(doc, indent=1) + "\n")
    else:
        buf = io.StringIO()
        buf.write(f"# complete-orders: {args.complete_orders}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["signature", "status", "group", "order"])
        for r in records:
            w.writerow([format_signature(r.signature), r.status, r.group_name or "", r.group_order])
        out.write(buf.getvalue())
    return EX_OK


def cmd_catalog(args, out) -> int:
    reports = validate_catalog(args.path)
    for r in reports:
        computed = "-" if r.computed_order is None else r.computed_order
        note = "ok" if r.ok else (r.error or "order mismatch")
        out.write(f"{r.name}\tdeclared={r.declared_order}\tcomputed={computed}\t{note}\n")
    return EX_OK if all(r.ok for r in reports) else EX_DATAERR


COMMANDS = {
    "enumerate": cmd_enumerate,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
    "search": cmd_search,
    "realize": cmd_realize,
    "catalog": cmd_catalog,
}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError:
        return EX_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(name)s: %(message)s")
    # primary output is buffered so failures never leave partial results
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except UsageError as exc:
        sys.stderr.write(f"surfsig: usage error: {exc}\n")
        return EX_USAGE
    except (DataError, CatalogError, GroupError, SignatureSyntaxError, OSError) as exc:
        sys.stderr.write(f"surfsig: error: {exc}\n")
        return EX_DATAERR
    out.write(buf.getvalue())
    return code


def main():
    sys.exit(run())

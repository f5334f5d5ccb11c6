"""Command-line front end: classify / ideals / orbits / catalog / verify.

Ring references are either `catalog:NAME:P` (optionally `catalog:matn:P:K`),
a path to a ring-spec document, or an inline JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog as cat
from . import ideals, orbits, pairs, verify
from .core import build_ring
from .errors import RinglabError
from .reporting import emit_report

CLASSIFY_COLUMNS = ("a", "b", "unimodular", "admissible", "free",
                    "torsion_witness", "outlier", "ideal_id")
IDEAL_COLUMNS = ("id", "size", "principal", "witness", "members")
ORBIT_COLUMNS = ("id", "kind", "mode", "representative_a", "representative_b",
                 "size", "ideal_id", "ideal_size")


def load_ring(ref: str):
    if ref.startswith("catalog:"):
        parts = ref.split(":")
        if len(parts) not in (3, 4):
            raise RinglabError(f"catalog reference must be catalog:NAME:P[:K], got {ref!r}")
        name, p = parts[1], int(parts[2])
        kw = {"k": int(parts[3])} if len(parts) == 4 else {}
        return cat.catalog_build(name, p, **kw)
    if ref.lstrip().startswith("{"):
        return build_ring(cat.parse_ring_spec(ref))
    with open(ref, "r", encoding="utf-8") as fh:
        return build_ring(cat.parse_ring_spec(fh.read()))


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def _table_text(columns, rows) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max([len(col)] + [len(r[i]) for r in cells])
              for i, col in enumerate(columns)]
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths))]
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _cmd_classify(args) -> int:
    R = load_ring(args.ring)
    shortcut = {"auto": None, "always": True, "never": False}[args.finite_shortcut]
    rows, summary = pairs.classify_all_pairs(R, finite_shortcut=shortcut)
    ids, _ = pairs.pair_ideal_classes(R)
    flat_rows = []
    for row in rows:
        a, b = row.pair
        flat_rows.append((R.labels[a], R.labels[b], int(row.unimodular),
                          int(row.admissible), int(row.free),
                          "" if row.torsion_witness is None else R.labels[row.torsion_witness],
                          int(row.outlier), int(ids[a, b])))
    if args.format == "json":
        doc = {"ring": R.origin, "order": R.order,
               "rows": [dict(zip(CLASSIFY_COLUMNS, r)) for r in flat_rows],
               "summary": {k: v for k, v in summary.items() if k != "cells"}}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(CLASSIFY_COLUMNS, flat_rows))
    else:
        sys.stdout.write(_table_text(CLASSIFY_COLUMNS, flat_rows))
        print(f"\nring: {R.origin} (order {R.order})")
        for key in ("total_pairs", "unimodular", "admissible", "free", "torsion",
                    "outliers", "outliers_free", "outliers_torsion",
                    "free_submodules_from_outliers"):
            print(f"{key}: {summary[key]}")
    return 0


def _cmd_ideals(args) -> int:
    R = load_ring(args.ring)
    lattice = ideals.all_right_ideals(R)
    rows = []
    for k, ideal in enumerate(lattice):
        principal, witness = ideals.is_principal(R, ideal)
        rows.append((k, ideal.size, int(principal),
                     "" if witness is None else R.labels[witness],
                     " ".join(ideal.member_labels())))
    if args.format == "json":
        doc = {"ring": R.origin, "order": R.order,
               "ideals": [dict(zip(IDEAL_COLUMNS, r)) for r in rows]}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(IDEAL_COLUMNS, rows))
    else:
        sys.stdout.write(_table_text(IDEAL_COLUMNS, rows))
        print(f"\nring: {R.origin}, {len(rows)} right ideals, "
              f"{sum(1 for r in rows if not r[2])} non-principal")
    return 0


def _all_pairs_mask(R):
    import numpy as np
    return np.ones((R.order, R.order), dtype=bool)


def _cmd_orbits(args) -> int:
    R = load_ring(args.ring)
    if args.submodules:
        table = orbits.submodule_orbits(R, mode=args.mode)
    else:
        which = None if args.free_only else _all_pairs_mask(R)
        table = orbits.pair_orbits(R, which, mode=args.mode)
    rows = []
    for k, orb in enumerate(table.orbits):
        a, b = orb.representative
        rows.append((k, table.kind, table.mode, R.labels[a], R.labels[b],
                     orb.size, orb.ideal_id, orb.ideal.size))
    if args.format == "json":
        doc = {"ring": R.origin, "kind": table.kind, "mode": table.mode,
               "certified_exact": table.certified_exact,
               "orbits": []}
        for k, orb in enumerate(table.orbits):
            entry = dict(zip(ORBIT_COLUMNS, rows[k]))
            if orb.members is not None:
                entry["members"] = [[R.labels[a], R.labels[b]] for a, b in orb.members]
            doc["orbits"].append(entry)
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(ORBIT_COLUMNS, rows))
    else:
        sys.stdout.write(_table_text(ORBIT_COLUMNS, rows))
        print(f"\n{len(table.orbits)} orbits ({table.kind}, {table.mode} mode, "
              f"certified_exact={table.certified_exact})")
    return 0


def _cmd_catalog(args) -> int:
    if args.build:
        R = cat.catalog_build(args.build, args.p, **({"k": args.k} if args.k else {}))
        print(json.dumps(cat.emit_structure_spec(R), indent=2))
        return 0
    rows = [(e.name, e.order_formula, e.description) for e in cat.CATALOG.values()]
    sys.stdout.write(_table_text(("name", "order", "description"), rows))
    return 0


def _cmd_verify(args) -> int:
    claim_ids = [t for t in (args.claims or "").split(",") if t.strip()] or None
    results = verify.run_verify(claim_ids, budget_seconds=args.budget_seconds)
    sys.stdout.write(emit_report(results, args.format))
    failed = any(r.status == "fail" for r in results)
    skipped = any(r.status == "skipped" for r in results)
    if failed:
        return 1
    if skipped and not args.allow_skip:
        return 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite ring laboratory: pair classes, right ideals, GL2 orbits")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("text", "json", "csv"), default="text")

    p_classify = sub.add_parser("classify", help="classify every pair in R^2")
    p_classify.add_argument("--ring", required=True)
    p_classify.add_argument("--format", **fmt)
    p_classify.add_argument("--finite-shortcut", choices=("auto", "always", "never"),
                            default="auto",
                            help="admissibility route: honest 2x2 completion "
                                 "search vs unimodularity shortcut")
    p_classify.set_defaults(fn=_cmd_classify)

    p_ideals = sub.add_parser("ideals", help="enumerate all right ideals")
    p_ideals.add_argument("--ring", required=True)
    p_ideals.add_argument("--format", **fmt)
    p_ideals.set_defaults(fn=_cmd_ideals)

    p_orbits = sub.add_parser("orbits", help="GL2 orbit tables")
    p_orbits.add_argument("--ring", required=True)
    p_orbits.add_argument("--mode", choices=("bfs", "exact"), default="bfs")
    p_orbits.add_argument("--free-only", action="store_true",
                          help="restrict the pair table to free-generating pairs")
    p_orbits.add_argument("--submodules", action="store_true",
                          help="orbits of free cyclic submodules instead of pairs")
    p_orbits.add_argument("--format", **fmt)
    p_orbits.set_defaults(fn=_cmd_orbits)

    p_catalog = sub.add_parser("catalog", help="list or emit catalog rings")
    p_catalog.add_argument("--build", metavar="NAME",
                           help="emit the named ring as a structure-constants document")
    p_catalog.add_argument("--p", type=int, default=2)
    p_catalog.add_argument("--k", type=int, default=0,
                           help="matrix size for matn")
    p_catalog.set_defaults(fn=_cmd_catalog)

    p_verify = sub.add_parser("verify", help="replay the claim suite")
    p_verify.add_argument("--claims", help="comma-separated claim ids or prefixes")
    p_verify.add_argument("--budget-seconds", type=float, default=None,
                          help=f"defaults to ${verify.BUDGET_ENV} or "
                               f"{verify.DEFAULT_BUDGET_SECONDS:.0f}")
    p_verify.add_argument("--allow-skip", action="store_true",
                          help="exit 0 even when budget-skipped claims remain")
    p_verify.add_argument("--format", **fmt)
    p_verify.set_defaults(fn=_cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except RinglabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

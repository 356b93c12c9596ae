"""Command line interface.

Every subcommand prints either a plain value or a JSON document on stdout.
Exit status is 0 when nothing failed, 1 when a verification record carries
status "fail", and 2 on usage errors.  Volatile values (timestamps, wall
clock) live only under the report's "metadata" key so that record payloads
compare equal across runs; SOURCE_DATE_EPOCH overrides the timestamp.
"""

import argparse
import json
import os
import platform
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction
from typing import List, Optional

from . import __version__, bracketmap, checks, glrep, relations
from .lie import hall_basis, tree_to_str, witt_rank
from .words import Word, magnus_alphabet, x_alphabet

OUTPUT_DIR_VAR = "IA3_OUTPUT_DIR"

JOHNSON_VECTORS = ("v1", "v2", "v3", "v4")
# v3 has no pinned expectation: its vanishing is reported, not asserted.
JOHNSON_EXPECTED = {"v1": False, "v2": True, "v4": True}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, Word):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _print_json(obj) -> None:
    print(json.dumps(_jsonable(obj), indent=2, sort_keys=True))


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    seconds = int(epoch) if epoch else int(time.time())
    return datetime.fromtimestamp(seconds, tz=timezone.utc).isoformat()


def _parse_weight(text: str) -> tuple:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        weight = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"weight {text!r} is not a comma separated integer triple")
    if len(weight) != 3:
        raise ValueError(f"weight {text!r} must have exactly three parts")
    if not (weight[0] >= weight[1] >= weight[2]):
        raise ValueError(f"weight {text!r} must be nonincreasing")
    return weight


def _alphabet_for(n: int):
    # nine letters means the commutator-generator names; anything else x1..xn
    return magnus_alphabet(3) if n == 9 else x_alphabet(n)


def cmd_witt(args) -> List[dict]:
    print(witt_rank(args.n, args.k))
    return []


def cmd_hall(args) -> List[dict]:
    alphabet = _alphabet_for(args.n)
    basis = hall_basis(alphabet, args.k)
    lines = [tree_to_str(tree, alphabet) for tree in basis]
    print(len(basis))
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"wrote {args.emit}")
    else:
        for line in lines:
            print(line)
    return []


def _relator_record(rid: str, specs) -> dict:
    spec = specs[rid]
    alphabet = spec.word.alphabet
    terms = [
        {"coeff": coeff, "tree": tree_to_str(tree, alphabet)}
        for tree, coeff in sorted(spec.stated_class.coeffs.items())
    ]
    return {
        "id": rid,
        "template": spec.template,
        "indices": list(spec.indices),
        "variant": spec.variant,
        "word": str(spec.word),
        "degree2_class": terms,
        "verified": relations.verify_relator(rid, specs),
    }


def cmd_relators(args) -> List[dict]:
    specs = relations.load_relators(args.data)
    ids = [args.id] if args.id else list(relations.relator_ids(specs))
    unknown = [rid for rid in ids if rid not in specs]
    if unknown:
        raise ValueError(f"unknown relator id {unknown[0]!r}")
    records = [_relator_record(rid, specs) for rid in ids]
    _print_json(records if args.id is None else records[0])
    bad = [r["id"] for r in records if not r["verified"]]
    status = "fail" if bad else "pass"
    return [{"id": "relators", "status": status, "details": {"unverified": bad}}]


def cmd_bracket(args) -> List[dict]:
    if args.rank:
        print(bracketmap.matrix_rank())
        return []
    if args.emit:
        paths = _write_bracket_csv(args.emit)
        for path in paths:
            print(f"wrote {path}")
        return []
    if args.snf:
        report = bracketmap.cokernel()
        rid = "bracket-cokernel"
    else:
        report = bracketmap.verify_injectivity()
        rid = "bracket-injectivity"
    _print_json(report)
    return [{"id": rid, "status": "pass" if report["ok"] else "fail", "details": {}}]


def cmd_table1(args) -> List[dict]:
    data = bracketmap.load_table1(args.data)
    report = bracketmap.table1_verify(data)
    _print_json(report)
    return [{"id": "table1", "status": "pass" if report["ok"] else "fail", "details": {}}]


def _module_payload(name: str) -> dict:
    terms = glrep.decomposition_json(glrep.decompose_char(glrep.module_char(name)))
    return {
        "module": name,
        "terms": terms,
        "dimension": sum(t["mult"] * t["dim"] for t in terms),
    }


def cmd_decompose(args) -> List[dict]:
    if args.module:
        _print_json(_module_payload(args.module))
        return []
    if args.tensor:
        lam, mu = (_parse_weight(t) for t in args.tensor)
        dec = glrep.tensor_decompose(lam, mu)
        out = {"tensor": [list(lam), list(mu)], "terms": glrep.decomposition_json(dec)}
    else:
        lam = _parse_weight(args.ext[0])
        try:
            k = int(args.ext[1])
        except ValueError:
            raise ValueError(f"exterior power degree {args.ext[1]!r} is not an integer")
        dec = glrep.ext_decompose(lam, k)
        out = {"ext": {"weight": list(lam), "k": k}, "terms": glrep.decomposition_json(dec)}
    _print_json(out)
    return []


def cmd_hwcheck(args) -> List[dict]:
    record = checks.criterion_highest_weights()
    _print_json(record)
    return [record]


def _johnson_record(name: str) -> dict:
    terms = glrep.johnson_lift(name)
    vanishes = glrep.johnson_vanish(terms)
    in_span = glrep.membership_in_R_R3(glrep.named_vectors()[name])
    expected = JOHNSON_EXPECTED.get(name)
    if expected is None:
        status = "finding"
    else:
        status = "pass" if vanishes == expected and in_span == expected else "fail"
    return {
        "id": f"johnson-{name}",
        "status": status,
        "details": {
            "terms": [
                {"coeff": coeff, "sigma": str(sigma), "omega": str(omega)}
                for coeff, sigma, omega in terms
            ],
            "tau2_vanishes": vanishes,
            "in_relator_span": in_span,
            "expected": expected,
        },
    }


def cmd_johnson(args) -> List[dict]:
    names = [args.vector] if args.vector else list(JOHNSON_VECTORS)
    records = [_johnson_record(name) for name in names]
    _print_json(records if args.vector is None else records[0])
    return records


def cmd_deep_relator(args) -> List[dict]:
    suite = bracketmap.deep_relator_suite()
    _print_json(suite)
    return [{"id": "deep-relator", "status": "pass" if suite["ok"] else "fail",
             "details": {}}]


def _run_records() -> tuple:
    start = time.perf_counter()
    records = checks.run_all()
    return records, time.perf_counter() - start


def cmd_verify(args) -> List[dict]:
    records, wall = _run_records()
    report = {
        "suite": "ia3-verify",
        "records": records,
        "metadata": {
            "timestamp": _timestamp(),
            "wall_clock_seconds": round(wall, 3),
            "python": platform.python_version(),
            "version": __version__,
        },
    }
    if args.format == "text":
        for rec in records:
            print(f"{rec['id']}: {rec['status']}")
        counts = [sum(1 for r in records if r["status"] == s)
                  for s in ("pass", "fail", "finding")]
        print(f"{counts[0]} passed, {counts[1]} failed, "
              f"{counts[2]} findings ({wall:.1f}s)")
    else:
        _print_json(report)
    return records


def _write_bracket_csv(path: str) -> List[str]:
    import csv

    bm = bracketmap.build_bracket_matrix()
    alphabet = magnus_alphabet(3)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        for row in bm.entries:
            writer.writerow(row)
    labels = {
        "rows": [tree_to_str(tree, alphabet) for tree in bm.row_trees],
        "columns": [f"{rid}:{gen}" for rid, gen in bm.col_labels],
    }
    sidecar = os.path.splitext(path)[0] + ".labels.json"
    with open(sidecar, "w", encoding="utf-8") as fh:
        json.dump(labels, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return [path, sidecar]


def _write_table1_csv(path: str, data) -> None:
    import csv

    alphabet = magnus_alphabet(3)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["tree", "mark", "role"])
        for tree, mark in zip(data.trees, data.marks):
            role = "eliminated" if mark else "cokernel-basis"
            writer.writerow([tree_to_str(tree, alphabet), mark, role])


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _figure_bracket(path: str, bm) -> None:
    plt = _pyplot()
    peak = max(abs(x) for row in bm.entries for x in row)
    fig, ax = plt.subplots(figsize=(9.0, 12.0), dpi=110)
    image = ax.imshow([list(row) for row in bm.entries], cmap="RdBu",
                      vmin=-peak, vmax=peak, aspect="auto", interpolation="nearest")
    ax.set_xlabel(f"relator-generator columns ({len(bm.col_labels)})")
    ax.set_ylabel(f"weight-3 Hall tree rows ({len(bm.row_trees)})")
    ax.set_title("bracket map coefficient pattern")
    fig.colorbar(image, ax=ax, shrink=0.6)
    fig.savefig(path, metadata={"Software": "ia3"})
    plt.close(fig)


def _figure_table1(path: str, data) -> None:
    plt = _pyplot()
    cols = 16
    cells = [0 if mark else 1 for mark in data.marks]
    grid = [cells[r * cols:(r + 1) * cols] for r in range(len(cells) // cols)]
    fig, ax = plt.subplots(figsize=(8.0, 7.5), dpi=110)
    ax.imshow(grid, cmap="Greens", vmin=0, vmax=1.4, interpolation="nearest")
    ax.set_xticks(())
    ax.set_yticks(())
    survivors = sum(cells)
    ax.set_title(f"surviving cokernel-basis trees (filled: {survivors} of {len(cells)})")
    fig.savefig(path, metadata={"Software": "ia3"})
    plt.close(fig)


def cmd_emit(args) -> List[dict]:
    out_dir = args.dir or os.environ.get(OUTPUT_DIR_VAR) or "artifacts"
    os.makedirs(out_dir, exist_ok=True)
    written: List[str] = []

    written += _write_bracket_csv(os.path.join(out_dir, "bracket_matrix.csv"))

    data = bracketmap.load_table1(args.table1_data)
    table_path = os.path.join(out_dir, "table1_status.csv")
    _write_table1_csv(table_path, data)
    written.append(table_path)

    for name in glrep.MODULE_NAMES:
        path = os.path.join(out_dir, f"decomposition_{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(_jsonable(_module_payload(name)), fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(path)

    records, _ = _run_records()
    report = {
        "suite": "ia3-verify",
        "records": records,
        "metadata": {"python": platform.python_version(), "version": __version__},
    }
    report_path = os.path.join(out_dir, "report.json")
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(_jsonable(report), fh, indent=2, sort_keys=True)
        fh.write("\n")
    written.append(report_path)

    figure_path = os.path.join(out_dir, "bracket_matrix.png")
    _figure_bracket(figure_path, bracketmap.build_bracket_matrix())
    written.append(figure_path)
    grid_path = os.path.join(out_dir, "table1_grid.png")
    _figure_table1(grid_path, data)
    written.append(grid_path)

    for path in written:
        print(f"wrote {path}")
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ia3",
        description="exact verification of the rank-3 IA relator computations",
    )
    parser.add_argument("--version", action="version", version=f"ia3 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witt", help="free Lie algebra rank in a given weight")
    p.add_argument("-n", type=int, default=9, help="alphabet size (default 9)")
    p.add_argument("-k", type=int, default=3, help="weight (default 3)")
    p.set_defaults(handler=cmd_witt)

    p = sub.add_parser("hall", help="list the Hall basis trees of a given weight")
    p.add_argument("-n", type=int, default=9)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--emit", metavar="PATH", help="write the tree list to a file")
    p.set_defaults(handler=cmd_hall)

    p = sub.add_parser("relators", help="show the 18 relator records")
    p.add_argument("--id", help="show a single relator")
    p.add_argument("--data", metavar="PATH", help="override the relator data file")
    p.set_defaults(handler=cmd_relators)

    p = sub.add_parser("bracket", help="the relator-by-generator bracket matrix")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--rank", action="store_true", help="print the rank only")
    group.add_argument("--snf", action="store_true", help="print the cokernel report")
    group.add_argument("--emit", metavar="PATH", help="write the matrix as CSV")
    p.set_defaults(handler=cmd_bracket)

    p = sub.add_parser("table1", help="verify the elimination bookkeeping")
    p.add_argument("--data", metavar="PATH", help="override the mark data file")
    p.set_defaults(handler=cmd_table1)

    p = sub.add_parser("decompose", help="irreducible decompositions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--module", choices=glrep.MODULE_NAMES)
    group.add_argument("--tensor", nargs=2, metavar=("LAM", "MU"),
                       help="two weights, each a,b,c")
    group.add_argument("--ext", nargs=2, metavar=("LAM", "K"),
                       help="a weight a,b,c and an exterior power degree")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("hwcheck", help="highest weight and membership checks")
    p.set_defaults(handler=cmd_hwcheck)

    p = sub.add_parser("johnson", help="vanishing of the degree-2 obstruction")
    p.add_argument("--vector", choices=JOHNSON_VECTORS,
                   help="restrict to a single named vector")
    p.set_defaults(handler=cmd_johnson)

    p = sub.add_parser("deep-relator", help="the weight-3 relator certificate")
    p.set_defaults(handler=cmd_deep_relator)

    p = sub.add_parser("verify", help="run the full acceptance suite")
    p.add_argument("--all", action="store_true", required=True,
                   help="run every check (required)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("emit", help="write all artifacts and figures to a directory")
    p.add_argument("--dir", help=f"output directory (default ${OUTPUT_DIR_VAR} "
                                 "or ./artifacts)")
    p.add_argument("--table1-data", metavar="PATH",
                   help="override the mark data file")
    p.set_defaults(handler=cmd_emit)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        records = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if any(rec.get("status") == "fail" for rec in records or []):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

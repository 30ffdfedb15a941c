"""Command line interface.

Every subcommand reads a map file and prints plain text, TSV
(``--format tsv``) or one JSON object per line (``--format json-lines``).
Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
import json
import os
import sys

from . import bijection as bij
from . import orientation as ori
from . import sandpile as sp
from . import trees as tr
from .corpus import EXHAUSTIVE_NAMES, corpus
from .errors import TutteMapsError
from .literals import parse_orientation, parse_subgraph, parse_vertex_values, subgraph_str
from .mapfile import load_map, serialize_map
from .maps import dual_map, euler_characteristic


@dataclass
class Output:
    text: list = field(default_factory=list)
    header: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    records: list = field(default_factory=list)
    status: int = 0


def _set(m, mask):
    """Subgraph literal; ``{}`` for the empty set so it can be fed back."""
    return subgraph_str(m, mask) or "{}"


def _values(m, vals):
    return ",".join(f"{m.vertex_names[v]}={x}" for v, x in enumerate(vals))


def cmd_tutte(m, args):
    p = tr.tutte_polynomial(m)
    out = Output([str(p)], ["x_power", "y_power", "coefficient"])
    out.rows = [[i, j, c] for i, j, c in p.to_json()]
    out.records = [{"map": args.map, "tutte": str(p), "coefficients": p.to_json()}]
    return out


def cmd_delta(m, args):
    S = parse_subgraph(m, args.subgraph)
    T = tr.delta(m, S)
    a = tr.activities(m, T)
    out = Output(
        [_set(m, T), f"internal active: {_set(m, a.internal_active)}",
         f"external active: {_set(m, a.external_active)}"],
        ["subgraph", "tree", "internal_active", "external_active"],
        [[_set(m, S), _set(m, T), _set(m, a.internal_active), _set(m, a.external_active)]],
    )
    out.records = [dict(zip(out.header, out.rows[0]))]
    return out


def _orientation_output(m, o, extra=None):
    lit = ori.orientation_str(m, o)
    out = Output([lit, "arcs: " + ori.arcs_str(m, o)], ["edge", "tail", "head"])
    out.rows = [[m.edge_names[e], m.tokens[o.tail(m, e)], m.tokens[o.head(m, e)]] for e in range(m.n_edges)]
    rec = {"orientation": lit, "arcs": [r[1:] for r in out.rows]}
    rec.update(extra or {})
    out.records = [rec]
    return out


def cmd_phi(m, args):
    S = parse_subgraph(m, args.subgraph)
    return _orientation_output(m, bij.phi(m, S), {"subgraph": _set(m, S)})


def cmd_psi(m, args):
    o = parse_orientation(m, args.orient)
    run = bij.psi_run(m, o)
    branches = ",".join(f"{m.edge_names[e]}:{run.branch[e]}" for e in range(m.n_edges))
    out = Output(
        [_set(m, run.subgraph), f"tree: {_set(m, run.tree)}", f"branches: {branches}"],
        ["orientation", "subgraph", "tree"],
        [[ori.orientation_str(m, o), _set(m, run.subgraph), _set(m, run.tree)]],
    )
    out.records = [dict(zip(out.header, out.rows[0]), branches=branches)]
    return out


def cmd_lambda(m, args):
    T = parse_subgraph(m, args.tree)
    c = sp.lambda_(m, T)
    lvl = sp.level(m, c)
    out = Output([_values(m, c), f"level: {lvl}"], ["vertex", "grains"])
    out.rows = [[m.vertex_names[v], x] for v, x in enumerate(c)]
    out.records = [{"tree": _set(m, T), "config": _values(m, c), "level": lvl}]
    return out


def cmd_upsilon(m, args):
    c = parse_vertex_values(m, args.config)
    T = sp.upsilon(m, c)
    delta = sp.sandpile_to_outdegree(m, c)
    out = Output(
        [_set(m, T), f"outdegrees: {_values(m, delta)}"],
        ["config", "tree", "outdegrees"],
        [[_values(m, c), _set(m, T), _values(m, delta)]],
    )
    out.records = [dict(zip(out.header, out.rows[0]))]
    return out


def cmd_gamma(m, args):
    if args.delta is not None:
        d = parse_vertex_values(m, args.delta)
        F = bij.gamma_inverse(m, d)
        o = bij.minimal_orientation(m, d)
        out = Output(
            [_set(m, F), "minimal orientation: " + ori.orientation_str(m, o)],
            ["outdegrees", "forest", "minimal_orientation"],
            [[_values(m, d), _set(m, F), ori.orientation_str(m, o)]],
        )
    else:
        F = parse_subgraph(m, args.forest)
        d = bij.gamma(m, F)
        out = Output([_values(m, d)], ["forest", "outdegrees"], [[_set(m, F), _values(m, d)]])
    out.records = [dict(zip(out.header, out.rows[0]))]
    return out


def census_table(c):
    width = max(len(str(x)) for row in c.subgraphs for x in row) + 2
    lines = ["".ljust(10) + "".join(h.rjust(max(width, len(h) + 2)) for h in bij.COLS_SUB)]
    for name, row in zip(bij.ROWS_SUB, c.subgraphs):
        lines.append(name.ljust(10) + "".join(str(x).rjust(max(width, len(h) + 2)) for x, h in zip(row, bij.COLS_SUB)))
    return lines


def cmd_census(m, args):
    c = bij.specialization_census(m)
    out = Output(census_table(c), ["class"] + list(bij.COLS_SUB))
    out.rows = [[name] + row for name, row in zip(bij.ROWS_SUB, c.subgraphs)]
    if not c.consistent:
        out.text.append(f"MISMATCH orientations={c.orientations} tutte={c.tutte}")
        out.status = 1
    out.records = [{
        "map": args.map, "census": c.subgraphs, "orientations": c.orientations,
        "tutte": c.tutte, "consistent": c.consistent,
    }]
    if args.plot:
        from .plotting import plot_census

        plot_census(c, args.plot, os.path.basename(args.map))
    return out


def cmd_rootcomp(m, args):
    o = parse_orientation(m, args.orient)
    p = bij.root_strong_components(m, o) if args.strong else bij.root_components(m, o)
    blocks = [",".join(m.vertex_names[v] for v in sorted(b)) for b in p.blocks]
    links = ["-"] + [m.edge_names[e] for e in p.links]
    out = Output([f"V{i}: {{{b}}}" + (f" via {links[i]}" if i else "") for i, b in enumerate(blocks)],
                 ["block", "vertices", "link"])
    out.rows = [[i, b, links[i]] for i, b in enumerate(blocks)]
    out.records = [{"orientation": ori.orientation_str(m, o), "strong": args.strong,
                    "blocks": blocks, "links": links[1:]}]
    return out


def cmd_dual(m, args):
    d = dual_map(m)
    text = serialize_map(d).rstrip("\n").split("\n")
    out = Output(text, ["directive", "value"], [line.split(" ", 1) for line in text])
    out.records = [{"map": args.map, "dual": serialize_map(d),
                    "euler_characteristic": euler_characteristic(d)}]
    return out


def cmd_verify(args):
    from .verify import verify_all, verify_corpus

    if args.corpus:
        maps = corpus(args.seed, args.count, args.max_halfedges)
        report = verify_corpus(maps, seed=args.seed)
    else:
        if args.map is None:
            raise TutteMapsError("verify needs a map file or --corpus")
        maps = [(os.path.basename(args.map), load_map(args.map))]
        report = verify_all(maps[0][1], maps[0][0])
    out = Output(header=["map", "check", "status", "witness"])
    if args.timing:
        out.header.append("seconds")
    for r in report.records:
        row = [r.map, r.check, r.status, r.witness]
        if args.timing:
            row.append(f"{r.seconds:.4f}")
        out.rows.append(row)
        rec = r.as_dict()
        if args.timing:
            rec["seconds"] = round(r.seconds, 4)
        out.records.append(rec)
        out.text.append(f"{r.status.upper():4} {r.map:14} {r.check}" + (f"  {r.witness}" if r.witness else ""))
    n_fail = len(report.failures())
    summary = f"{len(report.records)} checks on {len(maps)} maps, {n_fail} failed"
    if args.seed is not None and args.corpus:
        summary += f", seed {args.seed}"
    uncovered = report.uncovered()
    summary += "; coverage " + ("complete" if not uncovered else "missing " + ",".join(uncovered))
    out.text.append(summary)
    out.status = 0 if report.ok else 1
    if args.report_dir:
        write_report_dir(args.report_dir, out, report, maps)
    return out


def write_report_dir(path, out, report, maps):
    from .plotting import plot_census, plot_check_summary, plot_refinements

    os.makedirs(path, exist_ok=True)
    with open(os.path.join(path, "report.tsv"), "w", encoding="utf-8") as fh:
        fh.write(_tsv(out.header, out.rows))
    with open(os.path.join(path, "report.jsonl"), "w", encoding="utf-8") as fh:
        fh.write(_jsonl(out.records))
    with open(os.path.join(path, "coverage.tsv"), "w", encoding="utf-8") as fh:
        fh.write(_tsv(["operation", "checks"], [[op, report.coverage[op]] for op in sorted(report.coverage)]))
    plot_check_summary(report, os.path.join(path, "checks.png"))
    named = dict(maps)
    for name in EXHAUSTIVE_NAMES if len(maps) > 1 else list(named):
        if name in report.census:
            plot_census(report.census[name], os.path.join(path, f"census_{name}.png"), name)
            plot_refinements(named[name], os.path.join(path, f"rootcomp_{name}.png"), name)


def _tsv(header, rows):
    lines = ["\t".join(header)] + ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _jsonl(records):
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


COMMANDS = {
    "tutte": cmd_tutte, "delta": cmd_delta, "phi": cmd_phi, "psi": cmd_psi,
    "lambda": cmd_lambda, "upsilon": cmd_upsilon, "gamma": cmd_gamma, "census": cmd_census,
    "rootcomp": cmd_rootcomp, "dual": cmd_dual,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv", "json-lines"), default="text")
    parser = argparse.ArgumentParser(prog="tuttemaps", description="Tutte polynomial bijections on rooted maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        if name != "verify":
            p.add_argument("map", help="map file")
        return p

    add("tutte", "Tutte polynomial from embedding activities")
    add("delta", "tree whose interval contains a subgraph").add_argument("--subgraph", required=True, metavar="EDGES")
    add("phi", "orientation of a subgraph").add_argument("--subgraph", required=True, metavar="EDGES")
    add("psi", "subgraph of an orientation").add_argument("--orient", required=True, metavar="TAILS")
    add("lambda", "recurrent configuration of a spanning tree").add_argument("--tree", required=True, metavar="EDGES")
    add("upsilon", "spanning tree of a recurrent configuration").add_argument("--config", required=True, metavar="V=N,...")
    p = add("gamma", "outdegree sequence of a forest, or the inverse with --delta")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--forest", metavar="EDGES")
    g.add_argument("--delta", metavar="V=N,...")
    p = add("census", "3x3 table of subgraph and orientation classes")
    p.add_argument("--plot", metavar="PNG", help="also draw the table as a heatmap")
    p = add("rootcomp", "root-components of an orientation")
    p.add_argument("--orient", required=True, metavar="TAILS")
    p.add_argument("--strong", action="store_true", help="root-strong-components instead")
    add("dual", "dual map in map-file format")
    p = add("verify", "run every identity exhaustively")
    p.add_argument("map", nargs="?", help="map file (omit with --corpus)")
    p.add_argument("--corpus", action="store_true", help="named maps plus seeded random maps")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=50, help="number of random maps")
    p.add_argument("--max-halfedges", type=int, default=12)
    p.add_argument("--report-dir", metavar="DIR", help="write report.tsv, report.jsonl and figures here")
    p.add_argument("--timing", action="store_true", help="include per-check seconds (not deterministic)")
    return parser


def emit(out, fmt, stream):
    if fmt == "text":
        stream.write("\n".join(out.text) + "\n")
    elif fmt == "tsv":
        stream.write(_tsv(out.header, out.rows))
    else:
        stream.write(_jsonl(out.records))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            out = cmd_verify(args)
        else:
            m = load_map(args.map)
            out = COMMANDS[args.command](m, args)
    except (TutteMapsError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    emit(out, args.format, sys.stdout)
    return out.status


if __name__ == "__main__":
    sys.exit(main())

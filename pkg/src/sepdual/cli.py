"""Command-line surface for reproducible batch runs.

Subcommands: ingest, enumerate, order, shift, tangles, verify, homology.
Thresholds are always passed doubled (``--k2 3`` means k = 3/2) so that no
float parsing is involved.  Reports are deterministic JSON: same config and
seed, byte-identical output.

Exit codes: 0 success/verified, 1 violated invariant or counterexample,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bigraph import (check_duality_wellformedness, from_dict, gen_planted,
                      gen_random, read_transactions_csv)
from .errors import CapExceeded, SepdualError
from .homology import (BoundaryMatrix, find_decider, kernel_basis,
                       orientation_to_chain, tangle_kernel_check,
                       validate_decider)
from .orders import HalfInt, order_of, order_side_edge_form, universe_context
from .separations import make_sep
from .shifts import edges_to_side, sep_to_edges, shift_partition, shift_side
from .tangles import DEFAULT_MEMBER_CAP, build_system, enumerate_tangles
from .verify import K2_GRID, report_json, run_corpus

_UNIVERSES = ("x", "y", "e", "bx", "by")


def _graph_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="transactions CSV (group,member) or graph JSON")
    p.add_argument("--generator", choices=("random", "planted"))
    p.add_argument("--nx", type=int, default=3)
    p.add_argument("--ny", type=int, default=3)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--blocks", default="3x3,3x3",
                   help="planted block sizes, e.g. 3x3,2x2")
    p.add_argument("--in-p", type=float, default=1.0, dest="in_p")
    p.add_argument("--cross-p", type=float, default=0.0, dest="cross_p")
    p.add_argument("--seed", type=int, default=0)


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv-summary"), default="json")


def _load_graph(args):
    if args.input:
        path = Path(args.input)
        if path.suffix == ".json":
            g = from_dict(json.loads(path.read_text()))
        else:
            with open(path, newline="", encoding="utf-8") as fh:
                g = read_transactions_csv(fh)
        source = {"input": str(path)}
    elif args.generator == "random":
        g = gen_random(args.nx, args.ny, args.p, args.seed)
        source = {"generator": "random", "nx": args.nx, "ny": args.ny,
                  "p": args.p, "seed": args.seed}
    elif args.generator == "planted":
        blocks = []
        for part in args.blocks.split(","):
            bx, by = part.lower().split("x")
            blocks.append((int(bx), int(by)))
        g = gen_planted(blocks, args.in_p, args.cross_p, args.seed)
        source = {"generator": "planted", "blocks": args.blocks,
                  "in_p": args.in_p, "cross_p": args.cross_p, "seed": args.seed}
    else:
        raise SepdualError("no graph source: pass --input or --generator")
    return g, source


def _parse_side(g, universe, text):
    _, ground, _ = universe_context(g, universe)
    labels = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        if universe == "e":
            xl, _, yl = item.partition("--")
            labels.append((xl, yl))
        else:
            labels.append(item)
    return ground.mask(labels)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_report(payload: dict, config: dict) -> str:
    payload = dict(payload)
    payload["version"] = __version__
    payload["config"] = config
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_ingest(args) -> int:
    g, source = _load_graph(args)
    report = check_duality_wellformedness(g)
    print(f"|X|={g.x.n} |Y|={g.y.n} |E|={g.n_edges}")
    for side in ("x", "y"):
        ident = report[side]["identical"]
        comp = report[side]["complementary"]
        if ident:
            print(f"side {side}: identical neighbourhood classes: {ident}")
        if comp:
            print(f"side {side}: complementary neighbourhood classes: {comp}")
    if not any(report[s][k] for s in ("x", "y")
               for k in ("identical", "complementary")):
        print("all neighbourhood partitions distinct")
    if args.out:
        Path(args.out).write_text(g.dump_json())
    return 0


def cmd_enumerate(args) -> int:
    g, source = _load_graph(args)
    system = build_system(g, args.universe, HalfInt(args.k2),
                          cap=args.cap_edges if args.universe == "e" else args.cap_seps)
    members = []
    for i, m in enumerate(system.members):
        ground = system.ground
        members.append({
            "a": [str(l) for l in _labels(ground, m.a)],
            "b": [str(l) for l in _labels(ground, m.b)],
            "order2": system.orders2[i],
        })
    config = {"source": source, "universe": args.universe, "k2": args.k2}
    _emit(args, _json_report({"members": members, "count": len(members)}, config))
    return 0


def _labels(ground, mask):
    return [f"{l[0]}--{l[1]}" if isinstance(l, tuple) else str(l)
            for l in ground.members(mask)]


def cmd_order(args) -> int:
    g, source = _load_graph(args)
    _, ground, _ = universe_context(g, args.universe)
    s = make_sep(ground, _parse_side(g, args.universe, args.a),
                 _parse_side(g, args.universe, args.b))
    value = order_of(g, args.universe, s)
    payload = {"order2": value.doubled, "order": str(value)}
    if args.universe in ("x", "y"):
        payload["edge_form_order2"] = order_side_edge_form(
            g, s, args.universe).doubled
    config = {"source": source, "universe": args.universe,
              "a": args.a, "b": args.b}
    _emit(args, _json_report(payload, config))
    return 0


def cmd_shift(args) -> int:
    g, source = _load_graph(args)
    _, ground, _ = universe_context(g, args.universe)
    s = make_sep(ground, _parse_side(g, args.universe, args.a),
                 _parse_side(g, args.universe, args.b))
    if args.universe in ("bx", "by"):
        out = shift_partition(g, s, args.universe[1])
        dest = "b" + ("y" if args.universe == "bx" else "x")
    elif args.universe == "e":
        target = args.to or "x"
        out = edges_to_side(g, s, target)
        dest = target
    elif args.to == "e":
        out = sep_to_edges(g, s, args.universe)
        dest = "e"
    else:
        out = shift_side(g, s, args.universe)
        dest = "y" if args.universe == "x" else "x"
    _, dest_ground, _ = universe_context(g, dest)
    payload = {"a": _labels(dest_ground, out.a), "b": _labels(dest_ground, out.b),
               "universe": dest}
    config = {"source": source, "universe": args.universe, "a": args.a,
              "b": args.b, "to": args.to}
    _emit(args, _json_report(payload, config))
    return 0


def _ground_cap(args):
    if getattr(args, "cap_edges", None) is not None and args.universe == "e":
        return args.cap_edges
    return getattr(args, "cap_seps", None) if args.universe != "e" else None


def cmd_tangles(args) -> int:
    g, source = _load_graph(args)
    kind = "tangle" if args.kind == "tangle" else "regular_profile"
    system = build_system(g, args.universe, HalfInt(args.k2),
                          cap=_ground_cap(args))
    found = enumerate_tangles(g, args.universe, HalfInt(args.k2), kind=kind,
                              member_cap=args.member_cap, system=system)
    config = {"source": source, "universe": args.universe, "k2": args.k2,
              "kind": args.kind, "member_cap": args.member_cap}
    if args.format == "csv-summary":
        lines = ["index,member_count"]
        lines += [f"{i},{len(o.forward)}" for i, o in enumerate(found)]
        _emit(args, "\n".join(lines) + "\n")
    else:
        payload = {"count": len(found), "tangles": [o.to_dict() for o in found]}
        _emit(args, _json_report(payload, config))
    return 0


def cmd_verify(args) -> int:
    k2_grid = args.k2 if args.k2 else list(K2_GRID)
    if args.corpus:
        graphs = None
    else:
        g, source = _load_graph(args)
        graphs = [(args.name, g)]
    report = run_corpus(k2_grid=k2_grid, graphs=graphs,
                        theorems=args.theorem or None,
                        member_cap=args.member_cap)
    if args.format == "csv-summary":
        lines = ["theorem,graph_seed,k_doubled,outcome,hypothesis_count"]
        for c in report["cases"]:
            lines.append(f"{c['theorem']},{c['graph_seed']},{c['k_doubled']},"
                         f"{c['outcome']},{c['hypothesis_count']}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, report_json(report))
    return 0 if report["summary"]["counterexamples"] == 0 else 1


def cmd_homology(args) -> int:
    g, source = _load_graph(args)
    system = build_system(g, args.universe, HalfInt(args.k2),
                          cap=_ground_cap(args))
    bmat = BoundaryMatrix(system.ground.n, list(system.members))
    basis = kernel_basis(bmat)
    payload = {
        "n": bmat.n,
        "m": bmat.m,
        "matrix": bmat.rows(),
        "prop_vs": bmat.check_vs_duality(),
        "kernel_dim": len(basis),
        "kernel_basis": basis,
        "deciders": [],
    }
    kind = "tangle" if args.kind == "tangle" else "regular_profile"
    for o in enumerate_tangles(g, args.universe, HalfInt(args.k2), kind=kind,
                               member_cap=args.member_cap, system=system):
        lam = orientation_to_chain(o, bmat.seps)
        mu = find_decider(bmat, lam, bound=args.decider_bound,
                          mode=args.decider_mode, constraint=args.mu_constraint)
        entry = {"lambda": lam, "mu": mu,
                 "bound": args.decider_bound or max(bmat.m, 1),
                 "in_kernel": tangle_kernel_check(bmat, lam)}
        if mu is not None and args.decider_mode == "componentwise":
            entry["revalidated"] = validate_decider(bmat, lam, mu)
        payload["deciders"].append(entry)
    config = {"source": source, "universe": args.universe, "k2": args.k2,
              "kind": args.kind, "decider_mode": args.decider_mode}
    _emit(args, _json_report(payload, config))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sepdual",
        description="dual separation systems: orders, shifts, tangles, "
                    "theorem verification, homology")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load a graph and report wellformedness")
    _graph_options(p)
    p.add_argument("--out", help="write the graph JSON dump here")
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("enumerate", help="list the members of a low-order system")
    _graph_options(p)
    _output_options(p)
    p.add_argument("--universe", choices=_UNIVERSES, default="x")
    p.add_argument("--k2", type=int, required=True, help="doubled threshold")
    p.add_argument("--cap-seps", type=int, default=None, dest="cap_seps")
    p.add_argument("--cap-edges", type=int, default=None, dest="cap_edges")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("order", help="evaluate the order of one separation")
    _graph_options(p)
    _output_options(p)
    p.add_argument("--universe", choices=_UNIVERSES, default="x")
    p.add_argument("--a", required=True, help="comma-separated labels")
    p.add_argument("--b", required=True)
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("shift", help="shift one separation across the duality")
    _graph_options(p)
    _output_options(p)
    p.add_argument("--universe", choices=_UNIVERSES, default="x")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--to", choices=("x", "y", "e"),
                   help="target universe (edge shifts and side-to-edge)")
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("tangles", help="enumerate tangles or regular profiles")
    _graph_options(p)
    _output_options(p)
    p.add_argument("--universe", choices=_UNIVERSES, default="x")
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--kind", choices=("tangle", "profile"), default="tangle")
    p.add_argument("--member-cap", type=int, default=DEFAULT_MEMBER_CAP,
                   dest="member_cap")
    p.add_argument("--cap-seps", type=int, default=None, dest="cap_seps")
    p.add_argument("--cap-edges", type=int, default=None, dest="cap_edges")
    p.set_defaults(fn=cmd_tangles)

    p = sub.add_parser("verify", help="run the theorem suite")
    _graph_options(p)
    _output_options(p)
    p.add_argument("--corpus", action="store_true",
                   help="run on the shipped 50-graph corpus")
    p.add_argument("--name", default="graph", help="graph name in the report")
    p.add_argument("--k2", type=int, action="append",
                   help="doubled threshold; repeatable (default grid 1 2 3 4)")
    p.add_argument("--theorem", action="append",
                   help="theorem id; repeatable (default: all)")
    p.add_argument("--member-cap", type=int, default=DEFAULT_MEMBER_CAP,
                   dest="member_cap")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("homology", help="boundary matrix, kernel, deciders")
    _graph_options(p)
    _output_options(p)
    p.add_argument("--universe", choices=_UNIVERSES, default="x")
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--kind", choices=("tangle", "profile"), default="tangle")
    p.add_argument("--member-cap", type=int, default=DEFAULT_MEMBER_CAP,
                   dest="member_cap")
    p.add_argument("--cap-seps", type=int, default=None, dest="cap_seps")
    p.add_argument("--cap-edges", type=int, default=None, dest="cap_edges")
    p.add_argument("--decider-mode", choices=("componentwise", "scalar"),
                   default="componentwise", dest="decider_mode")
    p.add_argument("--decider-bound", type=int, default=None,
                   dest="decider_bound")
    p.add_argument("--mu-constraint", choices=("nonneg", "zero_one", "sum_one"),
                   default=None, dest="mu_constraint")
    p.set_defaults(fn=cmd_homology)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SepdualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

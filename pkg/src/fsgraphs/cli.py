"""Command-line front end.

Graphs are given as a family spec (``path:3``, ``star:7``, ``starcle:9:3,5``,
``grid:3x3``, ``gnp:8:0.5:12345``, ``theta0``) or ``@file`` holding an edge
list: the vertex count on the first line, then one ``u v`` pair per line.

Exit status: 0 success, 1 computational failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import graphs
from . import perms as P
from .connectivity import (check_local_exchangeability, fs_component_connectivity,
                           max_disjoint_paths, min_vertex_cut, vertex_connectivity)
from .fs import (BudgetError, FSInstance, components_report, fs_component_ranks,
                 fs_components, min_fs_degree)
from .graphs import GraphError, SimpleGraph
from .structure import (StructureError, arrow_depiction, atomic_parts, block_decomposition,
                        classify_block, is_wilsonian, predict_component_size, route_in_star_fs)

FAMILY_HELP = ("family spec (complete:n, empty:n, star:n, star-plus:n, path:n, cycle:n, "
               "theta0, starcle:n[:x1,x2..], grid:RxC, gnp:n:p[:seed]) or @file edge list")
EXTRA_CHECKS = ("parity", "cut-vertex-bound", "starcle-paths")


class UsageError(Exception):
    pass


def _graph(text: str | None, seed: int | None, what: str = "--x") -> SimpleGraph:
    if text is None:
        raise UsageError(f"{what} is required")
    parts = text.split(":")
    if parts[0] == "gnp" and len(parts) == 3:
        if seed is None:
            raise UsageError("gnp without an inline seed needs --seed")
        text = f"{text}:{seed}"
    try:
        return graphs.load_graph(text)
    except GraphError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _perm(text: str, n: int, what: str) -> P.Perm:
    try:
        s = P.parse(text)
    except P.PermutationError as exc:
        raise UsageError(f"{what}: {exc}") from None
    if len(s) != n:
        raise UsageError(f"{what} has length {len(s)}, expected {n}")
    return s


def _pair(args) -> FSInstance:
    x = _graph(args.x, args.seed)
    y = _graph(args.y, args.seed, "--y")
    if x.n != y.n:
        raise UsageError(f"X has {x.n} vertices but Y has {y.n}")
    return FSInstance(x, y)


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_build(args) -> int:
    g = _graph(args.x, args.seed)
    doc = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    _emit(args, doc, graphs.format_edge_list(g).rstrip("\n"))
    return 0


def cmd_fs_components(args) -> int:
    inst = _pair(args)
    comps = fs_components(inst, with_types=args.types)
    doc = components_report(inst, comps)
    lines = [f"components: {len(comps)}"]
    lines += [f"  size {c.size:>8}  representative {P.fmt(c.representative)}" for c in comps]
    if args.figures:
        from .plotting import component_histogram
        path = component_histogram([c.size for c in comps],
                                   os.path.join(args.figures, "component_sizes.png"))
        print(f"wrote {path}", file=sys.stderr)
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_connectivity(args) -> int:
    x = _graph(args.x, args.seed)
    if args.y is None:
        if args.paths:
            u, v = args.paths
            count, paths = max_disjoint_paths(x, u, v)
            doc = {"u": u, "v": v, "count": count, "paths": paths}
            text = f"{count} disjoint paths\n" + "\n".join(" ".join(map(str, p)) for p in paths)
            _emit(args, doc, text)
            return 0
        kappa = vertex_connectivity(x)
        cut = min_vertex_cut(x)
        doc = {"n": x.n, "kappa": kappa, "min_degree": graphs.min_degree(x),
               "min_cut": None if cut is None else sorted(cut)}
        _emit(args, doc, f"kappa {kappa}  min degree {doc['min_degree']}  "
                         f"min cut {doc['min_cut']}")
        return 0
    if args.paths:
        raise UsageError("--paths applies to X alone; drop --y")
    inst = _pair(args)
    s = _perm(args.state, inst.n, "--state") if args.state else P.identity(inst.n)
    size = len(fs_component_ranks(inst, s))
    kappa = fs_component_connectivity(inst, s, budget=args.budget)
    doc = {"n": inst.n, "state": list(s), "component_size": size, "kappa": kappa,
           "min_fs_degree": min_fs_degree(inst)}
    text = f"component of {P.fmt(s)}: {size} states, kappa {kappa}"
    if args.exchange is not None:
        verdict = check_local_exchangeability(inst, args.exchange, use_symmetry=True,
                                              budget=args.budget)
        doc["exchange"] = verdict.to_json()
        text += f"\nlocal exchange with k={args.exchange}: {'holds' if verdict.holds else 'fails'}"
    _emit(args, doc, text)
    return 0


def _block_report(x: SimpleGraph) -> dict:
    dec = block_decomposition(x)
    blocks = []
    for i, blk in enumerate(dec.blocks):
        cls = classify_block(dec.block_graph(i)[0])
        blocks.append({"vertices": list(blk), "class": cls.tag.value, "wilson": cls.value})
    size = predict_component_size(x).size
    return {"n": x.n, "blocks": blocks, "cut_vertices": sorted(dec.cut_vertices),
            "predicted_size": size, "componentCount": math.factorial(x.n) // size,
            "arrows": arrow_depiction(x).to_json()}


def cmd_blocks(args) -> int:
    x = _graph(args.x, args.seed)
    doc = _block_report(x)
    lines = [f"B{i}: {b['vertices']}  {b['class']}  wilson={b['wilson']}"
             for i, b in enumerate(doc["blocks"])]
    lines.append(f"cut vertices: {doc['cut_vertices']}")
    lines.append(f"predicted component size {doc['predicted_size']}, "
                 f"{doc['componentCount']} components")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_predict_size(args) -> int:
    x = _graph(args.x, args.seed)
    pred = predict_component_size(x, args.anchor)
    doc = {"n": x.n, "anchor": args.anchor if args.anchor is not None else x.n,
           "size": pred.size,
           "blocks": [{"vertices": list(v), "class": c.tag.value, "wilson": c.value}
                      for v, c in pred.blocks]}
    if graphs.is_connected(x):
        doc["componentCount"] = math.factorial(x.n) // pred.size
    _emit(args, doc, str(pred.size))
    return 0


def cmd_wilson(args) -> int:
    x = _graph(args.x, args.seed)
    rep = is_wilsonian(x)
    text = "wilsonian" if rep else "not wilsonian: " + ", ".join(rep.failed)
    _emit(args, rep.to_json(), text)
    return 0


def cmd_route(args) -> int:
    x = _graph(args.x, args.seed)
    s = _perm(args.start, x.n, "--from")
    t = _perm(args.target, x.n, "--to")
    swaps = route_in_star_fs(x, s, t, method=args.method)
    if swaps is None:
        print(f"{P.fmt(s)} and {P.fmt(t)} lie in different components", file=sys.stderr)
        return 1
    doc = {"from": list(s), "to": list(t), "length": len(swaps),
           "swaps": [list(e) for e in swaps]}
    _emit(args, doc, " ".join(f"({i},{j})" for i, j in swaps) or "(already equal)")
    return 0


def cmd_atomic(args) -> int:
    x = _graph(args.x, args.seed)
    part = atomic_parts(x)
    text = (f"kappa {part.kappa}  rho {part.rho}\n"
            + "\n".join(" ".join(map(str, sorted(p))) for p in part.parts))
    _emit(args, part.to_json(), text)
    return 0


def _verify_extra(args) -> tuple[dict, bool]:
    from . import theorems as T
    name = args.theorem
    if name == "parity":
        inst = _pair(args)
        res = T.check_parity_invariant(inst)
        return {"theorem": name, "status": "pass" if res.holds else "fail",
                **res.to_json()}, res.holds
    if name == "cut-vertex-bound":
        inst = _pair(args)
        bound = T.cut_vertex_bound(inst.X, inst.Y)
        count = len(fs_components(inst))
        if bound is None:
            return {"theorem": name, "status": "hypotheses not satisfied",
                    "measured": count}, True
        ok = count >= bound.bound
        return {"theorem": name, "status": "pass" if ok else "fail", "claimed": bound.bound,
                "measured": count, "x_cut": bound.x_cut, "y_cut": bound.y_cut}, ok
    # starcle-paths
    parts = (args.x or "").split(":")
    if parts[0] != "starcle" or len(parts) not in (2, 3):
        raise UsageError("starcle-paths expects --x starcle:n[:x1,x2..]")
    try:
        n = int(parts[1])
        diag = tuple(int(v) for v in parts[2].split(",") if v) if len(parts) == 3 else ()
    except ValueError:
        raise UsageError(f"cannot parse {args.x!r}") from None
    if args.sample is not None and args.seed is None:
        raise UsageError("--sample needs --seed")
    k = args.k if args.k is not None else len(diag) + 1
    try:
        res = T.starcle_disjoint_paths_check(n, diag, k, args.sample, args.seed,
                                             budget=args.budget)
    except T.HypothesisError as exc:
        return {"theorem": name, "status": "hypotheses not satisfied",
                **exc.report.to_json()}, True
    return {"theorem": name, "status": "pass" if res.holds else "fail", **res.to_json()}, res.holds


def cmd_verify(args) -> int:
    from . import theorems as T
    if args.theorem in EXTRA_CHECKS:
        doc, ok = _verify_extra(args)
    else:
        try:
            T.resolve_theorem(args.theorem)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        x = _graph(args.x, args.seed)
        y = _graph(args.y, args.seed, "--y") if args.y else None
        res = T.verify_theorem(args.theorem, x, y, args.k, budget=args.budget)
        doc, ok = res.to_json(), res.status != "fail"
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        line = f"{doc['theorem']}: {doc['status']}"
        if "claimed" in doc or "measured" in doc:
            line += f"  measured {doc.get('measured')}  claimed {doc.get('claimed')}"
        rest = {k: v for k, v in doc.items()
                if k not in ("theorem", "status", "claimed", "measured", "hypotheses", "verdict")}
        if rest:
            line += "  " + "  ".join(f"{k} {json.dumps(v)}" for k, v in rest.items())
        print(line)
        for h in doc.get("hypotheses", []):
            slack = "" if h["slack"] is None else f"  slack {h['slack']}"
            print(f"  [{'x' if h['holds'] else ' '}] {h['name']}{slack}")
    return 0 if ok else 1


def _floats(text: str, what: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated numbers") from None


def cmd_experiment(args) -> int:
    from . import lab
    if args.seed is None:
        raise UsageError("experiment needs --seed")
    if args.p is not None:
        grid = [(p, p) for p in _floats(args.p, "--p")]
    elif args.p1 is not None and args.p2 is not None:
        grid = [(a, b) for a in _floats(args.p1, "--p1") for b in _floats(args.p2, "--p2")]
    else:
        raise UsageError("give --p, or both --p1 and --p2")
    try:
        cfg = lab.ExperimentConfig(args.n, grid, args.trials, args.seed, args.k,
                                   timing=args.timing)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sweep = lab.run_sweep(cfg, jobs=args.jobs, exact_ci=args.exact_ci)
    summary = sweep.summary()
    crossing = lab.sweep_crossing(summary, 0.5, "p1" if args.p is not None else "geometric")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(sweep.records_csv())
    if args.summary:
        with open(args.summary, "w", newline="") as fh:
            fh.write(sweep.summary_csv())
    if args.figures:
        from .plotting import sweep_figure
        path = sweep_figure(summary, os.path.join(args.figures, "sweep.png"))
        print(f"wrote {path}", file=sys.stderr)
    if args.format == "csv":
        sys.stdout.write(sweep.records_csv())
    elif args.format == "json":
        rows = [dict(zip(lab.SUMMARY_HEADER, (getattr(s, h) for h in lab.SUMMARY_HEADER)))
                for s in summary]
        print(json.dumps({"summary": rows, "crossing": crossing,
                          "errors": len(sweep.errors)}, indent=2))
    else:
        print("    p1     p2  trials  P(conn)          95% CI  P(isolated)")
        for s in summary:
            print(f"{s.p1:6.3f} {s.p2:6.3f} {s.trials:7d} {s.p_connected:8.3f}  "
                  f"[{s.ci_lo:.3f}, {s.ci_hi:.3f}] {s.p_isolated:12.3f}")
        print("crossing of P(connected)=0.5: "
              + ("none in range" if crossing is None else f"{crossing:.4f}"))
    return 1 if sweep.errors else 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fsgraphs", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_, y=False, formats=("text", "json")):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--x", help=FAMILY_HELP)
        if y:
            p.add_argument("--y", help=FAMILY_HELP)
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--seed", type=int, help="seed for randomised inputs")
        p.set_defaults(func=func)
        return p

    add("build", cmd_build, "build a graph and print its edge list")
    p = add("fs-components", cmd_fs_components, "components of FS(X, Y)", y=True)
    p.add_argument("--types", action="store_true",
                   help="count states per position of person n in each component")
    p.add_argument("--figures", metavar="DIR", help="write a component-size histogram")
    p = add("connectivity", cmd_connectivity,
            "vertex connectivity of X, or of an FS(X, Y) component when --y is given", y=True)
    p.add_argument("--state", help="state whose FS component is measured (default identity)")
    p.add_argument("--paths", nargs=2, type=int, metavar=("U", "V"),
                   help="list maximum disjoint U-V paths in X")
    p.add_argument("--exchange", type=int, metavar="K",
                   help="also check the local k-path exchange condition")
    p.add_argument("--budget", type=int, default=40320)
    add("blocks", cmd_blocks, "blocks, cut vertices, Wilson classes and arrow depiction")
    p = add("predict-size", cmd_predict_size, "component size of FS(X, Star_n)")
    p.add_argument("--anchor", type=int, help="vertex holding person n (default n)")
    add("wilson", cmd_wilson, "check the Wilson conditions")
    p = add("route", cmd_route, "friendly swaps between two states of FS(X, Star_n)")
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--method", choices=("blocks", "bfs"), default="blocks")
    add("atomic", cmd_atomic, "atomic parts of X")
    p = add("verify", cmd_verify, "check a stated result on one instance", y=True)
    p.add_argument("--theorem", required=True,
                   help="id or name: 1.3 complete-target-connectivity, 1.4 local-exchange, "
                        "1.5 star-component-connectivity, 1.6 star-component-size, "
                        "1.7 dense-degree, 1.8 min-degree-sum, 3.9 star-k-connectivity, "
                        "3.11 star-plus-k-connectivity; also " + ", ".join(EXTRA_CHECKS))
    p.add_argument("--k", type=int)
    p.add_argument("--sample", type=int, help="sample this many pairs (starcle-paths)")
    p.add_argument("--budget", type=int, default=40320)
    p = add("experiment", cmd_experiment, "Monte Carlo sweep over G(n,p1) x G(n,p2)",
            formats=("text", "json", "csv"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", help="comma-separated p values with p1 = p2")
    p.add_argument("--p1", help="comma-separated p1 values (grid with --p2)")
    p.add_argument("--p2")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write per-trial CSV here")
    p.add_argument("--summary", help="write summary CSV here")
    p.add_argument("--figures", metavar="DIR", help="write sweep.png here")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte identity)")
    p.add_argument("--exact-ci", action="store_true", help="Clopper-Pearson intervals")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fsgraphs {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (BudgetError, StructureError, GraphError, P.PermutationError, ValueError,
            KeyError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

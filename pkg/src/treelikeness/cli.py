"""Command-line interface.

Subcommands:
  analyze     compute parameters of a graph (file or generated family)
  generate    write a generated graph as PREFIX.edges + PREFIX.labels.json
  reduce-sat  turn a DIMACS CNF into the minsize gadget graph
  verify      run the self-check suites

Exit codes: 0 ok, 1 verify violation, 2 input/usage error, 3 size refusal,
4 internal invariant violation, 5 check-tiny disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import verify as verify_mod
from .cnf import (
    CnfError,
    DimacsFormatError,
    TriviallySatisfiableError,
    TriviallyUnsatisfiableError,
    parse_dimacs,
    preprocess_cnf,
    sat_to_graph,
    to_dimacs,
)
from .exact import (
    check_delta_witness,
    check_kappa_witness,
    check_pointed_witness,
    hyperbolicity_exact,
    interval_thinness,
    pointed_hyperbolicity,
)
from .generators import (
    centered_grid,
    gen_family,
    glued_staircase,
    staircase_grid,
    FAMILIES,
)
from .graph import Graph, GraphError, all_pairs_distances, bfs
from .halfint import HalfInt
from .insize import approx_hyperbolicity, rooted_insize_dense, rooted_thinness_mu
from .oracles import sat_brute
from .insize import minsize_search
from .slimness import check_sigma_witness, slimness_exact
from .thinness import check_tau_witness, collection_params, thinness_exact

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_TOO_LARGE = 3
EXIT_INTERNAL = 4
EXIT_CHECK_TINY = 5

SIZE_BOUNDS = {"delta": 400, "tau": 1500, "sigma": 1200}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_graph(args) -> tuple[Graph, dict]:
    if getattr(args, "input", None):
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}", EXIT_INPUT)
        try:
            from .graph import parse_graph

            return parse_graph(text), {"kind": "file", "name": args.input}
        except GraphError as exc:
            raise CliError(f"bad graph input: {exc}", EXIT_INPUT)
    if getattr(args, "family", None):
        g, labels, tree = _build_family(args)
        meta = {"kind": "family", "name": args.family}
        if labels:
            meta["labels"] = labels
        return g, meta
    raise CliError("one of --input or --family is required", EXIT_INPUT)


def _build_family(args):
    """Returns (graph, labels-or-None, prescribed-tree-or-None)."""
    fam = args.family
    try:
        if fam == "hk":
            c = staircase_grid(args.k)
            return c.graph, c.labels, c.tree
        if fam == "gk":
            c = centered_grid(args.k)
            return c.graph, c.labels, c.tree
        if fam == "hkstar":
            c = glued_staircase(args.k)
            return c.graph, c.labels, c.tree
        if fam in FAMILIES:
            kw = {"n": args.n}
            if args.p is not None:
                kw["p"] = args.p
            if args.seed is not None:
                kw["seed"] = args.seed
            return gen_family(fam, **kw), None, None
    except (ValueError, TypeError) as exc:
        raise CliError(f"cannot build family {fam!r}: {exc}", EXIT_INPUT)
    raise CliError(f"unknown family {fam!r}", EXIT_INPUT)


def _check_size(param: str, n: int, force: bool):
    bound = SIZE_BOUNDS.get(param)
    if bound is not None and n > bound and not force:
        raise CliError(
            f"{param} on n={n} exceeds the safety bound {bound}; pass --force to override",
            EXIT_TOO_LARGE,
        )


def _entry(param, value: HalfInt, witness, algorithm, seconds) -> dict:
    return {
        "param": param,
        "value": str(value),
        "value_x2": value.doubled,
        "witness": list(witness),
        "algorithm": algorithm,
        "wall_time_s": round(seconds, 6),
    }


def _analyze(args) -> dict:
    g, meta = _load_graph(args)
    meta.update({"n": g.n, "m": g.m})
    doc = {"input": meta, "results": [], "bounds": {}}
    params = args.param
    if params == "all-exact":
        todo = ["delta", "delta-w", "tau", "sigma", "kappa"]
    else:
        todo = [params]
    dist = None
    tree = None

    def need_dist():
        nonlocal dist
        if dist is None:
            dist = all_pairs_distances(g)
        return dist

    def need_tree():
        nonlocal tree
        if tree is None:
            labels = meta.get("labels") or {}
            if args.family and labels.get("w") == args.root:
                prescription = _build_family(args)[2]
                tree = prescription if prescription is not None else bfs(g, args.root)
            else:
                tree = bfs(g, args.root)
        return tree

    for param in todo:
        t0 = time.perf_counter()
        if param == "delta":
            _check_size("delta", g.n, args.force)
            rep = hyperbolicity_exact(need_dist())
            if not check_delta_witness(dist, rep.witness, rep.value):
                raise CliError("delta witness failed re-verification", EXIT_INTERNAL)
        elif param == "delta-w":
            rep = pointed_hyperbolicity(need_dist(), args.root)
            if not check_pointed_witness(dist, args.root, rep.witness, rep.value):
                raise CliError("delta-w witness failed re-verification", EXIT_INTERNAL)
        elif param == "tau":
            _check_size("tau", g.n, args.force)
            rep = thinness_exact(g, need_dist())
            if not check_tau_witness(dist, rep.witness, rep.value):
                raise CliError("tau witness failed re-verification", EXIT_INTERNAL)
        elif param == "sigma":
            _check_size("sigma", g.n, args.force)
            rep = slimness_exact(g, need_dist())
            if not check_sigma_witness(dist, g, rep.witness, rep.value):
                raise CliError("sigma witness failed re-verification", EXIT_INTERNAL)
        elif param == "kappa":
            rep = interval_thinness(need_dist())
            if not check_kappa_witness(dist, rep.witness, rep.value):
                raise CliError("kappa witness failed re-verification", EXIT_INTERNAL)
        elif param == "rho":
            rho, wit = rooted_insize_dense(need_dist(), need_tree())
            if int(dist[wit.x_y, wit.y_x]) != rho:
                raise CliError("rho witness failed re-verification", EXIT_INTERNAL)
            doc["results"].append(
                _entry("rho", HalfInt.whole(rho),
                       (wit.x, wit.y, wit.r, wit.x_y, wit.y_x),
                       "dense-insize", time.perf_counter() - t0)
            )
            continue
        elif param == "mu":
            mu = rooted_thinness_mu(need_dist(), need_tree())
            doc["results"].append(
                _entry("mu", HalfInt.whole(mu), (), "depth-scan", time.perf_counter() - t0)
            )
            continue
        elif param == "rho-collection":
            col = collection_params(g, need_dist())
            doc["bounds"].update(
                {
                    "rho_collection": col.rho,
                    "kappa_collection": col.kappa,
                    "tau_upper": col.tau_upper,
                    "sigma_upper": col.sigma_upper,
                }
            )
            doc["results"].append(
                _entry("rho-collection", HalfInt.whole(col.rho), (),
                       "all-roots-insize", time.perf_counter() - t0)
            )
            continue
        elif param == "approx":
            bounds = approx_hyperbolicity(g, args.root)
            doc["bounds"].update(
                {
                    "rho": bounds.rho,
                    "delta_lower": str(bounds.lower),
                    "delta_lower_x2": bounds.lower.doubled,
                    "delta_upper": str(bounds.upper),
                    "delta_upper_x2": bounds.upper.doubled,
                }
            )
            w = bounds.witness
            doc["results"].append(
                _entry("rho", HalfInt.whole(bounds.rho),
                       (w.x, w.y, w.r, w.x_y, w.y_x),
                       "sparse-insize", time.perf_counter() - t0)
            )
            continue
        else:
            raise CliError(f"unknown param {param!r}", EXIT_INPUT)
        doc["results"].append(
            _entry(rep.parameter, rep.value, rep.witness, rep.algorithm,
                   time.perf_counter() - t0)
        )
    return doc


def _write_graph_files(g: Graph, labels, prefix: str, extra=None):
    with open(prefix + ".edges", "w") as fh:
        fh.write(g.to_edge_text())
    payload = {"n": g.n, "m": g.m}
    if labels:
        payload["labels"] = labels
    if extra:
        payload.update(extra)
    with open(prefix + ".labels.json", "w") as fh:
        json.dump(payload, fh, indent=2, default=int)
        fh.write("\n")


def _generate(args) -> dict:
    g, labels, tree = _build_family(args)
    extra = {}
    if tree is not None:
        extra["tree_root"] = int(tree.root)
        extra["tree_parent"] = [int(p) for p in tree.parent]
    _write_graph_files(g, labels, args.prefix, extra)
    return {
        "input": {"kind": "family", "name": args.family, "n": g.n, "m": g.m},
        "results": [],
        "bounds": {},
        "files": [args.prefix + ".edges", args.prefix + ".labels.json"],
    }


def _reduce_sat(args) -> dict:
    try:
        with open(args.cnf) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {args.cnf}: {exc}", EXIT_INPUT)
    try:
        phi = parse_dimacs(text)
    except DimacsFormatError as exc:
        raise CliError(f"bad DIMACS input: {exc}", EXIT_INPUT)
    doc = {"input": {"kind": "cnf", "name": args.cnf, "vars": phi.num_vars,
                     "clauses": len(phi.clauses)}, "results": [], "bounds": {}}
    try:
        pre = preprocess_cnf(phi)
    except TriviallySatisfiableError as exc:
        doc["verdict"] = "satisfiable"
        doc["trivial"] = str(exc)
        return doc
    except TriviallyUnsatisfiableError as exc:
        doc["verdict"] = "unsatisfiable"
        doc["trivial"] = str(exc)
        return doc
    except CnfError as exc:
        raise CliError(f"preprocessing failed: {exc}", EXIT_INPUT)
    g, labels = sat_to_graph(pre)
    _write_graph_files(
        g, labels, args.prefix,
        {"preprocessed_cnf": to_dimacs(pre)},
    )
    doc["input"]["preprocessed_vars"] = pre.num_vars
    doc["input"]["preprocessed_clauses"] = len(pre.clauses)
    doc["files"] = [args.prefix + ".edges", args.prefix + ".labels.json"]
    doc["gadget"] = {"n": g.n, "m": g.m}
    if args.check_tiny:
        if phi.num_vars > 16:
            raise CliError("--check-tiny is limited to 16 variables", EXIT_TOO_LARGE)
        sat = sat_brute(phi)
        rho_min, exhausted = minsize_search(
            g, budget=args.budget, stop_at=1 if sat else None
        )
        verdict = rho_min <= 1
        doc["check_tiny"] = {
            "truth_table_sat": sat,
            "minsize_found": rho_min,
            "exhausted": exhausted,
            "minsize_verdict_sat": verdict,
        }
        if verdict != sat or (not sat and not exhausted):
            doc["check_tiny"]["agreement"] = False
            raise CliError(
                f"check-tiny disagreement: truth table says {sat}, "
                f"minsize {rho_min} (exhausted={exhausted})",
                EXIT_CHECK_TINY,
            )
        doc["check_tiny"]["agreement"] = True
    return doc


SUITES = {
    "inequalities": lambda a: verify_mod.suite_inequalities(a.seeds, a.max_n),
    "oracles": lambda a: verify_mod.suite_oracles(a.seeds, min(a.max_n, 12)),
    "grids": lambda a: verify_mod.suite_grids(a.seeds),
    "sat": lambda a: verify_mod.suite_sat(),
}


def _verify(args) -> tuple[dict, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    doc = {"input": {"kind": "verify", "suites": names}, "results": [], "bounds": {}}
    violations = []
    for name in names:
        t0 = time.perf_counter()
        found = SUITES[name](args)
        doc["results"].append(
            {
                "param": f"suite:{name}",
                "value": "ok" if not found else f"{len(found)} violations",
                "value_x2": None,
                "witness": [],
                "algorithm": "verify",
                "wall_time_s": round(time.perf_counter() - t0, 6),
            }
        )
        violations += found
    if violations:
        path = args.counterexamples or "counterexamples.json"
        with open(path, "w") as fh:
            json.dump(violations, fh, indent=2, default=str)
            fh.write("\n")
        doc["counterexamples"] = path
        return doc, EXIT_VIOLATION
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="treelikeness",
        description="Tree-likeness parameters of unweighted connected graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_family_opts(p):
        p.add_argument("--family", choices=["hk", "gk", "hkstar", *FAMILIES])
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--n", type=int, default=8)
        p.add_argument("--p", type=float, default=None)
        p.add_argument("--seed", type=int, default=None)

    pa = sub.add_parser("analyze", help="compute parameters")
    pa.add_argument("--input", help="edge-list file")
    add_family_opts(pa)
    pa.add_argument(
        "--param",
        required=True,
        choices=[
            "delta", "delta-w", "rho", "mu", "tau", "sigma", "kappa",
            "rho-collection", "all-exact", "approx",
        ],
    )
    pa.add_argument("--root", type=int, default=0)
    pa.add_argument("--force", action="store_true")
    pa.add_argument("--threads", type=int, default=1,
                    help="accepted for compatibility; results are identical")
    pa.add_argument("--output", help="write the JSON report here instead of stdout")

    pg = sub.add_parser("generate", help="write a generated graph to files")
    add_family_opts(pg)
    pg.add_argument("--prefix", required=True)

    pr = sub.add_parser("reduce-sat", help="CNF -> minsize gadget graph")
    pr.add_argument("--cnf", required=True, help="DIMACS CNF file")
    pr.add_argument("--prefix", required=True)
    pr.add_argument("--check-tiny", action="store_true",
                    help="cross-check the reduction against a truth table")
    pr.add_argument("--budget", type=int, default=10**6)

    pv = sub.add_parser("verify", help="run self-check suites")
    pv.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    pv.add_argument("--seeds", type=int, default=20)
    pv.add_argument("--max-n", type=int, default=30)
    pv.add_argument("--counterexamples", help="violation dump path")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "analyze":
            doc = _analyze(args)
        elif args.command == "generate":
            doc = _generate(args)
        elif args.command == "reduce-sat":
            doc = _reduce_sat(args)
        else:
            doc, code = _verify(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(doc, indent=2, default=int)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

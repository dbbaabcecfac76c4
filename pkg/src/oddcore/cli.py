"""Command-line entry point: ``oddcore <command> ...``.

Every command except ``generate`` prints one JSON object with sorted keys.
Exit status: 0 when a result was computed (a failing verdict included),
1 for bad input or usage, 2 when a node budget ran out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable

from . import bipartization, coloring, cores
from .constructions import ConstructionSpec
from .errors import BudgetExceeded, InputError
from .graph import Graph, format_edge_list, parse_edge_list
from .parity import (OddCycleFamily, PathWitness, default_budget, find_path, is_family_free,
                     odd_girth, parse_parity)
from .verifier import (SearchConfig, TheoremParams, check_common_neighborhood_bound,
                       check_core_size_bounds, check_shortest_odd_cycle_bound,
                       check_structure_lemma, check_theorem_main, check_theorem_main2,
                       exact_delta_chi, merge_reports, search_many)

SCHEMA = "oddcore/1"
EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def load_graph(source: str) -> Graph:
    """A file path, ``-`` for stdin, or a construction spec such as ``bc:2,20``."""
    if source == "-":
        return parse_edge_list(sys.stdin.read())
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    try:
        return ConstructionSpec.parse(source).build()
    except InputError as exc:
        raise InputError(f"{source!r} is neither a readable file nor a construction spec ({exc})") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _graph_info(G: Graph, source: str) -> dict:
    return {"source": source, "n": G.n, "m": G.m}


# command handlers: each returns the JSON payload --------------------------

def cmd_check_free(args, G: Graph) -> dict:
    family = OddCycleFamily.parse(args.lengths)
    out = is_family_free(G, family, args.budget)
    if out.exceeded:
        raise BudgetExceeded("freeness check exceeded budget", nodes=out.nodes)
    return {"lengths": family.sorted(), "free": out.absent, "violated_length": out.violated_length,
            "witness": None if out.witness is None else list(out.witness.vertices), "nodes": out.nodes}


def cmd_odd_girth(args, G: Graph) -> dict:
    found = odd_girth(G)
    if found is None:
        return {"odd_girth": None, "witness": None}
    length, cycle = found
    return {"odd_girth": length, "witness": list(cycle.vertices)}


def cmd_path(args, G: Graph) -> dict:
    parity = parse_parity(args.parity) if args.parity else None
    out = find_path(G, args.u, args.v, max_order=args.max_order, min_order=args.min_order,
                    parity=parity, budget=args.budget)
    if out.exceeded:
        raise BudgetExceeded("path search exceeded budget", nodes=out.nodes)
    return {"u": args.u, "v": args.v, "parity": args.parity, "max_order": args.max_order,
            "outcome": out.status, "path": None if out.witness is None else list(out.witness.vertices),
            "nodes": out.nodes}


def _core_payload(cert: cores.CoreCertificate | None) -> dict | None:
    if cert is None:
        return None
    return {"core": sorted(cert.core), "pairs": [
        {"pair": [x, y], "even": list(even.vertices), "odd": None if odd is None else list(odd.vertices)}
        for (x, y), (even, odd) in sorted(cert.pair_witnesses.items())]}


def cmd_core(args, G: Graph) -> dict:
    k = args.k
    if args.certify is not None:
        H = _ints(args.certify)
        certify = cores.certify_strong_2k_core if args.strong else cores.certify_2k_core
        cert = certify(G, H, k, args.budget)
        return {"mode": "certify", "k": k, "strong": args.strong, "is_core": cert is not None,
                "certificate": _core_payload(cert)}
    method = args.method
    if method == "auto":
        method = "exact" if G.n <= cores.MAX_EXACT_VERTICES else "greedy"
    if method == "exact":
        finder = cores.exact_maximum_strong_core if args.strong else cores.exact_maximum_2k_core
        core = finder(G, k, args.budget)
        trace = None
    else:
        if not args.strong:
            raise InputError("the greedy method only grows strong cores")
        core, steps = cores.greedy_max_strong_core(G, k, args.budget)
        trace = [s.to_dict() for s in steps]
    certify = cores.certify_strong_2k_core if args.strong else cores.certify_2k_core
    certified = bool(core) and certify(G, core, k, args.budget) is not None
    return {"mode": method, "k": k, "strong": args.strong, "core": sorted(core), "size": len(core),
            "trace": trace, "certified": certified}


def cmd_chi(args, G: Graph) -> dict:
    chi, cert = coloring.chromatic_number(G, args.budget)
    return {"chi": chi, "coloring": list(cert.colors)}


def cmd_kcolor(args, G: Graph) -> dict:
    out = coloring.is_k_colorable(G, args.c, args.budget)
    if out.exceeded:
        raise BudgetExceeded(f"{args.c}-coloring search exceeded budget", nodes=out.nodes)
    return {"c": args.c, "colorable": out.found,
            "coloring": list(out.witness.colors) if out.found else None, "nodes": out.nodes}


def _bip_payload(res: bipartization.BipartizationResult) -> dict:
    return {"removed": [list(x) if isinstance(x, tuple) else x for x in res.removed],
            "residual_coloring": {str(v): c for v, c in sorted(res.residual_coloring.items())}}


def cmd_d2(args, G: Graph) -> dict:
    res = bipartization.d2(G, args.budget)
    return {"d2": res.size, **_bip_payload(res)}


def cmd_gamma2(args, G: Graph) -> dict:
    res = bipartization.gamma2(G, args.budget)
    return {"gamma2": res.size, **_bip_payload(res)}


def cmd_verify(args, G: Graph) -> dict:
    target = args.target
    if target == "main2":
        if not args.family:
            raise InputError("--family is required for main2")
        return check_theorem_main2(G, OddCycleFamily.parse(args.family), args.budget).to_dict()
    if args.r is None:
        raise InputError(f"--r is required for {target}")
    if target == "odd-girth":
        return check_shortest_odd_cycle_bound(G, args.r).to_dict()
    if args.k is None:
        raise InputError(f"--k is required for {target}")
    params = TheoremParams(args.r, args.k)
    if target == "lemma-cn":
        if not args.path:
            raise InputError("--path is required for lemma-cn")
        return check_common_neighborhood_bound(G, PathWitness(tuple(_ints(args.path))), params,
                                               args.budget).to_dict()
    if target == "core-bounds":
        return check_core_size_bounds(G, params, args.method, args.budget).to_dict()
    if target == "structure":
        if not args.core:
            raise InputError("--core is required for structure")
        return check_structure_lemma(G, _ints(args.core), params, args.budget).to_dict()
    return check_theorem_main(G, params, args.budget).to_dict()


def cmd_search(args) -> dict:
    family = OddCycleFamily.parse(args.family) if args.family else None
    config = SearchConfig(n=args.n, seed=args.seed, iterations=args.iters, r=args.r, k=args.k,
                          family=family, max_logged=args.max_logged)
    seeds = list(range(args.seed, args.seed + args.runs))
    reports = search_many(config, seeds, args.workers)
    if len(reports) == 1:
        return reports[0].to_dict()
    return merge_reports(reports)


def cmd_delta_chi(args) -> dict:
    res = exact_delta_chi(OddCycleFamily.parse(args.family), args.c, args.n, args.budget)
    return {"family": _ints(args.family), "c": args.c, "n": args.n, **res.to_dict()}


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddcore", description="Odd cycles, cores and chromatic thresholds on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name: str, handler: Callable, help_text: str, graph: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("graph", help="edge-list file, '-' for stdin, or a spec such as gplus:3,16")
        p.add_argument("--budget", type=int, default=None, help="node budget (default: $ODDCORE_BUDGET or 1e8)")
        p.set_defaults(handler=handler, needs_graph=graph)
        return p

    p = sub.add_parser("generate", help="print a construction as an edge list")
    p.add_argument("spec", help="e.g. gplus:3,16, bc:2,20, blowup:5,2, tstar:4,12")
    p.set_defaults(handler=None, needs_graph=False)

    p = command("check-free", cmd_check_free, "test for cycles of the given odd lengths")
    p.add_argument("--lengths", required=True, help="comma-separated odd lengths, e.g. 5,7,9")

    command("odd-girth", cmd_odd_girth, "shortest odd cycle")

    p = command("path", cmd_path, "simple path with vertex-count bounds and parity")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--parity", choices=("even", "odd"))
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--min-order", type=int, default=2)

    p = command("core", cmd_core, "maximum (strong) 2k-core, or certify a given set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--weak", dest="strong", action="store_false", help="plain 2k-cores instead of strong ones")
    p.add_argument("--method", choices=("auto", "exact", "greedy"), default="auto")
    p.add_argument("--exact", dest="method", action="store_const", const="exact",
                   help="same as --method exact (n <= 16)")
    p.add_argument("--certify", help="comma-separated vertex set to certify")

    command("chi", cmd_chi, "chromatic number with a coloring")

    p = command("kcolor", cmd_kcolor, "decide c-colorability")
    p.add_argument("--c", type=int, required=True)

    command("d2", cmd_d2, "minimum vertex deletion to bipartite")
    command("gamma2", cmd_gamma2, "minimum edge deletion to bipartite")

    p = command("verify", cmd_verify, "check a lemma or theorem statement on a graph")
    p.add_argument("--target", required=True,
                   choices=("lemma-cn", "core-bounds", "odd-girth", "structure", "main", "main2"))
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--family", help="comma-separated odd cycle lengths (main2)")
    p.add_argument("--path", help="comma-separated even path (lemma-cn)")
    p.add_argument("--core", help="comma-separated core vertices (structure)")
    p.add_argument("--method", choices=("auto", "exact", "greedy"), default="auto")

    p = command("search", cmd_search, "seeded counterexample search", graph=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=10_000)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--family")
    p.add_argument("--runs", type=int, default=1, help="number of consecutive seeds")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-logged", type=int, default=20)

    p = command("delta-chi", cmd_delta_chi, "exact finite-n chromatic profile (n <= 8)", graph=False)
    p.add_argument("--family", required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _emit(payload: dict, stream) -> None:
    stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run the command, write its output; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code or EXIT_OK
    head: dict[str, Any] = {"schema": SCHEMA, "command": args.command}
    try:
        if getattr(args, "budget", None) is None and args.command != "generate":
            args.budget = default_budget()
        elif args.command != "generate" and args.budget < 1:
            raise InputError("--budget must be positive")
        if args.command == "generate":
            stdout.write(format_edge_list(ConstructionSpec.parse(args.spec).build()))
            return EXIT_OK
        if args.needs_graph:
            G = load_graph(args.graph)
            payload = args.handler(args, G)
            head["graph"] = _graph_info(G, args.graph)
        else:
            payload = args.handler(args)
    except InputError as exc:
        stderr.write(f"oddcore: error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        stderr.write(f"oddcore: budget exceeded: {exc}\n")
        _emit({**head, "status": "budget_exceeded", "nodes": exc.nodes,
               "lower": exc.lower, "upper": exc.upper}, stdout)
        return EXIT_BUDGET
    clash = set(payload) & set(head)
    assert not clash, f"payload keys shadow the envelope: {clash}"
    _emit({**payload, **head, "status": "ok"}, stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())

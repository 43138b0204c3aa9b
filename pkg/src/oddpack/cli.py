"""Command line front end.

One binary, one subcommand per solver.  Graphs arrive in the DIMACS-like
edge format (``--input`` file or stdin) with 1-based vertex ids; all
vertex ids printed by the tool are 1-based as well.  Results are JSON
(indented by default, compact single-line with ``--json``), except ``gen``,
which emits a DIMACS graph ready to pipe back into the other subcommands,
and ``sweep``, which emits line-delimited JSON records plus a summary line.

Exit codes: 0 success with certificate, 1 certificate absent (a valid
negative answer), 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .covers import (
    min_odd_cycle_cover,
    min_odd_s_cycle_cover,
    verify_bipartite_cover,
    verify_cover,
)
from .dimacs import DimacsError, format_dimacs, parse_dimacs
from .families import FAMILIES, InstanceSpec, gen_non_parity_linked, gen_tight_cover, sample_random
from .graphs import Graph
from .linkage import find_linkage, find_parity_linkage, odd_z_path_dichotomy
from .packing import (
    dichotomy_bipartite_cover,
    dichotomy_s_cycles,
    greedy_triangle_packing,
    pack_odd_s_cycles,
)
from .partitions import (
    Matching,
    Partition,
    is_tau_critical,
    nice_partition,
    tau,
    validate_nice_partition,
    within_graph,
)
from .pbm import (
    EVEN,
    ODD,
    TerminalSystem,
    brute_force_pbm,
    extract_pbm_4k,
    extract_pbm_independent,
    is_parity_breaking,
)
from .search import BudgetExceededError, SearchBudget
from .sweeps import run_sweep, suite_names


class InputError(ValueError):
    """Bad command line value or malformed input data."""


# ===== small parsing and printing helpers (external ids are 1-based) =====

def _read_graph(args) -> Graph:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        path = Path(args.input)
        if not path.exists():
            raise InputError(f"input file {args.input!r} does not exist")
        text = path.read_text()
    return parse_dimacs(text)


def _vertex_in(raw: str, n: int, what: str) -> int:
    try:
        v = int(raw)
    except ValueError:
        raise InputError(f"{what}: {raw!r} is not an integer") from None
    if not 1 <= v <= n:
        raise InputError(f"{what}: vertex {v} outside 1..{n}")
    return v - 1


def _vertex_list(raw: str, n: int, what: str) -> list[int]:
    if not raw.strip():
        return []
    return [_vertex_in(part.strip(), n, what) for part in raw.split(",")]


def _pairs_arg(raw: str, n: int) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in raw.split(";"):
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise InputError(f"pair {chunk!r} must be two comma-separated vertices")
        pairs.append((_vertex_in(parts[0], n, "pairs"),
                      _vertex_in(parts[1], n, "pairs")))
    return tuple(pairs)


def _demands_arg(raw: str | None, k: int) -> dict[int, str]:
    if not raw:
        return {}
    out: dict[int, str] = {}
    for chunk in raw.split(","):
        parts = [p.strip() for p in chunk.split(":")]
        if len(parts) != 2 or parts[1] not in (ODD, EVEN):
            raise InputError(
                f"demand {chunk!r} must read '<pair>:odd' or '<pair>:even'")
        try:
            i = int(parts[0])
        except ValueError:
            raise InputError(f"demand {chunk!r}: pair number must be an integer") from None
        if not 1 <= i <= k:
            raise InputError(f"demand for pair {i} outside 1..{k}")
        out[i] = parts[1]
    return out


def _up(vertices) -> list[int]:
    return [v + 1 for v in sorted(vertices)]


def _up_seq(vertices) -> list[int]:
    return [v + 1 for v in vertices]


def _emit(args, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def _budget(args) -> SearchBudget:
    if args.budget_nodes is not None:
        return SearchBudget(max_nodes=args.budget_nodes,
                            max_seconds=args.budget_seconds)
    return SearchBudget(max_seconds=args.budget_seconds)


def _trivial_partition(n: int) -> Partition:
    return Partition(frozenset(range(n)), frozenset())


# ===== subcommand handlers, each returning the process exit code =====

def _cmd_occ(args) -> int:
    g = _read_graph(args)
    cover = min_odd_cycle_cover(g, _budget(args))
    _emit(args, {"size": cover.size, "members": _up(cover.members),
                 "verified": verify_bipartite_cover(g, cover.members)})
    return 0


def _cmd_s_occ(args) -> int:
    g = _read_graph(args)
    roots = _vertex_list(args.terminals, g.n, "terminals")
    cover = min_odd_s_cycle_cover(g, roots, _budget(args))
    _emit(args, {"size": cover.size, "members": _up(cover.members),
                 "verified": verify_cover(g, roots, cover.members)})
    return 0


def _cmd_nice_partition(args) -> int:
    g = _read_graph(args)
    budget = _budget(args)
    cover = min_odd_cycle_cover(g, budget)
    np_ = nice_partition(g, cover, trusted=True, budget=budget)
    validate_nice_partition(g, np_, budget)
    cross = tau(within_graph(g, np_.partition), budget)
    _emit(args, {"cover": _up(np_.inducing_cover.members),
                 "coverSize": np_.inducing_cover.size,
                 "partA": _up(np_.partition.part_a),
                 "partB": _up(np_.partition.part_b),
                 "tauWithin": cross})
    return 0


def _cmd_tau(args) -> int:
    g = _read_graph(args)
    _emit(args, {"tau": tau(g, _budget(args))})
    return 0


def _cmd_tau_critical(args) -> int:
    g = _read_graph(args)
    budget = _budget(args)
    critical = is_tau_critical(g, budget)
    _emit(args, {"tau": tau(g, budget), "critical": critical})
    return 0 if critical else 1


def _cmd_pbm(args) -> int:
    g = _read_graph(args)
    budget = _budget(args)
    pairs = _pairs_arg(args.pairs, g.n)
    k = len(pairs)
    if args.parity_set:
        indices = sorted(set(
            int(x) for x in args.parity_set.split(",") if x.strip()))
        for i in indices:
            if not 1 <= i <= k:
                raise InputError(f"parity-set index {i} outside 1..{k}")
    else:
        indices = list(range(1, k + 1))
    ts = TerminalSystem.make(pairs, {i: ODD for i in indices})
    part = _trivial_partition(g.n)
    if args.method == "brute":
        m = brute_force_pbm(g, part, ts, budget)
    else:
        extract = extract_pbm_4k if args.method == "extract4k" else extract_pbm_independent
        full = extract(g, pairs, budget)
        m = Matching.from_indexed(
            {i: e for i, e in full.indexed().items() if i in set(indices)})
    if m is None:
        _emit(args, {"method": args.method, "present": False})
        return 1
    verified = is_parity_breaking(m, g, part, ts)
    _emit(args, {"method": args.method, "present": True,
                 "edges": {str(i): [u + 1, v + 1]
                           for i, (u, v) in sorted(m.indexed().items())},
                 "verified": verified})
    return 0


def _cmd_linkage(args) -> int:
    g = _read_graph(args)
    pairs = _pairs_arg(args.pairs, g.n)
    ts = TerminalSystem.make(pairs)
    link = find_linkage(g, ts, _budget(args))
    if link is None:
        _emit(args, {"present": False})
        return 1
    _emit(args, {"present": True,
                 "paths": [_up_seq(p) for p in link.paths],
                 "parities": list(link.parities)})
    return 0


def _cmd_parity_linkage(args) -> int:
    g = _read_graph(args)
    pairs = _pairs_arg(args.pairs, g.n)
    demands = _demands_arg(args.demands, len(pairs))
    ts = TerminalSystem.make(pairs, demands)
    link = find_parity_linkage(g, ts, _budget(args))
    if link is None:
        _emit(args, {"present": False})
        return 1
    _emit(args, {"present": True,
                 "paths": [_up_seq(p) for p in link.paths],
                 "parities": list(link.parities)})
    return 0


def _cmd_odd_z_paths(args) -> int:
    g = _read_graph(args)
    z = _vertex_list(args.z, g.n, "z")
    out = odd_z_path_dichotomy(g, z, args.ell, _budget(args))
    payload: dict = {"kind": out.kind, "ell": out.ell, "bound": out.bound}
    if out.paths is not None:
        payload["paths"] = [_up_seq(p.vertices) for p in out.paths]
    else:
        payload["hittingSet"] = _up(out.hitting_set)
    _emit(args, payload)
    return 0


def _cmd_pack(args) -> int:
    g = _read_graph(args)
    roots = _vertex_list(args.s, g.n, "s")
    packing = pack_odd_s_cycles(g, roots, args.k, _budget(args))
    if packing is None:
        _emit(args, {"present": False, "k": args.k})
        return 1
    _emit(args, {"present": True, "k": args.k,
                 "cycles": [_up_seq(c.vertices) for c in packing.cycles]})
    return 0


def _dichotomy_payload(res) -> dict:
    payload: dict = {"kind": res.kind, "k": res.k, "bound": res.bound,
                     "boundMet": res.bound_met}
    if res.packing is not None:
        payload["cycles"] = [_up_seq(c.vertices) for c in res.packing.cycles]
    else:
        payload["cover"] = _up(res.cover)
    if res.tau_k is not None:
        payload["tauK"] = res.tau_k
    if res.relaxed_bound is not None:
        payload["relaxedBound"] = res.relaxed_bound
    if res.connectivity is not None:
        payload["connectivity"] = res.connectivity
    return payload


def _cmd_dichotomy(args) -> int:
    g = _read_graph(args)
    roots = _vertex_list(args.s, g.n, "s")
    res = dichotomy_s_cycles(g, roots, args.k, _budget(args),
                             measure_connectivity=args.measure_connectivity)
    _emit(args, _dichotomy_payload(res))
    return 0


def _cmd_dichotomy_bipartite(args) -> int:
    g = _read_graph(args)
    roots = _vertex_list(args.s, g.n, "s")
    res = dichotomy_bipartite_cover(g, roots, args.k, _budget(args),
                                    measure_connectivity=args.measure_connectivity)
    _emit(args, _dichotomy_payload(res))
    return 0


def _cmd_triangles(args) -> int:
    g = _read_graph(args)
    packing = greedy_triangle_packing(g, args.k, _budget(args))
    if packing is None:
        _emit(args, {"present": False, "k": args.k})
        return 1
    _emit(args, {"present": True, "k": args.k,
                 "cycles": [_up_seq(c.vertices) for c in packing.cycles]})
    return 0


def _cmd_gen(args) -> int:
    comments: list[str] = [f"family {args.family}"]
    if args.family == "nonParityLinked":
        if args.k is None or args.side_size is None:
            raise InputError("nonParityLinked requires --k and --side-size")
        g, ts = gen_non_parity_linked(args.k, args.side_size)
        comments.append("pairs " + ";".join(
            f"{s + 1},{t + 1}" for s, t in ts.pairs))
        comments.append("demands " + ",".join(
            f"{i}:{p}" for i, p in ts.parity_demands))
        aux: dict = {"pairs": [[s + 1, t + 1] for s, t in ts.pairs],
                     "demands": {str(i): p for i, p in ts.parity_demands}}
    elif args.family == "tightCover":
        if args.k is None or args.tau is None or args.side_size is None:
            raise InputError("tightCover requires --k, --tau and --side-size")
        g, s = gen_tight_cover(args.k, args.tau, args.side_size)
        comments.append("designated " + ",".join(str(v + 1) for v in sorted(s)))
        aux = {"designated": _up(s)}
    else:
        spec = InstanceSpec(args.family, n=args.n, k=args.k, tau=args.tau,
                            side_size=args.side_size, p=args.p,
                            seed=args.seed, path=args.path)
        try:
            spec.validate()
        except ValueError as exc:
            raise InputError(str(exc)) from None
        g = sample_random(spec)
        comments.append(spec.label())
        aux = {}
    if args.json:
        _emit(args, {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.sorted_edges()],
                     **aux})
    else:
        sys.stdout.write(format_dimacs(g, tuple(comments)))
    return 0


def _cmd_sweep(args) -> int:
    overrides = {key: getattr(args, attr) for key, attr in
                 (("max_n", "max_n"), ("samples", "samples"),
                  ("sample_n", "sample_n"), ("p", "sample_p"),
                  ("seed", "seed"))
                 if getattr(args, attr) is not None}
    budget = None
    if args.budget_nodes is not None or args.budget_seconds is not None:
        budget = _budget(args)
    report = run_sweep(args.suite, budget, workers=args.workers or 1,
                       overrides=overrides, config_path=args.config)
    for record in report.records:
        print(json.dumps(record, sort_keys=True, separators=(",", ":")))
    print(json.dumps(report.summary, sort_keys=True, separators=(",", ":")))
    if report.summary["counterexamples"]:
        return 1
    if report.summary["budget_exceeded"]:
        return 3
    return 0


# ===== argument wiring =====

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default=None, metavar="FILE",
                        help="graph file in DIMACS edge format ('-' or omit for stdin)")
    common.add_argument("--json", action="store_true",
                        help="compact single-line JSON output")
    common.add_argument("--seed", default=None,
                        help="seed string for randomized families")
    common.add_argument("--budget-nodes", type=int, default=None,
                        help="search node budget per solver call")
    common.add_argument("--budget-seconds", type=float, default=None,
                        help="wall clock budget per solver call")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes for the sweep runner")

    parser = argparse.ArgumentParser(
        prog="oddpack",
        description="Packing and covering toolkit for odd rooted cycles, "
                    "parity linkages, and their covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, **extra):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=fn)
        return p

    add("occ", _cmd_occ, "minimum odd cycle cover")
    p = add("s-occ", _cmd_s_occ, "minimum cover of odd cycles through terminals")
    p.add_argument("--terminals", required=True,
                   help="comma-separated designated vertices (1-based)")
    add("nice-partition", _cmd_nice_partition,
        "canonical partition induced by a minimum odd cycle cover")
    add("tau", _cmd_tau, "vertex cover number")
    add("tau-critical", _cmd_tau_critical, "test vertex-cover criticality")

    p = add("pbm", _cmd_pbm, "parity breaking matching")
    p.add_argument("--pairs", required=True,
                   help="terminal pairs 's1,t1;s2,t2;...' (1-based)")
    p.add_argument("--parity-set", default=None,
                   help="comma-separated pair numbers needing matching edges "
                        "(default: all)")
    p.add_argument("--method", choices=("extract4k", "independent", "brute"),
                   default="brute")

    p = add("linkage", _cmd_linkage, "vertex-disjoint paths joining the pairs")
    p.add_argument("--pairs", required=True,
                   help="terminal pairs 's1,t1;s2,t2;...' (1-based)")
    p = add("parity-linkage", _cmd_parity_linkage,
            "disjoint paths meeting parity demands")
    p.add_argument("--pairs", required=True,
                   help="terminal pairs 's1,t1;s2,t2;...' (1-based)")
    p.add_argument("--demands", default=None,
                   help="parity demands '1:odd,2:even' by pair number")

    p = add("odd-z-paths", _cmd_odd_z_paths,
            "disjoint odd paths through a designated set, or a hitting set")
    p.add_argument("--z", required=True,
                   help="comma-separated designated vertices (1-based)")
    p.add_argument("--ell", type=int, required=True, help="number of paths")

    p = add("pack", _cmd_pack, "disjoint odd cycles through designated vertices")
    p.add_argument("--s", required=True,
                   help="comma-separated designated vertices (1-based)")
    p.add_argument("--k", type=int, required=True, help="number of cycles")

    for name, fn in (("dichotomy", _cmd_dichotomy),
                     ("dichotomy-bipartite", _cmd_dichotomy_bipartite)):
        p = add(name, fn, f"pack-or-cover driver ({name})")
        p.add_argument("--s", required=True,
                       help="comma-separated designated vertices (1-based)")
        p.add_argument("--k", type=int, required=True, help="number of cycles")
        p.add_argument("--measure-connectivity", action="store_true",
                       help="also report exact vertex connectivity")

    p = add("triangles", _cmd_triangles, "greedy disjoint triangle packing")
    p.add_argument("--k", type=int, required=True, help="number of triangles")

    p = add("gen", _cmd_gen, "generate an instance as DIMACS text")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--side-size", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--path", default=None)

    p = add("sweep", _cmd_sweep, "run a registered theorem sweep")
    p.add_argument("suite", choices=suite_names())
    p.add_argument("--max-n", type=int, default=None,
                   help="exhaustive enumeration cap")
    p.add_argument("--samples", type=int, default=None,
                   help="number of sampled instances")
    p.add_argument("--sample-n", type=int, default=None,
                   help="vertex count for sampled instances")
    p.add_argument("--sample-p", type=float, default=None,
                   help="edge probability for sampled instances")
    p.add_argument("--config", default=None,
                   help="INI config path (else $ODDPACK_SWEEP_CONFIG)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (InputError, DimacsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

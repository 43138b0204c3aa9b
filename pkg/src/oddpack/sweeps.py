"""Registered theorem sweeps: instance grids, isolated runs, canonical reports.

Each suite turns its options into a flat grid of picklable instances, runs
one isolated check per instance (its own search budget, optionally its own
worker process), and collects line-oriented records.  Records are sorted by
instance id before reporting so concurrent runs reproduce bit-for-bit.

Options resolve in three layers: built-in defaults, then a plain-text INI
config file (path from the ODDPACK_SWEEP_CONFIG environment variable or an
explicit argument), then per-call overrides.
"""

from __future__ import annotations

import configparser
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Mapping, Optional

from .covers import min_odd_cycle_cover, verify_cover
from .families import InstanceSpec, gen_non_parity_linked, gen_tight_cover, sample_random
from .graphs import Graph, _components, find_odd_s_cycle, is_bipartite, mask_of
from .linkage import (
    DichotomyViolationError,
    _find_odd_z_path,
    find_parity_linkage,
    odd_z_path_dichotomy,
)
from .packing import (
    cycles_from_twin_linkage,
    dichotomy_s_cycles,
    pack_odd_s_cycles,
    twin_reduction,
)
from .partitions import (
    Partition,
    is_tau_critical,
    konig_matching,
    maximal_matching_cover_bound,
    nice_partition,
    tau,
    validate_nice_partition,
    within_graph,
)
from .pbm import (
    ODD,
    TerminalSystem,
    brute_force_pbm,
    dead_branch_events,
    extract_pbm_4k,
    extract_pbm_independent,
    is_parity_breaking,
    reset_dead_branch_log,
)
from .search import BudgetExceededError, SearchBudget

__all__ = ["SweepReport", "run_sweep", "SUITES", "suite_names"]

CONFIG_ENV_VAR = "ODDPACK_SWEEP_CONFIG"

_OPTION_TYPES = {
    "max_n": int, "samples": int, "sample_n": int,
    "max_nodes": int, "max_seconds": float,
    "p": float, "seed": str, "n": int,
}

SUITE_DEFAULTS: dict[str, dict] = {
    "observation2": {"max_n": 5, "samples": 0, "sample_n": 8, "p": 0.4,
                     "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
    "pbm-extractors": {"max_n": 4, "samples": 0, "sample_n": 7, "p": 0.6,
                       "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
    "geelen-dichotomy": {"max_n": 4, "samples": 0, "sample_n": 7, "p": 0.4,
                         "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
    "erdos-gallai": {"max_n": 5, "samples": 0, "sample_n": 8, "p": 0.5,
                     "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
    "tight-families": {"max_n": 5, "samples": 0, "sample_n": 0, "p": 0.0,
                       "seed": "sweep", "max_nodes": 200_000_000, "max_seconds": None},
    "twin-reduction": {"max_n": 4, "samples": 0, "sample_n": 7, "p": 0.4,
                       "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
    "konig-observation1": {"max_n": 5, "samples": 0, "sample_n": 10, "p": 0.3,
                           "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
    "dense-dichotomy-k1": {"max_n": 0, "samples": 5, "sample_n": 12, "p": 0.8,
                           "seed": "sweep", "max_nodes": 50_000_000, "max_seconds": None},
}


@dataclass(frozen=True)
class SweepReport:
    """Sorted per-instance records plus the aggregate summary."""

    suite: str
    records: tuple[dict, ...]
    summary: dict

    @property
    def counterexamples(self) -> tuple[dict, ...]:
        return tuple(r for r in self.records if r["verdict"] == "counterexample")


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(SUITE_DEFAULTS))


# ===== instance payload helpers =====

def _encode(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    return g.n, tuple(g.sorted_edges())


def _decode(payload: tuple[int, tuple[tuple[int, int], ...]]) -> Graph:
    n, edges = payload
    return Graph(n, frozenset(edges))


def _all_graphs(n: int):
    """Every labeled graph on exactly n vertices, by edge-subset rank."""
    slots = list(combinations(range(n), 2))
    for rank in range(1 << len(slots)):
        yield rank, frozenset(e for i, e in enumerate(slots) if rank >> i & 1)


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(_components(g, g.full_mask)) == 1


def _trivial_partition(n: int) -> Partition:
    # within graph of the one-sided split is the graph itself
    return Partition(frozenset(range(n)), frozenset())


def _canonical_systems(vertices: int, k: int):
    """Terminal pair tuples on distinct vertices, deduplicated by symmetry.

    Pairs are normalized (s < t) and listed in ascending order; the pair
    order and the orientation inside a pair never change any suite verdict.
    """
    pool = range(vertices)
    for terms in combinations(pool, 2 * k):
        for split in _pairings(terms):
            yield split


def _pairings(terms):
    if not terms:
        yield ()
        return
    first = terms[0]
    rest = terms[1:]
    for i, partner in enumerate(rest):
        head = (first, partner)
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield (head,) + tail


# ===== per-suite checkers (module level: picklable for worker processes) =====

def _check_observation2(payload, budget: SearchBudget) -> tuple[str, dict]:
    g = _decode(payload)
    cover = min_odd_cycle_cover(g, budget)
    np_ = nice_partition(g, cover, trusted=True, budget=budget)
    validate_nice_partition(g, np_, budget)
    t = tau(within_graph(g, np_.partition), budget)
    if t != cover.size:
        return "counterexample", {"cover_size": cover.size, "tau_within": t,
                                  "cover": sorted(cover.members)}
    return "ok", {"cover_size": cover.size}


def _check_pbm(payload, budget: SearchBudget) -> tuple[str, dict]:
    gpay, pairs = payload
    h = _decode(gpay)
    k = len(pairs)
    ts = TerminalSystem.make(pairs, {i: ODD for i in range(1, k + 1)})
    part = _trivial_partition(h.n)
    t = tau(h, budget)
    bf = brute_force_pbm(h, part, ts, budget)
    detail: dict = {"tau": t, "k": k, "brute_force": bf is not None}
    ran = []
    reset_dead_branch_log()
    if t >= 4 * k - 3:
        m = extract_pbm_4k(h, pairs, budget)
        if not is_parity_breaking(m, h, part, ts) or bf is None:
            return "counterexample", {**detail, "extractor": "4k"}
        ran.append("4k")
    terminals = [v for pr in pairs for v in pr]
    independent = all(not h.has_edge(u, v)
                      for u, v in combinations(terminals, 2))
    if independent and t >= 2 * k - 1:
        m = extract_pbm_independent(h, pairs, budget)
        if not is_parity_breaking(m, h, part, ts) or bf is None:
            return "counterexample", {**detail, "extractor": "independent"}
        ran.append("independent")
    events = dead_branch_events()
    if events:
        return "counterexample", {**detail, "dead_branches": len(events)}
    detail["extractors"] = ran
    return "ok", detail


def _check_geelen(payload, budget: SearchBudget) -> tuple[str, dict]:
    gpay, z, ell = payload
    g = _decode(gpay)
    try:
        out = odd_z_path_dichotomy(g, z, ell, budget)
    except DichotomyViolationError as exc:
        return "counterexample", {"z": list(z), "ell": ell, "error": str(exc)}
    if out.paths is not None:
        used: set[int] = set()
        for zp in out.paths:
            if used & set(zp.vertices):
                return "counterexample", {"z": list(z), "ell": ell,
                                          "error": "overlapping packing"}
            used.update(zp.vertices)
        return "ok", {"kind": "packing", "ell": ell}
    banned = 0
    for v in out.hitting_set:
        banned |= 1 << v
    if _find_odd_z_path(g, mask_of(z), banned, budget) is not None:
        return "counterexample", {"z": list(z), "ell": ell,
                                  "error": "hitting set misses a path"}
    return "ok", {"kind": "cover", "size": len(out.hitting_set), "ell": ell}


def _check_erdos_gallai(payload, budget: SearchBudget) -> tuple[str, dict]:
    g = _decode(payload)
    if not is_tau_critical(g, budget):
        return "ok", {"critical": False}
    t = tau(g, budget)
    if 2 * t < g.n:
        return "counterexample", {"tau": t, "n": g.n}
    return "ok", {"critical": True, "tau": t}


def _check_twin(payload, budget: SearchBudget) -> tuple[str, dict]:
    gpay, v = payload
    g = _decode(gpay)
    direct = find_odd_s_cycle(g, {v}) is not None
    bigger, ts = twin_reduction(g, {v})
    link = find_parity_linkage(bigger, ts, budget)
    if (link is not None) != direct:
        return "counterexample", {"vertex": v, "direct": direct,
                                  "via_linkage": link is not None}
    if link is not None:
        cycles_from_twin_linkage(g, ts, link)
    return "ok", {"vertex": v, "has_cycle": direct}


def _check_konig(payload, budget: SearchBudget) -> tuple[str, dict]:
    g = _decode(payload)
    t = tau(g, budget)
    m, cover = maximal_matching_cover_bound(g)
    for u, v in g.edges:
        if u not in cover and v not in cover:
            return "counterexample", {"error": "matched endpoints miss an edge"}
    if not (m.size <= t <= 2 * m.size):
        return "counterexample", {"tau": t, "maximal_matching": m.size}
    detail: dict = {"tau": t, "maximal_matching": m.size}
    if is_bipartite(g) is not None:
        km = konig_matching(g, budget)
        if km.size != t:
            return "counterexample", {"tau": t, "max_matching": km.size}
        detail["max_matching"] = km.size
    return "ok", detail


def _check_tight_family(payload, budget: SearchBudget) -> tuple[str, dict]:
    kind, params = payload
    if kind == "nonParityLinked":
        k, side = params
        g, ts = gen_non_parity_linked(k, side)
        cover = min_odd_cycle_cover(g, budget)
        expected = max(0, 4 * k - 4)
        if cover.size != expected:
            return "counterexample", {"kind": kind, "cover": cover.size,
                                      "expected": expected}
        if k == 1:
            if is_bipartite(g) is None:
                return "counterexample", {"kind": kind, "error": "not bipartite"}
        elif find_parity_linkage(g, ts, budget) is not None:
            return "counterexample", {"kind": kind, "error": "linkage exists"}
        return "ok", {"kind": kind, "k": k, "side": side, "cover": cover.size}
    k, tv, side = params
    g, s = gen_tight_cover(k, tv, side)
    induced_tau = tau(g.induced(s).graph, budget)
    if induced_tau != tv - 1:
        return "counterexample", {"kind": kind, "tau_s": induced_tau,
                                  "expected": tv - 1}
    if pack_odd_s_cycles(g, s, k, budget) is not None:
        return "counterexample", {"kind": kind, "error": "packing exists"}
    cover = min_odd_cycle_cover(g, budget)
    expected = 2 * k - 2 + (tv - 1)
    if cover.size != expected:
        return "counterexample", {"kind": kind, "cover": cover.size,
                                  "expected": expected}
    return "ok", {"kind": kind, "k": k, "tau": tv, "side": side,
                  "cover": cover.size}


def _check_dense_k1(payload, budget: SearchBudget) -> tuple[str, dict]:
    n, seed, s = payload
    g = sample_random(InstanceSpec("randomDense", n=n, seed=seed))
    res = dichotomy_s_cycles(g, s, 1, budget)
    if res.packing is not None:
        return "ok", {"kind": "packing",
                      "cycle_length": res.packing.cycles[0].length}
    if not verify_cover(g, s, res.cover):
        return "counterexample", {"error": "cover fails verification",
                                  "cover": sorted(res.cover)}
    return "ok", {"kind": "cover", "size": len(res.cover),
                  "bound_met": res.bound_met}


# ===== grid builders =====

def _sample_rng(options: Mapping, suite: str, index: int) -> random.Random:
    return random.Random(f"{suite}/{options['seed']}/{index}")


def _sampled_graph(options: Mapping, suite: str, index: int) -> Graph:
    spec = InstanceSpec("randomGnp", n=options["sample_n"], p=options["p"],
                        seed=f"{suite}/{options['seed']}/{index}")
    return sample_random(spec)


def _grid_observation2(options: Mapping):
    grid = []
    for n in range(1, options["max_n"] + 1):
        for rank, edges in _all_graphs(n):
            g = Graph(n, edges)
            if _connected(g):
                grid.append((f"exh-n{n}-r{rank}", _encode(g)))
    for i in range(options["samples"]):
        g = _sampled_graph(options, "observation2", i)
        if _connected(g):
            grid.append((f"smp-{i:06d}", _encode(g)))
    return grid


def _grid_pbm(options: Mapping):
    grid = []
    for n in range(2, options["max_n"] + 1):
        for rank, edges in _all_graphs(n):
            g = Graph(n, edges)
            for k in (1, 2):
                if 2 * k > n:
                    continue
                for pairs in _canonical_systems(n, k):
                    grid.append((f"exh-n{n}-r{rank}-k{k}-{_pairs_tag(pairs)}",
                                 (_encode(g), pairs)))
    for i in range(options["samples"]):
        g = _sampled_graph(options, "pbm-extractors", i)
        rng = _sample_rng(options, "pbm-extractors", i)
        k = rng.choice([1, 2, 3])
        if 2 * k > g.n:
            k = 1
        terms = rng.sample(range(g.n), 2 * k)
        pairs = tuple(tuple(sorted(terms[2 * j:2 * j + 2])) for j in range(k))
        grid.append((f"smp-{i:06d}", (_encode(g), pairs)))
    return grid


def _pairs_tag(pairs) -> str:
    return "p" + "-".join(f"{s}.{t}" for s, t in pairs)


def _grid_geelen(options: Mapping):
    grid = []
    for n in range(1, options["max_n"] + 1):
        for rank, edges in _all_graphs(n):
            g = Graph(n, edges)
            for zsize in range(n + 1):
                for z in combinations(range(n), zsize):
                    for ell in (1, 2):
                        grid.append(
                            (f"exh-n{n}-r{rank}-z{'.'.join(map(str, z))}-l{ell}",
                             (_encode(g), z, ell)))
    for i in range(options["samples"]):
        g = _sampled_graph(options, "geelen-dichotomy", i)
        rng = _sample_rng(options, "geelen-dichotomy", i)
        zsize = rng.randrange(g.n + 1)
        z = tuple(sorted(rng.sample(range(g.n), zsize)))
        ell = rng.choice([1, 2])
        grid.append((f"smp-{i:06d}", (_encode(g), z, ell)))
    return grid


def _grid_erdos_gallai(options: Mapping):
    grid = []
    for n in range(1, options["max_n"] + 1):
        for rank, edges in _all_graphs(n):
            grid.append((f"exh-n{n}-r{rank}", _encode(Graph(n, edges))))
    for i in range(options["samples"]):
        grid.append((f"smp-{i:06d}",
                     _encode(_sampled_graph(options, "erdos-gallai", i))))
    return grid


def _grid_twin(options: Mapping):
    grid = []
    for n in range(1, options["max_n"] + 1):
        for rank, edges in _all_graphs(n):
            g = Graph(n, edges)
            for v in range(n):
                grid.append((f"exh-n{n}-r{rank}-v{v}", (_encode(g), v)))
    for i in range(options["samples"]):
        g = _sampled_graph(options, "twin-reduction", i)
        rng = _sample_rng(options, "twin-reduction", i)
        grid.append((f"smp-{i:06d}", (_encode(g), rng.randrange(g.n))))
    return grid


def _grid_konig(options: Mapping):
    grid = []
    for n in range(1, options["max_n"] + 1):
        for rank, edges in _all_graphs(n):
            grid.append((f"exh-n{n}-r{rank}", _encode(Graph(n, edges))))
    for i in range(options["samples"]):
        grid.append((f"smp-{i:06d}",
                     _encode(_sampled_graph(options, "konig-observation1", i))))
    return grid


def _grid_tight(options: Mapping):
    side = max(5, options["max_n"])
    return [
        ("npl-k1", ("nonParityLinked", (1, max(2, side - 2)))),
        ("npl-k2", ("nonParityLinked", (2, side))),
        ("tc-k2-t1", ("tightCover", (2, 1, side))),
        ("tc-k2-t2", ("tightCover", (2, 2, side))),
    ]


def _grid_dense(options: Mapping):
    grid = []
    for i in range(options["samples"]):
        rng = _sample_rng(options, "dense-dichotomy-k1", i)
        n = options["sample_n"]
        size = max(1, n // 3)
        s = tuple(sorted(rng.sample(range(n), size)))
        grid.append((f"smp-{i:06d}", (n, f"dense/{options['seed']}/{i}", s)))
    return grid


_CHECKERS: dict[str, Callable] = {
    "observation2": _check_observation2,
    "pbm-extractors": _check_pbm,
    "geelen-dichotomy": _check_geelen,
    "erdos-gallai": _check_erdos_gallai,
    "tight-families": _check_tight_family,
    "twin-reduction": _check_twin,
    "konig-observation1": _check_konig,
    "dense-dichotomy-k1": _check_dense_k1,
}

_GRIDS: dict[str, Callable] = {
    "observation2": _grid_observation2,
    "pbm-extractors": _grid_pbm,
    "geelen-dichotomy": _grid_geelen,
    "erdos-gallai": _grid_erdos_gallai,
    "tight-families": _grid_tight,
    "twin-reduction": _grid_twin,
    "konig-observation1": _grid_konig,
    "dense-dichotomy-k1": _grid_dense,
}

SUITES = tuple(sorted(_CHECKERS))


def _run_instance(suite: str, instance_id: str, payload,
                  max_nodes: Optional[int], max_seconds: Optional[float]) -> dict:
    started = time.monotonic()
    budget = SearchBudget(max_nodes=max_nodes, max_seconds=max_seconds)
    try:
        verdict, detail = _CHECKERS[suite](payload, budget)
    except BudgetExceededError as exc:
        verdict, detail = "budget-exceeded", {"nodes": exc.nodes}
    except Exception as exc:  # an unexpected crash is a finding, not a halt
        verdict, detail = "counterexample", {"error": f"{type(exc).__name__}: {exc}"}
    return {"suite": suite, "instance": instance_id, "verdict": verdict,
            "seconds": round(time.monotonic() - started, 6), "detail": detail}


def _load_config(config_path: Optional[str]) -> configparser.ConfigParser:
    parser = configparser.ConfigParser()
    path = config_path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        read = parser.read(path)
        if not read:
            raise ValueError(f"sweep config file {path!r} is unreadable")
    return parser


def _resolve_options(suite: str, overrides: Optional[Mapping],
                     config_path: Optional[str]) -> dict:
    merged = dict(SUITE_DEFAULTS[suite])
    parser = _load_config(config_path)
    if parser.has_section(suite):
        for key, raw in parser.items(suite):
            if key not in _OPTION_TYPES:
                raise ValueError(f"unknown option {key!r} for suite {suite}")
            merged[key] = _OPTION_TYPES[key](raw)
    for key, value in (overrides or {}).items():
        if key not in _OPTION_TYPES:
            raise ValueError(f"unknown option {key!r} for suite {suite}")
        if value is not None:
            merged[key] = value
    return merged


def run_sweep(suite: str, budget: SearchBudget | None = None, *,
              workers: int = 1, overrides: Mapping | None = None,
              config_path: str | None = None) -> SweepReport:
    """Run a registered suite over its grid and report canonical records.

    ``budget`` caps each instance separately (node and wall-clock limits are
    taken from it); exceeding it marks the record and moves on.  With
    ``workers`` above one, instances run in separate processes.
    """
    if suite not in _CHECKERS:
        raise ValueError(f"unknown suite {suite!r}; registered: {', '.join(SUITES)}")
    options = _resolve_options(suite, overrides, config_path)
    if budget is not None:
        max_nodes, max_seconds = budget.max_nodes, budget.max_seconds
    else:
        max_nodes, max_seconds = options["max_nodes"], options["max_seconds"]
    grid = _GRIDS[suite](options)
    started = time.monotonic()
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(
                _run_instance,
                [suite] * len(grid),
                [iid for iid, _ in grid],
                [payload for _, payload in grid],
                [max_nodes] * len(grid),
                [max_seconds] * len(grid),
                chunksize=max(1, len(grid) // (8 * workers))))
    else:
        records = [_run_instance(suite, iid, payload, max_nodes, max_seconds)
                   for iid, payload in grid]
    records.sort(key=lambda r: r["instance"])
    counts = {"ok": 0, "counterexample": 0, "budget-exceeded": 0}
    for rec in records:
        counts[rec["verdict"]] += 1
    summary = {
        "suite": suite,
        "instances": len(records),
        "ok": counts["ok"],
        "counterexamples": counts["counterexample"],
        "budget_exceeded": counts["budget-exceeded"],
        "seconds": round(time.monotonic() - started, 3),
        "options": {k: options[k] for k in sorted(options) if options[k] is not None},
    }
    return SweepReport(suite, tuple(records), summary)

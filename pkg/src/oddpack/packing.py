"""Packing odd cycles through designated vertices, and the pack-or-cover runs.

The packer is exhaustive: cycles at each level are enumerated shortest first,
keyed by their lowest vertex, and the last level falls back to the
polynomial block-decomposition finder.  An absent answer is therefore a
proof that no packing of the requested size exists.

The dichotomy drivers pair the packer with the exact cover solvers and
record whether the certificate met its advertised bound.  The bounds are
theorems only under connectivity hypotheses far beyond desk-scale inputs,
so ``bound_met`` is reported, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .covers import min_odd_cycle_cover, min_odd_s_cycle_cover
from .graphs import (
    Cycle,
    Graph,
    _find_odd_s_cycle_masked,
    bits,
    check_cycle,
    mask_of,
    vertex_connectivity,
)
from .linkage import Linkage
from .partitions import (
    NicePartition,
    maximum_matching_size,
    nice_partition,
    tau,
    within_graph,
)
from .pbm import ODD, TerminalSystem
from .search import SearchBudget, ensure_budget

__all__ = [
    "CyclePacking", "DichotomyResult", "MatchingFormResult",
    "pack_odd_s_cycles", "validate_packing",
    "twin_reduction", "cycles_from_twin_linkage",
    "dichotomy_s_cycles", "dichotomy_bipartite_cover", "tau_k",
    "greedy_triangle_packing", "dichotomy_matching_form",
]


@dataclass(frozen=True)
class CyclePacking:
    """Vertex-disjoint odd cycles, each meeting the root set when one is given."""

    cycles: tuple[Cycle, ...]
    roots: frozenset[int] | None = None

    @property
    def size(self) -> int:
        return len(self.cycles)


def validate_packing(g: Graph, packing: CyclePacking) -> None:
    """Raise ValueError unless the packing is disjoint, odd, and rooted."""
    used: set[int] = set()
    for cyc in packing.cycles:
        check_cycle(g, cyc, packing.roots)
        if not cyc.is_odd:
            raise ValueError(f"cycle {cyc.vertices} has even length")
        if used & set(cyc.vertices):
            raise ValueError(f"cycle {cyc.vertices} overlaps an earlier cycle")
        used.update(cyc.vertices)


def _greedy_disjoint_cycles(g: Graph, alive: int, roots_mask: int, cap: int,
                            budget: SearchBudget) -> int:
    """Count vertex-disjoint rooted odd cycles greedily, stopping at cap."""
    b = alive
    count = 0
    while count < cap:
        budget.tick()
        cyc = _find_odd_s_cycle_masked(g, b, roots_mask & b)
        if cyc is None:
            break
        count += 1
        b &= ~mask_of(cyc)
    return count


def _has_cover_within(g: Graph, alive: int, roots_mask: int, r: int,
                      budget: SearchBudget) -> bool:
    """Can at most r vertex deletions kill every rooted odd cycle of alive?"""
    budget.tick()
    viol = _find_odd_s_cycle_masked(g, alive, roots_mask & alive)
    if viol is None:
        return True
    if r == 0:
        return False
    return any(_has_cover_within(g, alive & ~(1 << v), roots_mask, r - 1, budget)
               for v in viol)


def _room_for(g: Graph, alive: int, roots_mask: int, need: int,
              budget: SearchBudget, memo: dict) -> bool:
    """Could alive still host ``need`` disjoint rooted odd cycles?

    False only with a proof: a cover smaller than ``need`` caps any packing,
    since each packed cycle consumes a cover vertex of its own.  True is
    returned whenever the cheap greedy packing reaches ``need`` or the test
    stays inconclusive, so pruning on False never loses solutions.
    """
    if need <= 0:
        return True
    key = (alive, need)
    hit = memo.get(key)
    if hit is None:
        if _greedy_disjoint_cycles(g, alive, roots_mask, need, budget) >= need:
            hit = True
        else:
            hit = not _has_cover_within(g, alive, roots_mask, need - 1, budget)
        memo[key] = hit
    return hit


def _pack_rec(g: Graph, alive: int, roots_mask: int, j: int,
              budget: SearchBudget, memo: dict) -> Optional[list[tuple[int, ...]]]:
    """Exhaustive packing search, shortest first cycle, lowest root key.

    Cycles at one level are enumerated by iterative deepening on the exact
    length; within a length the lowest cycle vertex is the DFS root and the
    two traversal directions are deduplicated by requiring the second path
    vertex below the last.  Partial cycles are abandoned as soon as the
    untouched remainder provably cannot host the outstanding cycles.
    """
    if j == 0:
        return []
    if not _room_for(g, alive, roots_mask, j, budget, memo):
        return None
    if j == 1:
        found = _find_odd_s_cycle_masked(g, alive, roots_mask & alive)
        return None if found is None else [found]
    count = bin(alive).count("1")
    result: Optional[list[tuple[int, ...]]] = None
    for length in range(3, count + 1, 2):
        for r in sorted(bits(alive)):
            at_or_above = alive & ~((1 << r) - 1)
            if not (roots_mask & at_or_above):
                continue
            above = at_or_above & ~(1 << r)
            path = [r]
            path_mask = 1 << r

            def extend(v: int, hit: bool) -> Optional[list[tuple[int, ...]]]:
                nonlocal path_mask
                budget.tick()
                if len(path) == length:
                    if hit and (g.masks[v] >> r & 1) and path[1] < path[-1]:
                        rest = _pack_rec(g, alive & ~path_mask, roots_mask,
                                         j - 1, budget, memo)
                        if rest is not None:
                            return [tuple(path)] + rest
                    return None
                if not hit and not (roots_mask & above & ~path_mask):
                    return None
                if not _room_for(g, alive & ~path_mask, roots_mask, j - 1,
                                 budget, memo):
                    return None
                for w in sorted(bits(g.masks[v] & above & ~path_mask)):
                    path.append(w)
                    path_mask |= 1 << w
                    got = extend(w, hit or bool(roots_mask >> w & 1))
                    if got is not None:
                        return got
                    path.pop()
                    path_mask &= ~(1 << w)
                return None

            result = extend(r, bool(roots_mask >> r & 1))
            if result is not None:
                return result
    return None


def pack_odd_s_cycles(g: Graph, s: Iterable[int], k: int,
                      budget: SearchBudget | None = None) -> Optional[CyclePacking]:
    """k vertex-disjoint odd cycles, each through the designated set, or None.

    Exhaustive, so None is a certificate of impossibility.  k = 0 succeeds
    trivially with the empty packing.
    """
    budget = ensure_budget(budget)
    roots = frozenset(int(v) for v in s)
    for v in roots:
        if not 0 <= v < g.n:
            raise ValueError(f"designated vertex {v} outside 0..{g.n - 1}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    found = _pack_rec(g, g.full_mask, mask_of(roots), k, budget, {})
    if found is None:
        return None
    packing = CyclePacking(tuple(Cycle(c).normalized() for c in found), roots)
    validate_packing(g, packing)
    return packing


# ===== reduction from rooted cycles to parity linkages =====

def twin_reduction(g: Graph, s: Iterable[int]) -> tuple[Graph, TerminalSystem]:
    """Add a nonadjacent twin per designated vertex; demand all-odd paths.

    The twin of v copies v's neighborhood without the edge to v, so an odd
    path from v to its twin closes into an odd cycle through v, and
    disjoint demanded paths close into disjoint rooted odd cycles.
    """
    roots = sorted(set(int(v) for v in s))
    for v in roots:
        if not 0 <= v < g.n:
            raise ValueError(f"designated vertex {v} outside 0..{g.n - 1}")
    extra = []
    pairs = []
    for j, v in enumerate(roots):
        twin = g.n + j
        extra.extend((min(u, twin), max(u, twin)) for u in g.adj[v])
        pairs.append((v, twin))
    bigger = Graph.from_edges(g.n + len(roots), list(g.edges) + extra)
    demands = {i: ODD for i in range(1, len(roots) + 1)}
    return bigger, TerminalSystem.make(pairs, demands)


def cycles_from_twin_linkage(g: Graph, ts: TerminalSystem,
                             linkage: Linkage) -> CyclePacking:
    """Close each twin path of the reduction back into a rooted odd cycle."""
    cycles = []
    roots = set()
    for i, path in enumerate(linkage.paths, start=1):
        v, twin = ts.pair(i)
        if path[0] != v or path[-1] != twin:
            raise ValueError(f"path {i} does not run from {v} to its twin {twin}")
        cycles.append(Cycle(tuple(path[:-1])).normalized())
        roots.add(v)
    packing = CyclePacking(tuple(cycles), frozenset(roots))
    validate_packing(g, packing)
    return packing


# ===== pack-or-cover drivers =====

@dataclass(frozen=True)
class DichotomyResult:
    """Packing certificate or exact cover, with the bound the cover was held to."""

    k: int
    bound: int
    packing: CyclePacking | None
    cover: frozenset[int] | None
    bound_met: bool
    tau_k: int | None = None
    relaxed_bound: int | None = None
    connectivity: int | None = None

    @property
    def kind(self) -> str:
        return "packing" if self.packing is not None else "cover"


def dichotomy_s_cycles(g: Graph, s: Iterable[int], k: int,
                       budget: SearchBudget | None = None,
                       measure_connectivity: bool = False) -> DichotomyResult:
    """k disjoint rooted odd cycles, else a minimum rooted odd cycle cover.

    The cover is held to the bound 2k - 2, which is guaranteed only under
    strong connectivity; bound_met records the comparison either way.
    """
    budget = ensure_budget(budget)
    roots = frozenset(int(v) for v in s)
    bound = max(0, 2 * k - 2)
    conn = vertex_connectivity(g) if measure_connectivity else None
    packing = pack_odd_s_cycles(g, roots, k, budget)
    if packing is not None:
        return DichotomyResult(k, bound, packing, None, True, connectivity=conn)
    cover = min_odd_s_cycle_cover(g, roots, budget)
    return DichotomyResult(k, bound, None, cover.members,
                           cover.size <= bound, connectivity=conn)


def tau_k(g: Graph, s: Iterable[int], k: int,
          budget: SearchBudget | None = None) -> int:
    """Least vertex cover number among induced subgraphs on k designated vertices."""
    budget = ensure_budget(budget)
    roots = sorted(set(int(v) for v in s))
    if len(roots) < k:
        raise ValueError(f"need at least {k} designated vertices, have {len(roots)}")
    if k <= 0:
        return 0
    best: int | None = None
    for combo in combinations(roots, k):
        budget.tick()
        value = tau(g.induced(combo).graph, budget)
        if best is None or value < best:
            best = value
            if best == 0:
                break
    assert best is not None
    return best


def dichotomy_bipartite_cover(g: Graph, s: Iterable[int], k: int,
                              budget: SearchBudget | None = None,
                              measure_connectivity: bool = False) -> DichotomyResult:
    """k disjoint rooted odd cycles, else a minimum bipartite-making cover.

    The cover bound tightens to 2k - 2 plus the least cover number over
    k-subsets of the designated set, and relaxes to 3k - 3.  Needs at least
    k designated vertices.
    """
    budget = ensure_budget(budget)
    roots = frozenset(int(v) for v in s)
    if len(roots) < k:
        raise ValueError(f"need at least {k} designated vertices, have {len(roots)}")
    conn = vertex_connectivity(g) if measure_connectivity else None
    tk = tau_k(g, roots, k, budget)
    bound = max(0, 2 * k - 2 + tk)
    relaxed = max(0, 3 * k - 3)
    packing = pack_odd_s_cycles(g, roots, k, budget)
    if packing is not None:
        return DichotomyResult(k, bound, packing, None, True,
                               tau_k=tk, relaxed_bound=relaxed, connectivity=conn)
    cover = min_odd_cycle_cover(g, budget)
    return DichotomyResult(k, bound, None, cover.members,
                           cover.size <= bound,
                           tau_k=tk, relaxed_bound=relaxed, connectivity=conn)


# ===== greedy triangles and the matching-form report =====

def greedy_triangle_packing(g: Graph, k: int,
                            budget: SearchBudget | None = None) -> Optional[CyclePacking]:
    """k disjoint triangles by the lowest-vertex greedy rule, or None.

    Round j takes the lowest remaining vertex u and the lexicographically
    least edge inside its remaining neighborhood; if that neighborhood has
    no edge the whole procedure reports absence, with no backtracking.
    """
    budget = ensure_budget(budget)
    if k < 0:
        raise ValueError("k must be nonnegative")
    alive = g.full_mask
    cycles = []
    for _ in range(k):
        budget.tick()
        if not alive:
            return None
        u = next(bits(alive))
        pool = g.masks[u] & alive
        pick = None
        for v in sorted(bits(pool)):
            w_mask = g.masks[v] & pool
            w_mask &= ~((1 << (v + 1)) - 1)
            if w_mask:
                pick = (v, next(bits(w_mask)))
                break
        if pick is None:
            return None
        v, w = pick
        cycles.append(Cycle((u, v, w)))
        alive &= ~((1 << u) | (1 << v) | (1 << w))
    packing = CyclePacking(tuple(cycles), None)
    validate_packing(g, packing)
    return packing


@dataclass(frozen=True)
class MatchingFormResult:
    """Packing through an independent set, greedy triangles, or a matching report."""

    k: int
    packing: CyclePacking | None
    independent_set: frozenset[int] | None
    partition: NicePartition | None
    matching_size: int | None

    @property
    def kind(self) -> str:
        return "packing" if self.packing is not None else "matching-report"


def dichotomy_matching_form(g: Graph, k: int,
                            budget: SearchBudget | None = None) -> MatchingFormResult:
    """Rooted packing through some independent k-set, else triangles, else report.

    Independent k-sets are tried in lexicographic order as root sets for the
    exhaustive packer.  When neither that nor the greedy triangles produce k
    cycles, the report gives the canonical nice partition and the maximum
    matching size of its within graph, which the theory ties to the cover
    number of the partition.
    """
    budget = ensure_budget(budget)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return MatchingFormResult(0, CyclePacking((), frozenset()), frozenset(),
                                  None, None)
    for combo in combinations(range(g.n), k):
        if any(g.has_edge(u, v) for u, v in combinations(combo, 2)):
            continue
        budget.tick()
        packing = pack_odd_s_cycles(g, combo, k, budget)
        if packing is not None:
            return MatchingFormResult(k, packing, frozenset(combo), None, None)
    triangles = greedy_triangle_packing(g, k, budget)
    if triangles is not None:
        return MatchingFormResult(k, triangles, None, None, None)
    cover = min_odd_cycle_cover(g, budget)
    np_ = nice_partition(g, cover, trusted=True, budget=budget)
    size = maximum_matching_size(within_graph(g, np_.partition), budget)
    return MatchingFormResult(k, None, None, np_, size)

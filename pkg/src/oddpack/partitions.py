"""Two-sided partitions induced by minimum odd cycle covers, and cover duality.

A minimum odd cycle cover X leaves a bipartite remainder; placing each cover
vertex on the side where it has fewer neighbors (majority of neighbors on the
opposite side) yields the partition used throughout the package.  The edges
inside the two sides form the within graph, whose minimum vertex cover size
always equals |X|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .covers import OddCycleCover, enumerate_minimum_covers, min_odd_cycle_cover
from .graphs import Graph, _components, _two_color, bits, mask_of
from .search import SearchBudget, ensure_budget, minimum_hitting_set

__all__ = [
    "Partition", "NicePartition", "Matching",
    "within_graph", "nice_partition", "validate_nice_partition",
    "enumerate_nice_partitions",
    "tau", "minimum_vertex_cover", "konig_matching",
    "maximal_matching_cover_bound", "maximum_matching_size", "is_tau_critical",
]


@dataclass(frozen=True)
class Partition:
    """Ordered split of all vertices into two named sides."""

    part_a: frozenset[int]
    part_b: frozenset[int]


@dataclass(frozen=True)
class NicePartition:
    partition: Partition
    inducing_cover: OddCycleCover


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edge set, optionally indexed by terminal-pair number."""

    edges: frozenset[tuple[int, int]]
    by_index: tuple[tuple[int, tuple[int, int]], ...] | None = None

    def __post_init__(self) -> None:
        if not _check_matching(sorted(self.edges)):
            raise ValueError("edges are not pairwise vertex-disjoint")
        if any(u >= v for u, v in self.edges):
            raise ValueError("edges must be normalized pairs (u, v) with u < v")
        if self.by_index is not None:
            indices = [i for i, _ in self.by_index]
            chosen = [e for _, e in self.by_index]
            if len(set(indices)) != len(indices):
                raise ValueError("duplicate index in matching")
            if len(set(chosen)) != len(chosen) or not set(chosen) <= self.edges:
                raise ValueError("indexing must map injectively into the edge set")

    @property
    def size(self) -> int:
        return len(self.edges)

    def indexed(self) -> dict[int, tuple[int, int]]:
        if self.by_index is None:
            raise ValueError("matching carries no index")
        return dict(self.by_index)

    @classmethod
    def from_indexed(cls, assignment: dict[int, tuple[int, int]]) -> "Matching":
        norm = {i: (min(e), max(e)) for i, e in assignment.items()}
        return cls(frozenset(norm.values()), tuple(sorted(norm.items())))


def _check_matching(edges: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen or u == v:
            return False
        seen.update((u, v))
    return True


def within_graph(g: Graph, p: Partition) -> Graph:
    """Subgraph of edges running inside part A or inside part B, on the same ids."""
    if p.part_a & p.part_b or len(p.part_a) + len(p.part_b) != g.n:
        raise ValueError("parts must split the vertex set")
    a = p.part_a
    kept = frozenset(e for e in g.edges
                     if (e[0] in a) == (e[1] in a))
    return Graph(g.n, kept)


def nice_partition(g: Graph, cover: OddCycleCover | frozenset[int] | Iterable[int],
                   trusted: bool = False,
                   budget: SearchBudget | None = None) -> NicePartition:
    """Partition induced by a minimum odd cycle cover.

    The canonical bipartition of the remainder fixes the two sides; each
    cover vertex goes to side A when it has at least as many neighbors in
    side B as in side A (ties break to A), and to B otherwise.
    """
    members = cover.members if isinstance(cover, OddCycleCover) else frozenset(cover)
    removed = mask_of(members)
    colored = _two_color(g, g.full_mask & ~removed)
    if colored is None:
        raise ValueError("the given set is not an odd cycle cover")
    if not trusted:
        optimum = min_odd_cycle_cover(g, ensure_budget(budget))
        if len(members) != optimum.size:
            raise ValueError(
                f"cover of size {len(members)} is not minimum (optimum {optimum.size})")
    rem_a, rem_b = colored
    a_mask, b_mask = rem_a, rem_b
    for x in sorted(members):
        # majority is judged against the remainder sides only, ties go to A
        in_a = bin(g.masks[x] & rem_a).count("1")
        in_b = bin(g.masks[x] & rem_b).count("1")
        if in_b >= in_a:
            a_mask |= 1 << x
        else:
            b_mask |= 1 << x
    part = Partition(frozenset(bits(a_mask)), frozenset(bits(b_mask)))
    return NicePartition(part, OddCycleCover(members, minimal=True))


def validate_nice_partition(g: Graph, np_: NicePartition,
                            budget: SearchBudget | None = None) -> None:
    """Raise ValueError unless np_ satisfies every defining property."""
    members = np_.inducing_cover.members
    part = np_.partition
    if part.part_a & part.part_b or len(part.part_a) + len(part.part_b) != g.n:
        raise ValueError("parts must split the vertex set")
    removed = mask_of(members)
    if _two_color(g, g.full_mask & ~removed) is None:
        raise ValueError("inducing set is not an odd cycle cover")
    optimum = min_odd_cycle_cover(g, ensure_budget(budget))
    if len(members) != optimum.size:
        raise ValueError("inducing cover is not minimum")
    a_rem = mask_of(part.part_a) & ~removed
    b_rem = mask_of(part.part_b) & ~removed
    for u, v in g.edges:
        if removed >> u & 1 or removed >> v & 1:
            continue
        if bool(a_rem >> u & 1) == bool(a_rem >> v & 1):
            raise ValueError(f"edge {(u, v)} lies inside one side of the remainder")
    # a tied vertex may legitimately sit on either side
    for x in members:
        in_a = bin(g.masks[x] & a_rem).count("1")
        in_b = bin(g.masks[x] & b_rem).count("1")
        if x in part.part_a:
            if in_b < in_a:
                raise ValueError(f"cover vertex {x} sits in A without a B majority")
        else:
            if in_a < in_b:
                raise ValueError(f"cover vertex {x} sits in B without an A majority")


def enumerate_nice_partitions(g: Graph,
                              budget: SearchBudget | None = None) -> list[NicePartition]:
    """Every partition that some minimum odd cycle cover induces.

    Enumerates all minimum covers, all remainder orientations (the first
    component is pinned to kill the global side swap), and both placements
    of each tied cover vertex.  Deduplicated; order is deterministic.
    """
    budget = ensure_budget(budget)
    out: list[NicePartition] = []
    seen: set[tuple[int, int]] = set()
    for cov in enumerate_minimum_covers(g, budget):
        removed = mask_of(cov)
        alive = g.full_mask & ~removed
        comps = _components(g, alive)
        colored = _two_color(g, alive)
        assert colored is not None
        rem_a0, rem_b0 = colored
        for flip in range(1 << max(0, len(comps) - 1)):
            rem_a, rem_b = rem_a0, rem_b0
            for ci in range(1, len(comps)):
                if flip >> (ci - 1) & 1:
                    cm = comps[ci]
                    rem_a, rem_b = ((rem_a & ~cm) | (rem_b & cm),
                                    (rem_b & ~cm) | (rem_a & cm))
            forced_a = forced_b = 0
            tied: list[int] = []
            for x in sorted(cov):
                in_a = bin(g.masks[x] & rem_a).count("1")
                in_b = bin(g.masks[x] & rem_b).count("1")
                if in_b > in_a:
                    forced_a |= 1 << x
                elif in_a > in_b:
                    forced_b |= 1 << x
                else:
                    tied.append(x)
            for pick in range(1 << len(tied)):
                budget.tick()
                a_mask = rem_a | forced_a
                b_mask = rem_b | forced_b
                for t_i, x in enumerate(tied):
                    if pick >> t_i & 1:
                        b_mask |= 1 << x
                    else:
                        a_mask |= 1 << x
                key = (a_mask, b_mask)
                if key in seen:
                    continue
                seen.add(key)
                part = Partition(frozenset(bits(a_mask)), frozenset(bits(b_mask)))
                out.append(NicePartition(part, OddCycleCover(cov, minimal=True)))
    return out


# ===== vertex covers and matchings =====

def _tau_masked(g: Graph, alive: int, budget: SearchBudget) -> int:
    """Exact minimum vertex cover size of the alive subgraph, branch and bound."""
    edges = [e for e in g.sorted_edges()
             if (alive >> e[0] & 1) and (alive >> e[1] & 1)]
    if not edges:
        return 0

    def first_uncovered(banned: int):
        for u, v in edges:
            if not (banned >> u & 1) and not (banned >> v & 1):
                return (u, v)
        return None

    def matching_lb(banned: int) -> int:
        used = banned
        count = 0
        for u, v in edges:
            if not (used >> u & 1) and not (used >> v & 1):
                used |= (1 << u) | (1 << v)
                count += 1
        return count

    best = [sum(1 for _ in edges)]  # crude start: one endpoint per edge is never worse
    best[0] = min(best[0], 2 * matching_lb(0))

    def rec(banned: int, chosen: int) -> None:
        budget.tick()
        edge = first_uncovered(banned)
        if edge is None:
            if chosen < best[0]:
                best[0] = chosen
            return
        if chosen + max(1, matching_lb(banned)) >= best[0]:
            return
        u, v = edge
        rec(banned | (1 << u), chosen + 1)
        rec(banned | (1 << v), chosen + 1)

    rec(0, 0)
    return best[0]


def tau(g: Graph, budget: SearchBudget | None = None) -> int:
    """Exact minimum vertex cover size."""
    return _tau_masked(g, g.full_mask, ensure_budget(budget))


def _minimum_vertex_cover_masked(g: Graph, alive: int,
                                 budget: SearchBudget) -> frozenset[int]:
    edges = [e for e in g.sorted_edges()
             if (alive >> e[0] & 1) and (alive >> e[1] & 1)]

    def violation(banned: int):
        for u, v in edges:
            if not (banned >> u & 1) and not (banned >> v & 1):
                return (u, v)
        return None

    return minimum_hitting_set(g.n, violation, budget)


def minimum_vertex_cover(g: Graph, budget: SearchBudget | None = None) -> frozenset[int]:
    """Lexicographically least minimum vertex cover."""
    return _minimum_vertex_cover_masked(g, g.full_mask, ensure_budget(budget))


def _kuhn_matching(g: Graph, alive: int, left_mask: int) -> dict[int, int]:
    """Maximum matching of a bipartite alive subgraph, augmenting from the left side.

    Returns the full vertex-to-vertex matching map (both directions).
    """
    match: dict[int, int] = {}
    for u in bits(left_mask & alive):
        seen = 0

        def try_augment(x: int) -> bool:
            nonlocal seen
            for y in bits(g.masks[x] & alive):
                if seen >> y & 1:
                    continue
                seen |= 1 << y
                if y not in match or try_augment(match[y]):
                    match[y] = x
                    match[x] = y
                    return True
            return False

        try_augment(u)
    return match


def konig_matching(g: Graph, budget: SearchBudget | None = None) -> Matching:
    """Maximum matching of a bipartite graph; its size equals the cover number."""
    colored = _two_color(g, g.full_mask)
    if colored is None:
        raise ValueError("graph is not bipartite")
    left, _ = colored
    match = _kuhn_matching(g, g.full_mask, left)
    edges = frozenset((min(u, v), max(u, v)) for u, v in match.items() if u < v)
    return Matching(edges)


def maximal_matching_cover_bound(g: Graph) -> tuple[Matching, frozenset[int]]:
    """Greedy maximal matching and the vertex cover made of its endpoints.

    The cover certifies tau <= 2 |M|; maximality certifies |M| <= tau.
    """
    used: set[int] = set()
    chosen = []
    for u, v in g.sorted_edges():
        if u not in used and v not in used:
            chosen.append((u, v))
            used.update((u, v))
    return Matching(frozenset(chosen)), frozenset(used)


def _max_matching_size_masked(g: Graph, alive: int, budget: SearchBudget) -> int:
    """Maximum matching size of the alive subgraph, exhaustive with pruning."""
    edges = [e for e in g.sorted_edges()
             if (alive >> e[0] & 1) and (alive >> e[1] & 1)]
    best = [0]

    def rec(idx: int, used: int, size: int) -> None:
        budget.tick()
        if size > best[0]:
            best[0] = size
        remaining = 0
        seen = used
        for j in range(idx, len(edges)):
            u, v = edges[j]
            if not (seen >> u & 1) and not (seen >> v & 1):
                remaining += 1
                seen |= (1 << u) | (1 << v)
        if size + remaining <= best[0]:
            return
        for j in range(idx, len(edges)):
            u, v = edges[j]
            if not (used >> u & 1) and not (used >> v & 1):
                rec(j + 1, used | (1 << u) | (1 << v), size + 1)
        return

    rec(0, 0, 0)
    return best[0]


def maximum_matching_size(g: Graph, budget: SearchBudget | None = None) -> int:
    return _max_matching_size_masked(g, g.full_mask, ensure_budget(budget))


def is_tau_critical(g: Graph, budget: SearchBudget | None = None) -> bool:
    """Does deleting any vertex or any edge strictly lower the cover number?"""
    budget = ensure_budget(budget)
    base = _tau_masked(g, g.full_mask, budget)
    if base == 0:
        return g.n == 0
    for v in range(g.n):
        if _tau_masked(g, g.full_mask & ~(1 << v), budget) >= base:
            return False
    for u, v in g.sorted_edges():
        if _tau_masked(g.without_edge(u, v), g.full_mask, budget) >= base:
            return False
    return True

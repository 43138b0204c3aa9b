"""Disjoint path systems: plain and parity linkages, path assembly, odd Z-paths.

The linkage searches are exhaustive backtracking oracles, complete at desk
scale: absence answers are proofs.  Parity demands are pruned with a
walk-parity reachability test, which is sound because a missing walk of some
parity rules out a path of that parity.

assemble_parity_paths realizes the constructive route from a nice partition
and a parity-breaking matching: each demanded pair whose natural parity (set
by its partition sides) disagrees with its demand is rerouted through its
matching edge, which flips the parity; everything is stitched together with
an inner linkage outside the terminals, the cover, and the used matching
edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import (
    Graph,
    SubgraphView,
    _components,
    _min_vertex_cut,
    _parity_reach,
    bits,
    mask_of,
)
from .partitions import Matching, NicePartition
from .pbm import EVEN, ODD, TerminalSystem, is_parity_breaking
from .search import SearchBudget, ensure_budget, minimum_hitting_set

__all__ = [
    "Linkage", "ZPath", "ZPathDichotomy", "DichotomyViolationError",
    "find_linkage", "find_parity_linkage", "validate_linkage",
    "assemble_parity_paths", "dense_subgraph",
    "odd_z_path_dichotomy", "check_z_path",
]


class DichotomyViolationError(RuntimeError):
    """Neither certificate of a pack-or-cover statement met its bound.

    The statement is a theorem, so this signals a solver bug, never an
    interesting input.
    """


@dataclass(frozen=True)
class Linkage:
    """One path per terminal pair, pairwise vertex-disjoint."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def parities(self) -> tuple[str, ...]:
        return tuple(ODD if (len(p) - 1) % 2 else EVEN for p in self.paths)


@dataclass(frozen=True)
class ZPath:
    """Path meeting the designated set only at its two endpoints."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1


def check_z_path(g: Graph, z, path: "ZPath | Sequence[int]") -> None:
    """Raise ValueError unless path is a Z-path of g."""
    z = set(z)
    verts = path.vertices if isinstance(path, ZPath) else tuple(path)
    if len(verts) < 2:
        raise ValueError("a Z-path has at least one edge")
    if len(set(verts)) != len(verts):
        raise ValueError("path repeats a vertex")
    for u, v in zip(verts, verts[1:]):
        if not g.has_edge(u, v):
            raise ValueError(f"consecutive vertices {u}, {v} are not adjacent")
    if verts[0] not in z or verts[-1] not in z:
        raise ValueError("both endpoints must belong to the designated set")
    for v in verts[1:-1]:
        if v in z:
            raise ValueError(f"interior vertex {v} belongs to the designated set")


def validate_linkage(g: Graph, ts: TerminalSystem, linkage: Linkage,
                     check_demands: bool = True) -> None:
    """Raise ValueError unless linkage solves the system (and its demands)."""
    if len(linkage.paths) != ts.k:
        raise ValueError(f"expected {ts.k} paths, got {len(linkage.paths)}")
    used: set[int] = set()
    for i, path in enumerate(linkage.paths, start=1):
        s, t = ts.pair(i)
        if len(path) < 2:
            raise ValueError(f"path {i} has no edge")
        if path[0] != s or path[-1] != t:
            raise ValueError(f"path {i} does not connect pair ({s}, {t})")
        if len(set(path)) != len(path):
            raise ValueError(f"path {i} repeats a vertex")
        for u, v in zip(path, path[1:]):
            if not g.has_edge(u, v):
                raise ValueError(f"path {i} uses the non-edge ({u}, {v})")
        if used & set(path):
            raise ValueError(f"path {i} shares vertices with an earlier path")
        used.update(path)
        if check_demands:
            demand = ts.demanded(i)
            if demand is not None:
                parity = ODD if (len(path) - 1) % 2 else EVEN
                if parity != demand:
                    raise ValueError(
                        f"path {i} has {parity} length but {demand} was demanded")


def _count_paths_capped(g: Graph, alive: int, s: int, t: int,
                        demand: Optional[int], cap: int,
                        budget: SearchBudget) -> int:
    """Number of s-t paths honoring the parity demand, counted up to cap."""
    count = 0
    path_mask = 1 << s

    def rec(v: int, parity: int) -> bool:
        nonlocal count, path_mask
        budget.tick()
        if v == t:
            if demand is None or parity == demand:
                count += 1
            return count >= cap
        for w in bits(g.masks[v] & alive & ~path_mask):
            path_mask |= 1 << w
            done = rec(w, parity ^ 1)
            path_mask &= ~(1 << w)
            if done:
                return True
        return False

    rec(s, 0)
    return count


def _walk_feasible(g: Graph, alive: int, s: int, t: int,
                   demand: Optional[int]) -> bool:
    even, odd = _parity_reach(g, alive | (1 << s) | (1 << t), s)
    if demand == 0:
        reach = even
    elif demand == 1:
        reach = odd
    else:
        reach = even | odd
    return bool(reach >> t & 1)


def _search_linkage(g: Graph, alive: int,
                    pairs: Sequence[tuple[int, int]],
                    demands: Sequence[Optional[int]],
                    budget: SearchBudget) -> Optional[list[tuple[int, ...]]]:
    """Complete backtracking search for vertex-disjoint demanded paths.

    alive restricts the usable vertices; all terminals must be alive.
    Pairs are attacked fewest-candidate-paths-first; partial paths are
    pruned by walk-parity feasibility, completed prefixes by feasibility of
    every pending pair.
    """
    k = len(pairs)
    if k == 0:
        return []
    terminal_mask = 0
    for s, t in pairs:
        terminal_mask |= (1 << s) | (1 << t)
        if not (alive >> s & 1) or not (alive >> t & 1):
            return None

    cap = 64
    weights = []
    for i, (s, t) in enumerate(pairs):
        room = (alive & ~terminal_mask) | (1 << s) | (1 << t)
        if not _walk_feasible(g, room, s, t, demands[i]):
            weights.append(0)
        else:
            weights.append(
                _count_paths_capped(g, room, s, t, demands[i], cap, budget))
    order = sorted(range(k), key=lambda i: (weights[i], i))
    if weights[order[0]] == 0:
        return None

    solution: dict[int, tuple[int, ...]] = {}

    def pending_feasible(pos: int, used: int) -> bool:
        for i in order[pos:]:
            s, t = pairs[i]
            room = (alive & ~used & ~terminal_mask) | (1 << s) | (1 << t)
            if not _walk_feasible(g, room, s, t, demands[i]):
                return False
        return True

    def solve(pos: int, used: int) -> bool:
        budget.tick()
        if pos == k:
            return True
        if not pending_feasible(pos, used):
            return False
        i = order[pos]
        s, t = pairs[i]
        demand = demands[i]
        allowed = (alive & ~used & ~terminal_mask) | (1 << t)
        path = [s]
        path_mask = 1 << s

        def extend(v: int, parity: int) -> bool:
            nonlocal path_mask
            budget.tick()
            if v == t:
                if demand is None or parity == demand:
                    solution[i] = tuple(path)
                    if solve(pos + 1, used | path_mask):
                        return True
                    del solution[i]
                return False
            for w in sorted(bits(g.masks[v] & allowed & ~path_mask)):
                need = None if demand is None else demand ^ parity ^ 1
                room = (allowed & ~path_mask) | (1 << w)
                if not _walk_feasible(g, room, w, t, need):
                    continue
                path.append(w)
                path_mask |= 1 << w
                if extend(w, parity ^ 1):
                    return True
                path.pop()
                path_mask &= ~(1 << w)
            return False

        extend(s, 0)
        return i in solution

    if solve(0, 0):
        return [solution[i] for i in range(k)]
    return None


def _demand_bit(parity: Optional[str]) -> Optional[int]:
    if parity is None:
        return None
    return 1 if parity == ODD else 0


def find_linkage(g: Graph, ts: TerminalSystem,
                 budget: SearchBudget | None = None) -> Optional[Linkage]:
    """Exhaustive search for disjoint paths joining every pair; demands ignored."""
    budget = ensure_budget(budget)
    ts.check_vertices(g)
    found = _search_linkage(g, g.full_mask, ts.pairs, [None] * ts.k, budget)
    if found is None:
        return None
    return Linkage(tuple(found))


def find_parity_linkage(g: Graph, ts: TerminalSystem,
                        budget: SearchBudget | None = None) -> Optional[Linkage]:
    """Exhaustive search for a linkage meeting every parity demand."""
    budget = ensure_budget(budget)
    ts.check_vertices(g)
    demands = [_demand_bit(ts.demanded(i)) for i in range(1, ts.k + 1)]
    found = _search_linkage(g, g.full_mask, ts.pairs, demands, budget)
    if found is None:
        return None
    link = Linkage(tuple(found))
    validate_linkage(g, ts, link)
    return link


# ===== constructive assembly from a parity-breaking matching =====

def assemble_parity_paths(g: Graph, np_: NicePartition, ts: TerminalSystem,
                          m: Matching,
                          budget: SearchBudget | None = None,
                          max_cover: int | None = None) -> Optional[Linkage]:
    """Compose demanded-parity paths from a parity-breaking matching.

    Works when the inducing cover is small (below max_cover, default 8k).
    Each pair gets primed neighbors on the opposite side of its endpoints;
    pairs whose demand disagrees with their natural side parity are routed
    through their matching edge.  The inner linkage runs outside terminals,
    cover, and used matching vertices, where the graph is bipartite, so
    inner path parities come out right automatically.  Absent when the
    primed selection or the inner linkage fails.
    """
    budget = ensure_budget(budget)
    ts.check_vertices(g)
    k = ts.k
    if k == 0:
        return Linkage(())
    threshold = 8 * k if max_cover is None else max_cover
    cover = np_.inducing_cover.members
    if len(cover) >= threshold:
        raise ValueError(
            f"inducing cover has {len(cover)} vertices; "
            f"assembly requires fewer than {threshold}")
    if not is_parity_breaking(m, g, np_.partition, ts):
        raise ValueError("matching is not parity breaking for the system")
    indexed = m.indexed()
    part_a = np_.partition.part_a

    def side(v: int) -> int:
        return 0 if v in part_a else 1

    forbidden = mask_of(ts.terminals) | mask_of(cover)

    # per pair: route plan and primed-neighbor slots (base, wanted side)
    plans: list[dict[str, object]] = []
    for i in range(1, k + 1):
        s, t = ts.pair(i)
        natural = ODD if side(s) != side(t) else EVEN
        demand = ts.demanded(i)
        flip = demand is not None and demand != natural
        plan: dict[str, object] = {"s": s, "t": t, "flip": flip}
        if flip:
            u, v = indexed[i]
            if s in (u, v):
                x, y = s, (u if v == s else v)
            elif t in (u, v):
                x, y = (u if v == t else v), t
            else:
                x, y = u, v
            plan["x"], plan["y"] = x, y
            forbidden |= (1 << x) | (1 << y)
            if x == s and y == t:
                plan["slots"] = ()
                plan["inner"] = ()
            elif x == s:
                plan["slots"] = ((y, 1 - side(y)), (t, 1 - side(t)))
                plan["inner"] = ((0, 1),)
            elif y == t:
                plan["slots"] = ((s, 1 - side(s)), (x, 1 - side(x)))
                plan["inner"] = ((0, 1),)
            else:
                plan["slots"] = ((s, 1 - side(s)), (x, 1 - side(x)),
                                 (y, 1 - side(y)), (t, 1 - side(t)))
                plan["inner"] = ((0, 1), (2, 3))
        else:
            plan["slots"] = ((s, 1 - side(s)), (t, 1 - side(t)))
            plan["inner"] = ((0, 1),)
        plans.append(plan)

    slot_specs: list[tuple[int, int, int]] = []  # (plan index, slot index, base)
    for pi, plan in enumerate(plans):
        for si, (base, _) in enumerate(plan["slots"]):  # type: ignore[arg-type]
            slot_specs.append((pi, si, base))

    side_mask_b = mask_of(frozenset(range(g.n)) - part_a)
    side_mask_a = mask_of(part_a)

    def candidates(base: int, wanted: int) -> list[int]:
        pool = side_mask_b if wanted else side_mask_a
        return sorted(bits(g.masks[base] & pool & ~forbidden))

    chosen: dict[tuple[int, int], int] = {}

    def try_slots(idx: int, taken: int) -> Optional[Linkage]:
        budget.tick()
        if idx == len(slot_specs):
            return compose()
        pi, si, base = slot_specs[idx]
        wanted = plans[pi]["slots"][si][1]  # type: ignore[index]
        for cand in candidates(base, wanted):
            if taken >> cand & 1:
                continue
            chosen[(pi, si)] = cand
            hit = try_slots(idx + 1, taken | (1 << cand))
            if hit is not None:
                return hit
            del chosen[(pi, si)]
        return None

    def compose() -> Optional[Linkage]:
        inner_pairs: list[tuple[int, int]] = []
        owners: list[tuple[int, int]] = []
        for pi, plan in enumerate(plans):
            for a_slot, b_slot in plan["inner"]:  # type: ignore[attr-defined]
                inner_pairs.append((chosen[(pi, a_slot)], chosen[(pi, b_slot)]))
                owners.append((pi, a_slot))
        alive = g.full_mask & ~forbidden
        found = _search_linkage(g, alive, inner_pairs,
                                [None] * len(inner_pairs), budget)
        if found is None:
            return None
        inner_by_owner = dict(zip(owners, found))
        paths: list[tuple[int, ...]] = []
        for pi, plan in enumerate(plans):
            s, t = plan["s"], plan["t"]
            if not plan["flip"]:
                mid = inner_by_owner[(pi, 0)]
                paths.append((s, *mid, t))
                continue
            x, y = plan["x"], plan["y"]
            if x == s and y == t:
                paths.append((s, t))
            elif x == s:
                mid = inner_by_owner[(pi, 0)]
                paths.append((s, y, *mid, t))
            elif y == t:
                mid = inner_by_owner[(pi, 0)]
                paths.append((s, *mid, x, t))
            else:
                left = inner_by_owner[(pi, 0)]
                right = inner_by_owner[(pi, 2)]
                paths.append((s, *left, x, y, *right, t))
        link = Linkage(tuple(paths))
        validate_linkage(g, ts, link)
        return link

    return try_slots(0, 0)


# ===== dense subgraph extraction =====

def dense_subgraph(g: Graph, k: int,
                   budget: SearchBudget | None = None) -> Optional[SubgraphView]:
    """2k-connected subgraph with at least 5k times its order in edges.

    Repeatedly trims to the subgraph of minimum degree 10k (which already
    forces the edge bound), verifies 2k-connectivity exactly, and otherwise
    splits on a minimum separator, keeping the side with the most edges.
    Absent when the trimming exhausts the graph.
    """
    budget = ensure_budget(budget)
    if k < 0:
        raise ValueError("k must be nonnegative")
    threshold = 10 * k
    alive = g.full_mask
    while alive:
        budget.tick()
        while True:
            dropped = 0
            for v in bits(alive):
                if bin(g.masks[v] & alive).count("1") < threshold:
                    dropped |= 1 << v
            if not dropped:
                break
            alive &= ~dropped
        if not alive:
            return None
        count = bin(alive).count("1")
        size, cut = _min_vertex_cut(g, alive)
        if size >= 2 * k:
            edges_in = sum(1 for u, v in g.edges
                           if (alive >> u & 1) and (alive >> v & 1))
            if edges_in >= 5 * k * count:
                return g.induced(bits(alive))
            return None  # unreachable once the degree threshold held
        comps = _components(g, alive & ~cut)
        if len(comps) <= 1:
            return None

        def weight(cm: int) -> tuple[int, int]:
            withcut = cm | cut
            edges_in = sum(1 for u, v in g.edges
                           if (withcut >> u & 1) and (withcut >> v & 1))
            low = next(bits(cm))
            return (edges_in, -low)

        best = max(comps, key=weight)
        alive = best | cut
    return None


# ===== odd Z-path packing / covering =====

@dataclass(frozen=True)
class ZPathDichotomy:
    """Either a packing of disjoint odd Z-paths or a hitting set within bound."""

    z: frozenset[int]
    ell: int
    paths: tuple[ZPath, ...] | None
    hitting_set: frozenset[int] | None
    bound: int

    @property
    def kind(self) -> str:
        return "packing" if self.paths is not None else "cover"


def _iter_odd_z_paths(g: Graph, zmask: int, banned: int, budget: SearchBudget):
    """Yield odd Z-paths avoiding banned vertices, endpoints in ascending order."""
    ends = [v for v in bits(zmask) if not (banned >> v & 1)]
    interior = g.full_mask & ~zmask & ~banned
    for ai, a in enumerate(ends):
        for b in ends[ai + 1:]:
            room = interior | (1 << a) | (1 << b)
            if not _walk_feasible(g, room, a, b, 1):
                continue
            path = [a]
            path_mask = 1 << a

            def extend(v: int, parity: int):
                nonlocal path_mask
                budget.tick()
                if v == b:
                    if parity == 1:
                        yield tuple(path)
                    return
                for w in sorted(bits(g.masks[v] & (interior | (1 << b)) & ~path_mask)):
                    need = parity  # odd total minus the parity after this step
                    if not _walk_feasible(
                            g, (interior & ~path_mask) | (1 << w) | (1 << b),
                            w, b, need):
                        continue
                    path.append(w)
                    path_mask |= 1 << w
                    yield from extend(w, parity ^ 1)
                    path.pop()
                    path_mask &= ~(1 << w)

            yield from extend(a, 0)


def _find_odd_z_path(g: Graph, zmask: int, banned: int,
                     budget: SearchBudget) -> Optional[tuple[int, ...]]:
    for path in _iter_odd_z_paths(g, zmask, banned, budget):
        return path
    return None


def _pack_z_paths(g: Graph, zmask: int, ell: int, banned: int,
                  budget: SearchBudget) -> Optional[list[tuple[int, ...]]]:
    if ell == 0:
        return []
    for path in _iter_odd_z_paths(g, zmask, banned, budget):
        used = banned
        for v in path:
            used |= 1 << v
        rest = _pack_z_paths(g, zmask, ell - 1, used, budget)
        if rest is not None:
            return [path] + rest
    return None


def odd_z_path_dichotomy(g: Graph, z, ell: int,
                         budget: SearchBudget | None = None) -> ZPathDichotomy:
    """ell disjoint odd Z-paths, or a minimum hitting set of size <= 2 ell - 2.

    The disjunction is a theorem, so a run where the exhaustive packer fails
    and the exact hitting set exceeds the bound raises
    DichotomyViolationError (a solver bug, not an input property).
    """
    budget = ensure_budget(budget)
    zset = frozenset(int(v) for v in z)
    for v in zset:
        if not 0 <= v < g.n:
            raise ValueError(f"designated vertex {v} outside 0..{g.n - 1}")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    bound = max(0, 2 * ell - 2)
    zmask = mask_of(zset)
    packed = _pack_z_paths(g, zmask, ell, 0, budget)
    if packed is not None:
        paths = tuple(ZPath(p) for p in packed)
        for zp in paths:
            check_z_path(g, zset, zp.vertices)
        return ZPathDichotomy(zset, ell, paths, None, bound)
    hitting = minimum_hitting_set(
        g.n, lambda banned: _find_odd_z_path(g, zmask, banned, budget), budget)
    if len(hitting) > bound:
        raise DichotomyViolationError(
            f"no {ell} disjoint odd Z-paths, yet the minimum hitting set has "
            f"{len(hitting)} > {bound} vertices")
    return ZPathDichotomy(zset, ell, None, hitting, bound)

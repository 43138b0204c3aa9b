"""Immutable bitmask-backed graphs and the elementary structure predicates.

Vertices are dense integer ids 0..n-1.  Induced subgraphs carry an explicit
translation table back to the parent graph so certificates always speak in
parent ids.  Most internal routines work on an ``alive`` vertex bitmask over
the original graph instead of materialising subgraphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple


__all__ = [
    "Graph", "SubgraphView", "Bipartition", "Cycle",
    "complete_graph", "cycle_graph", "path_graph", "complete_bipartite", "empty_graph",
    "is_bipartite", "vertex_connectivity", "is_k_connected", "blocks",
    "find_odd_s_cycle", "check_cycle",
]


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertex ids 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    masks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"edge {(u, v)} is not an integer pair")
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge {(u, v)} out of range for n={self.n}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        masks = []
        for a in self.adj:
            m = 0
            for v in a:
                m |= 1 << v
            masks.append(m)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalised = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            normalised.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(normalised))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def with_edges(self, extra: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        m = max(self.n, n) if n is not None else self.n
        return Graph.from_edges(m, list(self.edges) + list(extra))

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def induced(self, keep: Iterable[int]) -> "SubgraphView":
        ids = tuple(sorted(set(keep)))
        index = {v: i for i, v in enumerate(ids)}
        sub = Graph(len(ids), frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index))
        return SubgraphView(sub, ids)


@dataclass(frozen=True)
class SubgraphView:
    """Induced subgraph together with the translation back to parent ids."""

    graph: Graph
    parent_ids: tuple[int, ...]

    def to_parent(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.parent_ids[v] for v in vertices)


class Bipartition(NamedTuple):
    part_a: frozenset[int]
    part_b: frozenset[int]


@dataclass(frozen=True)
class Cycle:
    """Closed walk through distinct vertices; edges are consecutive pairs plus the wrap."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def normalized(self) -> "Cycle":
        vs = self.vertices
        k = len(vs)
        pivot = vs.index(min(vs))
        rotated = vs[pivot:] + vs[:pivot]
        reverse = (rotated[0],) + tuple(reversed(rotated[1:]))
        return Cycle(min(rotated, reverse))


def check_cycle(g: Graph, cycle: Cycle, roots: Iterable[int] | None = None) -> None:
    """Raise ValueError unless ``cycle`` is a simple cycle of g (meeting roots if given)."""
    vs = cycle.vertices
    if len(vs) < 3:
        raise ValueError("cycle needs at least three vertices")
    if len(set(vs)) != len(vs):
        raise ValueError("cycle repeats a vertex")
    for i, u in enumerate(vs):
        v = vs[(i + 1) % len(vs)]
        if not g.has_edge(u, v):
            raise ValueError(f"cycle uses missing edge {(u, v)}")
    if roots is not None and not set(vs) & set(roots):
        raise ValueError("cycle misses the designated root set")


# ===== graph builders =====

def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((u, v) for u in range(a) for v in range(a, a + b)))


# ===== bitmask helpers =====

def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _components(g: Graph, alive: int) -> list[int]:
    comps = []
    seen = 0
    rest = alive
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.masks[v] & alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        seen |= comp
        rest = alive & ~seen
    return comps


def _two_color(g: Graph, alive: int) -> tuple[int, int] | None:
    """Canonical 2-coloring of the alive subgraph, or None if an odd cycle exists.

    Per component the side containing the lowest alive vertex goes first.
    """
    color = {}
    part_a = 0
    part_b = 0
    rest = alive
    while rest:
        start = (rest & -rest).bit_length() - 1
        color[start] = 0
        queue = deque([start])
        comp = 1 << start
        while queue:
            u = queue.popleft()
            cu = color[u]
            for v in bits(g.masks[u] & alive):
                if v in color:
                    if color[v] == cu:
                        return None
                else:
                    color[v] = cu ^ 1
                    comp |= 1 << v
                    queue.append(v)
        for v in bits(comp):
            if color[v] == 0:
                part_a |= 1 << v
            else:
                part_b |= 1 << v
        rest &= ~comp
    return part_a, part_b


def _find_odd_cycle(g: Graph, alive: int) -> tuple[int, ...] | None:
    """Vertices of some odd cycle in the alive subgraph, or None."""
    parent = {}
    depth = {}
    color = {}
    best: tuple[int, int, int] | None = None  # (score, u, v) for a same-color edge
    rest = alive
    while rest:
        root = (rest & -rest).bit_length() - 1
        parent[root] = -1
        depth[root] = 0
        color[root] = 0
        comp = 1 << root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(g.masks[u] & alive):
                if v not in color:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    comp |= 1 << v
                    queue.append(v)
                elif color[v] == color[u]:
                    score = depth[u] + depth[v]
                    if best is None or score < best[0]:
                        best = (score, u, v)
        rest &= ~comp
    if best is None:
        return None
    _, u, v = best
    # walk both endpoints up to their lowest common ancestor
    pu, pv = [u], [v]
    while depth[pu[-1]] > depth[pv[-1]]:
        pu.append(parent[pu[-1]])
    while depth[pv[-1]] > depth[pu[-1]]:
        pv.append(parent[pv[-1]])
    while pu[-1] != pv[-1]:
        pu.append(parent[pu[-1]])
        pv.append(parent[pv[-1]])
    cycle = pu + list(reversed(pv[:-1]))
    return tuple(cycle)


def _parity_reach(g: Graph, alive: int, source: int) -> tuple[int, int]:
    """Masks of vertices reachable from source by even- and odd-length walks."""
    even = 1 << source
    odd = 0
    frontier = [(source, 0)]
    while frontier:
        nxt = []
        for u, p in frontier:
            q = p ^ 1
            reach = odd if q else even
            for v in bits(g.masks[u] & alive):
                if not (reach >> v & 1):
                    if q:
                        odd |= 1 << v
                    else:
                        even |= 1 << v
                    nxt.append((v, q))
        frontier = nxt
    return even, odd


# ===== public predicates =====

def is_bipartite(g: Graph) -> Bipartition | None:
    """Canonical bipartition of g, or None when g has an odd cycle."""
    colored = _two_color(g, g.full_mask)
    if colored is None:
        return None
    a, b = colored
    return Bipartition(frozenset(bits(a)), frozenset(bits(b)))


# ===== maximum flow on the vertex-split digraph =====

class _SplitFlow:
    """Unit-capacity Dinic network for vertex-disjoint path questions.

    Vertex v becomes nodes 2v (in) and 2v+1 (out) joined by a capacity-one
    arc; each graph edge contributes arcs in both directions with effectively
    unbounded capacity.
    """

    def __init__(self, g: Graph, alive: int, skip_split: int = 0):
        self.n_nodes = 2 * g.n + 2
        self.head: list[int] = []
        self.cap: list[int] = []
        self.graph_adj: list[list[int]] = [[] for _ in range(self.n_nodes)]
        big = 2 * g.n + 10
        for v in bits(alive):
            if not (skip_split >> v & 1):
                self._arc(2 * v, 2 * v + 1, 1)
        for u, v in g.sorted_edges():
            if (alive >> u & 1) and (alive >> v & 1):
                self._arc(2 * u + 1, 2 * v, big)
                self._arc(2 * v + 1, 2 * u, big)

    def _arc(self, a: int, b: int, c: int) -> None:
        self.graph_adj[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(c)
        self.graph_adj[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def add_arc(self, a: int, b: int, c: int) -> None:
        self._arc(a, b, c)

    def max_flow(self, source: int, sink: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            level = [-1] * self.n_nodes
            level[source] = 0
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for e in self.graph_adj[u]:
                    if self.cap[e] > 0 and level[self.head[e]] < 0:
                        level[self.head[e]] = level[u] + 1
                        queue.append(self.head[e])
            if level[sink] < 0:
                break
            it = [0] * self.n_nodes

            def dfs(u: int, pushed: int) -> int:
                if u == sink:
                    return pushed
                while it[u] < len(self.graph_adj[u]):
                    e = self.graph_adj[u][it[u]]
                    v = self.head[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while flow < limit:
                pushed = dfs(source, limit - flow)
                if not pushed:
                    break
                flow += pushed
        return flow

    def min_cut_vertices(self, source: int) -> int:
        """Mask of split vertices whose internal arc crosses the residual cut."""
        seen = [False] * self.n_nodes
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in self.graph_adj[u]:
                if self.cap[e] > 0 and not seen[self.head[e]]:
                    seen[self.head[e]] = True
                    queue.append(self.head[e])
        cut = 0
        for node in range(0, self.n_nodes - 2, 2):
            if seen[node] and not seen[node + 1]:
                cut |= 1 << (node // 2)
        return cut


def _local_connectivity(g: Graph, alive: int, s: int, t: int, limit: int) -> tuple[int, int]:
    """(max number of internally disjoint s-t paths capped at limit, cut mask)."""
    net = _SplitFlow(g, alive, skip_split=(1 << s) | (1 << t))
    value = net.max_flow(2 * s + 1, 2 * t, limit)
    cut = net.min_cut_vertices(2 * s + 1) if value < limit else 0
    return value, cut


def _min_vertex_cut(g: Graph, alive: int) -> tuple[int, int]:
    """Size and mask of a minimum vertex cut of the alive subgraph.

    For a complete subgraph the size is (vertex count - 1) and the mask is 0.
    """
    vs = list(bits(alive))
    n = len(vs)
    if n <= 1:
        return 0, 0
    comps = _components(g, alive)
    if len(comps) > 1:
        return 0, 0
    best = n - 1
    best_cut = 0
    for i, s in enumerate(vs):
        for t in vs[i + 1:]:
            if g.has_edge(s, t):
                continue
            value, cut = _local_connectivity(g, alive, s, t, best)
            if value < best:
                best = value
                best_cut = cut
    return best, best_cut


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertices whose removal disconnects g or leaves a single vertex."""
    if g.n <= 1:
        return 0
    size, _ = _min_vertex_cut(g, g.full_mask)
    return size


def is_k_connected(g: Graph, k: int) -> bool:
    """Verified k-connectivity check with a degree-condition fast path.

    Minimum degree at least (n + k - 2) / 2 forces k-connectedness: a cut of
    size below k would leave a smallest component whose vertices cannot reach
    enough neighbors.  Otherwise fall back to flows with early exit at k.
    """
    if k <= 0:
        return True
    n = g.n
    if n <= k:
        return False
    if len(_components(g, g.full_mask)) > 1:
        return False
    if min(g.degree(v) for v in range(n)) * 2 >= n + k - 2:
        return True
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            value, _ = _local_connectivity(g, g.full_mask, s, t, k)
            if value < k:
                return False
    return True


# ===== block decomposition =====

def _block_masks(g: Graph, alive: int) -> list[int]:
    """Vertex masks of the blocks of the alive subgraph.

    Every edge lands in exactly one block; isolated vertices form singleton
    blocks.  Blocks are returned sorted by their lowest vertex, then size.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[int] = []
    counter = [0]
    edge_stack: list[tuple[int, int]] = []

    def dfs(root: int) -> None:
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            u, parent_v, it = stack[-1]
            pushed = False
            for v in it:
                if not (alive >> v & 1):
                    continue
                if v not in disc:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = counter[0]
                    counter[0] += 1
                    stack.append((v, u, iter(g.adj[v])))
                    pushed = True
                    break
                if v != parent_v and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if pushed:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    # edges above and including (p, u) form one block
                    block = 0
                    while True:
                        a, b = edge_stack.pop()
                        block |= (1 << a) | (1 << b)
                        if (a, b) == (p, u):
                            break
                    out.append(block)

    for root in bits(alive):
        if root not in disc:
            if not (g.masks[root] & alive):
                out.append(1 << root)
            else:
                dfs(root)
    out.sort(key=lambda m: ((m & -m).bit_length(), bin(m).count("1")))
    return out


def blocks(g: Graph) -> list[SubgraphView]:
    """Blocks of g: 2-connected components plus bridge and isolated-vertex blocks."""
    return [g.induced(bits(m)) for m in _block_masks(g, g.full_mask)]


# ===== odd cycles through designated vertices =====

def _fan_paths(g: Graph, block: int, v: int, cycle: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Two vertex-disjoint paths from v to distinct cycle vertices, meeting it only there."""
    cycle_mask = mask_of(cycle)
    net = _SplitFlow(g, block, skip_split=(1 << v) | cycle_mask)
    sink = 2 * g.n
    for c in cycle:
        net.add_arc(2 * c, sink, 1)
    got = net.max_flow(2 * v + 1, sink, 2)
    if got < 2:
        raise AssertionError("2-connected block failed to yield a fan")
    # walk the two unit flows from v to the sink; forward arcs have even index
    flow = [net.cap[e ^ 1] if e % 2 == 0 else 0 for e in range(len(net.cap))]
    paths = []
    for _ in range(2):
        node = 2 * v + 1
        path = [v]
        while node != sink:
            for e in net.graph_adj[node]:
                if e % 2 == 0 and flow[e] > 0:
                    flow[e] -= 1
                    node = net.head[e]
                    break
            else:
                raise AssertionError("flow decomposition lost its way")
            if node != sink and node % 2 == 0:
                path.append(node // 2)
        paths.append(path)
    return paths[0], paths[1]


def _odd_cycle_through(g: Graph, block: int, v: int) -> tuple[int, ...]:
    """Odd cycle through v inside a non-bipartite 2-connected block."""
    cycle = _find_odd_cycle(g, block)
    assert cycle is not None
    if v in cycle:
        return cycle
    p1, p2 = _fan_paths(g, block, v, cycle)
    end1, end2 = p1[-1], p2[-1]
    k = len(cycle)
    i1, i2 = cycle.index(end1), cycle.index(end2)
    arc_forward = [cycle[(i1 + j) % k] for j in range((i2 - i1) % k + 1)]
    arc_backward = [cycle[(i1 - j) % k] for j in range((i1 - i2) % k + 1)]
    base = (len(p1) - 1) + (len(p2) - 1)
    arc = arc_forward if (base + len(arc_forward) - 1) % 2 == 1 else arc_backward
    # cycle: v .. end1 (p1), arc to end2, back to v along reversed p2 interior
    combined = p1[:-1] + arc + list(reversed(p2[1:-1]))
    return tuple(combined)


def _find_odd_s_cycle_masked(g: Graph, alive: int, roots_mask: int) -> tuple[int, ...] | None:
    for block in _block_masks(g, alive):
        if bin(block).count("1") < 3:
            continue
        hit = block & roots_mask
        if not hit:
            continue
        if _two_color(g, block) is not None:
            continue
        r = (hit & -hit).bit_length() - 1
        return _odd_cycle_through(g, block, r)
    return None


def find_odd_s_cycle(g: Graph, roots: Iterable[int]) -> Cycle | None:
    """Odd cycle through at least one designated root vertex, or None.

    Searches each non-bipartite block meeting the root set; inside such a
    block every vertex lies on an odd cycle, built here from any odd cycle
    plus a two-path fan.
    """
    roots = frozenset(roots)
    found = _find_odd_s_cycle_masked(g, g.full_mask, mask_of(roots))
    if found is None:
        return None
    cycle = Cycle(found).normalized()
    check_cycle(g, cycle, roots)
    if not cycle.is_odd:
        raise AssertionError("constructed cycle lost its parity")
    return cycle

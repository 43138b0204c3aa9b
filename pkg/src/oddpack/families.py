"""Extremal instance generators and deterministic random sampling.

The two hand-built families realize the tight examples: a complete
bipartite graph that carries cliques defeating every all-odd linkage, and
its cousin whose designated set pins the exact cover bound.  "Large" is a
sideSize parameter; the interesting properties already hold at the small
documented sizes, and the defeating arguments do not depend on the size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .dimacs import parse_dimacs
from .graphs import Graph
from .pbm import ODD, TerminalSystem

__all__ = [
    "InstanceSpec", "FAMILIES",
    "gen_non_parity_linked", "gen_tight_cover", "sample_random",
]

FAMILIES = ("nonParityLinked", "tightCover", "randomGnp", "randomDense", "file")

# fixed edge probability of the randomDense family
DENSE_EDGE_PROBABILITY = 0.8


@dataclass(frozen=True)
class InstanceSpec:
    """Recipe for one instance: a family name plus its applicable parameters."""

    family: str
    n: int | None = None
    k: int | None = None
    tau: int | None = None
    side_size: int | None = None
    p: float | None = None
    seed: str | None = None
    path: str | None = None

    _REQUIRED = {
        "nonParityLinked": ("k", "side_size"),
        "tightCover": ("k", "tau", "side_size"),
        "randomGnp": ("n", "p", "seed"),
        "randomDense": ("n", "seed"),
        "file": ("path",),
    }

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; pick one of {FAMILIES}")
        for name in self._REQUIRED[self.family]:
            if getattr(self, name) is None:
                raise ValueError(f"family {self.family} requires parameter {name}")

    def label(self) -> str:
        parts = [f"{name}={getattr(self, name)}"
                 for name in ("n", "k", "tau", "side_size", "p", "seed", "path")
                 if getattr(self, name) is not None]
        return f"{self.family}({','.join(parts)})"


def _clique(vertices) -> list[tuple[int, int]]:
    vs = list(vertices)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


def gen_non_parity_linked(k: int, side_size: int) -> tuple[Graph, TerminalSystem]:
    """Complete bipartite graph defeating every all-odd linkage on k pairs.

    Side A gains a clique on 2k - 1 vertices, side B a clique on the 2k
    terminals minus the perfect matching of the pairs.  Every demanded-odd
    path must pass two adjacent A-clique vertices, and k disjoint paths
    would need 2k of them; the terminals' own edges join terminals only, so
    they cannot help.  All pair parities are demanded odd.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if side_size < 2 * k:
        raise ValueError(f"side size {side_size} cannot host 2k={2 * k} terminals")
    a = list(range(side_size))
    b = list(range(side_size, 2 * side_size))
    edges = [(u, v) for u in a for v in b]
    edges += _clique(a[:2 * k - 1])
    s_terms = b[:k]
    t_terms = b[k:2 * k]
    pair_edges = {(min(x, y), max(x, y)) for x, y in zip(s_terms, t_terms)}
    edges += [e for e in _clique(s_terms + t_terms) if e not in pair_edges]
    ts = TerminalSystem.make(list(zip(s_terms, t_terms)),
                             {i: ODD for i in range(1, k + 1)})
    return Graph.from_edges(2 * side_size, edges), ts


def gen_tight_cover(k: int, tau: int, side_size: int) -> tuple[Graph, frozenset[int]]:
    """Complete bipartite graph whose designated set pins the cover bound.

    Side A gains a clique on 2k - 1 vertices and side B a clique on tau
    vertices; the designated set is the first k vertices of B, containing
    the small clique, so its induced subgraph has cover number tau - 1.
    """
    if not 1 <= tau <= k:
        raise ValueError(f"tau must lie in 1..{k}, got {tau}")
    if side_size < max(2 * k - 1, k):
        raise ValueError(
            f"side size {side_size} below minimum {max(2 * k - 1, k)}")
    a = list(range(side_size))
    b = list(range(side_size, 2 * side_size))
    edges = [(u, v) for u in a for v in b]
    edges += _clique(a[:2 * k - 1])
    edges += _clique(b[:tau])
    designated = frozenset(b[:k])
    return Graph.from_edges(2 * side_size, edges), designated


def sample_random(spec: InstanceSpec) -> Graph:
    """Deterministic graph for the description; same inputs, same edges."""
    spec.validate()
    if spec.family == "randomGnp":
        return _gnp(spec.n, spec.p, f"gnp/{spec.n}/{spec.p}/{spec.seed}")
    if spec.family == "randomDense":
        return _gnp(spec.n, DENSE_EDGE_PROBABILITY,
                    f"dense/{spec.n}/{spec.seed}")
    if spec.family == "file":
        return parse_dimacs(Path(spec.path).read_text())
    if spec.family == "nonParityLinked":
        return gen_non_parity_linked(spec.k, spec.side_size)[0]
    return gen_tight_cover(spec.k, spec.tau, spec.side_size)[0]


def _gnp(n: int, p: float, seed: str) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)

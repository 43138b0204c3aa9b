"""Exact minimum covers for odd cycles, plain or through designated roots."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import Graph, _find_odd_cycle, _find_odd_s_cycle_masked, mask_of
from .search import SearchBudget, ensure_budget, minimum_hitting_set

__all__ = [
    "OddCycleCover", "OddSCycleCover",
    "min_odd_cycle_cover", "min_odd_s_cycle_cover",
    "enumerate_minimum_covers", "verify_cover", "verify_bipartite_cover",
]


@dataclass(frozen=True)
class OddCycleCover:
    """Vertex set whose removal leaves a bipartite graph."""

    members: frozenset[int]
    minimal: bool = False

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OddSCycleCover:
    """Vertex set whose removal kills every odd cycle through the root set."""

    members: frozenset[int]
    roots: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


def min_odd_cycle_cover(g: Graph, budget: SearchBudget | None = None) -> OddCycleCover:
    """Lexicographically least minimum vertex set making g bipartite."""
    budget = ensure_budget(budget)
    full = g.full_mask

    def violation(banned: int):
        return _find_odd_cycle(g, full & ~banned)

    members = minimum_hitting_set(g.n, violation, budget)
    return OddCycleCover(members, minimal=True)


def min_odd_s_cycle_cover(g: Graph, roots: Iterable[int],
                          budget: SearchBudget | None = None) -> OddSCycleCover:
    """Lexicographically least minimum vertex set meeting every odd cycle through roots."""
    budget = ensure_budget(budget)
    roots = frozenset(roots)
    full = g.full_mask
    roots_mask = mask_of(roots)

    def violation(banned: int):
        return _find_odd_s_cycle_masked(g, full & ~banned, roots_mask & ~banned)

    members = minimum_hitting_set(g.n, violation, budget)
    return OddSCycleCover(members, roots=roots)


def enumerate_minimum_covers(g: Graph, budget: SearchBudget | None = None) -> list[frozenset[int]]:
    """All minimum odd cycle covers of g, in lexicographic order."""
    budget = ensure_budget(budget)
    full = g.full_mask
    if _find_odd_cycle(g, full) is None:
        return [frozenset()]
    for size in range(1, g.n + 1):
        found = []
        for combo in combinations(range(g.n), size):
            budget.tick()
            if _find_odd_cycle(g, full & ~mask_of(combo)) is None:
                found.append(frozenset(combo))
        if found:
            return found
    raise AssertionError("odd cycles survive deleting every vertex")


def verify_cover(g: Graph, roots: Iterable[int], removed: Iterable[int]) -> bool:
    """Does removing ``removed`` kill every odd cycle through the surviving roots?"""
    removed_mask = mask_of(removed)
    roots_mask = mask_of(roots) & ~removed_mask
    alive = g.full_mask & ~removed_mask
    return _find_odd_s_cycle_masked(g, alive, roots_mask) is None


def verify_bipartite_cover(g: Graph, removed: Iterable[int]) -> bool:
    """Does removing ``removed`` leave a bipartite graph?"""
    from .graphs import _two_color
    return _two_color(g, g.full_mask & ~mask_of(removed)) is not None

"""Search budgets and the exact hitting-set engine shared by the solvers.

Every exact solver in this package reduces to the same shape: a violation
finder reports some forbidden structure (an uncovered edge, an odd cycle,
an odd path) as a tuple of vertices, and the solver looks for a smallest
vertex set meeting every violation.  Small instances are settled by
ascending-size subset enumeration, which yields the lexicographically
least optimum for free; larger ones go through branch and bound with a
greedy disjoint-violation lower bound, followed by a prefix-growing pass
that recovers the lexicographically least optimum.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Callable, Optional

# banned-vertex bitmask -> vertices of some surviving violation, or None
ViolationFinder = Callable[[int], Optional[tuple[int, ...]]]

DEFAULT_NODE_BUDGET = 50_000_000

# switch from subset enumeration to branch and bound at this vertex count
ENUMERATE_LIMIT = 14


class BudgetExceededError(RuntimeError):
    """A solver ran past its node or wall-clock budget."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class SearchBudget:
    """Node counter plus optional deadline, local to one solver call."""

    __slots__ = ("max_nodes", "max_seconds", "nodes", "_deadline")

    def __init__(self, max_nodes: int | None = DEFAULT_NODE_BUDGET,
                 max_seconds: float | None = None):
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self._deadline = None if max_seconds is None else time.monotonic() + max_seconds

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"search exceeded node budget of {self.max_nodes}", self.nodes)
        if self._deadline is not None and self.nodes % 1024 < count:
            if time.monotonic() > self._deadline:
                raise BudgetExceededError(
                    f"search exceeded time budget of {self.max_seconds}s", self.nodes)


def ensure_budget(budget: SearchBudget | None) -> SearchBudget:
    return budget if budget is not None else SearchBudget()


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _greedy_disjoint(find_violation: ViolationFinder, banned: int,
                     budget: SearchBudget) -> tuple[int, int]:
    """Count vertex-disjoint violations greedily.

    Returns (count, total vertices over those violations).  The count is a
    lower bound on any hitting set extending ``banned``; deleting all the
    listed vertices is a feasible if wasteful upper bound.
    """
    count = 0
    total = 0
    b = banned
    while True:
        budget.tick()
        viol = find_violation(b)
        if viol is None:
            return count, total
        count += 1
        total += len(viol)
        b |= _mask(viol)


def minimum_hitting_set_size(n: int, find_violation: ViolationFinder,
                             budget: SearchBudget | None = None) -> int:
    """Size of a minimum vertex set meeting every violation."""
    budget = ensure_budget(budget)
    if find_violation(0) is None:
        return 0
    _, ub = _greedy_disjoint(find_violation, 0, budget)
    best = [ub]

    def rec(banned: int, chosen: int) -> None:
        budget.tick()
        viol = find_violation(banned)
        if viol is None:
            if chosen < best[0]:
                best[0] = chosen
            return
        if chosen + 1 >= best[0]:
            return
        lb, _ = _greedy_disjoint(find_violation, banned, budget)
        if chosen + lb >= best[0]:
            return
        for v in viol:
            rec(banned | (1 << v), chosen + 1)

    rec(0, 0)
    return best[0]


def _feasible(find_violation: ViolationFinder, banned: int, allowed: int,
              r: int, budget: SearchBudget) -> bool:
    """Is there a hitting set of size <= r inside ``allowed`` extending ``banned``?"""
    budget.tick()
    viol = find_violation(banned)
    if viol is None:
        return True
    if r == 0:
        return False
    lb, _ = _greedy_disjoint(find_violation, banned, budget)
    if lb > r:
        return False
    for v in viol:
        if allowed >> v & 1:
            if _feasible(find_violation, banned | (1 << v), allowed, r - 1, budget):
                return True
    return False


def minimum_hitting_set(n: int, find_violation: ViolationFinder,
                        budget: SearchBudget | None = None,
                        enumerate_limit: int = ENUMERATE_LIMIT) -> frozenset[int]:
    """Lexicographically least minimum vertex set meeting every violation."""
    budget = ensure_budget(budget)
    if find_violation(0) is None:
        return frozenset()
    if n < enumerate_limit:
        for size in range(1, n + 1):
            for combo in combinations(range(n), size):
                budget.tick()
                if find_violation(_mask(combo)) is None:
                    return frozenset(combo)
        raise AssertionError("violations survive deleting every vertex")

    size = minimum_hitting_set_size(n, find_violation, budget)
    full = (1 << n) - 1
    chosen_mask = 0
    chosen: list[int] = []
    start = 0
    for remaining in range(size, 0, -1):
        for v in range(start, n):
            allowed = full & ~((1 << (v + 1)) - 1)
            if _feasible(find_violation, chosen_mask | (1 << v), allowed,
                         remaining - 1, budget):
                chosen.append(v)
                chosen_mask |= 1 << v
                start = v + 1
                break
        else:
            raise AssertionError("no feasible lexicographic extension")
    return frozenset(chosen)

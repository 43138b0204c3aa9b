import time

import pytest
from hypothesis import given, strategies as st

from oddpack import BudgetExceededError, SearchBudget, minimum_hitting_set
from oddpack.search import minimum_hitting_set_size

import _oracles as oracle


def finder_for(families):
    """Violation finder over a fixed family list: first set missed by the ban mask."""
    def find(banned_mask):
        for fam in families:
            if not any(banned_mask >> v & 1 for v in fam):
                return tuple(fam)
        return None
    return find


class TestMinimumHittingSet:
    def test_empty_family_needs_nothing(self):
        assert minimum_hitting_set(5, finder_for([])) == frozenset()

    def test_single_set_hits_least_vertex(self):
        assert minimum_hitting_set(5, finder_for([(3, 1, 4)])) == {1}

    def test_disjoint_sets_need_one_each(self):
        got = minimum_hitting_set(6, finder_for([(0, 1), (2, 3), (4, 5)]))
        assert got == {0, 2, 4}

    def test_lexicographically_least_among_minimums(self):
        # {1} and {2} both hit everything; 1 wins
        fams = [(1, 2), (1, 2, 3)]
        assert minimum_hitting_set(4, finder_for(fams)) == {1}

    @given(st.data())
    def test_matches_oracle(self, data):
        n = data.draw(st.integers(1, 7))
        fams = data.draw(st.lists(
            st.lists(st.integers(0, n - 1), min_size=1, max_size=3,
                     unique=True).map(tuple),
            max_size=5))
        got = minimum_hitting_set(n, finder_for(fams))
        size, pick = oracle.min_cover_of_sets(n, [set(f) for f in fams])
        assert len(got) == size
        assert got == set(pick)

    def test_size_helper_agrees(self):
        fams = [(0, 1), (1, 2), (3,)]
        assert minimum_hitting_set_size(4, finder_for(fams)) == 2

    def test_large_ground_set_uses_branch_and_bound(self):
        # above the enumeration cutoff; disjoint pairs force size n/2
        fams = [(2 * i, 2 * i + 1) for i in range(9)]
        got = minimum_hitting_set(18, finder_for(fams))
        assert got == {2 * i for i in range(9)}


class TestSearchBudget:
    def test_node_budget_enforced(self):
        budget = SearchBudget(max_nodes=10)
        with pytest.raises(BudgetExceededError) as err:
            for _ in range(50):
                budget.tick()
        assert err.value.nodes >= 10

    def test_time_budget_enforced(self):
        budget = SearchBudget(max_nodes=None, max_seconds=0.01)
        deadline = time.time() + 2.0
        with pytest.raises(BudgetExceededError):
            while time.time() < deadline:
                budget.tick()

    def test_unlimited_budget_keeps_counting(self):
        budget = SearchBudget(max_nodes=None)
        for _ in range(10_000):
            budget.tick()
        assert budget.nodes == 10_000

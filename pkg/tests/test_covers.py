import pytest
from hypothesis import given, strategies as st

from oddpack import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_minimum_covers,
    min_odd_cycle_cover,
    min_odd_s_cycle_cover,
    path_graph,
    verify_bipartite_cover,
    verify_cover,
)

import _oracles as oracle
from conftest import all_labeled_graphs, random_graph


class TestMinOddCycleCover:
    @pytest.mark.parametrize("g,size,members", [
        (complete_graph(5), 3, {0, 1, 2}),
        (cycle_graph(5), 1, {0}),
        (cycle_graph(6), 0, set()),
        (complete_bipartite(4, 4), 0, set()),
        (path_graph(6), 0, set()),
    ])
    def test_known_values(self, g, size, members):
        cover = min_odd_cycle_cover(g)
        assert cover.size == size
        assert set(cover.members) == members
        assert verify_bipartite_cover(g, cover.members)

    def test_matches_oracle_exhaustively(self):
        for g in all_labeled_graphs(5):
            cover = min_odd_cycle_cover(g)
            size, pick = oracle.min_odd_cycle_cover(g.n, g.sorted_edges())
            assert cover.size == size
            assert set(cover.members) == set(pick)

    def test_matches_oracle_on_samples(self, rng):
        for trial in range(50):
            n = rng.randint(4, 8)
            g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
            cover = min_odd_cycle_cover(g)
            size, pick = oracle.min_odd_cycle_cover(n, g.sorted_edges())
            assert cover.size == size
            assert set(cover.members) == set(pick), (n, g.sorted_edges())


class TestMinOddSCycleCover:
    def test_root_itself_suffices_on_complete_graph(self):
        cover = min_odd_s_cycle_cover(complete_graph(5), [0])
        assert cover.size == 1 and set(cover.members) == {0}
        assert verify_cover(complete_graph(5), [0], cover.members)

    def test_empty_roots_mean_empty_cover(self):
        cover = min_odd_s_cycle_cover(complete_graph(5), [])
        assert cover.size == 0

    def test_never_larger_than_unrooted_cover(self, rng):
        for trial in range(30):
            n = rng.randint(4, 7)
            g = random_graph(rng, n, 0.5)
            roots = [v for v in range(n) if rng.random() < 0.5]
            rooted = min_odd_s_cycle_cover(g, roots)
            assert rooted.size <= min_odd_cycle_cover(g).size

    def test_matches_oracle_exhaustively(self):
        for g in all_labeled_graphs(4):
            for roots in ([0], [1, 3], [0, 1, 2, 3]):
                cover = min_odd_s_cycle_cover(g, roots)
                size, pick = oracle.min_odd_s_cycle_cover(
                    g.n, g.sorted_edges(), roots)
                assert cover.size == size
                assert set(cover.members) == set(pick)

    def test_matches_oracle_on_samples(self, rng):
        for trial in range(50):
            n = rng.randint(4, 8)
            g = random_graph(rng, n, rng.choice([0.3, 0.5]))
            roots = [v for v in range(n) if rng.random() < 0.4] or [0]
            cover = min_odd_s_cycle_cover(g, roots)
            size, pick = oracle.min_odd_s_cycle_cover(n, g.sorted_edges(), roots)
            assert cover.size == size
            assert set(cover.members) == set(pick)
            assert verify_cover(g, roots, cover.members)


class TestVerifiers:
    def test_partial_cover_rejected(self):
        g = complete_graph(5)
        assert not verify_bipartite_cover(g, frozenset({0}))
        assert verify_bipartite_cover(g, frozenset({0, 1, 2}))

    def test_rooted_verifier_ignores_cycles_missing_roots(self):
        # two disjoint triangles; root only in the first
        g = cycle_graph(3).with_edges([(3, 4), (4, 5), (3, 5)], n=6)
        assert verify_cover(g, [0], frozenset({0}))
        assert not verify_cover(g, [0, 3], frozenset({0}))


class TestEnumerateMinimumCovers:
    def test_all_minimums_on_odd_cycle(self):
        found = enumerate_minimum_covers(cycle_graph(5))
        assert set(found) == {frozenset({v}) for v in range(5)}

    def test_bipartite_graph_has_single_empty_cover(self):
        assert enumerate_minimum_covers(complete_bipartite(2, 3)) == [frozenset()]

    def test_enumeration_contains_the_canonical_cover(self, rng):
        for trial in range(15):
            g = random_graph(rng, 6, 0.5)
            cover = min_odd_cycle_cover(g)
            members = enumerate_minimum_covers(g)
            assert frozenset(cover.members) in members
            assert all(len(m) == cover.size for m in members)


@given(st.integers(3, 8))
def test_complete_graph_cover_leaves_an_edge(n):
    cover = min_odd_cycle_cover(complete_graph(n))
    assert cover.size == n - 2
    assert set(cover.members) == set(range(n - 2))


import pytest
from hypothesis import given, strategies as st

from oddpack import (
    Cycle,
    Graph,
    check_cycle,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    find_odd_s_cycle,
    is_bipartite,
    is_k_connected,
    path_graph,
    vertex_connectivity,
)
from oddpack.graphs import bits, blocks, mask_of

import _oracles as oracle
from conftest import all_labeled_graphs, random_graph


def edge_list(g: Graph):
    return g.sorted_edges()


class TestGraphBasics:
    def test_from_edges_normalizes_orientation(self):
        g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])
        assert g.sorted_edges() == [(0, 2), (1, 2)]

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    def test_degree_and_neighbors(self):
        g = cycle_graph(5)
        assert g.degree(0) == 2
        assert g.neighbors(0) == (1, 4)

    def test_with_and_without_edge(self):
        g = path_graph(3)
        assert g.with_edges([(0, 2)]).has_edge(0, 2)
        assert not g.without_edge(0, 1).has_edge(0, 1)

    def test_induced_relabels_and_translates(self):
        view = complete_graph(5).induced([1, 3, 4])
        assert view.graph.n == 3
        assert view.to_parent([0, 2]) == (1, 4)
        assert len(view.graph.edges) == 3

    def test_mask_helpers_roundtrip(self):
        assert sorted(bits(mask_of([0, 3, 5]))) == [0, 3, 5]
        assert mask_of([]) == 0

    def test_builders_have_expected_sizes(self):
        assert len(complete_graph(6).edges) == 15
        assert len(cycle_graph(6).edges) == 6
        assert len(path_graph(6).edges) == 5
        assert len(complete_bipartite(3, 4).edges) == 12
        assert empty_graph(4).edges == frozenset()


class TestBipartiteness:
    def test_even_cycle_bipartite(self):
        assert is_bipartite(cycle_graph(6)) is not None

    def test_odd_cycle_not_bipartite(self):
        assert is_bipartite(cycle_graph(7)) is None

    def test_agrees_with_oracle_on_all_small_graphs(self):
        for g in all_labeled_graphs(5):
            got = is_bipartite(g)
            expect = oracle.two_coloring(g.n, edge_list(g))
            assert (got is None) == (expect is None)
            if got is not None:
                part_a, part_b = got
                for u, v in g.edges:
                    assert (u in part_a) != (v in part_a)

    def test_canonical_sides_put_least_vertex_first(self):
        part_a, _ = is_bipartite(complete_bipartite(2, 3))
        assert 0 in part_a


class TestConnectivity:
    @pytest.mark.parametrize("g,expected", [
        (complete_graph(5), 4),
        (cycle_graph(8), 2),
        (path_graph(5), 1),
        (complete_bipartite(3, 5), 3),
        (empty_graph(3), 0),
    ])
    def test_known_values(self, g, expected):
        assert vertex_connectivity(g) == expected

    def test_matches_oracle_on_random_graphs(self, rng):
        for trial in range(60):
            n = rng.randint(2, 7)
            g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.8]))
            assert vertex_connectivity(g) == oracle.connectivity(n, edge_list(g))

    def test_is_k_connected_consistent_with_exact_value(self, rng):
        for trial in range(40):
            n = rng.randint(3, 7)
            g = random_graph(rng, n, 0.6)
            kappa = vertex_connectivity(g)
            assert is_k_connected(g, kappa)
            assert not is_k_connected(g, kappa + 1)

    def test_degree_shortcut_on_dense_graph(self):
        # 2*delta >= n + k - 2 certifies without any flow computation
        g = complete_graph(30).without_edge(0, 1)
        assert is_k_connected(g, 28)


class TestOddSCycles:
    def test_finds_triangle_through_root(self):
        c = find_odd_s_cycle(complete_graph(4), [2])
        assert c is not None and c.is_odd and 2 in c.vertices
        check_cycle(complete_graph(4), c, roots=[2])

    def test_absent_when_root_in_bipartite_part(self):
        # odd cycle exists but never touches the pendant path
        g = cycle_graph(5).with_edges([(5, 0), (6, 5)], n=7)
        assert find_odd_s_cycle(g, [6]) is None
        assert find_odd_s_cycle(g, [0]) is not None

    def test_existence_matches_oracle_exhaustively(self):
        for g in all_labeled_graphs(5):
            for root in range(5):
                got = find_odd_s_cycle(g, [root])
                expect = oracle.odd_s_cycles(g.n, edge_list(g), [root])
                assert (got is not None) == bool(expect)
                if got is not None:
                    check_cycle(g, got, roots=[root])

    def test_existence_matches_oracle_on_samples(self, rng):
        for trial in range(120):
            n = rng.randint(3, 8)
            g = random_graph(rng, n, rng.choice([0.25, 0.4, 0.6]))
            roots = [v for v in range(n) if rng.random() < 0.4] or [0]
            got = find_odd_s_cycle(g, roots)
            expect = oracle.odd_s_cycles(n, edge_list(g), roots)
            assert (got is not None) == bool(expect)
            if got is not None:
                check_cycle(g, got, roots=roots)

    def test_rejects_bogus_cycles(self):
        g = cycle_graph(6)
        with pytest.raises(ValueError):
            check_cycle(g, Cycle((0, 1, 2)))
        with pytest.raises(ValueError):
            check_cycle(g, Cycle((0, 1, 2, 3, 4, 5)), roots=[7])


class TestBlocks:
    def test_two_triangles_sharing_a_cutvertex(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        found = {frozenset(b.parent_ids) for b in blocks(g)}
        assert found == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}

    def test_bridge_is_its_own_block(self):
        g = path_graph(3)
        found = {frozenset(b.parent_ids) for b in blocks(g)}
        assert found == {frozenset({0, 1}), frozenset({1, 2})}


@given(st.integers(3, 9))
def test_odd_cycles_found_in_complete_graphs(n):
    c = find_odd_s_cycle(complete_graph(n), [0])
    assert c is not None and c.length == 3 and 0 in c.vertices


@given(st.data())
def test_cycle_normalization_is_rotation_invariant(data):
    verts = data.draw(st.permutations(range(5)))
    cycle = Cycle(tuple(verts))
    rotated = Cycle(tuple(verts[2:]) + tuple(verts[:2]))
    assert cycle.normalized().vertices == rotated.normalized().vertices

from itertools import combinations

import pytest

from oddpack import (
    ODD,
    Matching,
    Partition,
    TerminalSystem,
    brute_force_pbm,
    complete_bipartite,
    complete_graph,
    dead_branch_events,
    extract_pbm_4k,
    extract_pbm_independent,
    is_parity_breaking,
    nice_partition_equivalence_check,
    reset_dead_branch_log,
    tau,
)

from conftest import all_labeled_graphs, random_graph


def trivial(n):
    return Partition(frozenset(range(n)), frozenset())


def pair_systems(vertices, k):
    """All ways to choose k disjoint unordered terminal pairs, canonical order."""
    found = []
    for chosen in combinations(vertices, 2 * k):
        rest = list(chosen)
        first = rest[0]

        def pairings(pool):
            if not pool:
                yield ()
                return
            s = pool[0]
            for j in range(1, len(pool)):
                t = pool[j]
                remainder = pool[1:j] + pool[j + 1:]
                for tail in pairings(remainder):
                    yield ((s, t),) + tail

        found.extend(pairings(rest))
    return found


class TestTerminalSystem:
    def test_properties(self):
        ts = TerminalSystem.make([(0, 1), (2, 3)], {2: ODD})
        assert ts.k == 2
        assert ts.terminals == frozenset({0, 1, 2, 3})
        assert ts.parity_set == frozenset({2})
        assert ts.demanded(2) == ODD and ts.demanded(1) is None
        assert ts.pair(1) == (0, 1)

    def test_check_vertices_rejects_overlap_and_range(self):
        with pytest.raises(ValueError):
            TerminalSystem.make([(0, 1), (1, 2)]).check_vertices(complete_graph(4))
        with pytest.raises(ValueError):
            TerminalSystem.make([(0, 9)]).check_vertices(complete_graph(4))

    def test_bad_demand_rejected(self):
        with pytest.raises(ValueError):
            TerminalSystem.make([(0, 1)], {1: "sideways"})
        with pytest.raises(ValueError):
            TerminalSystem.make([(0, 1)], {2: ODD})


class TestIsParityBreaking:
    def test_accepts_good_matching(self):
        g = complete_graph(6)
        ts = TerminalSystem.make([(0, 1), (2, 3)], {1: ODD, 2: ODD})
        m = Matching.from_indexed({1: (0, 1), 2: (2, 3)})
        assert is_parity_breaking(m, g, trivial(6), ts)

    def test_rejects_edge_touching_other_pair(self):
        g = complete_graph(6)
        ts = TerminalSystem.make([(0, 1), (2, 3)], {1: ODD, 2: ODD})
        m = Matching.from_indexed({1: (0, 2), 2: (3, 4)})
        assert not is_parity_breaking(m, g, trivial(6), ts)

    def test_wrong_index_set_raises(self):
        g = complete_graph(6)
        ts = TerminalSystem.make([(0, 1), (2, 3)], {1: ODD, 2: ODD})
        m = Matching.from_indexed({1: (0, 1)})
        with pytest.raises(ValueError):
            is_parity_breaking(m, g, trivial(6), ts)
        with pytest.raises(ValueError):
            is_parity_breaking(Matching(frozenset()), g, trivial(6), ts)

    def test_rejects_non_within_edge(self):
        g = complete_graph(4)
        part = Partition(frozenset({0, 1}), frozenset({2, 3}))
        ts = TerminalSystem.make([(0, 2)], {1: ODD})
        m = Matching.from_indexed({1: (1, 3)})   # crosses the partition
        assert not is_parity_breaking(m, g, part, ts)


class TestExtractors:
    def test_4k_on_complete_graphs(self):
        for n in (4, 5, 6, 7):
            g = complete_graph(n)
            for k in (1, 2):
                if tau(g) < 4 * k - 3:
                    continue
                pairs = [(2 * i, 2 * i + 1) for i in range(k)]
                m = extract_pbm_4k(g, pairs)
                ts = TerminalSystem.make(pairs, {i: ODD for i in range(1, k + 1)})
                assert is_parity_breaking(m, g, trivial(n), ts)

    def test_4k_precondition_enforced(self):
        with pytest.raises(ValueError):
            extract_pbm_4k(complete_graph(4), [(0, 1), (2, 3)])

    def test_independent_requires_independent_terminals(self):
        with pytest.raises(ValueError):
            extract_pbm_independent(complete_graph(6), [(0, 1), (2, 3)])

    def test_independent_on_bipartite_sides(self):
        g = complete_bipartite(4, 4)
        pairs = [(0, 1), (2, 3)]
        m = extract_pbm_independent(g, pairs)
        ts = TerminalSystem.make(pairs, {1: ODD, 2: ODD})
        assert is_parity_breaking(m, g, trivial(8), ts)

    def test_exhaustive_against_brute_force_small(self):
        reset_dead_branch_log()
        checked_4k = checked_ind = 0
        for g in all_labeled_graphs(5):
            t = tau(g)
            for k in (1, 2):
                if g.n < 2 * k:
                    continue
                for pairs in pair_systems(range(g.n), k):
                    ts = TerminalSystem.make(
                        pairs, {i: ODD for i in range(1, k + 1)})
                    part = trivial(g.n)
                    brute = brute_force_pbm(g, part, ts)
                    if t >= 4 * k - 3:
                        m = extract_pbm_4k(g, pairs)
                        assert is_parity_breaking(m, g, part, ts)
                        assert brute is not None
                        checked_4k += 1
                    terminals = ts.terminals
                    independent = all(not g.has_edge(u, v)
                                      for u, v in combinations(sorted(terminals), 2))
                    if independent and t >= 2 * k - 1:
                        m = extract_pbm_independent(g, pairs)
                        assert is_parity_breaking(m, g, part, ts)
                        assert brute is not None
                        checked_ind += 1
        assert checked_4k > 100 and checked_ind > 100
        assert dead_branch_events() == ()

    def test_sampled_against_brute_force(self, rng):
        reset_dead_branch_log()
        hits = 0
        for trial in range(600):
            n = rng.randint(4, 8)
            g = random_graph(rng, n, rng.choice([0.4, 0.6, 0.8]))
            k = rng.choice([1, 2])
            if n < 2 * k:
                continue
            verts = rng.sample(range(n), 2 * k)
            pairs = [(verts[2 * i], verts[2 * i + 1]) for i in range(k)]
            ts = TerminalSystem.make(pairs, {i: ODD for i in range(1, k + 1)})
            part = trivial(n)
            if tau(g) >= 4 * k - 3:
                m = extract_pbm_4k(g, pairs)
                assert is_parity_breaking(m, g, part, ts)
                assert brute_force_pbm(g, part, ts) is not None
                hits += 1
        assert hits > 50
        assert dead_branch_events() == ()


class TestBruteForce:
    def test_absent_when_within_graph_is_empty(self):
        g = complete_bipartite(3, 3)
        part = Partition(frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        ts = TerminalSystem.make([(0, 3)], {1: ODD})
        assert brute_force_pbm(g, part, ts) is None

    def test_respects_parity_subset(self):
        g = complete_graph(6)
        ts = TerminalSystem.make([(0, 1), (2, 3)], {2: ODD})
        m = brute_force_pbm(g, trivial(6), ts)
        assert m is not None and set(m.indexed()) == {2}


class TestEquivalenceCheck:
    def test_agrees_across_all_nice_partitions(self, rng):
        for trial in range(25):
            n = rng.randint(4, 7)
            g = random_graph(rng, n, 0.5)
            verts = rng.sample(range(n), 2)
            ts = TerminalSystem.make([tuple(sorted(verts))], {1: ODD})
            assert nice_partition_equivalence_check(g, ts)

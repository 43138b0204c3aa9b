"""Extracting a parity-breaking matching two ways.

A matching indexed by terminal pairs breaks parity when each edge lies in
the within-side graph and avoids every other pair's terminals.  The two
extractors trade preconditions: one wants a large vertex cover number, the
other an independent terminal set and a smaller one.  Both answers are
cross-checked against the exhaustive search.
"""

from oddpack import (
    ODD,
    Partition,
    TerminalSystem,
    brute_force_pbm,
    complete_bipartite,
    complete_graph,
    extract_pbm_4k,
    extract_pbm_independent,
    is_parity_breaking,
)


def show(tag, g, pairs, extractor):
    k = len(pairs)
    ts = TerminalSystem.make(pairs, {i: ODD for i in range(1, k + 1)})
    trivial = Partition(frozenset(range(g.n)), frozenset())
    m = extractor(g, pairs)
    ok = is_parity_breaking(m, g, trivial, ts)
    agree = brute_force_pbm(g, trivial, ts) is not None
    print(f"{tag}: {m.indexed()} valid={ok} exhaustive-agrees={agree}")


if __name__ == "__main__":
    # tau(K9) = 8 >= 4*2 - 3
    show("4k rule on K9, two pairs", complete_graph(9),
         [(0, 1), (2, 3)], extract_pbm_4k)
    # all four terminals on one side of K_{4,4} form an independent set
    g = complete_bipartite(4, 4)
    show("independent rule on K44", g, [(0, 1), (2, 3)],
         extract_pbm_independent)

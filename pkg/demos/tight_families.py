"""The two generated families that sit exactly on the bounds.

The first family carries every precondition of the parity linkage theorems
except high connectivity and admits no odd parity linkage; its minimum odd
cycle cover is exactly 4k - 4.  The second pins the bipartite-making cover
bound 2k - 2 + tau at the largest value a k-subset of designated vertices
allows, while two disjoint rooted odd cycles stay impossible.
"""

from oddpack import (
    find_parity_linkage,
    gen_non_parity_linked,
    gen_tight_cover,
    min_odd_cycle_cover,
    pack_odd_s_cycles,
    tau,
)

if __name__ == "__main__":
    g, ts = gen_non_parity_linked(2, 6)
    cover = min_odd_cycle_cover(g)
    print(f"non-parity-linked, k=2, sides of 6: {g.n} vertices, "
          f"{g.edge_count} edges")
    print(f"  pairs {ts.pairs}, demands {ts.parity_demands}")
    print(f"  min odd cycle cover {sorted(cover.members)} "
          f"(4k-4 = {cover.size})")
    print(f"  parity linkage: {find_parity_linkage(g, ts)}")

    for tv in (1, 2):
        g, s = gen_tight_cover(2, tv, 6)
        cover = min_odd_cycle_cover(g)
        print(f"tight cover, k=2, tau={tv}: designated {sorted(s)}, "
              f"tau within designated = {tau(g.induced(s).graph)}")
        print(f"  two disjoint rooted odd cycles: "
              f"{pack_odd_s_cycles(g, s, 2)}")
        print(f"  bipartite-making cover {sorted(cover.members)} "
              f"(2k-2+tau-1 = {cover.size})")

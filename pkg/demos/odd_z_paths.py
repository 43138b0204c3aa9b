"""Packing odd-length paths through a designated vertex set.

A designated path meets the set Z only at its two endpoints.  For any ell
the graph either carries ell disjoint odd designated paths or a hitting
set of at most 2 ell - 2 vertices kills them all; the solver proves the
branch it returns.
"""

from oddpack import Graph, complete_bipartite, odd_z_path_dichotomy


def show(tag, g, z, ell):
    out = odd_z_path_dichotomy(g, z, ell)
    if out.kind == "packing":
        print(f"{tag}: packed {[p.vertices for p in out.paths]}")
    else:
        print(f"{tag}: hitting set {sorted(out.hitting_set)} "
              f"(bound {out.bound})")


if __name__ == "__main__":
    # two designated vertices per side of K_{3,3}: the cross edges are
    # disjoint odd paths already
    show("K33, ell=2", complete_bipartite(3, 3), [0, 1, 3, 4], 2)

    # every odd path between the designated ends runs through vertex 3
    funnel = Graph.from_edges(5, [(0, 2), (2, 3), (1, 3), (0, 4), (3, 4)])
    show("funnel, ell=2", funnel, [0, 1], 2)
    show("funnel, ell=1", funnel, [0, 1], 1)

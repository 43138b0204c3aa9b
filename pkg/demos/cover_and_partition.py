"""Minimum odd cycle covers and the partition they induce.

Removing a minimum cover leaves a bipartite remainder; pushing each cover
vertex to the side holding the minority of its neighbors yields a partition
whose within-side graph has vertex cover number exactly the cover size.
"""

from oddpack import (
    complete_graph,
    cycle_graph,
    min_odd_cycle_cover,
    nice_partition,
    tau,
    validate_nice_partition,
    within_graph,
)


def report(name, g):
    cover = min_odd_cycle_cover(g)
    np_ = nice_partition(g, cover, trusted=True)
    validate_nice_partition(g, np_)
    w = within_graph(g, np_.partition)
    print(f"{name}: cover {sorted(cover.members)} (size {cover.size})")
    print(f"  side A {sorted(np_.partition.part_a)}, "
          f"side B {sorted(np_.partition.part_b)}")
    print(f"  within-side graph has {w.edge_count} edges, "
          f"cover number {tau(w)} == {cover.size}")


if __name__ == "__main__":
    report("C5", cycle_graph(5))
    report("K5", complete_graph(5))
    report("K7", complete_graph(7))

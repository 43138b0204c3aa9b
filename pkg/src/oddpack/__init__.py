"""Packing and covering toolkit for odd cycles through designated vertices.

Desk-scale exact solvers with verified certificates: minimum odd cycle
covers (plain, rooted, bipartite-making), canonical cover-induced
partitions, parity breaking matchings, parity-constrained linkages, odd
cycle packings, and the pack-or-cover drivers that tie them together.
Every solver is exhaustive within an explicit search budget; nothing here
is heuristic.
"""

from .covers import (
    OddCycleCover,
    OddSCycleCover,
    enumerate_minimum_covers,
    min_odd_cycle_cover,
    min_odd_s_cycle_cover,
    verify_bipartite_cover,
    verify_cover,
)
from .dimacs import DimacsError, format_dimacs, parse_dimacs
from .families import (
    FAMILIES,
    InstanceSpec,
    gen_non_parity_linked,
    gen_tight_cover,
    sample_random,
)
from .graphs import (
    Bipartition,
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
from .linkage import (
    DichotomyViolationError,
    Linkage,
    ZPath,
    ZPathDichotomy,
    assemble_parity_paths,
    check_z_path,
    dense_subgraph,
    find_linkage,
    find_parity_linkage,
    odd_z_path_dichotomy,
    validate_linkage,
)
from .packing import (
    CyclePacking,
    DichotomyResult,
    MatchingFormResult,
    cycles_from_twin_linkage,
    dichotomy_bipartite_cover,
    dichotomy_matching_form,
    dichotomy_s_cycles,
    greedy_triangle_packing,
    pack_odd_s_cycles,
    tau_k,
    twin_reduction,
    validate_packing,
)
from .partitions import (
    Matching,
    NicePartition,
    Partition,
    enumerate_nice_partitions,
    is_tau_critical,
    konig_matching,
    maximal_matching_cover_bound,
    maximum_matching_size,
    minimum_vertex_cover,
    nice_partition,
    tau,
    validate_nice_partition,
    within_graph,
)
from .pbm import (
    EVEN,
    ODD,
    TerminalSystem,
    brute_force_pbm,
    dead_branch_events,
    extract_pbm_4k,
    extract_pbm_independent,
    is_parity_breaking,
    nice_partition_equivalence_check,
    reset_dead_branch_log,
)
from .search import BudgetExceededError, SearchBudget, minimum_hitting_set
from .sweeps import SweepReport, run_sweep, suite_names

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BudgetExceededError",
    "Cycle",
    "CyclePacking",
    "DichotomyResult",
    "DichotomyViolationError",
    "DimacsError",
    "EVEN",
    "FAMILIES",
    "Graph",
    "InstanceSpec",
    "Linkage",
    "Matching",
    "MatchingFormResult",
    "NicePartition",
    "ODD",
    "OddCycleCover",
    "OddSCycleCover",
    "Partition",
    "SearchBudget",
    "SweepReport",
    "TerminalSystem",
    "ZPath",
    "ZPathDichotomy",
    "assemble_parity_paths",
    "brute_force_pbm",
    "check_cycle",
    "check_z_path",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "cycles_from_twin_linkage",
    "dead_branch_events",
    "dense_subgraph",
    "dichotomy_bipartite_cover",
    "dichotomy_matching_form",
    "dichotomy_s_cycles",
    "empty_graph",
    "enumerate_minimum_covers",
    "enumerate_nice_partitions",
    "extract_pbm_4k",
    "extract_pbm_independent",
    "find_linkage",
    "find_odd_s_cycle",
    "find_parity_linkage",
    "format_dimacs",
    "gen_non_parity_linked",
    "gen_tight_cover",
    "greedy_triangle_packing",
    "is_bipartite",
    "is_k_connected",
    "is_parity_breaking",
    "is_tau_critical",
    "konig_matching",
    "maximal_matching_cover_bound",
    "maximum_matching_size",
    "min_odd_cycle_cover",
    "min_odd_s_cycle_cover",
    "minimum_hitting_set",
    "minimum_vertex_cover",
    "nice_partition",
    "nice_partition_equivalence_check",
    "odd_z_path_dichotomy",
    "pack_odd_s_cycles",
    "parse_dimacs",
    "path_graph",
    "reset_dead_branch_log",
    "run_sweep",
    "sample_random",
    "suite_names",
    "tau",
    "tau_k",
    "twin_reduction",
    "validate_linkage",
    "validate_nice_partition",
    "validate_packing",
    "verify_bipartite_cover",
    "verify_cover",
    "vertex_connectivity",
    "within_graph",
]

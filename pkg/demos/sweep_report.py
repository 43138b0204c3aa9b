"""Driving a verification sweep from Python.

Each registered suite grinds a grid of instances through a checker and
reports canonical per-instance records; counterexamples surface in their
own list.  The same machinery backs the ``oddpack sweep`` subcommand.
"""

from oddpack import SearchBudget, run_sweep, suite_names

if __name__ == "__main__":
    print(f"registered suites: {', '.join(suite_names())}")

    report = run_sweep(
        "observation2",
        budget=SearchBudget(max_nodes=2_000_000, max_seconds=60.0),
        overrides={"max_n": 4, "samples": 50, "sample_n": 7},
    )
    print(f"observation2: {report.summary}")
    print(f"counterexamples: {len(report.counterexamples)}")
    for record in report.records[:3]:
        print(f"  {record}")

#!/usr/bin/env python3
"""Performance profiling script for hypercert."""

import cProfile
import pstats
from typing import Callable

from hypercert.cases import enumerate_case_candidates, step2_verify
from hypercert.oracle import search_configurations
from hypercert.realize import extremal_construct, extremal_verify


def profile(label: str, func: Callable[[], object]) -> None:
    """Run ``func`` under cProfile and print the top entries."""
    profiler = cProfile.Profile()
    profiler.runcall(func)
    stats = pstats.Stats(profiler)
    stats.sort_stats(pstats.SortKey.TIME)
    print(f"\n{label} Performance:")
    stats.print_stats(20)  # Show top 20 time-consuming operations


def main() -> None:
    """Run performance profiling on all major operations."""
    profile("Step 2 at m=4", lambda: step2_verify(4))
    profile("Case Candidate Enumeration", enumerate_case_candidates)

    def _extremal() -> None:
        hypergraph, family = extremal_construct("complete")
        extremal_verify(hypergraph, family)

    profile("Extremal Verification", _extremal)
    profile("Oracle n=6 m=2", lambda: search_configurations(6, 2))


if __name__ == "__main__":
    main()

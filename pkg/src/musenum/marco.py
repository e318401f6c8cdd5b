"""Flat seed-and-shrink MUS enumeration baseline.

Seeds are always maximal undetermined subsets of the whole universe and the
shrink never receives critical constraints; everything else (map, oracle,
shrink procedure, statistics, budgets) is shared with the recursive
enumerator, so check-count comparisons isolate the seed-selection strategy.
"""

from __future__ import annotations

from .core import ConstraintSet, Instance
from .session import BudgetReached, EnumerationResult, RemusConfig, Session


def enumerate_marco(instance: Instance, config: RemusConfig | None = None, sink=None) -> EnumerationResult:
    """Enumerate MUSes by repeatedly shrinking maximal undetermined subsets."""
    config = config or RemusConfig()
    session = Session(instance, config, sink)
    session.require_unsat_instance()
    no_criticals = ConstraintSet.empty(instance.n)
    complete = True
    try:
        while True:
            session.check_budget()
            s_max = session.map.max_unexplored_subset_of(session.full)
            if s_max is None:
                break
            if session.oracle.is_sat(s_max):
                # maximal undetermined + satisfiable == maximal satisfiable
                session.map.block_down(s_max)
            else:
                mus, discoveries = session.run_shrink(s_max, no_criticals)
                session.emit(mus, 0)
                session.check_budget()
                for sat_set in discoveries:
                    session.map.block_down(sat_set)
                session.map.block_up(mus)
                session.map.block_down(mus)
    except BudgetReached:
        complete = False
    return EnumerationResult(session.records, session.stats, complete, session.map.block_log)

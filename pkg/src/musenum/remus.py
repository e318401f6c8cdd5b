"""Recursive online MUS enumeration with MCS-based critical mining.

Each found MUS restricts the next seed search to a set strictly between the
MUS and its seed, so successive seeds shrink; satisfiable maximal subsets
yield their correction sets, whose members are critical constraints that
speed up later shrinks. The map of undetermined subsets is global across all
recursion frames, so nothing is ever examined twice.
"""

from __future__ import annotations

import math
import sys

from .core import ConstraintSet, Instance, PreconditionError
from .session import BudgetReached, EnumerationResult, RemusConfig, Session

# floor() on the float product; the epsilon undoes binary representation
# error when the true product is integral
_FLOOR_EPS = 1e-9


def choose_p(s_mus: ConstraintSet, s_max: ConstraintSet, factor: float) -> ConstraintSet | None:
    """Pick the reduced search space strictly between a found MUS and its seed.

    The target cardinality is floor(factor * |s_max|); returns None when that
    cannot strictly contain the MUS. The extra members are the lowest-index
    constraints of s_max missing from s_mus, keeping traces reproducible.
    """
    if not s_mus.is_subset_of(s_max) or s_mus == s_max:
        raise PreconditionError("s_mus must be a proper subset of s_max")
    target = math.floor(factor * len(s_max) + _FLOOR_EPS)
    if target <= len(s_mus):
        return None
    p = s_mus
    for i in s_max - s_mus:
        if len(p) >= target:
            break
        p = p.add(i)
    return p


def enumerate_remus(instance: Instance, config: RemusConfig | None = None, sink=None) -> EnumerationResult:
    """Run the recursive enumerator to completion or budget exhaustion.

    Every MUS is handed to `sink` the moment it is found; the result also
    carries all records plus the check statistics. Raises
    InstanceSatisfiableError when the full set is satisfiable.
    """
    config = config or RemusConfig()
    session = Session(instance, config, sink)
    session.require_unsat_instance()
    # frame depth is bounded by roughly the universe size
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * instance.n + 1000))
    complete = True
    try:
        _find_muses(session, session.full, ConstraintSet.empty(instance.n), 0)
    except BudgetReached:
        complete = False
    return EnumerationResult(session.records, session.stats, complete, session.map.block_log)


def _find_muses(session: Session, s: ConstraintSet, criticals: ConstraintSet, depth: int) -> None:
    """Emit every not-yet-emitted MUS of the unsatisfiable set s.

    criticals must be critical constraints for s; the set is extended locally
    when a singleton correction set is found, and recursive calls receive
    fresh extended copies.
    """
    while True:
        session.check_budget()
        s_max = session.map.max_unexplored_subset_of(s)
        if s_max is None:
            return
        if session.oracle.is_sat(s_max):
            session.map.block_down(s_max)
            s_mcs = s - s_max
            if len(s_mcs) == 1:
                criticals = criticals | s_mcs
            else:
                # each c is critical for s_max + {c}; the shared map lets later
                # siblings skip whatever earlier ones already resolved
                for c in s_mcs:
                    _find_muses(session, s_max.add(c), criticals.add(c), depth + 1)
        else:
            mus, discoveries = session.run_shrink(s_max, criticals)
            session.emit(mus, depth)
            session.check_budget()
            for sat_set in discoveries:
                session.map.block_down(sat_set)
            session.map.block_up(mus)
            session.map.block_down(mus)
            if mus != s_max:
                p = choose_p(mus, s_max, session.config.reduction_factor)
                if p is not None:
                    _find_muses(session, p, criticals, depth + 1)

"""Shared enumeration session: configuration, budgets, stats wiring, emission."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    CheckStats,
    ConstraintSet,
    Instance,
    InstanceSatisfiableError,
    MusRecord,
    PreconditionError,
    ShrinkCall,
)
from .shrink import ShrinkConfig, shrink
from .unexplored import UnexploredMap


@dataclass
class RemusConfig:
    """Budgets and tuning knobs honoured by both enumeration algorithms.

    reduction_factor sizes the reduced search space after each found MUS (only
    the recursive algorithm uses it). All budgets are optional; check_limit is
    a deterministic cap on cumulative oracle checks, useful where wall-clock
    limits would make runs irreproducible.
    """

    reduction_factor: float = 0.9
    mus_limit: int | None = None
    time_limit: float | None = None
    check_limit: int | None = None
    shrink_cfg: ShrinkConfig = field(default_factory=ShrinkConfig)

    def __post_init__(self):
        if not 0.0 < self.reduction_factor < 1.0:
            raise PreconditionError("reduction_factor must lie strictly between 0 and 1")
        if self.mus_limit is not None and self.mus_limit < 1:
            raise PreconditionError("mus_limit must be at least 1")
        if self.time_limit is not None and self.time_limit < 0:
            raise PreconditionError("time_limit must be non-negative")
        if self.check_limit is not None and self.check_limit < 0:
            raise PreconditionError("check_limit must be non-negative")


@dataclass
class EnumerationResult:
    """Everything a finished (or budget-stopped) enumeration run produced.

    block_log is the map's chronological ("down"|"up", subset mask) record;
    replaying it against the oracle is the standard soundness check.
    """

    records: list[MusRecord]
    stats: CheckStats
    complete: bool
    block_log: list[tuple[str, int]] = field(default_factory=list)

    @property
    def muses(self) -> list[ConstraintSet]:
        return [record.mus for record in self.records]


class BudgetReached(Exception):
    """Internal stop signal: a budget expired; all emitted state stays valid."""


class Session:
    """Single-threaded enumeration state: one map, one oracle, one stats block."""

    def __init__(self, instance: Instance, config: RemusConfig, sink=None):
        self.oracle = instance.oracle
        self.config = config
        self.sink = sink
        self.map = UnexploredMap(instance.n)
        self.stats = CheckStats()
        self.records: list[MusRecord] = []
        self.full = ConstraintSet.full(instance.n)
        self.oracle.stats = self.stats
        self.map.stats = self.stats

    def require_unsat_instance(self) -> None:
        if self.oracle.is_sat(self.full):
            raise InstanceSatisfiableError("the full constraint set is satisfiable")

    def check_budget(self) -> None:
        cfg = self.config
        if cfg.time_limit is not None and self.stats.elapsed() >= cfg.time_limit:
            raise BudgetReached
        if cfg.check_limit is not None and self.stats.oracle_checks >= cfg.check_limit:
            raise BudgetReached

    def run_shrink(self, seed: ConstraintSet, criticals: ConstraintSet):
        self.check_budget()
        before = self.stats.oracle_checks
        mus, discoveries = shrink(self.oracle, seed, criticals, self.config.shrink_cfg)
        self.stats.shrink_log.append(
            ShrinkCall(seed, criticals, self.stats.oracle_checks - before)
        )
        return mus, discoveries

    def emit(self, mus: ConstraintSet, depth: int) -> None:
        snapshot = self.stats.snapshot(depth)
        record = MusRecord(snapshot.ordinal, mus, snapshot, depth)
        self.records.append(record)
        if self.sink is not None:
            self.sink(record)
        limit = self.config.mus_limit
        if limit is not None and self.stats.muses_emitted >= limit:
            raise BudgetReached

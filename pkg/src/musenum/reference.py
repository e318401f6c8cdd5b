"""Explicit reference implementations and seeded generators used by the test suites."""

from __future__ import annotations

import random

from .core import PreconditionError
from .oracles import TableOracle
from .unexplored import UnexploredMap

REFERENCE_MAX_N = 12


def explicit_map_reference(n: int, block_log) -> set[int]:
    """Explicitly maintained mirror of the symbolic unexplored map (n <= 12).

    block_log is a sequence of ("down"|"up", subset mask) pairs, as recorded
    by UnexploredMap.block_log. Returns the masks of all subsets the log
    leaves undetermined.
    """
    if n > REFERENCE_MAX_N:
        raise PreconditionError(f"explicit reference refused for n={n} > {REFERENCE_MAX_N}")
    alive = set(range(1 << n))
    for kind, mask in block_log:
        if kind == "down":
            alive = {m for m in alive if m & ~mask}
        elif kind == "up":
            alive = {m for m in alive if m & mask != mask}
        else:
            raise PreconditionError(f"unknown block kind {kind!r}")
    return alive


def enumerate_map_models(umap: UnexploredMap) -> set[int]:
    """All models of a map's clause set by direct clause evaluation (n <= 16)."""
    n = umap.n
    if n > 16:
        raise PreconditionError(f"model enumeration refused for n={n} > 16")
    positive: list[int] = []
    negative: list[int] = []
    for clause in umap.clauses:
        mask = 0
        for lit in clause:
            mask |= 1 << (abs(lit) - 1)
        if clause and clause[0] < 0:
            negative.append(mask)
        else:
            positive.append(mask)  # an empty clause lands here and kills all models
    models = set()
    for m in range(1 << n):
        if all(m & p for p in positive) and all(m & q != q for q in negative):
            models.add(m)
    return models


def random_antichain(n: int, rng: random.Random) -> list[int]:
    """Sample a non-empty antichain of non-empty subset masks over n constraints."""
    count = rng.randint(1, max(2, min(n, 5)))
    candidates = []
    for _ in range(count):
        size = rng.randint(1, n)
        candidates.append(sum(1 << i for i in rng.sample(range(n), size)))
    candidates.sort(key=lambda m: m.bit_count())
    kept: list[int] = []
    for mask in candidates:
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def table_from_antichain(n: int, antichain) -> TableOracle:
    """Monotone table whose unsatisfiable sets are the up-closure of the antichain.

    With a proper antichain the minimal unsatisfiable sets are exactly its
    members; an empty antichain yields the all-satisfiable table.
    """
    statuses = [not any(m & a == a for a in antichain) for m in range(1 << n)]
    return TableOracle(statuses)


def random_monotone_table(n: int, seed: int) -> TableOracle:
    """Seeded monotone table oracle with an unsatisfiable full set (1 <= n <= 12)."""
    if not 1 <= n <= REFERENCE_MAX_N:
        raise PreconditionError(f"n must lie in 1..{REFERENCE_MAX_N}")
    rng = random.Random(seed)
    return table_from_antichain(n, random_antichain(n, rng))


def random_cnf(num_vars: int, num_clauses: int, width: int = 3, seed: int = 0) -> list[list[int]]:
    """Seeded random CNF clause list; each clause uses `width` distinct variables."""
    if num_vars < 1 or num_clauses < 0 or width < 1:
        raise PreconditionError("invalid generator parameters")
    rng = random.Random(seed)
    actual_width = min(width, num_vars)
    clauses = []
    for _ in range(num_clauses):
        chosen = sorted(rng.sample(range(1, num_vars + 1), actual_width))
        clauses.append([v if rng.random() < 0.5 else -v for v in chosen])
    return clauses


def to_dimacs(num_vars: int, clauses) -> str:
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in clauses)
    return "\n".join(lines) + "\n"

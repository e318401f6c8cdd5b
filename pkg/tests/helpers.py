"""Frozen ground truth and helpers shared across the test suite."""

from musenum import ConstraintSet, TableOracle

# the four-constraint demo system over two variables:
#   c1 = a, c2 = not a, c3 = b, c4 = (not a or not b)
EXAMPLE1_DIMACS = "p cnf 2 4\n1 0\n-1 0\n2 0\n-1 -2 0\n"

# full subset status table of that system, keyed by bitstring whose leftmost
# character is constraint 1; True = satisfiable
EXAMPLE1_STATUSES = {
    "0000": True,
    "1000": True, "0100": True, "0010": True, "0001": True,
    "1100": False, "1010": True, "1001": True,
    "0110": True, "0101": True, "0011": True,
    "1110": False, "1101": False, "1011": False, "0111": True,
    "1111": False,
}

EXAMPLE1_MUSES = {"1100", "1011"}
EXAMPLE1_MSSES = {"1010", "1001", "0111"}
EXAMPLE1_MCSES = {"0110", "0101", "1000"}


def cs(bits: str) -> ConstraintSet:
    """ConstraintSet from a bitstring, leftmost character = constraint 1."""
    return ConstraintSet.from_bits(bits)


def bitsets(sets) -> set[str]:
    return {s.bits() for s in sets}


def example1_table() -> TableOracle:
    statuses = [None] * 16
    for bits, sat in EXAMPLE1_STATUSES.items():
        statuses[cs(bits).mask] = sat
    assert None not in statuses
    return TableOracle(statuses)

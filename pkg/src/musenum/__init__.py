"""Online enumeration of minimal unsatisfiable subsets with check accounting."""

from .core import (
    CheckStats,
    ConstraintSet,
    DimacsParseError,
    Instance,
    InstanceSatisfiableError,
    MonotonicityError,
    MusError,
    MusRecord,
    MusSnapshot,
    PreconditionError,
    ShrinkCall,
    UniverseMismatchError,
)
from .marco import enumerate_marco
from .oracles import (
    CnfOracle,
    SatOracle,
    TableOracle,
    bruteforce_all_muses,
    is_mus,
    parse_dimacs,
)
from .remus import choose_p, enumerate_remus
from .session import BudgetReached, EnumerationResult, RemusConfig
from .shrink import ShrinkConfig, shrink
from .unexplored import UnexploredMap

__version__ = "0.1.0"

__all__ = [
    "BudgetReached",
    "CheckStats",
    "CnfOracle",
    "ConstraintSet",
    "DimacsParseError",
    "EnumerationResult",
    "Instance",
    "InstanceSatisfiableError",
    "MonotonicityError",
    "MusError",
    "MusRecord",
    "MusSnapshot",
    "PreconditionError",
    "RemusConfig",
    "SatOracle",
    "ShrinkCall",
    "ShrinkConfig",
    "TableOracle",
    "UniverseMismatchError",
    "UnexploredMap",
    "bruteforce_all_muses",
    "choose_p",
    "enumerate_marco",
    "enumerate_remus",
    "is_mus",
    "parse_dimacs",
    "shrink",
]

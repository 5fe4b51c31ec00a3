"""Decision procedures for finite semirings and semimodules."""

from .core import (
    CongruencePartition,
    Enumeration,
    LinearMap,
    Limits,
    SemimoduleTable,
    SemiringTable,
    SubStructure,
    validate_semimodule,
    validate_semiring,
)

__all__ = [
    "CongruencePartition",
    "Enumeration",
    "LinearMap",
    "Limits",
    "SemimoduleTable",
    "SemiringTable",
    "SubStructure",
    "validate_semimodule",
    "validate_semiring",
]

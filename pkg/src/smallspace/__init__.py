"""Small-space parameterized graph algorithms under a metered workspace."""

from .core import (
    Budget,
    ContractViolation,
    KernelSink,
    ParseError,
    ReadOnlyGraph,
    SetFamilyView,
    SpaceMeter,
    Verdict,
    VerdictKind,
    alloc,
    kernelize_via_budget,
    run_with_budget,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "ContractViolation",
    "KernelSink",
    "ParseError",
    "ReadOnlyGraph",
    "SetFamilyView",
    "SpaceMeter",
    "Verdict",
    "VerdictKind",
    "alloc",
    "kernelize_via_budget",
    "run_with_budget",
]

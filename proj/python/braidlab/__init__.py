"""Braid groups of graphs: presentations, RAAG constructions and Massey certificates."""

from ._core import (
    BudgetExceeded,
    Error,
    Graph,
    InvariantViolation,
    OutOfScope,
    ParseError,
    PreconditionError,
    analyze,
    data_dir,
    detect_nuclei,
    homology,
    is_cactus,
    load_graph,
    massey,
    parse_graph,
    presentation,
    verify_certificate,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "Graph",
    "InvariantViolation",
    "OutOfScope",
    "ParseError",
    "PreconditionError",
    "analyze",
    "data_dir",
    "detect_nuclei",
    "homology",
    "is_cactus",
    "load_graph",
    "massey",
    "parse_graph",
    "presentation",
    "verify_certificate",
]

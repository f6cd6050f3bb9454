"""Fully dynamic reachability with O(1) queries.

Insertion centers keep decremental In/Out reachability trees; a witness
matrix counts how many centers certify each pair.
"""

from .errors import (
    CenterViolation,
    CheckFailure,
    InvalidArgument,
    InvariantViolation,
    ParseError,
    ReachError,
    ValidationError,
)
from .oracle import CenterRecord, Counters, DynamicReachability
from .reachtree import DeltaReport, Direction, ReachTree, SccNode, build_tree
from .store import EdgeListView, EdgeRecord, VersionedEdgeStore, VersionView
from .witness import WitnessMatrix

__version__ = "0.1.0"

__all__ = [
    "CenterRecord",
    "CenterViolation",
    "CheckFailure",
    "Counters",
    "DeltaReport",
    "Direction",
    "DynamicReachability",
    "EdgeListView",
    "EdgeRecord",
    "InvalidArgument",
    "InvariantViolation",
    "ParseError",
    "ReachError",
    "ReachTree",
    "SccNode",
    "ValidationError",
    "VersionView",
    "VersionedEdgeStore",
    "WitnessMatrix",
    "build_tree",
]

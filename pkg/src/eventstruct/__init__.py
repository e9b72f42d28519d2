"""Enumeration and counting of labeled preorders, partial orders and event structures."""

from .conflicts import (
    PivotResult,
    allowed_conflicts,
    choose_pivot,
    choose_pivot_first,
    count_allowed_conflicts,
    generate_conflicts,
)
from .es_enum import (
    CountRow,
    CountTable,
    count_event_structures,
    counts_up_to,
    enumerate_event_structures,
)
from .order_enum import (
    ExtensionPair,
    count_posets,
    count_preorders,
    enumerate_posets,
    enumerate_preorders,
    enumerate_strict_posets,
    enumerate_strict_preorders,
    valid_extensions,
)
from .relations import BoolMatrix, EventStructure, Rel

__all__ = [
    "BoolMatrix",
    "CountRow",
    "CountTable",
    "EventStructure",
    "ExtensionPair",
    "PivotResult",
    "Rel",
    "allowed_conflicts",
    "choose_pivot",
    "choose_pivot_first",
    "count_allowed_conflicts",
    "count_event_structures",
    "count_posets",
    "count_preorders",
    "counts_up_to",
    "enumerate_event_structures",
    "enumerate_posets",
    "enumerate_preorders",
    "enumerate_strict_posets",
    "enumerate_strict_preorders",
    "generate_conflicts",
    "valid_extensions",
]

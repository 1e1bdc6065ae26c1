"""Symbols of unipotent characters and the combinatorics of the finite theta correspondence."""

from .correspond import (
    CorrespondenceTable,
    PeakDiagnostics,
    find_k0,
    first_occurrence,
    overline_theta,
    overline_theta_family,
    theta_k_map,
    theta_zero_closed,
    underline_theta,
)
from .degree import ord_closed, ord_oracle
from .partitions import BiPartition, Partition
from .symbols import GroupTag, Symbol, parse_group, parse_symbol, upsilon, upsilon_inv
from .theta import DualPair, parse_pair, related, theta_set

__all__ = [
    "BiPartition",
    "CorrespondenceTable",
    "DualPair",
    "GroupTag",
    "Partition",
    "PeakDiagnostics",
    "Symbol",
    "find_k0",
    "first_occurrence",
    "ord_closed",
    "ord_oracle",
    "overline_theta",
    "overline_theta_family",
    "parse_group",
    "parse_pair",
    "parse_symbol",
    "related",
    "theta_k_map",
    "theta_set",
    "theta_zero_closed",
    "underline_theta",
    "upsilon",
    "upsilon_inv",
]

"""Spanning tree reconfiguration under degree and diameter constraints."""

from ._core import (
    CapExceeded,
    Graph,
    center_graph,
    decide,
    degree_aux_edge,
    hampath,
    hampath_to_rst,
    is_spanning_tree,
    ncl_to_rst,
    oracle_decide,
    sequence,
    spanning_trees,
    tree_diameter,
    validate_sequence,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "center_graph",
    "decide",
    "degree_aux_edge",
    "hampath",
    "hampath_to_rst",
    "is_spanning_tree",
    "ncl_to_rst",
    "oracle_decide",
    "sequence",
    "spanning_trees",
    "tree_diameter",
    "validate_sequence",
]

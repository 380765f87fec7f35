"""Certificates, constructions and exhaustive search for ordered Ramsey problems."""

from ._ordram import (
    Certificate,
    Coloring,
    OrderedRamseyError,
    __version__,
    classify_pair,
    construct,
    construction_names,
    dense_nonseparated_subgraph,
    draw_edges_svg,
    draw_svg,
    find_matching,
    find_spanning_tree,
    kneser_chromatic_number,
    kneser_criticality,
    kneser_edges,
    kneser_vertices,
    m2_from_edge_coloring,
    max_matching,
    max_subgraph,
    max_subtree,
    ramsey_number,
    random_coloring,
    validate,
    verify_conjecture,
)

__all__ = [
    "Certificate",
    "Coloring",
    "OrderedRamseyError",
    "__version__",
    "classify_pair",
    "construct",
    "construction_names",
    "dense_nonseparated_subgraph",
    "draw_edges_svg",
    "draw_svg",
    "find_matching",
    "find_spanning_tree",
    "kneser_chromatic_number",
    "kneser_criticality",
    "kneser_edges",
    "kneser_vertices",
    "m2_from_edge_coloring",
    "max_matching",
    "max_subgraph",
    "max_subtree",
    "ramsey_number",
    "random_coloring",
    "validate",
    "verify_conjecture",
]

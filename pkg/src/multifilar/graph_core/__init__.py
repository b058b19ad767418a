"""Regular graphs: validation, graph6, canonical forms, constructions, enumeration."""

from .canonical import canonical_form, canonical_graph, canonical_labeling, graph_id, refine
from .constructions import by_name, complete_bipartite, k4, petersen, prism, string_of_diamonds
from .enumerate import check_parameters, enumerate_regular, generate_regular
from .graph import Graph, GraphFamily, Provenance, from_edges, validate
from .graph6 import graph6_decode, graph6_encode, read_graph6, write_graph6

__all__ = [
    "Graph",
    "GraphFamily",
    "Provenance",
    "by_name",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "check_parameters",
    "complete_bipartite",
    "enumerate_regular",
    "from_edges",
    "generate_regular",
    "graph6_decode",
    "graph6_encode",
    "graph_id",
    "k4",
    "petersen",
    "prism",
    "read_graph6",
    "refine",
    "string_of_diamonds",
    "validate",
    "write_graph6",
]

"""Gallai graphs, Gallai-simplicial complexes, and f-ideal certification."""

from .complex import (
    SimplicialComplex,
    dimension,
    enumerate_faces,
    euler_characteristic,
    f_vector,
    is_pure,
    make_complex,
)
from .errors import GallaiError
from .gallai import gallai, gallai_complex, gallai_indices, uncovered_vertices
from .graph import Graph, adjacent_edges, find_isomorphism, is_isomorphic, make_graph, relabel, spans_triangle
from .ideal import (
    FIdealReport,
    MonomialIdeal,
    edge_ideal,
    facet_complex,
    facet_ideal,
    is_f_gallai,
    is_f_graph,
    is_f_ideal,
    make_ideal,
    nonface_complex,
    nonface_ideal,
)

__all__ = [
    "FIdealReport",
    "GallaiError",
    "Graph",
    "MonomialIdeal",
    "SimplicialComplex",
    "adjacent_edges",
    "dimension",
    "edge_ideal",
    "enumerate_faces",
    "euler_characteristic",
    "f_vector",
    "facet_complex",
    "facet_ideal",
    "find_isomorphism",
    "gallai",
    "gallai_complex",
    "gallai_indices",
    "is_f_gallai",
    "is_f_graph",
    "is_f_ideal",
    "is_isomorphic",
    "is_pure",
    "make_complex",
    "make_graph",
    "make_ideal",
    "nonface_complex",
    "nonface_ideal",
    "relabel",
    "spans_triangle",
    "uncovered_vertices",
]

"""Independent domination polynomials of finite graphs."""

from .algorithms import (
    ALGORITHMS,
    BOUNDS,
    RecursiveEngine,
    enumerate_essential_sets,
    enumerate_mids,
    id_brute_force,
    id_coefficient_formula,
    id_essential_formula,
    id_inclusion_exclusion,
    id_recursive,
    independence_polynomial,
)
from .closed_forms import compose, id_family
from .errors import GraphError, GraphParseError, IdPolyError, LoopedGraphError, SizeBoundError
from .families import FamilySpec, generate
from .graph import Graph, parse_edge_list, serialize_edge_list
from .polynomial import Polynomial
from .verify import Report, verify_identity

__all__ = [
    "ALGORITHMS",
    "BOUNDS",
    "FamilySpec",
    "Graph",
    "GraphError",
    "GraphParseError",
    "IdPolyError",
    "LoopedGraphError",
    "Polynomial",
    "RecursiveEngine",
    "Report",
    "SizeBoundError",
    "compose",
    "enumerate_essential_sets",
    "enumerate_mids",
    "generate",
    "id_brute_force",
    "id_coefficient_formula",
    "id_essential_formula",
    "id_family",
    "id_inclusion_exclusion",
    "id_recursive",
    "independence_polynomial",
    "parse_edge_list",
    "serialize_edge_list",
    "verify_identity",
]

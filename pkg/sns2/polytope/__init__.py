from sns2.polytope.newton import (
    Direction,
    MixedVerticesCertificate,
    NewtonPolytope,
    VertexTerm,
    face_polynomial,
    mixed_vertices,
    mixed_vertices_certificate,
    newton_polytope,
    separating_direction,
    vertex_terms,
)
from sns2.polytope.simplex import SimplexResult, SimplexStatus, exact_simplex
from sns2.polytope.witness import Point, WitnessPair, indefiniteness_witness, random_positive_point

__all__ = (
    "Direction",
    "MixedVerticesCertificate",
    "NewtonPolytope",
    "Point",
    "SimplexResult",
    "SimplexStatus",
    "VertexTerm",
    "WitnessPair",
    "exact_simplex",
    "face_polynomial",
    "indefiniteness_witness",
    "mixed_vertices",
    "mixed_vertices_certificate",
    "newton_polytope",
    "random_positive_point",
    "separating_direction",
    "vertex_terms",
)

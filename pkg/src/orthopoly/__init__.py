"""Convex polygons with fixed exterior angles as hyperbolic orthoschemes."""
from .angles import Angle, AngleList, angles_from_slopes, canonicalize, subset_sum_pi, validate
from .census import dm_table, rational_search, reproduce_table
from .cone_manifold import classify, double_cover_components, stratum_angle, strata
from .errors import GeometryError
from .hermitian import embed, embedding_residual, hermitian_matrix, unfold_double
from .linalg import Signature, signature
from .mixed_area import edge_lengths, gram_matrix, kernel_basis, minkowski_defect, mixed_area
from .orthoscheme import (angles_from_gram, classify_type, coxeter_check, cross_ratio_angle,
                          facet_relations, is_compact)

__all__ = [
    "Angle", "AngleList", "GeometryError", "Signature",
    "angles_from_gram", "angles_from_slopes", "canonicalize", "classify", "classify_type",
    "coxeter_check", "cross_ratio_angle", "dm_table", "double_cover_components",
    "edge_lengths", "embed", "embedding_residual", "facet_relations", "gram_matrix",
    "hermitian_matrix", "is_compact", "kernel_basis", "minkowski_defect", "mixed_area",
    "rational_search", "reproduce_table", "signature", "strata", "stratum_angle",
    "subset_sum_pi", "unfold_double", "validate",
]
__version__ = "0.1.0"

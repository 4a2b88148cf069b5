"""Exact Betti numbers, projective dimension and regularity of path ideals.

The package computes the N-graded Betti numbers of path ideals of
cycles and lines two ways: closed-form/combinatorial counting, and a
brute-force Hochster-style enumeration whose homology ranks come from
exact boundary-matrix elimination.  Each route validates the other.
"""

from .complexes import (
    Face,
    SimplicialComplex,
    VertexSet,
    as_face,
    as_vertex_set,
    complement,
    cone,
    connected_components,
    faces_of_dim,
    induced_subcollection,
    make_complex,
)
from .homology import (
    GF2,
    GF32003,
    QQ,
    BoundaryMatrix,
    FieldSpec,
    HomologyVector,
    boundary_matrices,
    boundary_product,
    matrix_rank,
    reduced_homology_dims,
)
from .paths import (
    PathFamilySpec,
    RunDecompositionError,
    RunPlacement,
    RunSequence,
    build_path_complex,
    build_run_complement,
    enumerate_placements,
    run_decomposition,
    vertex_count_of_runs,
)
from .betti import (
    DEFAULT_MAX_SUBSET_BITS,
    MAX_SUBSET_BITS_ENV,
    BettiTable,
    HomologySummary,
    OracleCapError,
    betti_closed_cycle,
    betti_closed_line,
    betti_hochster,
    betti_top_degree,
    count_eligible,
    homology_cycle_complement,
    homology_run_sequence,
    nonzero_criterion,
    pd_reg,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BoundaryMatrix",
    "DEFAULT_MAX_SUBSET_BITS",
    "Face",
    "FieldSpec",
    "GF2",
    "GF32003",
    "HomologySummary",
    "HomologyVector",
    "MAX_SUBSET_BITS_ENV",
    "OracleCapError",
    "PathFamilySpec",
    "QQ",
    "RunDecompositionError",
    "RunPlacement",
    "RunSequence",
    "SimplicialComplex",
    "VertexSet",
    "as_face",
    "as_vertex_set",
    "betti_closed_cycle",
    "betti_closed_line",
    "betti_hochster",
    "betti_top_degree",
    "boundary_matrices",
    "boundary_product",
    "build_path_complex",
    "build_run_complement",
    "complement",
    "cone",
    "connected_components",
    "count_eligible",
    "enumerate_placements",
    "faces_of_dim",
    "homology_cycle_complement",
    "homology_run_sequence",
    "induced_subcollection",
    "make_complex",
    "matrix_rank",
    "nonzero_criterion",
    "pd_reg",
    "reduced_homology_dims",
    "run_decomposition",
    "vertex_count_of_runs",
]

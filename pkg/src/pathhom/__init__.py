"""Path homology of path complexes, their cell realizations, and checks of
the realization, Kunneth and Hochschild comparison isomorphisms."""

from .core import (BudgetExceeded, Digraph, PathComplex, VertexSet, boundary_faces, is_regular,
                   path_complex_of_digraph, random_digraph, validate_path_complex)
from .linalg import Q, Z, RingSpec, SparseMatrix, Zp, kernel_basis, rank, smith_normal_form
from .omega import OmegaComplex, build_omega, regular_boundary
from .homology import FgAbelianGroup, HomologyResult, cohomology_of_complex, homology_of_complex, reduced_homology
from .realization import build_realization, cellular_chain_complex, verify_realization_isomorphism
from .product_join import cartesian_product, cross_product, join, verify_kunneth
from .hochschild import (AssocAlgebra, SimplicialComplex, build_A_S, cubical_digraph, hochschild_cohomology,
                         hochschild_homology, verify_cubical_route, verify_hochschild_comparison)

__all__ = [
    "BudgetExceeded", "Digraph", "PathComplex", "VertexSet", "boundary_faces", "is_regular",
    "path_complex_of_digraph", "random_digraph", "validate_path_complex",
    "Q", "Z", "RingSpec", "SparseMatrix", "Zp", "kernel_basis", "rank", "smith_normal_form",
    "OmegaComplex", "build_omega", "regular_boundary",
    "FgAbelianGroup", "HomologyResult", "cohomology_of_complex", "homology_of_complex", "reduced_homology",
    "build_realization", "cellular_chain_complex", "verify_realization_isomorphism",
    "cartesian_product", "cross_product", "join", "verify_kunneth",
    "AssocAlgebra", "SimplicialComplex", "build_A_S", "cubical_digraph", "hochschild_cohomology",
    "hochschild_homology", "verify_cubical_route", "verify_hochschild_comparison",
]

"""Shellability toolkit for the complexes Gamma_p(n) of increasing tuple chains.

Faces are chains of p-tuples increasing in every coordinate; facets admit a
three-condition characterization, the dimension-then-lex order is a shelling,
and counting the facets that attach along their whole boundary reproduces the
alternating sums of powers of binomial coefficients through an explicit
generating-function bridge.
"""

from .complexes import (
    ComplexParams,
    DEFAULT_FACE_BUDGET,
    canonical_face,
    check_vertex,
    enumerate_faces,
    f_vector_enumerated,
    f_vector_formula,
    is_face,
    make_complex,
    order_key,
    reduced_euler_characteristic,
    sigma_word,
)
from .errors import BudgetError, DomainError, PreconditionError
from .facets import (
    DOWN,
    UP,
    FacetCertificate,
    TwistSets,
    apply_twist,
    enumerate_facets,
    facet_certificate,
    facet_from_shift_vectors,
    format_facets,
    is_safe_twist,
    parse_facets,
    shift_vectors,
    twist_sets,
)
from .genfun import (
    AlignmentReport,
    alignment_check,
    alternating_homology_count,
    det_I_minus_X,
    dixon_product_coefficient,
    master_theorem_check,
    master_theorem_inverse_coefficient,
    master_theorem_product_coefficient,
    matrix_A,
    matrix_B,
    series_P,
    series_XY,
    series_g_r,
)
from .homology import (
    DEFAULT_CELL_BUDGET,
    SparseBoundaryMatrix,
    betti_numbers,
    boundary_matrix,
    elementary_divisors,
    is_torsion_free,
    matrix_rank,
    matrix_to_triplets,
    shuffled_rank,
    sparse_rank,
    verify_euler_poincare,
)
from .identities import (
    aigner_rhs,
    dixon_lhs,
    dixon_rhs,
    power_sum_lhs,
    threeF2_lhs,
    threeF2_rhs,
)
from .series import MSeries, add, coefficient, dump_series, invert_unit, mul, parse_series
from .shelling import (
    BlockPartition,
    ShellingReport,
    betti_from_shelling,
    block_partition,
    homology_facet_by_criterion,
    homology_facets_by_criterion,
    homology_facets_direct,
    order_O_compare,
    shelling_witness,
    sort_facets,
    verify_shelling,
    x_family,
    y_family,
)

__version__ = "0.1.0"

__all__ = [
    "AlignmentReport",
    "BlockPartition",
    "BudgetError",
    "ComplexParams",
    "DEFAULT_CELL_BUDGET",
    "DEFAULT_FACE_BUDGET",
    "DOWN",
    "DomainError",
    "FacetCertificate",
    "MSeries",
    "PreconditionError",
    "ShellingReport",
    "SparseBoundaryMatrix",
    "TwistSets",
    "UP",
    "add",
    "aigner_rhs",
    "alignment_check",
    "alternating_homology_count",
    "apply_twist",
    "betti_from_shelling",
    "betti_numbers",
    "block_partition",
    "boundary_matrix",
    "canonical_face",
    "check_vertex",
    "coefficient",
    "det_I_minus_X",
    "dixon_lhs",
    "dixon_product_coefficient",
    "dixon_rhs",
    "dump_series",
    "elementary_divisors",
    "enumerate_faces",
    "enumerate_facets",
    "f_vector_enumerated",
    "f_vector_formula",
    "facet_certificate",
    "facet_from_shift_vectors",
    "format_facets",
    "homology_facet_by_criterion",
    "homology_facets_by_criterion",
    "homology_facets_direct",
    "invert_unit",
    "is_face",
    "is_safe_twist",
    "is_torsion_free",
    "make_complex",
    "master_theorem_check",
    "master_theorem_inverse_coefficient",
    "master_theorem_product_coefficient",
    "matrix_A",
    "matrix_B",
    "matrix_rank",
    "matrix_to_triplets",
    "mul",
    "order_O_compare",
    "order_key",
    "parse_facets",
    "parse_series",
    "power_sum_lhs",
    "reduced_euler_characteristic",
    "series_P",
    "series_XY",
    "series_g_r",
    "shelling_witness",
    "shift_vectors",
    "shuffled_rank",
    "sigma_word",
    "sort_facets",
    "sparse_rank",
    "threeF2_lhs",
    "threeF2_rhs",
    "twist_sets",
    "verify_euler_poincare",
    "verify_shelling",
    "x_family",
    "y_family",
]

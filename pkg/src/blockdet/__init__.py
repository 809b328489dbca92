"""Exact determinants of block matrices with partially commuting blocks."""

from .conditions import (
    Condition,
    commutativity_graph,
    complete_condition,
    cond_col_permute,
    cond_f,
    cond_f_down,
    cond_f_side,
    cond_kappa,
    cond_named,
    cond_row_permute,
    cond_t_col,
    cond_t_row,
    cond_transpose,
    cond_union,
    empty_condition,
    family_condition,
    format_condition,
    is_subgraph,
    matrix_satisfies,
    parse_condition,
)
from .matrix import (
    BlockMatrix,
    Matrix,
    MatrixFormatError,
    block_flatten,
    block_view,
    cofactor_matrix,
    commutes,
    det_commutative,
    det_expansion_oracle,
    format_block_matrix,
    format_matrix,
    parse_block_matrix,
    parse_matrix,
)
from .ncdet import (
    BourbakiChecks,
    BourbakiTrace,
    Permutation,
    bourbaki_trace,
    cofactor_column_check,
    nc_cofactor,
    nc_minor_det,
    nc_row_det,
    permutations_of,
)
from .ring import (
    IntegerRing,
    PolynomialRing,
    PrimeField,
    Ring,
    RingMismatchError,
    RingValue,
    ZZ,
    parse_ring,
    poly_degree,
    poly_eval_at_zero,
    poly_is_monic,
)
from .traces import (
    CommRel,
    TracePoly,
    check_colswap_identity,
    check_rowswap_identity,
    check_transpose_identity,
    symbolic_row_det,
    trace_equal,
    trace_equal_by_projection,
    word_normal_form,
)
from .verify import (
    IdentityCheck,
    OptimalityScanReport,
    OptimalityWitness,
    Size2Classification,
    VerificationReport,
    builtin_matrix,
    check_identity,
    classify_size2,
    counterexample_h,
    gen_satisfying,
    optimality_counterexample,
    optimality_scan,
    run_campaign,
    silvester_check,
    trial_seed,
)

__version__ = "0.1.0"

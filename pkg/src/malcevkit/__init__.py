"""malcevkit: exact verification workbench for finite-dimensional
nonassociative algebras, their Yang-Baxter solutions, and Drinfeld-double
bialgebra structure over the rationals.

All arithmetic is exact (``fractions.Fraction``); every checker returns a
report with an explicit witness on failure.  The hot four-variable
identity sweep has a compiled and a pure-Python backend selected at
import time (see :mod:`malcevkit.kernels`).
"""

from .linalg import (
    Matrix,
    Subspace,
    as_fraction,
    determinant_adjugate,
    format_rational,
    matrix_product,
    nullspace,
    parse_rational,
    solve_linear,
)
from .algebra import (
    Algebra,
    CheckReport,
    add,
    algebra_from_dict,
    algebra_to_dict,
    basis_element,
    check_anticommutative,
    check_lie,
    check_malcev,
    derived_series,
    is_ideal,
    is_subalgebra,
    jacobian,
    load_algebra,
    multiplication_envelope_dim,
    multiply,
    random_anticommutative_algebra,
    random_element,
    restrict_to_subspace,
    save_algebra,
    subalgebra_closure,
    tensor_centralizer,
    zero_element,
)
from .tensors import (
    UNIT,
    DetTraceReport,
    Tensor2,
    Tensor3,
    cybe_matrix_residual,
    cybe_residual,
    derivation_action2,
    derivation_action3,
    det_trace_residual,
    gamma_matrices,
    slot_action,
    slot_multiply2,
    slot_multiply3,
    split_symmetric,
    tau,
    tensor2_from_dict,
    tensor2_to_dict,
    tensor3_from_dict,
    tensor3_to_dict,
    um_residual,
    xi,
)
from .bialgebra import (
    Comultiplication,
    DrinfeldDouble,
    SemisimpleDecomposition,
    bimodule_actions,
    coboundary_delta,
    compat1_residual,
    compat1_sweep,
    compat2_residual,
    compat2_sweep,
    comultiplication_from_dict,
    comultiplication_to_dict,
    drinfeld_double,
    dual_algebra,
    dual_malcev_report,
    dual_to_primal_map,
    form_q_report,
    graph_subspace,
    ideal_projection_V,
    is_malcev_bialgebra,
    radical_certificate,
    reconstructed_coboundary,
    semisimple_decomposition,
)
from .malcev7 import (
    BASIS_LABELS,
    M4_INDICES,
    FamilyParams,
    PipelineReport,
    StageReport,
    SymplecticForm,
    build_m7,
    build_subalgebra,
    data_path,
    family_r,
    family_r0,
    family_symmetric_part,
    load_family_zero_fixture,
    load_form_fixture,
    load_m7_fixture,
    pipeline_semisimple,
    pipeline_semisimple_from_tensor,
    pipeline_triangular,
    pipeline_triangular_from_tensor,
    r_from_symplectic,
    random_params,
    symplectic_check,
    symplectic_form,
)
from .kernels import active_backend, available_backends

__version__ = "0.1.0"

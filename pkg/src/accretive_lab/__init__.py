"""Matrix means of accretive matrices, sectorial operators, numerical-radius
bounds, Tsallis relative operator entropy, and a randomized Loewner-margin
verification harness for the inequalities relating them."""

__version__ = "0.1.0"

from ._kernels import active_backend, available_backends
from .entropy import (
    check_lnt_convexity,
    check_tsallis_monotone,
    check_tsallis_param_convexity,
    check_tsallis_sandwich,
    ln_t,
    relative_entropy,
    tsallis,
)
from .errors import (
    AccretiveLabError,
    ClusteredSpectrumWarning,
    EigenvalueOnCutError,
    LoewnerOrderError,
    NotAccretiveError,
    NotPositiveDefiniteError,
    QuadratureNotConvergedError,
    SchurConvergenceError,
    SingularMatrixError,
)
from .linalg import (
    SchurForm,
    abs_op,
    hermitian_part,
    imaginary_part,
    inverse,
    matrix_function,
    op_norm,
    principal_power,
    schur,
)
from .means import (
    RepresentingMeasure,
    Weight,
    arith_mean,
    geom_mean,
    harm_mean,
    mean,
    mean_from_measure,
)
from .radius import RadiusResult, kittaneh_bound, numerical_radius, power_bound, refined_bound
from .sectorial import (
    EnsembleSpec,
    SectorialCert,
    generate,
    is_accretive,
    sectorial_index,
)
from .verify import (
    CASE_IDS,
    InequalityReport,
    SuiteConfig,
    check_concave_sec2,
    check_cor_integral,
    check_harmonic_refine,
    check_hermite_hadamard,
    check_lemma_scalar,
    check_mccarthy,
    check_path_convexity,
    check_remark_sandwich,
    check_thm_nabla_vs_sigma,
    check_thm_sec2_reverse,
    loewner_margin,
    run_suite,
)

"""Multi-subset transforms, weighted DAG sums, covering designs, and the
exponent analysis behind the fast transform variants."""

from .ring import (
    MERSENNE61,
    CountingRing,
    Float64Ring,
    OpCounter,
    PrimeField,
    Ring,
    counting_wrap,
    make_ring,
)
from .setfn import (
    Family,
    SetFunction,
    moebius_transform,
    subset_convolution,
    subset_convolution_naive,
    values_equal,
    zeta_transform,
)
from .rmm import ClassicalBackend, StrassenBackend, SubMatrix, make_backend
from .mst import (
    ALGORITHMS,
    COLUMNS_SIGMA,
    ROWS_COLUMNS_SIGMA,
    ROWS_COLUMNS_TAU,
    GroundSplit,
    MeasuredCostPlanner,
    PartialResult,
    PipelineStats,
    TrivialCoverPlanner,
    build_submatrix,
    columns_directly,
    fast_rmm,
    mst_columns,
    mst_cover_columns,
    mst_naive,
    mst_rows_columns,
    rows_trimmed,
    run_transform,
)
from .cover import CoverDesign, cover_size_bound, greedy_cover, verify_cover
from .analysis import (
    DEFAULT_OMEGA_TABLE,
    BinomFactsReport,
    OmegaTable,
    OptimizationReport,
    binom_facts_check,
    entropy,
    entropy_base,
    gamma_search,
    gamma_value,
    omega_line,
    optimize_columns,
    optimize_rows_columns,
)
from .dag import (
    DagSumResult,
    WeightSystem,
    brute_force_dag_sum,
    build_dag_family,
    robinson_count,
    sum_acyclic_digraphs,
    tian_he_sum,
)

__version__ = "0.1.0"

__all__ = [
    "MERSENNE61",
    "CountingRing",
    "Float64Ring",
    "OpCounter",
    "PrimeField",
    "Ring",
    "counting_wrap",
    "make_ring",
    "Family",
    "SetFunction",
    "moebius_transform",
    "subset_convolution",
    "subset_convolution_naive",
    "values_equal",
    "zeta_transform",
    "ClassicalBackend",
    "StrassenBackend",
    "SubMatrix",
    "make_backend",
    "ALGORITHMS",
    "COLUMNS_SIGMA",
    "ROWS_COLUMNS_SIGMA",
    "ROWS_COLUMNS_TAU",
    "GroundSplit",
    "MeasuredCostPlanner",
    "PartialResult",
    "PipelineStats",
    "TrivialCoverPlanner",
    "build_submatrix",
    "columns_directly",
    "fast_rmm",
    "mst_columns",
    "mst_cover_columns",
    "mst_naive",
    "mst_rows_columns",
    "rows_trimmed",
    "run_transform",
    "CoverDesign",
    "cover_size_bound",
    "greedy_cover",
    "verify_cover",
    "DEFAULT_OMEGA_TABLE",
    "BinomFactsReport",
    "OmegaTable",
    "OptimizationReport",
    "binom_facts_check",
    "entropy",
    "entropy_base",
    "gamma_search",
    "gamma_value",
    "omega_line",
    "optimize_columns",
    "optimize_rows_columns",
    "DagSumResult",
    "WeightSystem",
    "brute_force_dag_sum",
    "build_dag_family",
    "robinson_count",
    "sum_acyclic_digraphs",
    "tian_he_sum",
    "__version__",
]

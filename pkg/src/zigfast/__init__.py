"""zigfast: fast exponential and standard-normal variates.

Ziggurat layers sit strictly under the density, so the common case is one
64-bit word, one table lookup, and one multiply; the leftover overhang mass
is resolved through an alias table and per-box rejection.  A traditional
equal-area ziggurat ships alongside as the benchmark baseline.
"""

from .alias import AliasTable, build_alias
from .bench import ALGORITHMS, BenchReport, run_bench
from .densities import DensitySpec, EXPONENTIAL, HALF_NORMAL, exponential, get, half_normal
from .errors import (
    BitBudgetExceeded,
    CurvatureViolation,
    EmptyWeights,
    FormatError,
    InvalidSpec,
    NonConvergence,
    QuadratureFailure,
    ZigfastError,
)
from .exponential import ExpSampler
from .normal import NormalSampler
from .quality import EXPECTED_MOMENTS, QualityReport, run_quality
from .tables import (
    ZigguratTables,
    build_tables,
    compute_epsilon,
    default_tables,
    overhang_areas,
    solve_layers,
    verify_tables,
)
from .tableio import load, save
from .traditional import (
    TraditionalExpSampler,
    TraditionalNormalSampler,
    TraditionalTables,
    solve_traditional,
)
from .uniform import UniformSource, auto_seed_value, derive_seed, split_index

__version__ = "1.0.0"

__all__ = [
    "ALGORITHMS",
    "AliasTable",
    "BenchReport",
    "BitBudgetExceeded",
    "CurvatureViolation",
    "DensitySpec",
    "EXPECTED_MOMENTS",
    "EXPONENTIAL",
    "EmptyWeights",
    "ExpSampler",
    "FormatError",
    "HALF_NORMAL",
    "InvalidSpec",
    "NonConvergence",
    "NormalSampler",
    "QuadratureFailure",
    "QualityReport",
    "TraditionalExpSampler",
    "TraditionalNormalSampler",
    "TraditionalTables",
    "UniformSource",
    "ZigfastError",
    "ZigguratTables",
    "auto_seed_value",
    "build_alias",
    "build_tables",
    "compute_epsilon",
    "default_tables",
    "derive_seed",
    "exponential",
    "get",
    "half_normal",
    "load",
    "overhang_areas",
    "run_bench",
    "run_quality",
    "save",
    "solve_layers",
    "solve_traditional",
    "split_index",
    "verify_tables",
    "__version__",
]

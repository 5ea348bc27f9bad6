"""Exact counting and enumeration of chain flip histories by kink number.

A chain of n spin sites flips from all minus to all plus one site at a
time; the order of flips is a history.  Flips that open a new plus block
are kinks, and histories are counted by chain length n and kink number d
through four independent routes that must agree: exhaustive scanning,
pruned backtracking, generating-tree recurrences, and closed-form series
expansion.
"""

from .algebra import (
    Rat,
    TruncPoly,
    TSeries,
    poly_inverse,
    poly_mul,
    sqrt_one_minus_v,
    tseries_inverse,
    tseries_mul,
)
from .core import (
    CountTable,
    EnergyParams,
    History,
    TreeLabel,
    energy,
    kink_count,
    max_kinks,
    tree_label,
)
from .genfunc import (
    CoefficientError,
    ConvergenceRow,
    asymptotic_estimate,
    bivariate_series,
    closed_form,
    convergence_report,
    fixed_kinks_series,
    series_table,
)
from .oracle import (
    DEFAULT_BRUTE_CEILING,
    backtrack_count,
    brute_force_table,
    enumerate_histories,
)
from .treedp import (
    ConsistencyReport,
    LevelState,
    advance_level,
    dp_table,
    root_state,
    succession_children,
    tree_label_consistency,
)
from .verify import GOLDEN_ROWS, CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "Rat",
    "TruncPoly",
    "TSeries",
    "poly_mul",
    "poly_inverse",
    "sqrt_one_minus_v",
    "tseries_mul",
    "tseries_inverse",
    "CountTable",
    "EnergyParams",
    "History",
    "TreeLabel",
    "energy",
    "kink_count",
    "max_kinks",
    "tree_label",
    "CoefficientError",
    "ConvergenceRow",
    "asymptotic_estimate",
    "bivariate_series",
    "closed_form",
    "convergence_report",
    "fixed_kinks_series",
    "series_table",
    "DEFAULT_BRUTE_CEILING",
    "backtrack_count",
    "brute_force_table",
    "enumerate_histories",
    "ConsistencyReport",
    "LevelState",
    "advance_level",
    "dp_table",
    "root_state",
    "succession_children",
    "tree_label_consistency",
    "GOLDEN_ROWS",
    "CheckResult",
    "run_verification",
    "__version__",
]

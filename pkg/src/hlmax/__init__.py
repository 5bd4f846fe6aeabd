"""Exact computation of Hardy-Littlewood maximal functions and frequency
functions (minimal maximizing radii) for nonnegative signals on the
integers and for one-dimensional step functions.

Everything is computed in exact rational arithmetic where possible and in
certified directed-rounding enclosures where not (power-law amplitudes,
transcendental growth functions); engines report whether each answer is
certified exact or enclosure-bounded, never silently approximate.
"""

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    BudgetExceeded,
    DenseWidthExceeded,
    GrowthSpecInvalid,
    HlmaxError,
    InfeasibleConstraint,
    NonpositiveRadius,
    ParameterViolation,
    PowerLawRangeTooLarge,
    ResourceCapExceeded,
    ZeroIndex,
    ZeroSignal,
)
from .values import (
    Enclosure,
    Ordering,
    Value,
    compare,
    int_str,
    parse_int,
    parse_rational,
    rational_str,
    value_str,
)
from .signal import (
    Block,
    BlockSignal,
    DenseSignal,
    PowerLaw,
    eval_at,
    norm_l1,
    reflect,
    scale,
    signal_from_json,
    signal_to_json,
    support_bounds,
    to_blocks,
    to_dense,
    translate,
    window_sum,
)
from .maxengine import (
    CenteredResult,
    UncenteredResult,
    average_centered,
    average_uncentered,
    event_centered,
    event_uncentered,
    oracle_centered,
    oracle_uncentered,
    oracle_uncentered_range,
    profile,
)
from .continuum import (
    ContinuousResult,
    StepFunction,
    average_ball,
    grid_scan_centered,
    maximal_centered_cont,
    maximal_uncentered_cont,
    step_from_json,
    step_to_json,
)
from .constructions import (
    Certificate,
    Condition,
    GrowthSpec,
    build_theorem27,
    build_theorem29_linf,
    build_theorem29_lp,
    dirac,
    recheck_certificate,
    verify_delta,
    verify_theorem27,
    verify_theorem29_linf,
    verify_theorem29_lp,
)
from .analysis import (
    DensityRow,
    DichotomyClass,
    classify,
    density_series,
    rows_to_csv,
    sc_membership,
)
from .corpus import binary_signals, diff_signal, random_dense

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_LIMITS",
    "Limits",
    "BudgetExceeded",
    "DenseWidthExceeded",
    "GrowthSpecInvalid",
    "HlmaxError",
    "InfeasibleConstraint",
    "NonpositiveRadius",
    "ParameterViolation",
    "PowerLawRangeTooLarge",
    "ResourceCapExceeded",
    "ZeroIndex",
    "ZeroSignal",
    "Enclosure",
    "Ordering",
    "Value",
    "compare",
    "int_str",
    "parse_int",
    "parse_rational",
    "rational_str",
    "value_str",
    "Block",
    "BlockSignal",
    "DenseSignal",
    "PowerLaw",
    "eval_at",
    "norm_l1",
    "reflect",
    "scale",
    "signal_from_json",
    "signal_to_json",
    "support_bounds",
    "to_blocks",
    "to_dense",
    "translate",
    "window_sum",
    "CenteredResult",
    "UncenteredResult",
    "average_centered",
    "average_uncentered",
    "event_centered",
    "event_uncentered",
    "oracle_centered",
    "oracle_uncentered",
    "oracle_uncentered_range",
    "profile",
    "ContinuousResult",
    "StepFunction",
    "average_ball",
    "grid_scan_centered",
    "maximal_centered_cont",
    "maximal_uncentered_cont",
    "step_from_json",
    "step_to_json",
    "Certificate",
    "Condition",
    "GrowthSpec",
    "build_theorem27",
    "build_theorem29_linf",
    "build_theorem29_lp",
    "dirac",
    "recheck_certificate",
    "verify_delta",
    "verify_theorem27",
    "verify_theorem29_linf",
    "verify_theorem29_lp",
    "DensityRow",
    "DichotomyClass",
    "classify",
    "density_series",
    "rows_to_csv",
    "sc_membership",
    "binary_signals",
    "diff_signal",
    "random_dense",
]

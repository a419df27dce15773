"""Exact q-series tools for finitized Andrews-Gordon identities."""

__version__ = "0.1.0"

from .qpoly import GradedSeries, QPoly, TruncatedSeries  # noqa: E402
from .qcomb import gaussian_binomial, q_multinomial, q_multinomial_tilde  # noqa: E402
from .partitions import gen_func_bruteforce  # noqa: E402
from .identities import (  # noqa: E402
    GordonParams,
    IdentityReport,
    boson_polynomial,
    dual_lhs,
    dual_rhs,
    fermion_polynomial,
    run_suite,
)

__all__ = [
    "__version__",
    "QPoly",
    "TruncatedSeries",
    "GradedSeries",
    "gaussian_binomial",
    "q_multinomial",
    "q_multinomial_tilde",
    "gen_func_bruteforce",
    "GordonParams",
    "IdentityReport",
    "boson_polynomial",
    "fermion_polynomial",
    "dual_lhs",
    "dual_rhs",
    "run_suite",
]

"""Generic value sets of differential forms on plane branches.

For a plane branch whose semigroup is generated by two coprime integers
p < m, this package computes the minimal generators, the conductor and the
generic Tjurina number of the generic value set of differential one-forms,
by a closed-form recursion over the Euclidean data of (p, m), and
cross-validates the closed form against Delorme's set-based algorithm.
"""

from .delorme import OracleTrace, gamma_window_check, run_accelerated, run_naive
from .euclid import EuclidData, compute_euclid
from .recursion import (
    GenStep,
    LambdaSummary,
    conductor_lambda,
    extreme_case_filter,
    run_recursion,
    stopping_index,
    summarize,
)
from .semigroup import Semigroup, StandardForm
from .tjurina import Staircase, build_staircase, tau_abm, tau_oracle, tau_staircase
from .verify import PairCheck, verify_pair

__version__ = "0.1.0"

__all__ = [
    "EuclidData",
    "GenStep",
    "LambdaSummary",
    "OracleTrace",
    "PairCheck",
    "Semigroup",
    "Staircase",
    "StandardForm",
    "build_staircase",
    "compute_euclid",
    "conductor_lambda",
    "extreme_case_filter",
    "gamma_window_check",
    "run_accelerated",
    "run_naive",
    "run_recursion",
    "stopping_index",
    "summarize",
    "tau_abm",
    "tau_oracle",
    "tau_staircase",
    "verify_pair",
]

"""Solvability checks and solvers for the generalized absolute value equation Ax - B|x| = b."""

import json
import os

import numpy as np

from ._gavekit import (
    CapExceededError,
    ConvergenceError,
    GaveError,
    NoConvergence,
    NotSymmetricError,
    ParseError,
    SingularError,
    _check_file_json,
    _check_json,
    bench_conditions,
    condition_ids,
    enumerate_solutions,
    gavme_solve,
    interval_regularity,
    is_nonsingular_m_matrix,
    newton_solve,
    nonneg_spectral_radius,
    picard_solve,
    sigma_extremes,
    sym_eigen,
    tridiag_problem,
)


def _seed(seed):
    if seed is not None:
        return int(seed)
    return int(os.environ.get("GAVEKIT_SEED", "42"))


def check(A, b, B=None, conditions=None, seed=None):
    """Run the sufficient conditions on (A, B, b).

    b may be a vector or an n x m matrix F; the latter returns one report per column.
    """
    rhs = np.asarray(b, dtype=float)
    if rhs.ndim == 1:
        rhs = rhs.reshape(-1, 1)
    B = None if B is None else np.asarray(B, dtype=float)
    return json.loads(_check_json(np.asarray(A, dtype=float), B, rhs, conditions, _seed(seed)))


def check_file(path, conditions=None, seed=None):
    """Same as check, reading the problem from a JSON file."""
    return json.loads(_check_file_json(os.fspath(path), conditions, _seed(seed)))


__all__ = [
    "CapExceededError", "ConvergenceError", "GaveError", "NoConvergence", "NotSymmetricError",
    "ParseError", "SingularError", "bench_conditions", "check", "check_file", "condition_ids",
    "enumerate_solutions", "gavme_solve", "interval_regularity", "is_nonsingular_m_matrix",
    "newton_solve", "nonneg_spectral_radius", "picard_solve", "sigma_extremes", "sym_eigen",
    "tridiag_problem",
]

"""Singular values and Schatten p-norms of antilinear operators."""

import math

import numpy as np

from .antilinear import AntilinearOperator
from .errors import InvalidP
from .matcore import DEFAULT_TOL


def singular_values(a):
    """Eigenvalues of |A| = (A# A)^(1/2), sorted descending.

    These coincide with the singular values of the representing matrix, so
    they are computed by SVD, which resolves small values far better than
    the square root of the Gram spectrum would.
    """
    if isinstance(a, AntilinearOperator):
        mat = a.mat
    else:
        mat = np.asarray(a, dtype=complex)
    return np.linalg.svd(mat, compute_uv=False)


def schatten_norm(a, p):
    """(sum_j s_j^p)^(1/p); p = inf gives the operator norm.

    Only 1 < p <= inf is accepted.
    """
    if not (p > 1):
        raise InvalidP(f"Schatten norm needs p > 1, got {p}")
    s = singular_values(a)
    if s.size == 0:
        return 0.0
    if math.isinf(p):
        return float(s[0])
    smax = float(s[0])
    if smax == 0.0:
        return 0.0
    # factor out the largest singular value to avoid overflow for large p
    return smax * float(np.sum((s / smax) ** p)) ** (1.0 / p)


def conjugate_exponent(p):
    """q with 1/p + 1/q = 1."""
    if not (1 < p < math.inf):
        raise InvalidP(f"conjugate exponent needs 1 < p < inf, got {p}")
    return p / (p - 1.0)


def numerical_rank(a, tol=DEFAULT_TOL):
    """Number of singular values above tol * s_max."""
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))

"""Dense linear-algebra kernel.

Everything here works on plain 2-D ``numpy`` float arrays. Three routines:
an LU solve with a singularity guard, a power iteration for the spectral
radius of a nonnegative matrix, and a shifted power iteration for the
algebraically largest eigenpair of a symmetric matrix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

MAX_ITER = 10_000
RQ_RTOL = 1e-10
RESIDUAL_TOL = 1e-10
PIVOT_RTOL = 1e-12
ZERO_ENTRY = 1e-12


class SingularMatrixError(ArithmeticError):
    """Raised when a pivot falls below working precision."""


class ConvergenceError(ArithmeticError):
    """Power iteration hit the iteration cap.

    ``estimate`` holds the last eigenvalue estimate.
    """

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def lu_solve(m, rhs) -> np.ndarray:
    """Solve ``m @ X = rhs`` by LU factorization with partial pivoting.

    Raises SingularMatrixError when some pivot has magnitude below
    ``1e-12 * ||m||_F``.
    """
    m = _as_square(m)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape[0] != m.shape[0]:
        raise ValueError(
            f"rhs has {rhs.shape[0]} rows, matrix has {m.shape[0]}"
        )
    if m.shape[0] == 0:
        return rhs.copy()
    with warnings.catch_warnings():
        # exact zero pivots are reported below as SingularMatrixError
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    pivots = np.abs(np.diag(lu))
    bound = PIVOT_RTOL * np.linalg.norm(m)
    if pivots.min() < bound or bound == 0.0:
        raise SingularMatrixError(
            f"matrix is singular to working precision "
            f"(smallest pivot {pivots.min():.3e}, bound {bound:.3e})"
        )
    return scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)


def _perron_root(m: np.ndarray, seed: int) -> float:
    # m is irreducible, so m + I is primitive and its Perron root is simple
    # and strictly dominant.
    n = m.shape[0]
    rng = np.random.default_rng(seed)
    v = rng.uniform(0.5, 1.5, size=n)
    v /= np.linalg.norm(v)
    estimate = np.inf
    for _ in range(MAX_ITER):
        w = m @ v + v
        norm_w = np.linalg.norm(w)
        new_estimate = norm_w - 1.0
        v = w / norm_w
        if abs(new_estimate - estimate) < RQ_RTOL * abs(new_estimate):
            return _polish_perron(m, float(new_estimate), v)
        estimate = new_estimate
    raise ConvergenceError(
        f"spectral radius did not converge in {MAX_ITER} iterations",
        float(estimate),
    )


def _polish_perron(m: np.ndarray, estimate: float, v: np.ndarray) -> float:
    # The stopping rule bounds the step, not the error, which can be larger
    # by 1/(1 - contraction). Two inverse-iteration steps just above the
    # estimate lock onto the (simple, real) Perron root.
    shift = estimate + 1e-8 * (estimate + 1.0)
    x = v
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            lu = scipy.linalg.lu_factor(m - shift * np.eye(m.shape[0]), check_finite=False)
            for _ in range(2):
                x = scipy.linalg.lu_solve(lu, x, check_finite=False)
                x = x / np.linalg.norm(x)
        except (np.linalg.LinAlgError, ValueError):
            return estimate
    if not np.all(np.isfinite(x)):
        return estimate
    polished = float(np.linalg.norm(m @ x))
    if abs(polished - estimate) > 1e-6 * (estimate + 1.0):
        return estimate
    return polished


def spectral_radius(m, seed: int = 0) -> float:
    """Largest eigenvalue magnitude of an entrywise nonnegative matrix.

    The radius is the largest over the strongly connected components of the
    support graph; each component is handled by power iteration on
    ``m_sub + I``, which also copes with periodic (e.g. bipartite) blocks.
    Components without a cycle contribute 0.
    """
    m = _as_square(m)
    if np.any(m < 0):
        raise ValueError("spectral_radius expects a nonnegative matrix")
    if m.shape[0] == 0:
        return 0.0
    ncomp, comp = connected_components(csr_matrix(m != 0), directed=True, connection="strong")
    rho = 0.0
    for k in range(ncomp):
        idx = np.flatnonzero(comp == k)
        sub = m[np.ix_(idx, idx)]
        if not sub.any():
            continue
        rho = max(rho, _perron_root(sub, seed))
    return rho


def _start_vector(n: int) -> np.ndarray:
    # Fixed-seed Gaussian: deterministic, and (unlike the all-ones vector)
    # never an exact eigenvector of a zero-row-sum matrix.
    v = np.random.default_rng(7).standard_normal(n)
    return v / np.linalg.norm(v)


def _fix_sign(v: np.ndarray) -> np.ndarray:
    big = np.flatnonzero(np.abs(v) > ZERO_ENTRY)
    if big.size and v[big[0]] < 0:
        return -v
    return v


def leading_symmetric_eigenpair(m, fallback: bool = False) -> EigenPair:
    """Eigenpair of the algebraically largest eigenvalue of symmetric ``m``.

    Power iteration on ``m + sigma*I`` with ``sigma = ||m||_inf``, which
    makes every shifted eigenvalue nonnegative, so the largest algebraic
    eigenvalue becomes the dominant one. Convergence needs both a stable
    Rayleigh quotient and a small residual. The returned vector has its
    first non-negligible entry positive.

    The contraction rate is ``(lambda_2 + sigma) / (lambda_1 + sigma)``, so a
    gap that is tiny next to ``sigma`` can exhaust the iteration cap. By
    default that raises ConvergenceError; with ``fallback=True`` the pair is
    taken from LAPACK's symmetric eigensolver instead.
    """
    m = _as_square(m)
    if not np.allclose(m, m.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(m).max(initial=0.0))):
        raise ValueError("leading_symmetric_eigenpair expects a symmetric matrix")
    n = m.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return EigenPair(float(m[0, 0]), np.ones(1))

    sigma = float(np.abs(m).sum(axis=1).max())
    if sigma == 0.0:
        return EigenPair(0.0, np.ones(n) / np.sqrt(n))
    frob = np.linalg.norm(m)

    v = _start_vector(n)
    rq = np.inf
    for _ in range(MAX_ITER):
        mv = m @ v
        new_rq = float(v @ mv)
        residual = np.linalg.norm(mv - new_rq * v)
        if (
            abs(new_rq - rq) < RQ_RTOL * (abs(new_rq) + sigma)
            and residual <= RESIDUAL_TOL * frob
        ):
            return _polish(m, new_rq, v, sigma)
        rq = new_rq
        w = mv + sigma * v
        v = w / np.linalg.norm(w)
    if fallback:
        return _dense_leading_pair(m)
    raise ConvergenceError(
        f"leading eigenpair did not converge in {MAX_ITER} iterations", rq
    )


def _polish(m: np.ndarray, rq: float, v: np.ndarray, sigma: float) -> EigenPair:
    # Power iteration leaves entry errors around residual/gap, far above the
    # 1e-12 cutoff the sign split uses. One Rayleigh-quotient-iteration step
    # cubes that error. It is kept only if it stays on the same eigenvalue.
    # The shift is nudged off rq because rq can equal the eigenvalue exactly,
    # which would make the shifted matrix singular.
    shift = rq + 1e-13 * sigma
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            x = scipy.linalg.solve(m - shift * np.eye(m.shape[0]), v, assume_a="sym")
        except (np.linalg.LinAlgError, ValueError):
            x = None
    if x is not None and np.all(np.isfinite(x)) and np.linalg.norm(x) > 0:
        x /= np.linalg.norm(x)
        x_rq = float(x @ m @ x)
        if abs(x_rq - rq) <= RQ_RTOL * (abs(rq) + sigma) and abs(x @ v) > 0.5:
            return EigenPair(x_rq, _fix_sign(x))
    return EigenPair(rq, _fix_sign(v))


def _dense_leading_pair(m: np.ndarray) -> EigenPair:
    n = m.shape[0]
    vals, vecs = scipy.linalg.eigh(m, subset_by_index=[n - 1, n - 1])
    return EigenPair(float(vals[0]), _fix_sign(vecs[:, 0]))

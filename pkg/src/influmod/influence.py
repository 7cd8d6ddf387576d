"""Path-attenuated influence between nodes.

The influence of i on j sums every walk from i to j, a walk of length
``n + 1`` weighted by ``beta * alpha**n``. In closed form this is
``P = beta * A @ inv(I - alpha*A)``, which converges while ``alpha`` stays
below ``1 / rho(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_io import Graph
from .linalg import lu_solve, spectral_radius

ALPHA_MARGIN = 1e-12
ROUNDOFF_CLAMP = 1e-12


class InfluenceDomainError(ValueError):
    """Attenuation parameters outside the convergent region."""


class DegenerateGraphError(ValueError):
    """Graph has no edges, or otherwise carries no influence."""


@dataclass(frozen=True)
class InfluenceParams:
    alpha: float
    beta: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.alpha) or self.alpha < 0:
            raise InfluenceDomainError(f"alpha must be >= 0, got {self.alpha}")
        if not (0 < self.beta <= 1):
            raise InfluenceDomainError(f"beta must lie in (0, 1], got {self.beta}")


@dataclass(frozen=True, eq=False)
class InfluenceMatrix:
    p: np.ndarray
    params: InfluenceParams


def max_alpha(g: Graph) -> float:
    """Supremum of valid ``alpha``: the reciprocal of the adjacency spectral radius."""
    if g.edge_count == 0:
        raise DegenerateGraphError("graph has no edges; every alpha is valid (unbounded)")
    rho = spectral_radius(g.adjacency)
    if rho == 0.0:
        raise DegenerateGraphError("adjacency is nilpotent (acyclic); alpha is unbounded")
    return 1.0 / rho


def check_alpha(g: Graph, alpha: float) -> None:
    """Raise InfluenceDomainError unless ``alpha`` is safely below the bound."""
    if alpha == 0 or g.edge_count == 0:
        return
    rho = spectral_radius(g.adjacency)
    if rho == 0.0:
        return
    bound = 1.0 / rho
    if alpha >= bound - ALPHA_MARGIN:
        raise InfluenceDomainError(
            f"alpha={alpha} is not below the convergence bound "
            f"max_alpha={bound:.6g} (1/spectral radius)"
        )


def influence_matrix(g: Graph, params: InfluenceParams) -> InfluenceMatrix:
    check_alpha(g, params.alpha)
    a = g.adjacency
    x = lu_solve(np.eye(g.n) - params.alpha * a, np.eye(g.n))
    p = params.beta * (a @ x)
    p[(p < 0) & (p >= -ROUNDOFF_CLAMP)] = 0.0
    p.setflags(write=False)
    return InfluenceMatrix(p, params)


def influence_series_oracle(g: Graph, params: InfluenceParams, terms: int) -> np.ndarray:
    """Truncated walk series ``beta * sum_{n<terms} alpha**n A**(n+1)``.

    Built by repeated multiplication, independent of the linear solve, so it
    serves as a check on :func:`influence_matrix`.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    a = g.adjacency
    power = a.copy()
    total = power.copy()
    weight = 1.0
    for _ in range(1, terms):
        power = power @ a
        weight *= params.alpha
        total += weight * power
    return params.beta * total


def katz_scores(p: InfluenceMatrix) -> np.ndarray:
    """Total influence each node exerts on the network (row sums of P)."""
    return p.p.sum(axis=1)

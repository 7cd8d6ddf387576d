"""Influence-based modularity.

The null model keeps each node's total outgoing and incoming influence, so
the expected influence of i on j is ``w_out[i] * w_in[j] / W``. Modularity
sums actual minus expected influence over pairs that share a community
(diagonal included).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .influence import DegenerateGraphError, InfluenceMatrix


@dataclass(frozen=True, eq=False)
class ModularityContext:
    """Centered influence ``c``, its symmetrization ``b`` and the margins."""

    c: np.ndarray
    b: np.ndarray
    w_out: np.ndarray
    w_in: np.ndarray
    w_total: float

    @property
    def n(self) -> int:
        return self.c.shape[0]


def build_context(p: InfluenceMatrix) -> ModularityContext:
    infl = p.p
    w_out = infl.sum(axis=1)
    w_in = infl.sum(axis=0)
    w_total = float(infl.sum())
    if not w_total > 0:
        raise DegenerateGraphError("total influence is zero; nothing to partition")
    c = infl - np.outer(w_out, w_in) / w_total
    b = c + c.T
    for arr in (c, b, w_out, w_in):
        arr.setflags(write=False)
    return ModularityContext(c, b, w_out, w_in, w_total)


def _validate_assignment(assignment, n: int) -> np.ndarray:
    labels = np.asarray(assignment)
    if labels.shape != (n,):
        raise ValueError(f"assignment has shape {labels.shape}, expected ({n},)")
    return labels


def score_partition(ctx: ModularityContext, assignment) -> float:
    """Raw (unnormalized) modularity of a community assignment.

    Any hashable community labels work; only equality matters.
    """
    labels = _validate_assignment(assignment, ctx.n)
    same = labels[:, None] == labels[None, :]
    return float(ctx.c[same].sum())


def subgroup_matrix(ctx: ModularityContext, members) -> np.ndarray:
    """Generalized modularity matrix of a subgroup.

    ``B[g, g]`` with each diagonal entry reduced by its row sum over ``g``,
    so that every row sums to zero.
    """
    members = np.asarray(members, dtype=int)
    if members.size == 0:
        raise ValueError("members must be nonempty")
    sub = ctx.b[np.ix_(members, members)].copy()
    sub[np.diag_indices_from(sub)] -= sub.sum(axis=1)
    return sub


def split_gain(bg: np.ndarray, s: np.ndarray) -> float:
    """Raw-modularity change of a +/-1 split given its generalized matrix.

    ``s @ bg @ s / 2`` counts every cross pair twice because ``b = c + c.T``,
    so the change on the :func:`score_partition` scale is half of that.
    """
    return 0.25 * float(s @ bg @ s)


def delta_q(ctx: ModularityContext, members, s) -> float:
    """Change in :func:`score_partition` from splitting ``members`` by ``s``."""
    s = np.asarray(s, dtype=float)
    if not np.all(np.abs(s) == 1):
        raise ValueError("s entries must be +1 or -1")
    bg = subgroup_matrix(ctx, members)
    if s.shape != (bg.shape[0],):
        raise ValueError("s must have one entry per member")
    return split_gain(bg, s)

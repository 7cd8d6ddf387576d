"""Classical edge-modularity leading-eigenvector method, written independently.

Uses the textbook modularity matrix ``A - k k^T / 2m`` and LAPACK's full
symmetric eigensolver, so it shares no numerical code with influmod.
"""

import heapq

import numpy as np


def newman_splits(adjacency):
    """Return (final groups, list of (group, accepted), ambiguous).

    ``ambiguous`` is set when some group's leading eigenvalue is repeated:
    the eigenvector, and so the split, is then not uniquely defined.
    """
    a = np.asarray(adjacency, dtype=float)
    k = a.sum(axis=1)
    two_m = k.sum()
    mod = a - np.outer(k, k) / two_m
    queue = [tuple(range(a.shape[0]))]
    final, steps = [], []
    ambiguous = False
    while queue:
        group = heapq.heappop(queue)
        if len(group) < 2:
            final.append(group)
            continue
        idx = list(group)
        bg = mod[np.ix_(idx, idx)].copy()
        bg[np.diag_indices_from(bg)] -= bg.sum(axis=1)
        vals, vecs = np.linalg.eigh(bg)
        if vals[-1] - vals[-2] < 1e-8 * max(1.0, abs(vals[-1])):
            ambiguous = True
        u = vecs[:, -1]
        big = np.flatnonzero(np.abs(u) > 1e-12)
        if big.size and u[big[0]] < 0:
            u = -u
        s = np.where(u < -1e-12, -1.0, 1.0)
        gain = s @ bg @ s / (4 * two_m)
        ok = bool((s > 0).any() and (s < 0).any() and gain > 1e-12)
        steps.append((group, ok))
        if ok:
            members = np.array(idx)
            heapq.heappush(queue, tuple(members[s > 0].tolist()))
            heapq.heappush(queue, tuple(members[s < 0].tolist()))
        else:
            final.append(group)
    return final, steps, ambiguous

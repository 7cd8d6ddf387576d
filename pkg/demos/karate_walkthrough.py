"""
Karate club, one split at a time
================================

Walks through the pipeline by hand on Zachary's karate club: influence
matrix, modularity matrix, the first bisection, then the full recursion.
"""

import numpy as np

from influmod import (
    InfluenceParams, bisect, build_context, confusion_summary,
    detect_communities, influence_matrix, load_karate, max_alpha,
)

g = load_karate()
print(g.n, "members,", g.edge_count, "friendships")
print("largest usable alpha:", max_alpha(g))

# one over the club size for both attenuation factors
params = InfluenceParams(alpha=1 / 34, beta=1 / 34)
P = influence_matrix(g, params)
ctx = build_context(P)

# walks of every length contribute, so the matrix is dense
print("nonzero influence entries:", np.count_nonzero(P.p), "of", g.n ** 2)

# first cut: sign pattern of the leading eigenvector
s, record = bisect(ctx, range(g.n))
print("leading eigenvalue %.4f, gain %.4f" % (record.leading_eigenvalue, record.delta_q))
print(confusion_summary(["plus" if x > 0 else "minus" for x in s], g.ground_truth))

# let the recursion run until no cut pays off
part = detect_communities(g, params)
for k, members in enumerate(part.communities()):
    print(k, sorted((g.node_labels[i] for i in members), key=int))
print("Q = %.4f, Q/W = %.4f" % (part.q, part.q / ctx.w_total))

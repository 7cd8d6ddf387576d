"""
Who carries the most influence?
===============================

Row sums of the influence matrix rank members by how much they reach the
rest of the network. At alpha = 0 this is just the degree.
"""

from influmod import InfluenceParams, influence_matrix, katz_scores, load_karate, max_alpha

g = load_karate()

for frac in (0.0, 0.5, 0.9):
    alpha = frac * max_alpha(g)
    scores = katz_scores(influence_matrix(g, InfluenceParams(alpha, 1.0)))
    order = scores.argsort()[::-1][:5]
    top = ", ".join("%s (%.1f)" % (g.node_labels[i], scores[i]) for i in order)
    print("alpha = %.4f: %s" % (alpha, top))

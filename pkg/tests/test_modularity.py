import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from influmod import (
    DegenerateGraphError,
    Graph,
    InfluenceParams,
    build_context,
    degrees,
    delta_q,
    influence_matrix,
    max_alpha,
    score_partition,
    subgroup_matrix,
)
from conftest import random_graph


def ctx_for(g, alpha=0.0, beta=1.0):
    return build_context(influence_matrix(g, InfluenceParams(alpha, beta)))


def karate_factions(karate):
    return np.array([1 if t == "Officer" else 0 for t in karate.ground_truth])


def test_two_node_context(path2):
    ctx = ctx_for(path2)
    assert ctx.w_total == 2.0
    np.testing.assert_array_equal(ctx.w_out, [1, 1])
    np.testing.assert_array_equal(ctx.w_in, [1, 1])
    np.testing.assert_allclose(ctx.c, [[-0.5, 0.5], [0.5, -0.5]])
    np.testing.assert_allclose(ctx.b, [[-1, 1], [1, -1]])


def test_regular_graph_rows_sum_to_zero(k4):
    ctx = ctx_for(k4)
    np.testing.assert_allclose(ctx.c.sum(axis=1), 0, atol=1e-12)


def test_karate_context_invariants(karate):
    ctx = ctx_for(karate, 1 / 34, 1 / 34)
    w = ctx.w_total
    assert abs(ctx.c.sum()) <= 1e-9 * w
    np.testing.assert_allclose(ctx.c.sum(axis=0), 0, atol=1e-9 * w)
    np.testing.assert_allclose(ctx.c.sum(axis=1), 0, atol=1e-9 * w)
    assert ctx.w_out.sum() == pytest.approx(w, rel=1e-9)
    assert ctx.w_in.sum() == pytest.approx(w, rel=1e-9)
    np.testing.assert_array_equal(ctx.b, ctx.b.T)


def test_degenerate_context():
    with pytest.raises(DegenerateGraphError):
        ctx_for(Graph(np.zeros((2, 2))))


def test_score_single_community_is_zero(karate):
    ctx = ctx_for(karate, 1 / 34, 1 / 34)
    assert abs(score_partition(ctx, np.zeros(34))) <= 1e-9 * ctx.w_total


def test_score_two_node_split(path2):
    assert score_partition(ctx_for(path2), [0, 1]) == pytest.approx(-1.0)


def test_score_karate_factions_positive(karate):
    ctx = ctx_for(karate, 1 / 34, 1 / 34)
    assert score_partition(ctx, karate_factions(karate)) > 0


def test_score_accepts_any_labels(karate):
    ctx = ctx_for(karate, 0.05)
    labels = karate_factions(karate)
    named = np.where(labels == 1, "x", "y")
    assert score_partition(ctx, named) == score_partition(ctx, labels)


def test_subgroup_full_set_at_alpha_zero(path2):
    ctx = ctx_for(path2)
    np.testing.assert_allclose(subgroup_matrix(ctx, [0, 1]), ctx.b, atol=1e-15)


def test_subgroup_singleton(karate):
    ctx = ctx_for(karate, 0.05)
    np.testing.assert_array_equal(subgroup_matrix(ctx, [5]), [[0.0]])
    with pytest.raises(ValueError):
        subgroup_matrix(ctx, [])


def test_subgroup_rows_sum_to_zero(karate):
    ctx = ctx_for(karate, 1 / 34, 1 / 34)
    faction = np.flatnonzero(karate_factions(karate) == 1)
    bg = subgroup_matrix(ctx, faction)
    np.testing.assert_allclose(bg.sum(axis=1), 0, atol=1e-9)
    np.testing.assert_array_equal(bg, bg.T)


def test_delta_q_examples(path2, karate):
    ctx = ctx_for(path2)
    assert delta_q(ctx, [0, 1], [1, 1]) == 0.0
    # s @ Bg @ s / 2 = -2; on the raw-modularity scale that is -1, the Q of {0},{1}
    assert delta_q(ctx, [0, 1], [1, -1]) == pytest.approx(-1.0)
    with pytest.raises(ValueError):
        delta_q(ctx, [0, 1], [1, 0])

    ctx = ctx_for(karate, 1 / 34, 1 / 34)
    labels = karate_factions(karate)
    gain = delta_q(ctx, np.arange(34), np.where(labels == 1, 1, -1))
    assert gain == pytest.approx(score_partition(ctx, labels), abs=1e-9)


def test_newman_reduction(karate):
    ctx = ctx_for(karate, 0.0, 1.0)
    a = karate.adjacency
    k = degrees(karate)[0]
    m = karate.edge_count
    classical = a - np.outer(k, k) / (2 * m)
    assert np.abs(ctx.b / 2 - classical).max() <= 1e-12


def test_beta_scales_structure(karate):
    c1 = ctx_for(karate, 0.08, 1.0)
    cb = ctx_for(karate, 0.08, 0.25)
    np.testing.assert_allclose(cb.c, 0.25 * c1.c, atol=1e-13)
    np.testing.assert_allclose(cb.b, 0.25 * c1.b, atol=1e-13)


# -- properties -------------------------------------------------------------

@st.composite
def split_cases(draw):
    """(graph, alpha, prior partition, group label to split, +/-1 split of that group)."""
    n = draw(st.integers(2, 16))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    g = random_graph(rng, n, draw(st.floats(0.15, 0.8)), draw(st.booleans()))
    try:
        alpha = draw(st.floats(0.0, 0.9)) * max_alpha(g)
    except DegenerateGraphError:
        alpha = draw(st.floats(0.0, 2.0))
    k = draw(st.integers(1, n))
    labels = rng.integers(0, k, size=n)
    target = labels[draw(st.integers(0, n - 1))]
    members = np.flatnonzero(labels == target)
    s = rng.choice([-1, 1], size=members.size)
    return g, alpha, labels, members, s


@settings(max_examples=150, deadline=None)
@given(split_cases())
def test_delta_q_matches_score_difference(case):
    g, alpha, labels, members, s = case
    ctx = ctx_for(g, alpha)
    refined = labels.copy()
    refined[members[s < 0]] = labels.max() + 1
    diff = score_partition(ctx, refined) - score_partition(ctx, labels)
    assert abs(delta_q(ctx, members, s) - diff) <= 1e-9 * ctx.w_total


@settings(max_examples=150, deadline=None)
@given(split_cases())
def test_bisection_identity(case):
    g, alpha, _, _, _ = case
    ctx = ctx_for(g, alpha)
    s = np.random.default_rng(g.n).choice([-1.0, 1.0], size=g.n)
    expected = 0.5 * (s @ ctx.c @ s + ctx.c.sum())
    assert score_partition(ctx, s) == pytest.approx(expected, abs=1e-9 * ctx.w_total)


@settings(max_examples=100, deadline=None)
@given(split_cases())
def test_context_invariants(case):
    g, alpha, _, members, _ = case
    ctx = ctx_for(g, alpha)
    w = ctx.w_total
    assert ctx.w_out.sum() == pytest.approx(w, rel=1e-9)
    assert ctx.w_in.sum() == pytest.approx(w, rel=1e-9)
    assert abs(ctx.c.sum()) <= 1e-9 * w
    assert np.abs(ctx.c.sum(axis=0)).max() <= 1e-9 * w
    assert np.abs(ctx.c.sum(axis=1)).max() <= 1e-9 * w
    np.testing.assert_array_equal(ctx.b, ctx.b.T)
    bg = subgroup_matrix(ctx, members)
    np.testing.assert_array_equal(bg, bg.T)
    assert np.abs(bg.sum(axis=1)).max() <= 1e-9 * w

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from helpers import graph
from mllon import WeightedDigraph, compute_metrics
from mllon.metrics import (InvalidWeightError, clustering_coefficients, descriptive_stats, local_point_clouds,
                           node_disparity, path_to_global_optima, pearson, random_clustering_baseline,
                           shortest_path_stats, strength_disparity_degree, weighted_clustering)
import oracles


def complete(nv, w=1.0):
    return {(i, j): w for i in range(nv) for j in range(nv) if i != j}


# -- unit fixtures

def test_two_nodes_equal_fitness_has_undefined_correlations():
    _, _, knn, fnn = descriptive_stats(graph(2, {(0, 1): 1.0, (1, 0): 1.0}, fitness=[0.5, 0.5]))
    assert knn is None and fnn is None


def test_star_is_disassortative():
    w = {}
    for leaf in range(1, 5):
        w[(0, leaf)] = 0.25
        w[(leaf, 0)] = 0.1 * leaf
    w[(1, 2)] = 0.3
    knn, _ = oracles.neighbour_correlations(5, w, [0.0] * 5)
    _, _, got, _ = descriptive_stats(graph(5, w))
    assert got < 0
    assert got == pytest.approx(knn, abs=1e-12)


def test_clustering_examples():
    assert weighted_clustering(graph(3, complete(3))) == 1.0
    assert weighted_clustering(graph(5, complete(5, 0.3))) == pytest.approx(1.0, abs=1e-15)
    assert weighted_clustering(graph(3, {(0, 1): 1.0, (1, 2): 1.0})) == 0.0
    # triangle 0-1-2 plus pendant 3 on node 0, symmetric weights
    w = {}
    for (i, j), x in {(0, 1): 1.0, (0, 2): 0.5, (1, 2): 0.25, (0, 3): 0.5}.items():
        w[(i, j)] = w[(j, i)] = x
    c = clustering_coefficients(graph(4, w))
    # node 0: s=2, k=3, closed pairs (1,2),(2,1) each contribute (1+0.5)/2
    assert c[0] == pytest.approx(1.5 / (2 * 2), abs=1e-15)
    assert c[1] == pytest.approx(1.0) and c[2] == pytest.approx(1.0) and c[3] == 0.0
    assert c.tolist() == pytest.approx(oracles.barrat(4, w), abs=1e-15)


def test_random_baseline():
    assert random_clustering_baseline(2, 1) == 1.0
    assert random_clustering_baseline(11, 2) == 0.2
    assert random_clustering_baseline(32, 23.1) == pytest.approx(0.75, abs=0.01)
    with pytest.raises(ValueError):
        random_clustering_baseline(1, 0)


def test_path_lengths():
    assert shortest_path_stats(graph(6, complete(6, 0.2))) == (1.0, 1.0)
    assert shortest_path_stats(graph(2, {})) == (None, 0.0)
    assert shortest_path_stats(graph(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 0): 1})) == (2.0, 1.0)


def test_distance_to_global_optimum():
    # 0=A, 1=B, 2=GO
    g = graph(3, {(0, 1): 0.25, (1, 2): 0.5, (0, 2): 0.1}, go=[2])
    d = oracles.go_distances(3, {(0, 1): 0.25, (1, 2): 0.5, (0, 2): 0.1}, [2])
    assert d == pytest.approx([0.9, 0.5, 0.0])
    assert path_to_global_optima(g) == pytest.approx(((0.9 + 0.5) / 3, 1.0))
    assert path_to_global_optima(graph(2, {(0, 1): 1.0}, go=[1])) == (0.0, 1.0)
    with pytest.raises(InvalidWeightError):
        path_to_global_optima(graph(2, {(0, 1): 1.5}, go=[1]))
    with pytest.raises(ValueError):
        path_to_global_optima(graph(2, {(0, 1): 0.5}))


def test_disparity_examples():
    g = graph(6, {(0, 1): 0.2, (0, 2): 0.2, (0, 3): 0.2, (0, 4): 0.2, (1, 0): 0.7, (2, 0): 0.75, (2, 5): 0.25})
    y2 = node_disparity(g)
    assert y2[0] == 0.25
    assert y2[1] == 1.0
    assert y2[2] == 0.625
    assert math.isnan(y2[5])


def test_cumulative_strength():
    g = graph(4, {(0, 1): 1.0, (1, 0): 1.0, (1, 2): 1.0, (2, 0): 1.0, (2, 1): 1.0, (2, 3): 1.0, (3, 0): 1.0})
    g.basin_size[:] = [1, 2, 3, 4]
    cum, sb, fb = local_point_clouds(g)
    assert cum.x.tolist() == [1.0, 2.0, 3.0]
    assert cum.y.tolist() == pytest.approx([1.0, 0.5, 0.25])
    flat, _, _ = local_point_clouds(graph(3, complete(3, 0.5)))
    assert (flat.x.tolist(), flat.y.tolist()) == ([1.0], [1.0])
    assert sb.pearson() == pytest.approx(oracles._pearson([1, 2, 3, 1], [1, 2, 3, 4]), abs=1e-12)
    with pytest.raises(ValueError):
        local_point_clouds(WeightedDigraph.from_edges(2, [(0, 1, 1.0)]))


def test_single_node_report():
    r = compute_metrics(graph(1, {}, go=[0]))
    assert (r.nv, r.ne, r.knn, r.fnn, r.l_mean) == (1, 0, None, None, None)
    assert r.l_go_mean == 0.0


def test_pearson_edge_cases():
    assert pearson([1.0], [2.0]) is None
    assert pearson([1, 2, 3], [5, 5, 5]) is None
    assert pearson([1, 2, 3], [2, 4, 6.5]) == pytest.approx(statistics_corr([1, 2, 3], [2, 4, 6.5]))


def statistics_corr(x, y):
    import statistics
    return statistics.correlation(x, y)


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        descriptive_stats(graph(0, {}))


# -- properties against the brute-force implementations

weights = st.integers(1, 64).map(lambda x: x / 64)


@st.composite
def small_graphs(draw, max_nodes=8):
    nv = draw(st.integers(1, max_nodes))
    pairs = [(i, j) for i in range(nv) for j in range(nv) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    w = {p: draw(weights) for p in chosen}
    fitness = draw(st.lists(st.integers(0, 20).map(lambda x: x / 20), min_size=nv, max_size=nv))
    go = draw(st.lists(st.integers(0, nv - 1), min_size=1, max_size=nv, unique=True))
    return nv, w, fitness, go


@settings(max_examples=120)
@given(small_graphs())
def test_every_metric_matches_oracle(case):
    nv, w, fitness, go = case
    got = compute_metrics(graph(nv, w, fitness, go)).to_dict()
    expected = oracles.metric_dict(nv, w, fitness, go)
    for key, value in expected.items():
        if value is None:
            assert got[key] is None, key
        else:
            assert got[key] is not None, key
            assert got[key] == pytest.approx(value, abs=1e-12), key


@given(small_graphs(), st.floats(0.1, 0.9))
def test_properties(case, scale):
    nv, w, fitness, go = case
    g = graph(nv, w, fitness, go)
    r = compute_metrics(g)
    assert 0 <= r.wcc_mean <= 1
    for c in (r.knn, r.fnn):
        assert c is None or -1 <= c <= 1
    assert r.l_go_mean >= 0
    # Pearson on normalised averages ignores a global rescaling
    scaled = compute_metrics(graph(nv, {k: v * scale for k, v in w.items()}, fitness, go))
    for a, b in ((r.knn, scaled.knn), (r.fnn, scaled.fnn)):
        assert (a is None) == (b is None)
        if a is not None:
            assert a == pytest.approx(b, abs=1e-9)
    y2 = node_disparity(g)
    z = g.out_degree()
    has = z >= 1
    assert (y2[has] >= 1 / z[has] - 1e-12).all() and (y2[has] <= 1 + 1e-12).all()
    cum, _, _ = local_point_clouds(g)
    assert cum.y[0] == 1.0 and (np.diff(cum.y) < 0).all()
    assert strength_disparity_degree(g) == pytest.approx(oracles.strength_summary(nv, w)) \
        if w else strength_disparity_degree(g) == (None, None, None)


@given(small_graphs(), st.data())
def test_raising_a_weight_never_lengthens_paths(case, data):
    nv, w, fitness, go = case
    assume(w)
    key = data.draw(st.sampled_from(sorted(w)))
    before = oracles.go_distances(nv, w, go)
    bumped = dict(w)
    bumped[key] = min(1.0, w[key] + data.draw(weights))
    g = graph(nv, bumped, fitness, go)
    after = oracles.go_distances(nv, bumped, go)
    assert all(a <= b + 1e-12 for a, b in zip(after, before))
    mean, _ = path_to_global_optima(g)
    fin = [x for x in after if x < math.inf]
    assert mean == pytest.approx(sum(fin) / len(fin), abs=1e-12)

"""Distances, components, eccentricity/diameter, average path length."""

import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import sid
from oracles import er_graph, floyd_warshall
from simplicent import (
    average_path_length,
    average_path_length_by_component,
    build_clique_complex,
    combined_adjacency,
    connected_components,
    diameter,
    eccentricities,
    eccentricity,
    generate_P,
    generate_S,
    generate_T,
    shortest_distances,
)


class TestNineNodeExample:
    def test_triangle_distance(self, fig):
        d = shortest_distances(fig, 2)
        assert d.dist[sid(fig, 2, "134"), sid(fig, 2, "234")] == 2

    def test_edge_distance(self, fig):
        d = shortest_distances(fig, 1)
        assert d.dist[sid(fig, 1, "24"), sid(fig, 1, "67")] == 2

    def test_self_distance_zero(self, fig):
        for k in range(3):
            d = shortest_distances(fig, k)
            assert (np.diag(d.dist) == 0).all()

    def test_component_structure(self, fig):
        assert connected_components(fig, 0).n_components == 1
        level1 = connected_components(fig, 1)
        assert level1.n_components == 3
        assert sorted(level1.sizes) == [1, 1, 12]
        lone = {sid(fig, 1, "12"), sid(fig, 1, "78")}
        for s in lone:
            assert level1.sizes[level1.labels[s]] == 1


class TestComponents:
    @pytest.mark.parametrize("l,k", [(4, 2), (3, 3)])
    def test_s_family_central_face_isolated_below(self, l, k):
        c = generate_S(l, k)
        labeling = connected_components(c, k - 1)
        central = c.simplex_id(k - 1, tuple(range(k)))
        assert labeling.sizes[labeling.labels[central]] == 1
        # ... while the level itself is connected
        assert connected_components(c, k).n_components == 1

    def test_single_simplex_is_singleton_component(self):
        c = generate_P(1, 2)
        labeling = connected_components(c, 2)
        assert labeling.sizes == [1]


class TestEccentricityDiameter:
    def test_t_family_worked_example(self):
        c = generate_T(2, [1, 2, 4])
        d = shortest_distances(c, 2)
        central = c.simplex_id(2, (0, 1, 2))
        assert eccentricity(d, central) == 1
        others = [i for i in range(d.n) if i != central]
        assert all(eccentricity(d, i) == 2 for i in others)
        assert diameter(d) == 2

    @pytest.mark.parametrize("l,k", [(5, 1), (4, 2), (3, 3)])
    def test_s_family_diameter_one(self, l, k):
        assert diameter(shortest_distances(generate_S(l, k), k)) == 1

    @pytest.mark.parametrize("l,k", [(2, 1), (5, 2), (7, 3)])
    def test_p_family_diameter(self, l, k):
        assert diameter(shortest_distances(generate_P(l, k), k)) == l - 1

    def test_singleton_eccentricity_zero(self):
        d = shortest_distances(generate_P(1, 1), 1)
        assert eccentricity(d, 0) == 0


class TestAveragePathLength:
    @pytest.mark.parametrize("l,k", [(2, 1), (5, 2), (9, 3)])
    def test_s_family_is_one(self, l, k):
        assert average_path_length(shortest_distances(generate_S(l, k), k)) == 1

    @pytest.mark.parametrize("l,k", [(2, 2), (4, 1), (7, 2), (10, 3)])
    def test_p_family_attains_upper_bound_exactly(self, l, k):
        d = shortest_distances(generate_P(l, k), k)
        total = int(d.dist.sum())  # both orientations
        assert Fraction(total, l * (l - 1)) == Fraction(l + 1, 3)

    def test_two_adjacent_simplices(self):
        assert average_path_length(shortest_distances(generate_P(2, 2), 2)) == 1

    def test_single_simplex_undefined(self):
        assert math.isnan(average_path_length(shortest_distances(generate_P(1, 2), 2)))

    def test_disconnected_level_rejected_but_per_component_works(self, fig):
        d = shortest_distances(fig, 2)
        with pytest.raises(ValueError, match="not connected"):
            average_path_length(d)
        labeling = connected_components(fig, 2)
        values = average_path_length_by_component(d, labeling)
        finite = [v for v in values if not math.isnan(v)]
        assert len(finite) == 1  # the 4-triangle component; isolated triangles are nan
        assert finite[0] == pytest.approx((1 + 1 + 1 + 2 + 2 + 2) / 6)


def test_distance_one_iff_adjacent(fig):
    for k in range(3):
        d = shortest_distances(fig, k)
        adj = combined_adjacency(fig, k).mat.toarray()
        assert ((d.dist == 1) == (adj == 1)).all()


@pytest.mark.parametrize("seed", range(8))
def test_metric_axioms_and_brute_force_agreement(seed):
    rng = np.random.default_rng(900 + seed)
    g = er_graph(int(rng.integers(8, 16)), float(rng.uniform(0.2, 0.5)), rng)
    c = build_clique_complex(g, 3)
    for k in range(3):
        if c.n_simplices(k) == 0:
            continue
        d = shortest_distances(c, k).dist
        assert (d == d.T).all()
        assert ((d == 0) == np.eye(d.shape[0], dtype=bool)).all()
        reference = floyd_warshall(combined_adjacency(c, k).mat.toarray())
        assert (d == reference).all()
        for mid in range(d.shape[0]):
            assert (d <= d[:, mid, None] + d[None, mid, :]).all()


@pytest.mark.parametrize("seed", range(5))
def test_lemma_bound_on_connected_levels(seed):
    rng = np.random.default_rng(50 + seed)
    g = er_graph(12, 0.35, rng)
    c = build_clique_complex(g, 3)
    for k in range(3):
        labeling = connected_components(c, k)
        if labeling.n_components != 1 or c.n_simplices(k) < 2:
            continue
        n = c.n_simplices(k)
        l_k = average_path_length(shortest_distances(c, k))
        assert 1 <= l_k <= (n + 1) / 3


def test_eccentricities_vector_matches_scalar(fig):
    d = shortest_distances(fig, 1)
    vec = eccentricities(d)
    assert vec.shape == (14,)
    for i in range(14):
        assert vec[i] == eccentricity(d, i)


def test_matrix_limit_guard(fig):
    with pytest.raises(ValueError, match="materialization"):
        shortest_distances(fig, 0, max_size=5)

"""Centrality measures against worked values and brute-force oracles."""

import numpy as np
import pytest
from scipy.linalg import expm

from conftest import sid
from oracles import (
    brute_betweenness,
    brute_closeness,
    brute_harmonic,
    er_graph,
    random_growth_complex,
)
from simplicent import (
    betweenness,
    build_clique_complex,
    closeness,
    combined_adjacency,
    communicability,
    compute,
    degree_centrality,
    eigenvector_centrality,
    generate_P,
    generate_S,
    generate_T,
    harmonic_closeness,
    katz,
    spectral_decomposition,
    subgraph_centrality,
    walk_count,
)


class TestDegree:
    def test_nine_node_level2_values(self, fig):
        deg = degree_centrality(fig, 2)
        assert deg.scores[sid(fig, 2, "123")] == 0
        assert deg.scores[sid(fig, 2, "345")] == 3

    def test_s_family_constant(self):
        deg = degree_centrality(generate_S(7, 2), 2)
        assert (deg.scores == 6).all()


class TestCloseness:
    def test_t_family_peripheral_worked_value(self):
        c = generate_T(2, [1, 2, 4])
        cl = closeness(c, 2)
        lone_arm = c.simplex_id(2, (1, 2, 3))  # the single simplex on face {1,2}
        assert cl.scores[lone_arm] == 7 / 13

    @pytest.mark.parametrize("l,k", [(2, 1), (6, 2), (4, 3)])
    def test_s_family_all_ones(self, l, k):
        assert (closeness(generate_S(l, k), k).scores == 1).all()

    @pytest.mark.parametrize("l,k", [(3, 1), (5, 2), (8, 3)])
    def test_p_family_end_value(self, l, k):
        c = generate_P(l, k)
        cl = closeness(c, k)
        end = c.simplex_id(k, tuple(range(k + 1)))
        assert cl.scores[end] == 2 / l

    def test_singleton_component_scored_zero(self, fig):
        cl = closeness(fig, 1)
        assert cl.scores[sid(fig, 1, "12")] == 0
        assert "singleton" in cl.note

    def test_unnormalized_is_reciprocal_farness(self):
        c = generate_P(4, 1)
        raw = closeness(c, 1, normalized=False)
        assert raw.scores[0] == 1 / (1 + 2 + 3)


class TestHarmonic:
    def test_nine_node_worked_value(self, fig):
        h = harmonic_closeness(fig, 2)
        assert h.scores[sid(fig, 2, "234")] == 2

    def test_isolated_simplex_zero(self, fig):
        h = harmonic_closeness(fig, 1)
        assert h.scores[sid(fig, 1, "78")] == 0

    @pytest.mark.parametrize("l,k", [(4, 1), (7, 2)])
    def test_s_family_value(self, l, k):
        assert (harmonic_closeness(generate_S(l, k), k).scores == l - 1).all()


class TestBetweenness:
    @pytest.mark.parametrize("k,x", [(1, [1, 1]), (2, [1, 1, 1]), (3, [1, 0, 1, 1])])
    def test_t_family_center_attains_one(self, k, x):
        c = generate_T(k, x)
        b = betweenness(c, k)
        center = c.simplex_id(k, tuple(range(k + 1)))
        assert b.scores[center] == 1.0

    @pytest.mark.parametrize("l,k", [(4, 1), (5, 2)])
    def test_s_family_all_zero(self, l, k):
        assert (betweenness(generate_S(l, k), k).scores == 0).all()

    def test_p3_middle_one_ends_zero(self):
        c = generate_P(3, 2)
        b = betweenness(c, 2)
        assert b.scores[c.simplex_id(2, (1, 2, 3))] == 1.0
        assert b.scores[c.simplex_id(2, (0, 1, 2))] == 0.0

    def test_normalized_needs_three_simplices(self):
        with pytest.raises(ValueError, match="at least 3"):
            betweenness(generate_P(2, 1), 1)


class TestWalkCount:
    def test_zero_is_identity(self, fig):
        assert (walk_count(fig, 1, 0) == np.eye(14, dtype=np.int64)).all()

    def test_one_is_adjacency(self, fig):
        assert (walk_count(fig, 1, 1) == combined_adjacency(fig, 1).mat.toarray()).all()

    def test_square_diagonal_is_degree(self, fig):
        w2 = walk_count(fig, 1, 2)
        deg = degree_centrality(fig, 1).scores
        assert (np.diag(w2) == deg).all()
        assert w2[sid(fig, 1, "14"), sid(fig, 1, "14")] == deg[sid(fig, 1, "14")]

    @pytest.mark.parametrize("m", range(7))
    def test_matches_spectral_reconstruction(self, fig, m):
        spec = spectral_decomposition(fig, 1)
        rebuilt = (spec.eigenvectors * spec.eigenvalues**m) @ spec.eigenvectors.T
        assert np.allclose(walk_count(fig, 1, m), rebuilt, atol=1e-8)


class TestKatz:
    def test_s_family_closed_form(self):
        c = generate_S(3, 2)  # underlying K3
        scores = katz(c, 2, alpha=0.25).scores
        assert np.allclose(scores, 2.0, atol=1e-12)
        for n, alph in [(5, 0.1), (8, 0.05)]:
            got = katz(generate_S(n, 2), 2, alpha=alph).scores
            assert np.allclose(got, 1 / (1 - alph * (n - 1)), atol=1e-12)

    def test_alpha_to_zero_gives_ones(self, fig):
        scores = katz(fig, 1, alpha=1e-12).scores
        assert np.allclose(scores, 1.0, atol=1e-9)

    def test_all_isolated_level_gives_ones(self):
        # a lone triangle: its edges are all upper adjacent, so the combined
        # level-1 adjacency is empty
        c = generate_T(2, [0, 0, 0])
        assert (katz(c, 1, alpha=0.3).scores == 1).all()

    def test_rejects_alpha_outside_interval(self, fig):
        lam = katz(fig, 1).params["lambda1"]
        with pytest.raises(ValueError) as err:
            katz(fig, 1, alpha=1.0 / lam)
        assert f"{1.0 / lam}" in str(err.value)
        with pytest.raises(ValueError):
            katz(fig, 1, alpha=-0.1)

    def test_default_alpha_matches_half_spectral_radius(self, fig):
        vec = katz(fig, 1)
        assert vec.params["alpha"] == pytest.approx(0.5 / vec.params["lambda1"])

    @pytest.mark.parametrize("seed", range(4))
    def test_solve_matches_series(self, seed):
        rng = np.random.default_rng(seed)
        g = er_graph(14, 0.3, rng)
        c = build_clique_complex(g, 3)
        for k in range(3):
            if combined_adjacency(c, k).mat.nnz == 0:
                continue
            vec = katz(c, k)
            mat = combined_adjacency(c, k).mat.toarray().astype(float)
            term = np.ones(mat.shape[0])
            series = term.copy()
            for _ in range(50):
                term = vec.params["alpha"] * (mat @ term)
                series += term
            assert np.allclose(vec.scores, series, rtol=1e-8)


class TestEigenvector:
    def test_s_family_uniform(self):
        vec = eigenvector_centrality(generate_S(4, 2), 2)
        assert np.allclose(vec.scores, 0.5, atol=1e-12)

    def test_path_center_dominates(self):
        vec = eigenvector_centrality(generate_P(3, 2), 2)
        assert vec.scores[1] > vec.scores[0]
        assert np.allclose(vec.scores, [0.5, np.sqrt(2) / 2, 0.5], atol=1e-10)

    def test_unit_norm_and_nonnegative(self, fig):
        vec = eigenvector_centrality(fig, 1)
        assert np.linalg.norm(vec.scores) == pytest.approx(1.0)
        assert (vec.scores >= 0).all()

    def test_error_when_no_adjacency(self):
        with pytest.raises(ValueError, match="no principal eigenvector"):
            eigenvector_centrality(generate_T(2, [0, 0, 0]), 1)

    def test_katz_limit_converges_to_principal_eigenvector(self, fig):
        vec = eigenvector_centrality(fig, 1)
        lam = vec.params["lambda1"]
        kz = katz(fig, 1, alpha=0.999 / lam).scores
        kz = kz / np.linalg.norm(kz)
        cosine = float(kz @ vec.scores)
        assert cosine >= 1 - 1e-6

    def test_degenerate_top_eigenvalue_stays_nonnegative(self):
        # two identical components -> multiplicity-2 dominant eigenvalue
        g_edges = [(0, 1), (1, 2), (3, 4), (4, 5)]
        from simplicent import Graph

        c = build_clique_complex(Graph([str(i) for i in range(6)], g_edges), 1)
        vec = eigenvector_centrality(c, 0)
        assert (vec.scores >= 0).all()
        assert np.linalg.norm(vec.scores) == pytest.approx(1.0)


class TestSubgraphCentrality:
    def test_nine_node_worked_values(self, fig):
        sg = subgraph_centrality(fig, 1)
        assert sg.scores[sid(fig, 1, "14")] == pytest.approx(2.714, abs=1e-3)
        comm = communicability(fig, 1, sid(fig, 1, "14"), sid(fig, 1, "69"))
        assert comm == pytest.approx(2.0363, abs=1e-3)

    def test_isolated_simplex_scores_one(self, fig):
        sg = subgraph_centrality(fig, 1)
        assert sg.scores[sid(fig, 1, "12")] == pytest.approx(1.0, abs=1e-12)

    def test_diagonal_at_least_one(self, fig):
        for k in range(3):
            assert (subgraph_centrality(fig, k).scores >= 1 - 1e-12).all()

    def test_matches_scipy_expm(self, fig):
        for k in range(3):
            mat = combined_adjacency(fig, k).mat.toarray().astype(float)
            assert np.allclose(subgraph_centrality(fig, k).scores, np.diag(expm(mat)), atol=1e-10)

    def test_exp_equals_cosh_plus_sinh(self, fig):
        spec = spectral_decomposition(fig, 1)
        v, w = spec.eigenvectors, spec.eigenvalues
        cosh = (v * np.cosh(w)) @ v.T
        sinh = (v * np.sinh(w)) @ v.T
        reference = expm(combined_adjacency(fig, 1).mat.toarray().astype(float))
        assert np.linalg.norm(reference - (cosh + sinh)) <= 1e-10

    def test_series_fallback_matches_dense(self, fig):
        dense = subgraph_centrality(fig, 1, method="dense").scores
        series = subgraph_centrality(fig, 1, method="series", series_tol=1e-10).scores
        assert np.allclose(dense, series, atol=1e-8)

    def test_auto_refuses_above_limit_with_hint(self, fig):
        with pytest.raises(ValueError, match="series"):
            subgraph_centrality(fig, 1, dense_limit=4)

    def test_extremal_families(self):
        l, k = 8, 2
        s_val = subgraph_centrality(generate_S(l, k), k).scores.max()
        p_scores = subgraph_centrality(generate_P(l, k), k).scores
        rng = np.random.default_rng(3)
        for _ in range(10):
            sample = random_growth_complex(l, k, rng)
            scores = subgraph_centrality(sample, k).scores
            assert scores.max() <= s_val + 1e-9
            assert scores.min() >= p_scores.min() - 1e-9


class TestRankingConsistency:
    MEASURE_CALLS = ["degree", "closeness", "harmonic", "betweenness", "katz", "eigenvector", "subgraph"]

    @pytest.mark.parametrize("measure", MEASURE_CALLS)
    def test_constant_on_s_family(self, measure):
        scores = compute(generate_S(6, 2), 2, measure).scores
        assert np.allclose(scores, scores[0], atol=1e-10)

    @pytest.mark.parametrize("measure", MEASURE_CALLS)
    def test_mirror_symmetric_on_p_family(self, measure):
        scores = compute(generate_P(7, 2), 2, measure).scores
        assert np.allclose(scores, scores[::-1], atol=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_shortest_path_measures_match_exhaustive_enumeration(seed):
    rng = np.random.default_rng(7000 + seed)
    c = random_growth_complex(int(rng.integers(3, 11)), int(rng.integers(1, 4)), rng)
    k = c.max_level - 1
    adj = combined_adjacency(c, k).mat.toarray()
    want_b = brute_betweenness(adj)
    want_c = brute_closeness(adj, normalized=True)
    want_h = brute_harmonic(adj)
    got_b = betweenness(c, k, normalized=False).scores
    got_c = closeness(c, k).scores
    got_h = harmonic_closeness(c, k).scores
    for i in range(adj.shape[0]):
        assert abs(got_b[i] - float(want_b[i])) <= 1e-12
        assert abs(got_c[i] - float(want_c[i])) <= 1e-12
        assert abs(got_h[i] - float(want_h[i])) <= 1e-12


def test_compute_dispatch_unknown_measure(fig):
    with pytest.raises(ValueError, match="unknown measure"):
        compute(fig, 1, "pagerank")


def test_threaded_results_identical(fig):
    for measure in ("closeness", "betweenness", "harmonic"):
        single = compute(fig, 1, measure, threads=1).scores
        multi = compute(fig, 1, measure, threads=4).scores
        assert (single == multi).all()

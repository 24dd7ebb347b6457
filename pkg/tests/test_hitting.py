from fractions import Fraction

import pytest

from growtree import (
    Graph,
    WalkConfig,
    build_path,
    build_star,
    default_max_steps,
    laplacian_spectrum,
    mean_hitting_time_spectral,
    mean_hitting_time_tree,
    random_tree,
    simulate_hitting_time,
    simulate_mean_hitting_time,
)
from growtree.errors import DisconnectedError, SpectralSizeError, WalkCapError


def test_tree_formula_values():
    assert mean_hitting_time_tree(build_path(2)) == 1
    assert mean_hitting_time_tree(build_path(3)) == Fraction(8, 3)
    assert mean_hitting_time_tree(build_star(4)) == Fraction(9, 2)


def test_spectrum_p2():
    eig = laplacian_spectrum(build_path(2).graph).eigenvalues
    assert eig[0] == pytest.approx(0.0, abs=1e-12)
    assert eig[1] == pytest.approx(2.0, abs=1e-12)


def test_spectrum_p3():
    eig = laplacian_spectrum(build_path(3).graph).eigenvalues
    assert eig == pytest.approx((0.0, 1.0, 3.0), abs=1e-9)


def test_spectrum_star():
    eig = laplacian_spectrum(build_star(4).graph).eigenvalues
    assert eig == pytest.approx((0.0, 1.0, 1.0, 4.0), abs=1e-9)


def test_spectrum_trace_equals_degree_sum():
    for seed in range(5):
        g = random_tree(40, seed).graph
        spec = laplacian_spectrum(g)
        assert sum(spec.eigenvalues) == pytest.approx(
            sum(g.degree_sequence()), rel=1e-8
        )
        # exactly one near-zero eigenvalue on a connected graph
        tol = spec.zero_tolerance()
        assert sum(1 for lam in spec.eigenvalues if lam < tol) == 1


def test_spectral_values():
    assert mean_hitting_time_spectral(build_path(2).graph) == pytest.approx(1.0, abs=1e-9)
    assert mean_hitting_time_spectral(build_path(3).graph) == pytest.approx(
        8 / 3, abs=1e-9
    )
    assert mean_hitting_time_spectral(build_star(4).graph) == pytest.approx(
        4.5, abs=1e-9
    )


def test_spectral_matches_tree_formula_on_random_trees():
    for seed in range(10):
        t = random_tree(150, seed)
        exact = float(mean_hitting_time_tree(t))
        assert mean_hitting_time_spectral(t.graph) == pytest.approx(exact, rel=1e-6)


def test_spectral_rejects_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        mean_hitting_time_spectral(g)


def test_spectral_size_cap():
    with pytest.raises(SpectralSizeError):
        laplacian_spectrum(build_path(2001).graph)


def test_forced_moves_are_exact():
    cfg = WalkConfig(trials=500, rng_seed=3, max_steps=1000)
    assert simulate_hitting_time(build_path(2).graph, 0, 1, cfg) == 1.0
    # a leaf's only neighbor is the star center
    assert simulate_hitting_time(build_star(4).graph, 1, 0, cfg) == 1.0


def test_p3_end_to_end_hitting_time():
    cfg = WalkConfig(trials=200_000, rng_seed=17, max_steps=100_000)
    est = simulate_hitting_time(build_path(3).graph, 0, 2, cfg)
    assert est == pytest.approx(4.0, abs=0.05)


def test_mean_hitting_determinism_across_threads():
    g = build_star(4).graph
    cfg = WalkConfig(trials=20_000, rng_seed=99, max_steps=10_000)
    results = {simulate_mean_hitting_time(g, cfg, threads=k) for k in (1, 2, 5)}
    assert len(results) == 1


def test_mean_hitting_matches_exact_within_3_sigma():
    cfg = WalkConfig(trials=100_000, rng_seed=7, max_steps=100_000)
    for tree in (build_path(3), build_star(4)):
        mean, se = simulate_mean_hitting_time(tree.graph, cfg)
        exact = float(mean_hitting_time_tree(tree))
        assert abs(mean - exact) <= 3 * se


def test_walk_cap_error():
    cfg = WalkConfig(trials=10, rng_seed=1, max_steps=1)
    with pytest.raises(WalkCapError):
        simulate_hitting_time(build_path(5).graph, 0, 4, cfg)


def test_default_max_steps():
    assert default_max_steps(10) == 10_000


def test_walk_config_validation():
    with pytest.raises(ValueError):
        WalkConfig(trials=0, rng_seed=0, max_steps=10)
    with pytest.raises(ValueError):
        WalkConfig(trials=1, rng_seed=0, max_steps=0)

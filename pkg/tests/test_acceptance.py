"""End-to-end acceptance gate.

Each test covers one acceptance criterion and prints a single pass/fail
line (bypassing capture) so the gate is auditable from the pytest log.
All exact checks use zero tolerance; statistical checks state their
sigma budget inline.
"""
import math
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from growtree import (
    Family,
    ModelParams,
    OpSpec,
    RandomModelSpec,
    WalkConfig,
    apply_op,
    ba_mean_path_closed_form,
    ba_mean_path_float,
    build_path,
    build_star,
    degree_wiener_additive,
    degree_wiener_multiplicative,
    expected_wiener_enumeration,
    expected_wiener_monte_carlo,
    extremal_bounds,
    generate_ba_tree,
    generate_uniform_tree,
    line_graph_wiener,
    mean_hitting_time_spectral,
    mean_hitting_time_tree,
    model_mht,
    model_size,
    random_tree,
    simulate_mean_hitting_time,
    uniform_mean_path_closed_form,
    uniform_wiener_recurrence,
    validate_tree,
    wiener_index,
)
from growtree.errors import SizeLimitError
from growtree.kernels import stream_seed
from growtree.randgrow import _tree_from_spec
from growtree.verify import (
    suite_bounds,
    suite_constants,
    suite_identities,
    suite_generations,
    suite_one_step,
    suite_variants,
)

RNG_SEED = 0x5EED_2026


@contextmanager
def criterion(number, label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} [{label}]: FAIL", file=sys.__stdout__)
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {number:2d} [{label}]: PASS ({elapsed:.2f}s)",
          file=sys.__stdout__)


def _assert_suite(checks):
    for check in checks:
        assert check["passed"], check["counterexample"]


def test_criterion_1_one_step_formulas():
    # six families x 100 random seeds (n <= 12) x admissible m in 1..4,
    # exact equality against the BFS oracle
    with criterion(1, "one-step formulas"):
        start = time.perf_counter()
        _assert_suite(suite_one_step(trees=100, max_n=12, max_m=4,
                                     rng_seed=RNG_SEED))
        assert time.perf_counter() - start < 30


def test_criterion_2_full_vs_simplified():
    # full expressions equal the simplified polynomials for m in [1,6],
    # n in [2,50], W at both extremal boundaries; exact
    with criterion(2, "full vs simplified"):
        start = time.perf_counter()
        _assert_suite(suite_identities(max_m=6, max_n=50))
        assert time.perf_counter() - start < 1


def test_criterion_3_generation_t_hitting_times():
    # unrolled model equals 2 W_oracle / n on constructed generation-t
    # trees, seeds {P2, P3, P4, S3}, m in 1..3, t in 0..3; exact rationals
    with criterion(3, "generation-t hitting times"):
        start = time.perf_counter()
        _assert_suite(suite_generations(max_t=3, max_m=3))
        assert model_mht(ModelParams(Family.SUBDIVISION, 1, 2, 1, 2)) == 8
        assert model_mht(ModelParams(Family.TYPE3, 3, 2, 1, 1)) == Fraction(29, 3)
        assert time.perf_counter() - start < 60


def test_criterion_4_structural_variants():
    # line-graph and degree-weighted Wiener closed forms vs construction
    # on 100 random trees, plus the P3 worked values
    with criterion(4, "line-graph and degree variants"):
        start = time.perf_counter()
        _assert_suite(suite_variants(trees=100, max_n=12, rng_seed=RNG_SEED))
        p3 = validate_tree(build_path(3).graph)
        assert line_graph_wiener(p3) == (1, 1)
        assert degree_wiener_multiplicative(p3) == (6, 6)
        assert degree_wiener_additive(p3) == (10, 10)
        assert time.perf_counter() - start < 10


def test_criterion_5_spectral_cross_check():
    # spectral mean hitting time within 1e-6 relative of the exact tree
    # formula on 50 random trees n <= 200; worked values to 1e-9
    with criterion(5, "spectral cross-check"):
        start = time.perf_counter()
        for i in range(50):
            t = random_tree(2 + (i * 4) % 199, RNG_SEED + i)
            exact = float(mean_hitting_time_tree(t))
            got = mean_hitting_time_spectral(t.graph)
            assert abs(got - exact) <= 1e-6 * exact, (i, got, exact)
        assert mean_hitting_time_spectral(build_path(3).graph) == pytest.approx(
            8 / 3, abs=1e-9)
        assert mean_hitting_time_spectral(build_star(4).graph) == pytest.approx(
            4.5, abs=1e-9)
        assert time.perf_counter() - start < 60


def test_criterion_6_monte_carlo_hitting():
    # 1e5 walks within 3 standard errors of the exact value, and the
    # estimate is bit-identical across reruns and thread counts
    with criterion(6, "Monte Carlo hitting times"):
        start = time.perf_counter()
        cfg = WalkConfig(trials=100_000, rng_seed=RNG_SEED, max_steps=100_000)
        for tree in (build_path(2), build_path(3), build_star(4)):
            mean, se = simulate_mean_hitting_time(tree.graph, cfg)
            exact = float(mean_hitting_time_tree(tree))
            assert abs(mean - exact) <= 3 * se, (tree.n, mean, exact, se)
        g = build_path(3).graph
        runs = {simulate_mean_hitting_time(g, cfg, threads=k)
                for k in (1, 4, 7, 1)}
        assert len(runs) == 1
        assert time.perf_counter() - start < 60


def test_criterion_7_random_models():
    # generators always yield valid trees on t+2 vertices; Monte Carlo
    # E[W] matches the enumeration oracle within 4 SE at 1e5 trials; the
    # published recurrence/closed forms are reported, not asserted
    with criterion(7, "random growth models"):
        start = time.perf_counter()
        for kind, gen in (("ba", generate_ba_tree),
                          ("uniform", generate_uniform_tree)):
            for t in (0, 1, 4, 9):
                tree = gen(RandomModelSpec(kind, t, RNG_SEED + t))
                assert tree.n == t + 2
                validate_tree(tree.graph)
        for kind, t, exact in (("ba", 1, Fraction(4)),
                               ("ba", 2, Fraction(19, 2)),
                               ("uniform", 2, Fraction(29, 3))):
            assert expected_wiener_enumeration(kind, t) == exact
            mean, se = expected_wiener_monte_carlo(kind, t, 100_000, RNG_SEED)
            assert abs(mean - float(exact)) <= 4 * se, (kind, t, mean, se)
        trials = 100_000
        stars = sum(
            1 for i in range(trials)
            if max(_tree_from_spec("uniform", 2,
                                   stream_seed(RNG_SEED, i, 0)
                                   ).graph.degree_sequence()) == 3)
        se = math.sqrt((1 / 3) * (2 / 3) / trials)
        assert abs(stars / trials - 1 / 3) <= 4 * se
        # published formulas: computed and reported only (documented
        # discrepancy with the oracle at small t)
        reported = (uniform_wiener_recurrence(1),
                    uniform_mean_path_closed_form(1),
                    ba_mean_path_closed_form(1))
        assert all(v > 0 for v in reported)
        ratios = [ba_mean_path_float(t) / math.log(t)
                  for t in (100, 1_000, 10_000)]
        assert all(r < 50 for r in ratios)
        assert time.perf_counter() - start < 120


def test_criterion_8_extremal_bounds():
    # (n-1)^2 <= W <= C(n+1,3) on every tree touched here, with star and
    # path equality witnesses for n in [2,50]
    with criterion(8, "extremal bounds"):
        start = time.perf_counter()
        _assert_suite(suite_bounds(max_n=50))
        produced = [random_tree(2 + (i % 11), RNG_SEED + i) for i in range(100)]
        for family in Family:
            tree = build_path(2)
            for _ in range(3):
                try:
                    tree = apply_op(tree, OpSpec(family, 2))
                except Exception:
                    break
                produced.append(tree)
        for tree in produced:
            lower, upper = extremal_bounds(tree.n)
            assert lower <= wiener_index(tree.graph) <= upper
        assert time.perf_counter() - start < 10


def test_criterion_9_constant_term_pattern():
    # simplified-form constant term vanishes exactly for the two
    # degree-independent families and is nonzero for the other three
    with criterion(9, "constant-term pattern"):
        start = time.perf_counter()
        _assert_suite(suite_constants(max_m=20))
        assert time.perf_counter() - start < 1


def test_criterion_10_scale_demonstration():
    # closed form handles a ~1e21-vertex tree in under a second via big
    # integers; explicit construction is refused; both paths agree
    # exactly wherever construction is feasible
    with criterion(10, "closed-form scale"):
        family, m = Family.TYPE2, 2
        params = ModelParams(family, m, 2, 1, 30)
        start = time.perf_counter()
        value = model_mht(params)
        assert time.perf_counter() - start < 1
        assert model_size(params) == 5**30 + 1
        assert value > 0
        with pytest.raises(SizeLimitError):
            tree = build_path(2)
            for _ in range(30):
                tree = apply_op(tree, OpSpec(family, m))
        tree = build_path(2)
        for t in range(6):
            p = ModelParams(family, m, 2, 1, t)
            assert model_size(p) == tree.n
            assert model_mht(p) == mean_hitting_time_tree(tree)
            tree = apply_op(tree, OpSpec(family, m))

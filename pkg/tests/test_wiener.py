from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from growtree import (
    Family,
    OpSpec,
    apply_op,
    build_path,
    build_star,
    degree_wiener_additive,
    degree_wiener_multiplicative,
    extremal_bounds,
    line_graph_wiener,
    mean_shortest_path,
    random_tree,
    wiener_index,
    wiener_one_step,
    wiener_polynomial,
)
from growtree.ops import apply_tfractal
from growtree.wiener import wiener_full_form


def test_wiener_small_graphs():
    assert wiener_index(build_path(3).graph) == 4
    assert wiener_index(build_star(4).graph) == 9


def test_wiener_t_graph_gen2():
    t = apply_tfractal(apply_tfractal(build_path(2), 1), 1)
    assert wiener_index(t.graph) == 117


def test_mean_shortest_path():
    assert mean_shortest_path(build_path(2).graph) == 1
    assert mean_shortest_path(build_path(3).graph) == Fraction(4, 3)
    assert mean_shortest_path(build_star(4).graph) == Fraction(3, 2)


@pytest.mark.parametrize(
    "family, m, W, n, expected",
    [
        (Family.SUBDIVISION, 2, 4, 3, 56),
        (Family.TYPE2, 1, 4, 3, 44),
        (Family.TYPE3, 3, 1, 2, 29),
        (Family.VFRACTAL, 2, 1, 2, 35),
    ],
)
def test_one_step_known_values(family, m, W, n, expected):
    assert wiener_one_step(family, m, W, n) == expected


@pytest.mark.parametrize(
    "family, m, expected_c1",
    [
        (Family.TYPE1, 5, 0),
        (Family.VFRACTAL, 7, 0),
        (Family.SUBDIVISION, 2, -1),
        (Family.TYPE2, 1, 5),
    ],
)
def test_polynomial_constant_terms(family, m, expected_c1):
    assert wiener_polynomial(family, m).c_1 == expected_c1


def test_subdivision_m1_constant_vanishes():
    # arithmetic accident: m(m²-1)/6 = 0 at m = 1
    assert wiener_polynomial(Family.SUBDIVISION, 1).c_1 == 0


@settings(deadline=None)
@given(st.sampled_from(list(Family)), st.integers(1, 6), st.integers(2, 50))
def test_full_form_equals_simplified(family, m, n):
    poly = wiener_polynomial(family, m)
    for W in extremal_bounds(n):
        assert wiener_full_form(family, m, W, n) == poly.evaluate(W, n)


@settings(deadline=None, max_examples=60)
@given(
    st.sampled_from(list(Family)),
    st.integers(1, 4),
    st.integers(2, 12),
    st.integers(0, 2**32),
)
def test_one_step_matches_construction(family, m, n, seed):
    t = random_tree(n, seed)
    if family in (Family.VFRACTAL, Family.TYPE3) and m < t.graph.max_degree():
        return
    grown = apply_op(t, OpSpec(family, m))
    assert wiener_one_step(family, m, wiener_index(t.graph), t.n) == wiener_index(
        grown.graph
    )


def test_degree_wiener_multiplicative_values():
    assert degree_wiener_multiplicative(build_path(2))[0] == 1
    assert degree_wiener_multiplicative(build_path(3))[0] == 6
    assert degree_wiener_multiplicative(build_path(4))[0] == 19


def test_degree_wiener_additive_values():
    assert degree_wiener_additive(build_path(2))[0] == 2
    assert degree_wiener_additive(build_path(3))[0] == 10
    assert degree_wiener_additive(build_path(4))[0] == 28


def test_line_graph_wiener_values():
    assert line_graph_wiener(build_path(3)) == (1, 1)
    assert line_graph_wiener(build_star(4)) == (3, 3)


def test_line_graph_wiener_double_spider():
    from growtree.ops import apply_type3

    spider = apply_type3(build_path(2), 3)
    assert line_graph_wiener(spider) == (14, 14)


@given(st.integers(2, 16), st.integers(0, 2**32))
def test_degree_variants_consistent_on_random_trees(n, seed):
    t = random_tree(n, seed)
    # both routes computed inside; a mismatch raises
    degree_wiener_multiplicative(t)
    degree_wiener_additive(t)
    line_graph_wiener(t)


def test_extremal_bounds_values():
    assert extremal_bounds(4) == (9, 10)
    assert extremal_bounds(2) == (1, 1)
    assert extremal_bounds(10) == (81, 165)


@given(st.integers(2, 20), st.integers(0, 2**32))
def test_every_tree_within_bounds(n, seed):
    t = random_tree(n, seed)
    lo, hi = extremal_bounds(n)
    assert lo <= wiener_index(t.graph) <= hi

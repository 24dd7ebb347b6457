"""Backend equivalence: the compiled extension and the pure-Python
fallback must be bit-identical on every kernel."""
import numpy as np
import pytest

from growtree import build_path, random_tree
from growtree import _pykernels as py

ck = pytest.importorskip("growtree._ckernels")


def test_mix64_agrees():
    for x in (0, 1, 42, 2**63, 2**64 - 1):
        assert py.mix64(x) == ck.mix64(x)


def test_u64_next_agrees():
    state = 12345
    for _ in range(100):
        (s1, z1), (s2, z2) = py.u64_next(state), ck.u64_next(state)
        assert (s1, z1) == (s2, z2)
        state = s1


def test_stream_seed_agrees():
    for seed in (0, 7, 2**64 - 1):
        for a in (0, 3, 999):
            for b in (0, 1, 12345):
                assert py.stream_seed(seed, a, b) == ck.stream_seed(seed, a, b)


def test_all_pairs_bfs_agrees():
    for seed in range(5):
        g = random_tree(30, seed).graph
        indptr, indices = g.csr()
        assert np.array_equal(
            py.all_pairs_bfs(indptr, indices, g.n),
            ck.all_pairs_bfs(indptr, indices, g.n),
        )


def test_hitting_walk_agrees():
    g = build_path(6).graph
    indptr, indices = g.csr()
    for state in (1, 99, 2**60):
        assert py.hitting_walk(indptr, indices, 0, 5, state, 10**6) == ck.hitting_walk(
            indptr, indices, 0, 5, state, 10**6
        )


def test_hitting_trials_agrees():
    g = random_tree(8, 4).graph
    indptr, indices = g.csr()
    assert py.hitting_trials(indptr, indices, 0, 7, 3, 200, 55, 10**6) == tuple(
        ck.hitting_trials(indptr, indices, 0, 7, 3, 200, 55, 10**6)
    )


def test_hitting_trials_cap_flag_agrees():
    g = build_path(10).graph
    indptr, indices = g.csr()
    a = py.hitting_trials(indptr, indices, 0, 9, 0, 5, 1, 2)
    b = tuple(ck.hitting_trials(indptr, indices, 0, 9, 0, 5, 1, 2))
    assert a == b
    assert a[0] is False  # capped

"""Pure-Python kernels: BFS sweeps and random-walk simulation.

The compiled extension in ``_ckernels.pyx`` implements the exact same
contracts (including the splitmix64 stream), so results are bit-identical
whichever backend is selected.
"""
from collections import deque

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z):
    """splitmix64 finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def u64_next(state):
    """Advance a splitmix64 stream; returns (new_state, output)."""
    state = (state + GOLDEN) & MASK64
    return state, mix64(state)


def stream_seed(seed, a, b):
    """Derive an independent substream state from (seed, a, b).

    Used to give every (pair, trial) its own stream so that parallel
    scheduling cannot change results.
    """
    x = (seed + GOLDEN * (a + 1)) & MASK64
    x = mix64(x)
    x = (x + GOLDEN * (b + 1)) & MASK64
    return mix64(x)


def all_pairs_bfs(indptr, indices, n):
    """Hop distances from every source; -1 marks unreachable pairs."""
    d = np.full((n, n), -1, dtype=np.int64)
    ip = indptr.tolist()
    ix = indices.tolist()
    for src in range(n):
        row = d[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du1 = row[u] + 1
            for k in range(ip[u], ip[u + 1]):
                v = ix[k]
                if row[v] < 0:
                    row[v] = du1
                    queue.append(v)
    return d


def hitting_walk(indptr, indices, src, dst, state, max_steps):
    """One first-passage walk; returns step count, or -1 if capped."""
    u = src
    steps = 0
    # plain lists keep z % deg in Python-int arithmetic (z can exceed 2**63)
    ip = indptr if isinstance(indptr, list) else indptr.tolist()
    ix = indices if isinstance(indices, list) else indices.tolist()
    while u != dst:
        if steps >= max_steps:
            return -1
        lo = ip[u]
        deg = ip[u + 1] - lo
        state, z = u64_next(state)
        u = ix[lo + z % deg]
        steps += 1
    return steps


def hitting_trials(indptr, indices, src, dst, pair_id, trials, seed, max_steps):
    """Sum and sum-of-squares of first-passage times over trials.

    Returns (ok, total, total_sq); ok is False when some walk hit the
    step cap, with total holding the offending trial index.
    """
    ip = indptr.tolist()
    ix = indices.tolist()
    total = 0
    total_sq = 0
    for trial in range(trials):
        state = stream_seed(seed, pair_id, trial)
        steps = hitting_walk(ip, ix, src, dst, state, max_steps)
        if steps < 0:
            return False, trial, 0
        total += steps
        total_sq += steps * steps
    return True, total, total_sq

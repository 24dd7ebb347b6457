# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: BFS sweeps and random-walk simulation.

Mirrors _pykernels.py exactly, including the splitmix64 stream, so the
two backends produce bit-identical results.
"""
import numpy as np

cimport numpy as cnp

cdef unsigned long long GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline unsigned long long _mix64(unsigned long long z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def mix64(z):
    return _mix64(<unsigned long long> z)


def u64_next(state):
    cdef unsigned long long s = (<unsigned long long> state) + GOLDEN
    return s, _mix64(s)


cdef unsigned long long _stream_seed(unsigned long long seed,
                                     unsigned long long a,
                                     unsigned long long b) nogil:
    cdef unsigned long long x = seed + GOLDEN * (a + 1)
    x = _mix64(x)
    x = x + GOLDEN * (b + 1)
    return _mix64(x)


def stream_seed(seed, a, b):
    return _stream_seed(<unsigned long long> seed,
                        <unsigned long long> a,
                        <unsigned long long> b)


def all_pairs_bfs(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices, int n):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] d = np.full((n, n), -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] dv = d
    cdef cnp.int64_t[::1] q = queue
    cdef int src, u, v
    cdef long long k, head, tail, du1
    for src in range(n):
        dv[src, src] = 0
        q[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = <int> q[head]
            head += 1
            du1 = dv[src, u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                v = <int> indices[k]
                if dv[src, v] < 0:
                    dv[src, v] = du1
                    q[tail] = v
                    tail += 1
    return d


cdef long long _walk(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
                     int src, int dst, unsigned long long state,
                     long long max_steps) nogil:
    cdef int u = src
    cdef long long steps = 0
    cdef long long lo, deg
    while u != dst:
        if steps >= max_steps:
            return -1
        lo = indptr[u]
        deg = indptr[u + 1] - lo
        state = state + GOLDEN
        u = <int> indices[lo + <long long> (_mix64(state) % <unsigned long long> deg)]
        steps += 1
    return steps


def hitting_walk(indptr, indices, src, dst, state, max_steps):
    return _walk(indptr, indices, src, dst,
                 <unsigned long long> state, <long long> max_steps)


def hitting_trials(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices,
                   int src, int dst, long long pair_id, long long trials,
                   seed, long long max_steps):
    cdef unsigned long long s = <unsigned long long> seed
    cdef unsigned long long total = 0, total_sq = 0
    cdef long long trial, steps
    for trial in range(trials):
        steps = _walk(indptr, indices, src, dst,
                      _stream_seed(s, <unsigned long long> pair_id,
                                   <unsigned long long> trial),
                      max_steps)
        if steps < 0:
            return False, trial, 0
        total += <unsigned long long> steps
        total_sq += <unsigned long long> (steps * steps)
    return True, total, total_sq

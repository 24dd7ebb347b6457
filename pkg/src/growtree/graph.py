"""Graph and Tree substrate: construction, validation, distances, line graphs.

Vertex ids are dense integers 0..n-1. All structures are immutable after
construction, so instances can be shared freely across threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DisconnectedError,
    EdgeListParseError,
    InvalidSeedError,
    NotATreeError,
    SizeLimitError,
)
from .kernels import all_pairs_bfs

# Explicit construction is capped at desk scale; beyond this the
# closed-form model evaluators are the supported route.
MAX_EXPLICIT_VERTICES = 100_000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build from an iterable of (u, v) pairs, validating simplicity."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if n > MAX_EXPLICIT_VERTICES:
            raise SizeLimitError(
                f"explicit graph with {n} vertices exceeds the "
                f"{MAX_EXPLICIT_VERTICES}-vertex cap"
            )
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in adj))

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree_sequence(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == self.n

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices) for the kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for u in range(self.n):
            indptr[u + 1] = indptr[u] + len(self.adjacency[u])
        indices = np.fromiter(
            (v for a in self.adjacency for v in a), dtype=np.int64, count=indptr[-1]
        )
        return indptr, indices

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Tree:
    """A validated Graph: connected, acyclic, with at least one edge."""

    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges


@dataclass(frozen=True)
class DistanceMatrix:
    """Exact hop distances between all vertex pairs."""

    n: int
    d: np.ndarray = field(repr=False)

    def __getitem__(self, uv):
        u, v = uv
        return int(self.d[u, v])

    def total(self) -> int:
        """Sum of d[u][v] over all ordered pairs (twice the Wiener index)."""
        return int(self.d.sum())


def build_path(n: int) -> Tree:
    """Path 0-1-...-(n-1); the Wiener-index upper-bound witness."""
    if n < 2:
        raise InvalidSeedError(f"path seed needs n >= 2, got {n}")
    return Tree(Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)]))


def build_star(n: int) -> Tree:
    """Star with center 0; the Wiener-index lower-bound witness."""
    if n < 2:
        raise InvalidSeedError(f"star seed needs n >= 2, got {n}")
    return Tree(Graph.from_edges(n, [(0, i) for i in range(1, n)]))


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated edge pairs, one per line, '#' comments.

    Vertex set is 0..max_id; every id below the maximum must appear as an
    endpoint, otherwise the gap is reported as a missing vertex.
    """
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    seen_ids: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two vertex ids, got {len(tokens)} tokens", lineno
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer token in {tokens!r}", lineno)
        if u < 0 or v < 0:
            raise EdgeListParseError("negative vertex id", lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            raise EdgeListParseError(f"duplicate edge {key}", lineno)
        seen_edges.add(key)
        seen_ids.update(key)
        edges.append(key)
    n = max(seen_ids) + 1 if seen_ids else 0
    missing = sorted(set(range(n)) - seen_ids)
    if missing:
        raise EdgeListParseError(f"missing vertex ids {missing} below max id {n - 1}")
    return Graph.from_edges(n, edges)


def validate_tree(g: Graph) -> Tree:
    """Wrap g as a Tree, naming the violated condition on failure."""
    if g.n < 2:
        raise NotATreeError(f"tree needs at least 2 vertices, got {g.n}")
    e = g.num_edges
    if e != g.n - 1:
        kind = "cycle" if e > g.n - 1 else "disconnected"
        raise NotATreeError(f"{g.n} vertices with {e} edges ({kind})")
    if not g.is_connected():
        raise NotATreeError("graph is disconnected")
    return Tree(g)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop distances via one BFS per source."""
    indptr, indices = g.csr()
    d = all_pairs_bfs(indptr, indices, g.n)
    if g.n > 0 and (d < 0).any():
        raise DisconnectedError("graph is disconnected; distances are infinite")
    return DistanceMatrix(g.n, d)


def line_graph(t: Tree) -> Graph:
    """Graph on the n-1 edges of t, adjacent when sharing an endpoint.

    Line-graph vertex i is the i-th edge of t in lexicographic
    (min, max) order.
    """
    tree_edges = t.graph.edges()
    index = {e: i for i, e in enumerate(tree_edges)}
    lg_edges = []
    # edges incident to a common vertex u form a clique
    for u in range(t.n):
        inc = [index[(min(u, v), max(u, v))] for v in t.graph.adjacency[u]]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                x, y = inc[a], inc[b]
                lg_edges.append((min(x, y), max(x, y)))
    return Graph.from_edges(len(tree_edges), sorted(set(lg_edges)))


def degree_sequence(g: Graph) -> list[int]:
    return g.degree_sequence()


def random_tree(n: int, rng_seed: int) -> Tree:
    """Uniform random attachment tree on n vertices, reproducible by seed.

    Vertex s (s >= 1) attaches to a uniformly random earlier vertex.
    """
    from .kernels import stream_seed, u64_next

    if n < 2:
        raise InvalidSeedError(f"random tree needs n >= 2, got {n}")
    state = stream_seed(rng_seed, 0, 0)
    edges = [(0, 1)]
    for s in range(2, n):
        state, z = u64_next(state)
        edges.append((int(z % s), s))
    return Tree(Graph.from_edges(n, edges))

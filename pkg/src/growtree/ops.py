"""The six primitive growth operations on trees, plus pipelines.

New-vertex numbering is canonical so runs are reproducible: original
vertices keep their ids, edge-driven insertions process edges in
lexicographic (min, max) order, and vertex-driven leaf attachment
processes vertices in increasing id order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParameterError, SaturationError, SizeLimitError
from .graph import MAX_EXPLICIT_VERTICES, Graph, Tree, validate_tree


class Family(enum.Enum):
    SUBDIVISION = "subdiv"
    TYPE1 = "type1"
    TFRACTAL = "tfractal"
    VFRACTAL = "vfractal"
    TYPE2 = "type2"
    TYPE3 = "type3"

    @classmethod
    def parse(cls, name: str) -> "Family":
        for fam in cls:
            if fam.value == name:
                return fam
        raise ParameterError(f"unknown operation family {name!r}")


# families whose precondition is m >= max degree of the target tree
SATURATING = (Family.VFRACTAL, Family.TYPE3)


@dataclass(frozen=True)
class OpSpec:
    """One growth operation with its order parameter."""

    family: Family
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(f"order parameter must be >= 1, got {self.m}")

    def __str__(self) -> str:
        return f"{self.family.value}:{self.m}"

    @classmethod
    def parse(cls, text: str) -> "OpSpec":
        name, sep, m_str = text.partition(":")
        if not sep:
            raise ParameterError(f"expected 'family:m', got {text!r}")
        try:
            m = int(m_str)
        except ValueError:
            raise ParameterError(f"non-integer order parameter in {text!r}")
        return cls(Family.parse(name), m)


def parse_pipeline(text: str) -> list[OpSpec]:
    """Comma-separated OpSpec strings; empty text is the identity."""
    text = text.strip()
    if not text:
        return []
    return [OpSpec.parse(part.strip()) for part in text.split(",")]


def size_after(spec: OpSpec, n: int, e: int) -> tuple[int, int]:
    """Exact (|V'|, |E'|) for one application on any (n, e) graph."""
    m = spec.m
    if spec.family is Family.SUBDIVISION:
        return n + m * e, (m + 1) * e
    if spec.family is Family.TYPE1:
        return (m + 1) * n, e + m * n
    if spec.family is Family.TFRACTAL:
        return n + (m + 1) * e, (m + 2) * e
    if spec.family is Family.VFRACTAL:
        return (m + 1) * n, e + m * n
    if spec.family is Family.TYPE2:
        return n + 2 * m * e, (2 * m + 1) * e
    if spec.family is Family.TYPE3:
        return (m + 1) * n - 2 * e, m * n - e
    raise AssertionError(spec.family)


def _check_growth(spec: OpSpec, t: Tree) -> None:
    n_out, _ = size_after(spec, t.n, t.num_edges)
    if n_out > MAX_EXPLICIT_VERTICES:
        raise SizeLimitError(
            f"{spec} on {t.n} vertices would produce {n_out} vertices; "
            f"use the closed-form model evaluators instead"
        )
    if spec.family in SATURATING:
        k_max = t.graph.max_degree()
        if spec.m < k_max:
            worst = max(range(t.n), key=lambda u: len(t.graph.adjacency[u]))
            raise SaturationError(
                f"{spec} requires m >= max degree {k_max} "
                f"(vertex {worst} has degree {k_max})"
            )


def _subdivide_edges(t: Tree, per_edge: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Replace each edge by a path through per_edge new vertices.

    Returns the new edge list and, per original edge, the id of its first
    inserted vertex (midpoint lookup for the T-fractal).
    """
    edges = []
    firsts = []
    next_id = t.n
    for u, v in t.graph.edges():
        firsts.append(next_id)
        chain = [u] + list(range(next_id, next_id + per_edge)) + [v]
        next_id += per_edge
        edges.extend(zip(chain, chain[1:]))
    return edges, firsts


def _attach_leaves(n: int, counts: list[int]) -> list[tuple[int, int]]:
    """Pendant leaves per vertex, numbered in increasing vertex order."""
    edges = []
    next_id = n
    for u, c in enumerate(counts):
        for _ in range(c):
            edges.append((u, next_id))
            next_id += 1
    return edges


def apply_op(t: Tree, spec: OpSpec) -> Tree:
    """Apply one growth operation; result is always a valid Tree."""
    _check_growth(spec, t)
    m = spec.m
    degrees = t.graph.degree_sequence()
    if spec.family is Family.SUBDIVISION:
        edges, _ = _subdivide_edges(t, m)
    elif spec.family is Family.TYPE1:
        edges = t.graph.edges() + _attach_leaves(t.n, [m] * t.n)
    elif spec.family is Family.TFRACTAL:
        edges, firsts = _subdivide_edges(t, 1)
        next_id = t.n + len(firsts)
        for w in firsts:
            for _ in range(m):
                edges.append((w, next_id))
                next_id += 1
    elif spec.family is Family.VFRACTAL:
        edges, _ = _subdivide_edges(t, 2)
        next_id = t.n + 2 * t.num_edges
        for u in range(t.n):
            for _ in range(m - degrees[u]):
                edges.append((u, next_id))
                next_id += 1
    elif spec.family is Family.TYPE2:
        edges = t.graph.edges() + _attach_leaves(t.n, [m * k for k in degrees])
    elif spec.family is Family.TYPE3:
        edges = t.graph.edges() + _attach_leaves(t.n, [m - k for k in degrees])
    else:
        raise AssertionError(spec.family)
    n_out, e_out = size_after(spec, t.n, t.num_edges)
    assert len(edges) == e_out
    return validate_tree(Graph.from_edges(n_out, edges))


def apply_subdivision(t: Tree, m: int) -> Tree:
    return apply_op(t, OpSpec(Family.SUBDIVISION, m))


def apply_type1(t: Tree, m: int) -> Tree:
    return apply_op(t, OpSpec(Family.TYPE1, m))


def apply_tfractal(t: Tree, m: int) -> Tree:
    return apply_op(t, OpSpec(Family.TFRACTAL, m))


def apply_vfractal(t: Tree, m: int) -> Tree:
    return apply_op(t, OpSpec(Family.VFRACTAL, m))


def apply_type2(t: Tree, m: int) -> Tree:
    return apply_op(t, OpSpec(Family.TYPE2, m))


def apply_type3(t: Tree, m: int) -> Tree:
    return apply_op(t, OpSpec(Family.TYPE3, m))


def apply_pipeline(t: Tree, ops: list[OpSpec]) -> Tree:
    """Sequential application; saturation preconditions re-checked per stage."""
    for i, spec in enumerate(ops):
        try:
            t = apply_op(t, spec)
        except (ParameterError, SizeLimitError) as exc:
            raise type(exc)(f"pipeline step {i} ({spec}): {exc}") from exc
    return t

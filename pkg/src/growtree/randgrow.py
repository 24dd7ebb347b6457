"""Stochastic growth trees: preferential attachment and uniform attachment.

Both models grow from a single edge, adding one vertex per step. The
published closed forms and the uniform-model recurrence are evaluated
verbatim and reported side by side with exact enumeration and Monte
Carlo oracles; they are NOT asserted equal (see the report notes: at
t=1 the tree is deterministically a path with W=4, yet the recurrence
gives 19/4 and the closed forms 11/6 resp. 17/12).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, Tree
from .kernels import stream_seed, u64_next
from .wiener import wiener_index

ENUMERATION_MAX_T = 8

ATTACHMENT_NOTE = (
    "preferential attachment normalizes by the actual degree sum of the "
    "existing tree, so attachment probabilities sum to one"
)


@dataclass(frozen=True)
class RandomModelSpec:
    """Which stochastic model to grow, for how long, under which seed."""

    kind: str  # "ba" or "uniform"
    t: int
    rng_seed: int

    def __post_init__(self):
        if self.kind not in ("ba", "uniform"):
            raise ValueError(f"kind must be 'ba' or 'uniform', got {self.kind!r}")
        if self.t < 0:
            raise ValueError("t must be >= 0")


def _grow_edges(kind: str, t: int, state: int) -> list[tuple[int, int]]:
    """Attachment targets for vertices 2..t+1, driven by one RNG stream."""
    edges = [(0, 1)]
    degrees = [1, 1]
    for s in range(1, t + 1):
        state, z = u64_next(state)
        if kind == "uniform":
            target = int(z % len(degrees))
        else:
            r = int(z % (2 * len(edges)))
            target = 0
            acc = degrees[0]
            while acc <= r:
                target += 1
                acc += degrees[target]
        new = s + 1
        edges.append((target, new))
        degrees[target] += 1
        degrees.append(1)
    return edges


def _tree_from_spec(kind: str, t: int, state: int) -> Tree:
    edges = _grow_edges(kind, t, state)
    return Tree(Graph.from_edges(t + 2, edges))


def generate_ba_tree(spec: RandomModelSpec) -> Tree:
    """One preferential-attachment tree with t+2 vertices."""
    return _tree_from_spec("ba", spec.t, stream_seed(spec.rng_seed, 0, 0))


def generate_uniform_tree(spec: RandomModelSpec) -> Tree:
    """One uniform random attachment tree with t+2 vertices."""
    return _tree_from_spec("uniform", spec.t, stream_seed(spec.rng_seed, 0, 0))


def expected_wiener_enumeration(kind: str, t: int) -> Fraction:
    """Exact E[W] by enumerating all attachment histories."""
    if t > ENUMERATION_MAX_T:
        raise ValueError(
            f"enumeration capped at t <= {ENUMERATION_MAX_T}, got {t}"
        )

    total = Fraction(0)

    def recurse(edges, degrees, prob, step):
        nonlocal total
        if step > t:
            g = Graph.from_edges(len(degrees), edges)
            total += prob * wiener_index(g)
            return
        c = len(degrees)
        new = step + 1
        if kind == "uniform":
            for target in range(c):
                recurse(
                    edges + [(target, new)],
                    degrees[:target] + [degrees[target] + 1] + degrees[target + 1:] + [1],
                    prob / c,
                    step + 1,
                )
        else:
            deg_sum = 2 * (c - 1)
            for target in range(c):
                recurse(
                    edges + [(target, new)],
                    degrees[:target] + [degrees[target] + 1] + degrees[target + 1:] + [1],
                    prob * Fraction(degrees[target], deg_sum),
                    step + 1,
                )

    recurse([(0, 1)], [1, 1], Fraction(1), 1)
    return total


def expected_wiener_monte_carlo(
    kind: str, t: int, trials: int, rng_seed: int
) -> tuple[float, float]:
    """(sample mean, standard error) of W over independently grown trees."""
    if trials < 2:
        raise ValueError("trials must be >= 2")
    total = 0
    total_sq = 0
    for trial in range(trials):
        tree = _tree_from_spec(kind, t, stream_seed(rng_seed, trial, 0))
        w = wiener_index(tree.graph)
        total += w
        total_sq += w * w
    mean = total / trials
    var = max(0.0, total_sq / trials - mean * mean)
    return mean, math.sqrt(var / trials)


def uniform_wiener_recurrence(t: int) -> Fraction:
    """The published Wiener-index recurrence for the uniform model,
    evaluated verbatim from W(0) = 1."""
    if t < 0:
        raise ValueError("t must be >= 0")
    w = Fraction(1)
    for s in range(1, t + 1):
        w = (1 + Fraction(1, s + 1)) ** 2 * w + (s + 1) + Fraction(s, s + 1)
    return w


def uniform_mean_path_closed_form(t: int) -> Fraction:
    """Published closed form for the uniform model's mean path length.

    Empty products are 1 and empty sums 0, as needed at small t.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    bracket = Fraction(t + 1) + Fraction(t, t + 1)
    prod = Fraction(1)
    for i in range(0, t + 1):
        prod *= Fraction(i + 2, i + 1)
    bracket += prod
    for i in range(1, t):
        bracket += (i + 1 + Fraction(i, i + 1)) * Fraction(i + 2, i + 1) ** (t - i)
    return Fraction(2, (t + 2) * (t + 1)) * bracket


def ba_mean_path_closed_form(t: int) -> Fraction:
    """Published closed form for the BA tree's mean path length (t >= 1).

    The interior products telescope to ((t+1)/(i+1))², which keeps the
    exact evaluation linear in t.
    """
    if t < 1:
        raise ValueError("closed form undefined at t < 1 (contains 1/t² terms)")
    bracket = Fraction(t + 1, 2) - Fraction(2 * t + 1, 4 * t**2)
    bracket += 4 * Fraction(t + 1, 2) ** 2
    for i in range(2, t):
        head = Fraction(i + 1, 2) - Fraction(2 * i + 1, 4 * i**2)
        bracket += head * Fraction(t + 1, i + 1) ** 2
    return Fraction(2, (t + 2) * (t + 1)) * bracket


def ba_mean_path_float(t: int) -> float:
    """Floating-point evaluation of the same closed form, for growth
    checks at t values where exact rationals get expensive."""
    if t < 1:
        raise ValueError("closed form undefined at t < 1 (contains 1/t² terms)")
    bracket = (t + 1) / 2 - (2 * t + 1) / (4 * t * t)
    bracket += 4 * ((t + 1) / 2) ** 2
    for i in range(2, t):
        head = (i + 1) / 2 - (2 * i + 1) / (4 * i * i)
        bracket += head * ((t + 1) / (i + 1)) ** 2
    return 2 * bracket / ((t + 2) * (t + 1))


@dataclass(frozen=True)
class ExpectationReport:
    """All published and oracle values for one (kind, t), side by side."""

    kind: str
    t: int
    closed_form_mean_path: Fraction | None
    recurrence_wiener: Fraction | None
    enumeration_wiener: Fraction | None
    monte_carlo: tuple[float, float, int] | None  # (mean W, std error, trials)
    note: str = ATTACHMENT_NOTE


def expectation_report(
    kind: str, t: int, trials: int = 0, rng_seed: int = 0
) -> ExpectationReport:
    """Assemble the report; enumeration included when t is small enough."""
    if kind == "uniform":
        closed = uniform_mean_path_closed_form(t)
        recurrence = uniform_wiener_recurrence(t)
    else:
        closed = ba_mean_path_closed_form(t) if t >= 1 else None
        recurrence = None
    enumeration = (
        expected_wiener_enumeration(kind, t) if t <= ENUMERATION_MAX_T else None
    )
    mc = None
    if trials >= 2:
        mean, se = expected_wiener_monte_carlo(kind, t, trials, rng_seed)
        mc = (mean, se, trials)
    return ExpectationReport(kind, t, closed, recurrence, enumeration, mc)

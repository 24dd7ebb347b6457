"""Wiener-index machinery: BFS oracle, one-step closed forms, variants.

Every closed form here has an independent construction-based oracle; the
dual-route checks live in the test suite and the `verify` CLI command.
All formula arithmetic is exact (Python ints / fractions).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import FormulaViolationError
from .graph import Graph, Tree, all_pairs_distances, line_graph
from .ops import Family


def binom(a: int, b: int) -> int:
    """C(a, b), defined as 0 when a < b or either argument is negative."""
    if a < 0 or b < 0 or a < b:
        return 0
    return comb(a, b)


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered pairs, via the BFS oracle."""
    return all_pairs_distances(g).total() // 2


def mean_shortest_path(g: Graph) -> Fraction:
    """Average pairwise distance 2W / (n(n-1))."""
    if g.n < 2:
        raise ValueError("mean shortest path needs n >= 2")
    return Fraction(2 * wiener_index(g), g.n * (g.n - 1))


def wiener_full_form(family: Family, m: int, W: int, n: int) -> Fraction:
    """One-step Wiener index in the unsimplified closed form."""
    if family is Family.SUBDIVISION:
        return Fraction(
            (m + 1) ** 3 * W
            - (n - 1) * (m + 1) * m**2
            - 2 * (m * binom(n - 1, 2) + binom(n, 2)) * binom(m + 1, 2)
            + (n - 1) * binom(m + 1, 3)
        )
    if family is Family.TYPE1:
        return Fraction(
            (m + 1) ** 2 * W
            + 2 * m * (m + 1) * binom(n, 2)
            + n * (m + 2 * binom(m, 2))
        )
    if family is Family.TFRACTAL:
        return Fraction(
            2 * (m + 2) ** 2 * W
            - (n - 1) * (2 * m**2 + 3 * m + 2 * n - 2 * binom(m, 2))
            - 2 * m * binom(n - 1, 2)
        )
    if family is Family.VFRACTAL:
        return Fraction(
            3 * (m + 1) ** 2 * W
            + n * m**2
            + 2 * ((m - 1) ** 2 + m - 3) * binom(n, 2)
        )
    if family is Family.TYPE2:
        return (
            Fraction((2 * m + 1) ** 2 * W)
            - (n - 1) * (2 * n - 1) * m**2
            + Fraction(8 * m**2, 3) * (n - 1) ** 2
            - 2 * m * (n - 1)
            + Fraction(4 * m, 3) * n * (n - 1)
            - Fraction(2 * m, 3) * binom(n, 2)
            + Fraction(4 * m**2, 3) * (binom(n, 2) + binom(n - 1, 2))
        )
    if family is Family.TYPE3:
        return (
            Fraction((m - 1) ** 2 * W)
            + n * (n - 1) * (m**2 - Fraction(m, 3) - Fraction(4, 3))
            + n * m**2
            - 2 * (n - 1) * (m - 1)
            - (n - 1) * (2 * n - 1)
            + (Fraction(8, 3) - 2 * m) * (n - 1) ** 2
            + Fraction(2 * (m + 1), 3) * binom(n, 2)
            + Fraction(4, 3) * (binom(n, 2) + binom(n - 1, 2))
        )
    raise AssertionError(family)


@dataclass(frozen=True)
class WienerPolynomial:
    """Coefficients of the simplified one-step form W' = c_W·W + c_n2·n² + c_n·n + c_1."""

    family: Family
    m: int
    c_W: Fraction
    c_n2: Fraction
    c_n: Fraction
    c_1: Fraction

    def evaluate(self, W: int, n: int) -> Fraction:
        return self.c_W * W + self.c_n2 * n**2 + self.c_n * n + self.c_1


def wiener_polynomial(family: Family, m: int) -> WienerPolynomial:
    """Simplified-form coefficients as exact rationals."""
    F = Fraction
    if family is Family.SUBDIVISION:
        coeffs = (
            F((m + 1) ** 3),
            F(-m * (m + 1) ** 2, 2),
            F(m * (m + 1) * (2 * m + 1), 3),
            F(-m * (m**2 - 1), 6),
        )
    elif family is Family.TYPE1:
        coeffs = (F((m + 1) ** 2), F(m * (m + 1)), F(-m), F(0))
    elif family is Family.TFRACTAL:
        coeffs = (
            F(2 * (m + 2) ** 2),
            F(-(m + 2)),
            F(-(m - 1) * (m + 2)),
            F(m**2 + 2 * m),
        )
    elif family is Family.VFRACTAL:
        coeffs = (F(3 * (m + 1) ** 2), F((m - 2) * (m + 1)), F(m + 2), F(0))
    elif family is Family.TYPE2:
        coeffs = (
            F((2 * m + 1) ** 2),
            F(m * (2 * m + 1)),
            F(-m * (5 * m + 3)),
            F(m * (3 * m + 2)),
        )
    elif family is Family.TYPE3:
        coeffs = (F((m - 1) ** 2), F((m - 1) ** 2), F(2 * (m - 1)), F(1))
    else:
        raise AssertionError(family)
    return WienerPolynomial(family, m, *coeffs)


def wiener_one_step(family: Family, m: int, W: int, n: int) -> int:
    """Wiener index after one operation, from (W, n) alone.

    Evaluates both the full closed form and the simplified polynomial;
    they must agree and yield an integer.
    """
    full = wiener_full_form(family, m, W, n)
    simplified = wiener_polynomial(family, m).evaluate(W, n)
    if full != simplified:
        raise FormulaViolationError(
            f"full and simplified forms disagree for {family.value} m={m} "
            f"(W={W}, n={n}): {full} vs {simplified}"
        )
    if full.denominator != 1:
        raise FormulaViolationError(
            f"non-integer Wiener value {full} for {family.value} m={m} "
            f"(W={W}, n={n}); (W, n) is not consistent with a tree"
        )
    return int(full)


def degree_wiener_multiplicative(t: Tree) -> tuple[int, int]:
    """(oracle, closed form) of ½ Σ k_u k_v d_uv; equal or error."""
    dm = all_pairs_distances(t.graph)
    degrees = t.graph.degree_sequence()
    oracle = (
        sum(
            degrees[u] * degrees[v] * int(dm.d[u, v])
            for u in range(t.n)
            for v in range(t.n)
        )
        // 2
    )
    closed = 4 * wiener_index(t.graph) - (t.n - 1) * (2 * t.n - 1)
    if oracle != closed:
        raise FormulaViolationError(
            f"multiplicative degree Wiener mismatch: oracle {oracle}, closed {closed}"
        )
    return oracle, closed


def degree_wiener_additive(t: Tree) -> tuple[int, int]:
    """(oracle, closed form) of ½ Σ (k_u + k_v) d_uv; equal or error."""
    dm = all_pairs_distances(t.graph)
    degrees = t.graph.degree_sequence()
    oracle = (
        sum(
            (degrees[u] + degrees[v]) * int(dm.d[u, v])
            for u in range(t.n)
            for v in range(t.n)
        )
        // 2
    )
    closed = 4 * wiener_index(t.graph) - t.n * (t.n - 1)
    if oracle != closed:
        raise FormulaViolationError(
            f"additive degree Wiener mismatch: oracle {oracle}, closed {closed}"
        )
    return oracle, closed


def line_graph_wiener(t: Tree) -> tuple[int, int]:
    """(oracle on the constructed line graph, closed form W - C(n,2))."""
    oracle = wiener_index(line_graph(t))
    closed = wiener_index(t.graph) - binom(t.n, 2)
    if oracle != closed:
        raise FormulaViolationError(
            f"line-graph Wiener mismatch: oracle {oracle}, closed {closed}"
        )
    return oracle, closed


def extremal_bounds(n: int) -> tuple[int, int]:
    """Wiener-index range over all trees on n vertices: star and path."""
    if n < 2:
        raise ValueError("bounds need n >= 2")
    return (n - 1) ** 2, binom(n + 1, 3)

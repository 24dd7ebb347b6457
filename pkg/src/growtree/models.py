"""Generation-t closed forms for the six deterministic families.

Evaluates model sizes and mean hitting times in exact arithmetic without
constructing the graph, via two independent paths that must agree:
unrolling the one-step polynomial, and the per-family unrolled sum over
the closed-form size sequence.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormulaViolationError, ParameterError
from .graph import Tree
from .ops import Family, OpSpec, size_after
from .wiener import extremal_bounds, wiener_index, wiener_one_step


@dataclass(frozen=True)
class ModelParams:
    """A family, order m, seed summary (n, W), and generation count."""

    family: Family
    m: int
    seed_n: int
    seed_W: int
    t: int

    def __post_init__(self):
        if self.seed_n < 2:
            raise ParameterError(f"seed needs n >= 2, got {self.seed_n}")
        if self.t < 0:
            raise ParameterError(f"generation count must be >= 0, got {self.t}")
        if self.m < 1:
            raise ParameterError(f"order parameter must be >= 1, got {self.m}")
        if self.family is Family.TYPE3 and self.m < 2:
            raise ParameterError(
                "generalized Cayley model needs m >= 2 (size law degenerates)"
            )
        lo, hi = extremal_bounds(self.seed_n)
        if not lo <= self.seed_W <= hi:
            raise ParameterError(
                f"seed Wiener index {self.seed_W} outside [{lo}, {hi}] "
                f"for n={self.seed_n}"
            )

    @classmethod
    def from_seed(cls, family: Family, m: int, seed: Tree, t: int) -> "ModelParams":
        if family in (Family.VFRACTAL, Family.TYPE3) and m < seed.graph.max_degree():
            raise ParameterError(
                f"{family.value} needs m >= seed max degree "
                f"{seed.graph.max_degree()}, got {m}"
            )
        return cls(family, m, seed.n, wiener_index(seed.graph), t)


@dataclass(frozen=True)
class FamilyCoefficients:
    """Per-generation accumulation coefficients of the unrolled formula.

    One growth step maps W -> f·W + quad·n² + lin·n + const where n is
    the vertex count before the step; quad/lin/const carry their signs.
    """

    family: Family
    m: int
    f: int
    quad: Fraction
    lin: Fraction
    const: Fraction


def family_coefficients(family: Family, m: int) -> FamilyCoefficients:
    F = Fraction
    if family is Family.SUBDIVISION:
        f = (m + 1) ** 3
        g, h, l = F(m * (m + 1) ** 2, 2), F(m * (m + 1) * (2 * m + 1), 3), F(m * (m**2 - 1), 6)
        quad, lin, const = -g, h, -l
    elif family is Family.TYPE2:
        f = (2 * m + 1) ** 2
        g, h, l = F(m * (2 * m + 1)), F(m * (5 * m + 3)), F(m * (3 * m + 2))
        quad, lin, const = g, -h, l
    elif family is Family.TYPE1:
        f = (m + 1) ** 2
        quad, lin, const = F(m * (m + 1)), F(-m), F(0)
    elif family is Family.TFRACTAL:
        f = 2 * (m + 2) ** 2
        g, h, l = F(m + 2), F((m - 1) * (m + 2)), F(m**2 + 2 * m)
        quad, lin, const = -g, -h, l
    elif family is Family.VFRACTAL:
        # quadratic coefficient (m-2)(m+1) per the one-step polynomial;
        # required for agreement with the construction oracle
        f = 3 * (m + 1) ** 2
        quad, lin, const = F((m - 2) * (m + 1)), F(m + 2), F(0)
    elif family is Family.TYPE3:
        f = (m - 1) ** 2
        quad, lin, const = F((m - 1) ** 2), F(2 * (m - 1)), F(1)
    else:
        raise AssertionError(family)
    return FamilyCoefficients(family, m, f, quad, lin, const)


def size_closed_form(family: Family, m: int, n: int, t: int) -> int:
    """Vertex count at generation t from the per-family size law."""
    if family is Family.SUBDIVISION:
        return (n - 1) * (m + 1) ** t + 1
    if family is Family.TYPE1:
        return n * (m + 1) ** t
    if family is Family.TFRACTAL:
        return (n - 1) * (m + 2) ** t + 1
    if family is Family.VFRACTAL:
        return n * (m + 1) ** t
    if family is Family.TYPE2:
        return (n - 1) * (2 * m + 1) ** t + 1
    if family is Family.TYPE3:
        if m == 2:
            # the unrolled form divides by m-2; one step adds 2 vertices
            return n + 2 * t
        value = Fraction((n * (m - 2) + 2) * (m - 1) ** t - 2, m - 2)
        assert value.denominator == 1
        return int(value)
    raise AssertionError(family)


def model_size(p: ModelParams) -> int:
    """Exact vertex count at generation t; closed form cross-checked
    against iterating the one-step count law."""
    closed = size_closed_form(p.family, p.m, p.seed_n, p.t)
    n, e = p.seed_n, p.seed_n - 1
    spec = OpSpec(p.family, p.m)
    for _ in range(p.t):
        n, e = size_after(spec, n, e)
    if n != closed:
        raise FormulaViolationError(
            f"size law mismatch for {p.family.value} m={p.m} t={p.t}: "
            f"iterated {n}, closed form {closed}"
        )
    return closed


def model_wiener(p: ModelParams) -> int:
    """Exact Wiener index at generation t by iterating the one-step form."""
    W, n = p.seed_W, p.seed_n
    for _ in range(p.t):
        W_next = wiener_one_step(p.family, p.m, W, n)
        n = size_closed_form(p.family, p.m, n, 1)
        W = W_next
    return W


def _unrolled_wiener(p: ModelParams) -> Fraction:
    """Generation-t Wiener index via the geometric unrolled sum."""
    c = family_coefficients(p.family, p.m)
    total = Fraction(c.f**p.t * p.seed_W)
    for i in range(p.t):
        n_s = size_closed_form(p.family, p.m, p.seed_n, p.t - 1 - i)
        total += c.f**i * (c.quad * n_s**2 + c.lin * n_s + c.const)
    return total


def model_mht(p: ModelParams) -> Fraction:
    """Exact mean hitting time 2W/n at generation t.

    Computed both from the unrolled sum and from the iterated one-step
    form; a mismatch is an internal error.
    """
    n_t = model_size(p)
    unrolled = 2 * _unrolled_wiener(p) / n_t
    iterated = Fraction(2 * model_wiener(p), n_t)
    if unrolled != iterated:
        raise FormulaViolationError(
            f"mean-hitting-time paths disagree for {p}: "
            f"unrolled {unrolled}, iterated {iterated}"
        )
    return iterated


@dataclass(frozen=True)
class BoundsPoint:
    generation: int
    n: int
    wiener: int
    lower: int
    upper: int
    within: bool

    @property
    def lower_margin(self) -> int:
        return self.wiener - self.lower

    @property
    def upper_margin(self) -> int:
        return self.upper - self.wiener


def check_bounds_trajectory(p: ModelParams) -> list[BoundsPoint]:
    """Wiener-index bounds check at every generation 0..t."""
    points = []
    W, n = p.seed_W, p.seed_n
    for s in range(p.t + 1):
        lo, hi = extremal_bounds(n)
        points.append(BoundsPoint(s, n, W, lo, hi, lo <= W <= hi))
        if s < p.t:
            W = wiener_one_step(p.family, p.m, W, n)
            n = size_closed_form(p.family, p.m, n, 1)
    return points

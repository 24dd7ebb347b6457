"""Serializable metric reports and the JSON encoding rules.

Rationals serialize as {"num": "...", "den": "..."} with decimal-digit
strings so arbitrary precision survives transport; floats stay IEEE-754.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotATreeError
from .graph import Graph, validate_tree
from .hitting import WalkConfig, mean_hitting_time_spectral, simulate_mean_hitting_time
from .wiener import (
    degree_wiener_additive,
    degree_wiener_multiplicative,
    extremal_bounds,
    mean_shortest_path,
    wiener_index,
)


def fraction_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def json_value(value):
    """Encode Fractions recursively; everything else passes through."""
    if isinstance(value, Fraction):
        return fraction_json(value)
    if isinstance(value, dict):
        return {k: json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    return value


@dataclass(frozen=True)
class MetricsReport:
    """Every metric computed for one graph; tree-only fields may be None."""

    label: str
    n: int
    num_edges: int
    wiener: int
    mean_shortest_path: Fraction
    mean_hitting_time: Fraction | None
    degree_wiener_mult: int | None
    degree_wiener_add: int | None
    bounds: tuple[int, int, bool] | None
    spectral_mht: float | None = None
    simulated_mht: tuple[float, float, int] | None = None
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        out = {
            "label": self.label,
            "n": self.n,
            "edges": self.num_edges,
            "wiener": self.wiener,
            "mean_shortest_path": fraction_json(self.mean_shortest_path),
        }
        if self.mean_hitting_time is not None:
            out["mean_hitting_time"] = fraction_json(self.mean_hitting_time)
        if self.degree_wiener_mult is not None:
            out["degree_wiener_mult"] = self.degree_wiener_mult
        if self.degree_wiener_add is not None:
            out["degree_wiener_add"] = self.degree_wiener_add
        if self.bounds is not None:
            lower, upper, within = self.bounds
            out["bounds"] = {"lower": lower, "upper": upper, "within": within}
        if self.spectral_mht is not None:
            out["spectral_mht"] = self.spectral_mht
        if self.simulated_mht is not None:
            mean, se, trials = self.simulated_mht
            out["simulated_mht"] = {"mean": mean, "std_error": se, "trials": trials}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def analyze_graph(
    g: Graph,
    label: str = "graph",
    spectral: bool = False,
    walk_config: WalkConfig | None = None,
    threads: int = 1,
) -> MetricsReport:
    """Full MetricsReport for a connected graph."""
    w = wiener_index(g)
    notes = []
    try:
        tree = validate_tree(g)
    except NotATreeError as exc:
        tree = None
        notes.append(f"tree-only metrics skipped: {exc}")
    if tree is not None:
        mht = Fraction(2 * w, g.n)
        mult, _ = degree_wiener_multiplicative(tree)
        add, _ = degree_wiener_additive(tree)
        lower, upper = extremal_bounds(g.n)
        bounds = (lower, upper, lower <= w <= upper)
    else:
        mht = mult = add = bounds = None
    spectral_value = mean_hitting_time_spectral(g) if spectral else None
    simulated = None
    if walk_config is not None:
        mean, se = simulate_mean_hitting_time(g, walk_config, threads=threads)
        simulated = (mean, se, walk_config.trials)
    return MetricsReport(
        label=label,
        n=g.n,
        num_edges=g.num_edges,
        wiener=w,
        mean_shortest_path=mean_shortest_path(g),
        mean_hitting_time=mht,
        degree_wiener_mult=mult,
        degree_wiener_add=add,
        bounds=bounds,
        spectral_mht=spectral_value,
        simulated_mht=simulated,
        notes=tuple(notes),
    )

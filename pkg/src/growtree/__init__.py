"""Recursive growth tree networks.

Constructs trees from an arbitrary seed via six primitive growth
operations, evaluates exact Wiener-index and mean-hitting-time closed
forms, and cross-verifies everything against independent oracles (BFS
distance sweeps, Laplacian spectra, Monte Carlo random walks).
"""
from .errors import GrowTreeError
from .graph import (
    DistanceMatrix,
    Graph,
    Tree,
    all_pairs_distances,
    build_path,
    build_star,
    degree_sequence,
    line_graph,
    parse_edge_list,
    random_tree,
    validate_tree,
)
from .hitting import (
    Spectrum,
    WalkConfig,
    default_max_steps,
    laplacian_spectrum,
    mean_hitting_time_spectral,
    mean_hitting_time_tree,
    simulate_hitting_time,
    simulate_mean_hitting_time,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .models import (
    FamilyCoefficients,
    ModelParams,
    check_bounds_trajectory,
    family_coefficients,
    model_mht,
    model_size,
    model_wiener,
)
from .ops import (
    Family,
    OpSpec,
    apply_op,
    apply_pipeline,
    apply_subdivision,
    apply_tfractal,
    apply_type1,
    apply_type2,
    apply_type3,
    apply_vfractal,
    parse_pipeline,
    size_after,
)
from .randgrow import (
    ExpectationReport,
    RandomModelSpec,
    ba_mean_path_closed_form,
    ba_mean_path_float,
    expectation_report,
    expected_wiener_enumeration,
    expected_wiener_monte_carlo,
    generate_ba_tree,
    generate_uniform_tree,
    uniform_mean_path_closed_form,
    uniform_wiener_recurrence,
)
from .report import MetricsReport, analyze_graph
from .wiener import (
    WienerPolynomial,
    degree_wiener_additive,
    degree_wiener_multiplicative,
    extremal_bounds,
    line_graph_wiener,
    mean_shortest_path,
    wiener_index,
    wiener_one_step,
    wiener_polynomial,
)

__version__ = "0.1.0"

"""k-shell decomposition toolkit for undirected networks.

Decomposes a topology into its Medusa components (nucleus, peer-connected,
isolated), profiles crust percolation, measures fractal/critical properties
of crusts, and runs scale-free ensemble experiments.  Hot kernels run on a
compiled backend when available (``medusa.kernels.BACKEND``).
"""
from .graph import (
    ComponentPartition,
    DistanceConfig,
    Graph,
    IngestReport,
    ParseError,
    UNREACHABLE,
    average_distance,
    bfs_distances,
    connected_components,
    diameter,
    load_edge_list,
    loads_edge_list,
)
from .kshell import ShellAssignment, decompose, k_core, k_crust
from .percolation import CrustProfile, TransitionReport, crust_profile, detect_transition
from .partition import (
    IsolatedBreakdown,
    MedusaPartition,
    NucleusStats,
    classify,
    isolated_breakdown,
    medusa_report,
    nucleus_stats,
)
from .fractal import (
    Binning,
    BoxCovering,
    FractalResult,
    PowerLawFit,
    box_cover,
    cluster_size_distribution,
    fit_power_law,
    fractal_dimension,
    renormalize,
    shell_contribution,
)
from .ensemble import (
    EnsembleSpec,
    ScalingResult,
    generate_scale_free,
    nucleus_scaling,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentPartition", "DistanceConfig", "Graph", "IngestReport",
    "ParseError", "UNREACHABLE", "average_distance", "bfs_distances",
    "connected_components", "diameter", "load_edge_list", "loads_edge_list",
    "ShellAssignment", "decompose", "k_core", "k_crust",
    "CrustProfile", "TransitionReport", "crust_profile", "detect_transition",
    "IsolatedBreakdown", "MedusaPartition", "NucleusStats", "classify",
    "isolated_breakdown", "medusa_report", "nucleus_stats",
    "Binning", "BoxCovering", "FractalResult", "PowerLawFit", "box_cover",
    "cluster_size_distribution", "fit_power_law", "fractal_dimension",
    "renormalize", "shell_contribution",
    "EnsembleSpec", "ScalingResult", "generate_scale_free", "nucleus_scaling",
    "__version__",
]

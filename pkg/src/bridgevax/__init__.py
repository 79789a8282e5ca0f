"""Bridge-node centrality ranking and vaccinated SIS epidemic sweeps.

Rank the nodes of an undirected network by how strongly they bridge
their own neighborhood (neighborhood component count, algebraic
connectivity ratio, degree), vaccinate the top fraction, and measure
infection spread with seeded susceptible-infected-susceptible
simulations over a full parameter grid.
"""

from .centrality import (
    NbncTuple,
    Ranking,
    Strategy,
    all_nbnc_tuples,
    compare_nbnc,
    degree_centrality,
    nbnc_tuple,
    rank_nodes,
    select_vaccinees,
)
from .experiment import (
    RatioRecord,
    RatioSummary,
    SweepGrid,
    SweepRecord,
    compute_ratios,
    load_registry,
    run_sweep,
    summarize_ratios,
    write_records_csv,
    write_ratios_csv,
    write_summary_csv,
)
from .graphs import (
    ComponentLabeling,
    Graph,
    GraphParseError,
    connected_components,
    load_edge_list,
    neighborhood_graph,
    parse_edge_list,
    serialize_edge_list,
)
from .heatmap import emit_heatmap
from .rng import RandomStream, stream, substream_seed
from .sis import (
    INFECTED,
    SUSCEPTIBLE,
    VACCINATED,
    SimConfig,
    SimResult,
    initialize,
    phase_infection,
    phase_recovery,
    run_simulation,
    run_trials,
)
from .spectral import (
    ConvergenceError,
    acr,
    algebraic_connectivity,
    eigenvalues,
    laplacian,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentLabeling",
    "ConvergenceError",
    "Graph",
    "GraphParseError",
    "INFECTED",
    "NbncTuple",
    "RandomStream",
    "Ranking",
    "RatioRecord",
    "RatioSummary",
    "SUSCEPTIBLE",
    "SimConfig",
    "SimResult",
    "Strategy",
    "SweepGrid",
    "SweepRecord",
    "VACCINATED",
    "acr",
    "algebraic_connectivity",
    "all_nbnc_tuples",
    "compare_nbnc",
    "compute_ratios",
    "connected_components",
    "degree_centrality",
    "eigenvalues",
    "emit_heatmap",
    "initialize",
    "laplacian",
    "load_edge_list",
    "load_registry",
    "nbnc_tuple",
    "neighborhood_graph",
    "parse_edge_list",
    "phase_infection",
    "phase_recovery",
    "rank_nodes",
    "run_simulation",
    "run_sweep",
    "run_trials",
    "select_vaccinees",
    "serialize_edge_list",
    "stream",
    "substream_seed",
    "summarize_ratios",
    "write_records_csv",
    "write_ratios_csv",
    "write_summary_csv",
]

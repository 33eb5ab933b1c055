"""Exact laboratory for proper edge colorings with interval vertex spectra.

Core objects: immutable graphs (`graphs`), validated edge colorings and
spectrum summaries (`coloring`), explicit colorings of complete bipartite
graphs (`constructions`), the exact min/max solver over all proper
surjective t-colorings (`search`), and closed forms plus the verification
sweep that checks them against the solver (`analysis`).
"""

from .coloring import (
    EdgeColoring,
    InvalidColoringError,
    SpectrumSummary,
    ValidationReport,
    color_class,
    is_harmonic,
    is_interval,
    is_interval_on,
    require_valid,
    spectrum,
    summarize,
    validate,
)
from .constructions import (
    CollapseTrace,
    block_interval_on_Y,
    collapse_sequence,
    collapse_step,
    staircase_coloring,
)
from .graphs import (
    Graph,
    build_complete_bipartite,
    build_cycle,
    build_path,
    chromatic_index,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_linear_forest,
)
from .search import (
    BudgetExhausted,
    SearchBudget,
    SearchOutcome,
    Status,
    count_colorings,
    enumerate_colorings,
    feasible_interval_on,
    mu1,
    mu2,
    sweep_linear_forest,
    w_range,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring",
    "InvalidColoringError",
    "SpectrumSummary",
    "ValidationReport",
    "color_class",
    "is_harmonic",
    "is_interval",
    "is_interval_on",
    "require_valid",
    "spectrum",
    "summarize",
    "validate",
    "CollapseTrace",
    "block_interval_on_Y",
    "collapse_sequence",
    "collapse_step",
    "staircase_coloring",
    "Graph",
    "build_complete_bipartite",
    "build_cycle",
    "build_path",
    "chromatic_index",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_linear_forest",
    "BudgetExhausted",
    "SearchBudget",
    "SearchOutcome",
    "Status",
    "count_colorings",
    "enumerate_colorings",
    "feasible_interval_on",
    "mu1",
    "mu2",
    "sweep_linear_forest",
    "w_range",
    "__version__",
]

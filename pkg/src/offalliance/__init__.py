"""Offensive r-alliances in simple graphs."""
from .bounds import bounds_report, degree_bounds, spectral_lower_bound
from .errors import (
    ConvergenceError,
    GraphFormatError,
    GuardrailError,
    InvalidParameterError,
    PreconditionError,
    SolverTimeout,
)
from .graph import Graph, VertexSet, from_edge_list, line_graph
from .io import parse, read_graph, serialize
from .predicates import (
    AllianceReport,
    is_dominating,
    is_global_offensive_r_alliance,
    is_k_dominating,
    is_offensive_r_alliance,
    valid_r_range,
)
from .solvers import (
    SolveResult,
    independence_number,
    min_dominating,
    min_global_offensive_alliance,
    min_k_dominating,
    min_offensive_alliance,
    min_vertex_cover,
)
from .spectral import laplacian_spectral_radius

__version__ = "0.1.0"

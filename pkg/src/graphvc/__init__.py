"""Exact VC-dimension of graphs (closed-neighborhood set systems)."""

from graphvc.bounds import BoundReport, degree_filter, upper_bounds
from graphvc.engine import (
    Ordering,
    SearchConfig,
    SearchResult,
    SearchStats,
    avg_ball_size,
    compute_vcdim,
    count_shattered_sets,
    order_vertices,
    trace_count_add,
)
from graphvc.estimators import HeuristicLowerBound, TraceReducer, VCDimension, vcdim
from graphvc.exceptions import BudgetExceededError, CapExceededError, GraphParseError
from graphvc.graph import (
    Graph,
    ball,
    degree_closed,
    format_edge_list,
    greedy_maximal_matching,
    induced_subgraph,
    kcore_ordering,
    parse_edge_list,
    read_edge_list,
)
from graphvc.heuristic import heuristic_lower_bound, heuristic_search
from graphvc.reducer import reduce_graph

__version__ = "0.1.0"

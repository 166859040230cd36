"""Estimator-style wrappers over the functional API."""

from __future__ import annotations

import numbers

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from graphvc.bounds import degree_filter
from graphvc.engine import SearchConfig, compute_vcdim
from graphvc.graph import induced_subgraph
from graphvc.heuristic import heuristic_search
from graphvc.reducer import reduce_graph
from graphvc.validation import check_graph


class VCDimension(BaseEstimator):
    """Exact VC-dimension of a graph's closed-neighborhood set system.

    The default pipeline is heuristic lower bound, degree filter, graph
    reduction, k-core ordering and the ball-restricted search.

    Parameters
    ----------
    ordering : {"kcore", "deg-dec", "deg-inc", "random"}
    ball_restriction, graph_reduction : bool
    lower_bound : "heuristic" or int
        Starting bound; an int must not exceed the true value.
    maxvisits : int
        Visit cap of the heuristic.
    seed : int
        Seed for ``ordering="random"``.

    Attributes
    ----------
    vcdim_ : int
    witness_ : list of int
        A shattered set of size ``vcdim_``, in input labels.
    lower_bound_ : int
    stats_ : SearchStats
    """

    def __init__(self, ordering="kcore", ball_restriction=True, graph_reduction=True,
                 lower_bound="heuristic", maxvisits=64, seed=0, collect_stats=True,
                 prune=True, backend="numba"):
        self.ordering = ordering
        self.ball_restriction = ball_restriction
        self.graph_reduction = graph_reduction
        self.lower_bound = lower_bound
        self.maxvisits = maxvisits
        self.seed = seed
        self.collect_stats = collect_stats
        self.prune = prune
        self.backend = backend

    def fit(self, G, y=None):
        g = check_graph(G)
        lb_witness = None
        if self.lower_bound == "heuristic":
            found = heuristic_search(g, self.maxvisits)
            lb, lb_witness = found.value, found.witness_ids
        elif isinstance(self.lower_bound, numbers.Integral):
            lb = int(self.lower_bound)
        else:
            raise ValueError(f"lower_bound must be 'heuristic' or an int, got {self.lower_bound!r}")
        config = SearchConfig(
            ordering=self.ordering,
            ball_restriction=self.ball_restriction,
            graph_reduction=self.graph_reduction,
            initial_lb=lb,
            collect_stats=self.collect_stats,
            prune=self.prune,
            maxvisits=self.maxvisits,
            seed=self.seed,
            backend=self.backend,
        )
        self.result_ = compute_vcdim(g, config, lb_witness=lb_witness)
        self.lower_bound_ = lb
        self.vcdim_ = self.result_.vcdim
        self.witness_ = self.result_.witness
        self.stats_ = self.result_.stats
        self.n_vertices_in_ = g.n
        return self


class HeuristicLowerBound(BaseEstimator):
    """Fast lower bound from the visit-capped scan."""

    def __init__(self, maxvisits=64):
        self.maxvisits = maxvisits

    def fit(self, G, y=None):
        g = check_graph(G, allow_empty=True)
        found = heuristic_search(g, self.maxvisits)
        self.lower_bound_ = found.value
        self.witness_ = g.labels[found.witness_ids].tolist()
        self.additions_ = found.additions
        return self


class TraceReducer(TransformerMixin, BaseEstimator):
    """Drop vertices whose trace on the high-degree set is already represented.

    ``fit`` picks the high set (closed degree at least ``2**lb``) and the
    vertices to keep; ``transform`` returns the induced subgraph.
    """

    def __init__(self, lb=0):
        self.lb = lb

    def fit(self, G, y=None):
        g = check_graph(G, allow_empty=True)
        self.high_ = degree_filter(g, self.lb)
        red = reduce_graph(g, self.high_)
        self.kept_ = red.kept
        self.id_map_ = red.id_map
        self.n_parts_ = red.n_parts
        self.n_vertices_in_ = g.n
        return self

    def transform(self, G):
        check_is_fitted(self, "kept_")
        g = check_graph(G, allow_empty=True)
        if g.n != self.n_vertices_in_:
            raise ValueError(f"fitted on {self.n_vertices_in_} vertices, got {g.n}")
        return induced_subgraph(g, self.kept_)[0]


def vcdim(G, **params) -> int:
    """Shortcut for ``VCDimension(**params).fit(G).vcdim_``."""
    return VCDimension(**params).fit(G).vcdim_


__all__ = ["VCDimension", "HeuristicLowerBound", "TraceReducer", "vcdim"]

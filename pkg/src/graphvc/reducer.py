"""Trace-preserving graph reduction by partition refinement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from graphvc import _kernels
from graphvc.graph import Graph, induced_subgraph


@dataclass(frozen=True)
class Reduction:
    graph: Graph
    id_map: dict[int, int]
    kept: np.ndarray
    n_parts: int
    work: int

    def __iter__(self):
        # unpacks as (graph, id_map, kept)
        return iter((self.graph, self.id_map, self.kept))


def trace_classes(g: Graph, high) -> tuple[np.ndarray, int, int]:
    """Part id per vertex after refining ``{V}`` by ``N[x]`` for each ``x`` in ``high``."""
    pivots = np.asarray(high, dtype=np.int64)
    return _kernels.refine_partition(g.indptr, g.indices, pivots)


def reduce_graph(g: Graph, high) -> Reduction:
    """Keep ``high`` plus the lowest-id vertex of every trace class disjoint from ``high``.

    Every trace ``N[v] ∩ high`` realized in ``g`` is realized in the reduced
    graph as well, so shattering of subsets of ``high`` is unchanged.
    """
    high = np.unique(np.asarray(high, dtype=np.int64))
    part, n_parts, work = trace_classes(g, high)
    has_high = np.zeros(n_parts, dtype=bool)
    has_high[part[high]] = True
    rep = np.full(n_parts, g.n, dtype=np.int64)
    np.minimum.at(rep, part, np.arange(g.n, dtype=np.int64))
    reps = rep[~has_high]
    kept = np.union1d(high, reps)
    sub, id_map = induced_subgraph(g, kept)
    return Reduction(sub, id_map, kept, int(n_parts), int(work))

"""Cheap upper bounds on the VC-dimension and the high-degree filter."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from graphvc.graph import Graph, greedy_maximal_matching, kcore_ordering


def floor_log2(x: int) -> int:
    if x < 1:
        raise ValueError("floor_log2 needs a positive argument")
    return int(x).bit_length() - 1


@dataclass(frozen=True)
class BoundReport:
    log_n: int
    log_maxdeg_plus1: int
    degeneracy_plus1: int
    matching_2M: int
    best: int

    def as_dict(self) -> dict:
        return asdict(self)


def upper_bounds(g: Graph) -> BoundReport:
    """Node, degree, degeneracy and maximal-matching bounds.

    ``best`` is the minimum of the four. Degrees are closed, so an edgeless
    graph gets a degree bound of 1; the matching term only applies when the
    graph has at least one edge.
    """
    if g.n == 0:
        raise ValueError("bounds are undefined for the empty graph")
    log_n = floor_log2(g.n)
    log_deg = floor_log2(int(g.closed_degrees().max())) + 1
    _, k = kcore_ordering(g)
    matching = 2 * len(greedy_maximal_matching(g))
    candidates = [log_n, log_deg, k + 1]
    if g.edge_count:
        candidates.append(matching)
    return BoundReport(log_n, log_deg, k + 1, matching, min(candidates))


def degree_filter(g: Graph, lb: int) -> np.ndarray:
    """Ascending ids of vertices with closed degree at least ``2**lb``."""
    if lb < 0:
        raise ValueError("lb must be non-negative")
    if lb >= 63:
        return np.empty(0, dtype=np.int64)
    return np.flatnonzero(g.closed_degrees() >= (1 << lb)).astype(np.int64)

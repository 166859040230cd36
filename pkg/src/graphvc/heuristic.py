"""Visit-budgeted partial scan giving a quick lower bound."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from graphvc import _kernels
from graphvc.engine import Ordering, order_vertices
from graphvc.graph import Graph


@dataclass(frozen=True)
class LowerBound:
    value: int
    witness_ids: list[int]
    additions: int


def heuristic_search(g: Graph, maxvisits: int = 64) -> LowerBound:
    """Scan all vertices by non-increasing degree with a per-vertex visit cap.

    Every vertex can be added to the current set at most ``maxvisits`` times
    and each extension loop tries at most ``maxvisits // 2`` candidates, so
    the work is linear in the graph size for a fixed cap.
    """
    if maxvisits < 1:
        raise ValueError("maxvisits must be at least 1")
    if g.n == 0:
        return LowerBound(0, [], 0)
    order = np.asarray(order_vertices(g, np.arange(g.n), Ordering.DEG_DEC), dtype=np.int64)
    stats = np.zeros(_kernels.N_STATS, dtype=np.int64)
    witness = np.zeros(_kernels.max_level(g.indptr), dtype=np.int64)
    lb = _kernels.shatter_search(g.indptr, g.indices, order, True, 0, True, 0,
                                 maxvisits, stats, witness)
    found = sorted(witness[: stats[_kernels.WITNESS_LEN]].tolist())
    return LowerBound(int(lb), found, int(stats[_kernels.ADDITIONS]))


def heuristic_lower_bound(g: Graph, maxvisits: int = 64) -> int:
    return heuristic_search(g, maxvisits).value

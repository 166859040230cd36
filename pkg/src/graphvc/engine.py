"""Exact VC-dimension by depth-first search over shattered sets.

Sets are grown one vertex at a time along a fixed ordering of the high-degree
vertices. Each vertex keeps a bit mask of its trace on the current set, and a
table counts how many vertices realize each trace. A branch is cut as soon as
some trace is realized by fewer than ``2**(lb + 1 - |X|)`` vertices, since no
superset of ``X`` could then be shattered at size ``lb + 1``.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

import numpy as np

from graphvc import _kernels
from graphvc.bounds import degree_filter
from graphvc.graph import Graph, kcore_ordering
from graphvc.reducer import reduce_graph


class Ordering(str, enum.Enum):
    DEG_DEC = "deg-dec"
    DEG_INC = "deg-inc"
    KCORE = "kcore"
    RANDOM = "random"


@dataclass(frozen=True)
class SearchConfig:
    ordering: Ordering = Ordering.KCORE
    ball_restriction: bool = True
    graph_reduction: bool = True
    initial_lb: int = 0
    collect_stats: bool = True
    prune: bool = True
    maxvisits: int = 64
    seed: int = 0
    backend: str = "numba"

    def __post_init__(self):
        object.__setattr__(self, "ordering", Ordering(self.ordering))
        if self.initial_lb < 0:
            raise ValueError("initial_lb must be non-negative")
        if self.maxvisits < 1:
            raise ValueError("maxvisits must be at least 1")
        if self.backend not in ("numba", "python"):
            raise ValueError(f"unknown backend {self.backend!r}")


@dataclass
class SearchStats:
    visited_shattered: int = 0
    tentative: int = 0
    h_size: int = 0
    avg_ball_size: float = 0.0
    elapsed: float = 0.0
    work_n: int = 0
    additions: int = 0
    negative_exponent: int = 0
    mask_residue: int = 0

    @property
    def tentative_estimate(self) -> float:
        """Visited sets times half the average ball size (the counted value is ``tentative``)."""
        return self.visited_shattered * self.avg_ball_size / 2


@dataclass
class SearchResult:
    vcdim: int
    witness: list[int]
    witness_ids: list[int] = field(repr=False)
    stats: SearchStats
    initial_lb: int = 0


def order_vertices(g: Graph, high, strategy: Ordering | str, seed: int = 0) -> list[int]:
    """Permutation of ``high`` by degree (either direction), k-core removal order or a seeded shuffle."""
    strategy = Ordering(strategy)
    high = np.unique(np.asarray(list(high) if not isinstance(high, np.ndarray) else high, dtype=np.int64))
    if high.size == 0:
        return []
    deg = g.closed_degrees()[high]
    if strategy is Ordering.DEG_DEC:
        return high[np.lexsort((high, -deg))].tolist()
    if strategy is Ordering.DEG_INC:
        return high[np.lexsort((high, deg))].tolist()
    if strategy is Ordering.KCORE:
        return kcore_ordering(g, high)[0]
    return np.random.default_rng(seed).permutation(high).tolist()


def trace_count_add(table: np.ndarray, x: int, m: int, g: Graph, masks: np.ndarray) -> np.ndarray:
    """Trace counts on ``X ∪ {x}`` from the counts on ``X``.

    ``m`` is the bit assigned to ``x`` and ``masks[v]`` the trace of ``N[v]`` on ``X``.
    """
    table = np.asarray(table, dtype=np.int64)
    if m < 1 or m & (m - 1) or len(table) != m:
        raise ValueError(f"table of size {len(table)} does not match bit {m}")
    out = np.zeros(2 * m, dtype=np.int64)
    out[:m] = table
    for v in [x, *g.neighbors(x).tolist()]:
        y = int(masks[v])
        out[y] -= 1
        out[y + m] += 1
    return out


class ShatterSearch:
    """Plain-Python search over one ordered high set; mirrors the compiled kernel.

    Used as a reference backend and to expose the recursive step directly.
    """

    def __init__(self, g: Graph, order, *, ball: bool = True, prune: bool = True):
        self.g = g
        self.order = list(order)
        self.ball = ball
        self.prune = prune
        self.masks = np.zeros(g.n, dtype=np.int64)
        self.visited = 0
        self.tentative = 0
        self.negative_exponent = 0
        self.witness: list[int] = []
        self._cands: list[int] = []
        self._pos = {v: p for p, v in enumerate(self.order)}

    def candidates(self, i: int) -> list[int]:
        """Start vertex ``order[i]`` followed by the vertices it may be extended with."""
        x = self.order[i]
        if not self.ball:
            return self.order[i:]
        g = self.g
        near = set()
        for v in [x, *g.neighbors(x).tolist()]:
            near.add(v)
            near.update(g.neighbors(v).tolist())
        later = sorted(self._pos[w] for w in near if self._pos.get(w, -1) > i)
        return [x] + [self.order[p] for p in later]

    def run(self, lb: int) -> int:
        for i in range(len(self.order)):
            lb = self.explore_from(i, lb)
        return lb

    def explore_from(self, i: int, lb: int) -> int:
        """Explore all sets whose first vertex is ``order[i]``."""
        self._cands = self.candidates(i)
        return self.explore_shattered(0, [], np.array([self.g.n], dtype=np.int64), lb)

    def explore_shattered(self, i: int, current: list[int], table: np.ndarray, lb: int) -> int:
        x = self._cands[i]
        s = len(current) + 1
        m = 1 << (s - 1)
        new_table = trace_count_add(table, x, m, self.g, self.masks)
        self.tentative += 1
        threshold = 1
        if self.prune:
            if lb + 1 - s < 0:
                self.negative_exponent += 1
            threshold = 1 << max(lb + 1 - s, 0)
        if (new_table < threshold).any():
            return lb
        self.visited += 1
        closed = [x, *self.g.neighbors(x).tolist()]
        self.masks[closed] += m
        grown = current + [x]
        if s > lb:
            lb = s
            self.witness = grown
        for j in range(i + 1, len(self._cands)):
            lb = self.explore_shattered(j, grown, new_table, lb)
        self.masks[closed] -= m
        return lb


def avg_ball_size(g: Graph, high) -> float:
    """Mean of ``|B[v, 2] ∩ high|`` over ``v`` in ``high`` (0 when ``high`` is empty)."""
    high = np.unique(np.asarray(list(high) if not isinstance(high, np.ndarray) else high, dtype=np.int64))
    if high.size == 0:
        return 0.0
    return float(_kernels.ball2_sizes(g.indptr, g.indices, high).mean())


def _scan(g: Graph, order, *, ball: bool, prune: bool, lb: int, stop_at: int = 0,
          maxvisits: int = 0, backend: str = "numba"):
    """Run one scan; returns (lb, witness ids, stats array)."""
    order = np.asarray(order, dtype=np.int64)
    stats = np.zeros(_kernels.N_STATS, dtype=np.int64)
    if backend == "python":
        if stop_at or maxvisits:
            raise ValueError("the python backend only supports full scans")
        search = ShatterSearch(g, order.tolist(), ball=ball, prune=prune)
        new_lb = search.run(lb)
        stats[_kernels.VISITED] = search.visited
        stats[_kernels.TENTATIVE] = search.tentative
        stats[_kernels.NEGATIVE_EXPONENT] = search.negative_exponent
        stats[_kernels.MASK_RESIDUE] = int(np.count_nonzero(search.masks))
        witness = search.witness if new_lb > lb else []
        return new_lb, list(witness), stats
    witness = np.zeros(max(_kernels.max_level(g.indptr), 1), dtype=np.int64)
    new_lb = _kernels.shatter_search(g.indptr, g.indices, order, ball, lb, prune,
                                     stop_at, maxvisits, stats, witness)
    return int(new_lb), witness[: stats[_kernels.WITNESS_LEN]].tolist(), stats


def find_shattered_set(g: Graph, size: int) -> list[int] | None:
    """Some shattered set of exactly ``size`` vertices, or ``None`` if there is none."""
    if size == 0:
        return []
    high = degree_filter(g, size - 1)
    order = order_vertices(g, high, Ordering.DEG_DEC)
    lb, witness, _ = _scan(g, order, ball=True, prune=True, lb=size - 1, stop_at=size)
    return witness[:size] if lb >= size else None


def compute_vcdim(g: Graph, config: SearchConfig | None = None, *, lb_witness=None) -> SearchResult:
    """VC-dimension of ``g`` with a shattered witness of that size.

    ``config.initial_lb`` must not exceed the true value. ``lb_witness`` may
    supply a shattered set of that size (vertex ids); otherwise one is
    searched for when the scan does not improve on the initial bound, and an
    over-large initial bound is reported as ``ValueError``.
    """
    config = config or SearchConfig()
    if g.n == 0:
        raise ValueError("VC-dimension is undefined for the empty graph")
    start = time.perf_counter()
    lb0 = config.initial_lb
    high = degree_filter(g, lb0)
    work, back, work_high = g, np.arange(g.n), high
    if config.graph_reduction and high.size:
        red = reduce_graph(g, high)
        work, back = red.graph, red.kept
        work_high = np.searchsorted(back, high)
    order = order_vertices(work, work_high, config.ordering, config.seed)
    lb, witness, raw = _scan(work, order, ball=config.ball_restriction, prune=config.prune,
                             lb=lb0, backend=config.backend)
    if lb > lb0:
        witness_ids = back[np.asarray(witness, dtype=np.int64)].tolist()
    elif lb_witness is not None:
        witness_ids = [int(v) for v in lb_witness]
        if len(witness_ids) != lb0:
            raise ValueError("lb_witness must have initial_lb vertices")
    else:
        found = find_shattered_set(g, lb0)
        if found is None:
            raise ValueError(f"initial_lb={lb0} exceeds the VC-dimension")
        witness_ids = found
    stats = SearchStats(
        visited_shattered=int(raw[_kernels.VISITED]),
        tentative=int(raw[_kernels.TENTATIVE]),
        h_size=int(high.size),
        work_n=work.n,
        additions=int(raw[_kernels.ADDITIONS]),
        negative_exponent=int(raw[_kernels.NEGATIVE_EXPONENT]),
        mask_residue=int(raw[_kernels.MASK_RESIDUE]),
    )
    if config.collect_stats:
        stats.avg_ball_size = avg_ball_size(work, work_high)
    stats.elapsed = time.perf_counter() - start
    witness_ids = sorted(witness_ids)
    return SearchResult(lb, g.labels[witness_ids].tolist(), witness_ids, stats, lb0)


def count_shattered_sets(g: Graph, high=None, *, prune: bool = False, lb: int = 0,
                         ordering: Ordering | str = Ordering.KCORE) -> int:
    """Number of non-empty shattered subsets of ``high`` visited by the scan.

    With ``prune=False`` that is every shattered subset of ``high``; with
    pruning it is the subfamily that survives the trace-count test.
    """
    if high is None:
        high = np.arange(g.n)
    order = order_vertices(g, high, ordering)
    _, _, raw = _scan(g, order, ball=True, prune=prune, lb=lb)
    return int(raw[_kernels.VISITED])


def scan_shattered(g: Graph, high=None, *, prune: bool = False, lb: int = 0,
                   ordering: Ordering | str = Ordering.KCORE) -> tuple[int, int]:
    """(final bound, visited count) for one scan of ``high``."""
    if high is None:
        high = np.arange(g.n)
    order = order_vertices(g, high, ordering)
    final, _, raw = _scan(g, order, ball=True, prune=prune, lb=lb)
    return final, int(raw[_kernels.VISITED])

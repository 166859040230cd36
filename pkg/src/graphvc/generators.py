"""Seeded random graph generators.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so a
given ``(parameters, seed)`` pair always yields the same graph.
"""

from __future__ import annotations

import numpy as np

from graphvc.graph import Graph


def gen_gnp(n: int, p: float, seed=None) -> Graph:
    """Erdős–Rényi G(n, p): each of the n(n-1)/2 pairs is an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.default_rng(seed)
    chunks = []
    for u in range(n - 1):
        hits = np.flatnonzero(rng.random(n - u - 1) < p)
        if hits.size:
            chunks.append(np.column_stack([np.full(hits.size, u), hits + u + 1]))
    edges = np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)
    return Graph.from_edges(n, edges)


def powerlaw_degrees(n: int, beta: float, rng: np.random.Generator) -> np.ndarray:
    """Degrees drawn with P(d) proportional to d**-beta on 1..n-1, summing to an even number."""
    if n < 2:
        return np.zeros(max(n, 0), dtype=np.int64)
    support = np.arange(1, n, dtype=np.float64)
    cdf = np.cumsum(support ** -beta)
    cdf /= cdf[-1]
    deg = np.searchsorted(cdf, rng.random(n), side="right").astype(np.int64) + 1
    np.minimum(deg, n - 1, out=deg)
    if deg.sum() % 2:
        deg[rng.integers(n)] += 1
    return deg


def gen_powerlaw(n: int, beta: float, seed=None) -> Graph:
    """Configuration model on a power-law degree sequence.

    Half-edges are paired along a random permutation; the resulting loops
    and parallel edges are dropped.
    """
    if beta <= 1:
        raise ValueError("beta must exceed 1")
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.default_rng(seed)
    deg = powerlaw_degrees(n, beta, rng)
    stubs = np.repeat(np.arange(n, dtype=np.int64), deg)
    stubs = stubs[rng.permutation(stubs.size)]
    return Graph.from_edges(n, stubs.reshape(-1, 2))


def grid_edges(side: int) -> np.ndarray:
    ids = np.arange(side * side, dtype=np.int64).reshape(side, side)
    horizontal = np.column_stack([ids[:, :-1].ravel(), ids[:, 1:].ravel()])
    vertical = np.column_stack([ids[:-1, :].ravel(), ids[1:, :].ravel()])
    return np.concatenate([horizontal, vertical])


def gen_grid_perturbed(side: int, delete_fraction: float, seed=None) -> Graph:
    """side x side 4-neighbor grid with floor(delete_fraction * m) random edges removed."""
    if side < 1:
        raise ValueError("side must be at least 1")
    if not 0.0 <= delete_fraction <= 1.0:
        raise ValueError("delete_fraction must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    edges = grid_edges(side)
    # tolerance keeps e.g. 0.29 * 100 from flooring to 28
    drop = min(len(edges), int(delete_fraction * len(edges) + 1e-9))
    keep = np.ones(len(edges), dtype=bool)
    keep[rng.choice(len(edges), size=drop, replace=False)] = False
    return Graph.from_edges(side * side, edges[keep])

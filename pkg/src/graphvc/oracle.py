"""Brute-force ground truth for small graphs.

Everything here works directly from the definition, independently of the
search engine, and refuses instances above a hard size cap.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

from graphvc.exceptions import BudgetExceededError, CapExceededError
from graphvc.graph import Graph

MAX_ORACLE_N = 20
MAX_SHATTER_SIZE = 62
MAX_MATCHING_EDGES = 32


def _closed_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        bits = 1 << v
        for w in g.neighbors(v).tolist():
            bits |= 1 << w
        masks.append(bits)
    return masks


def _shattered(masks: list[int], subset: tuple[int, ...]) -> bool:
    traces = set()
    for bits in masks:
        traces.add(tuple(bool(bits >> x & 1) for x in subset))
    return len(traces) == 1 << len(subset)


def is_shattered(g: Graph, subset: Iterable[int]) -> bool:
    """True iff every subset of ``subset`` equals ``N[v] ∩ subset`` for some vertex ``v``."""
    subset = tuple(sorted(set(subset)))
    if len(subset) > MAX_SHATTER_SIZE:
        raise CapExceededError(f"cannot test sets larger than {MAX_SHATTER_SIZE}")
    for x in subset:
        g._check_vertex(x)
    traces = set()
    for v in range(g.n):
        closed = g.closed_neighborhood(v)
        traces.add(frozenset(x for x in subset if x in closed))
    if not subset:
        return True
    return len(traces) == 1 << len(subset)


def _check_cap(g: Graph) -> None:
    if g.n > MAX_ORACLE_N:
        raise CapExceededError(f"oracle refuses graphs with more than {MAX_ORACLE_N} vertices (n={g.n})")


def brute_vcdim(g: Graph) -> int:
    """Largest shattered set size by trying every subset, size by size."""
    _check_cap(g)
    masks = _closed_masks(g)
    best = 0
    size = 1
    # a shattered set needs 2^size distinct traces
    while (1 << size) <= g.n:
        if not any(_shattered(masks, c) for c in combinations(range(g.n), size)):
            break
        best = size
        size += 1
    return best


def enumerate_shattered(g: Graph, max_size: int | None = None, *, budget: int = 10**7,
                        collect: bool = False):
    """Count non-empty shattered subsets of size at most ``max_size``.

    Extends sets by larger ids only, relying on the family being closed
    under taking subsets. With ``collect=True`` returns ``(count, sets)``.
    """
    _check_cap(g)
    masks = _closed_masks(g)
    max_size = g.n if max_size is None else max_size
    found: list[tuple[int, ...]] = []
    count = 0
    steps = 0
    stack: list[tuple[int, ...]] = [()]
    while stack:
        current = stack.pop()
        start = current[-1] + 1 if current else 0
        if len(current) >= max_size:
            continue
        for v in range(start, g.n):
            steps += 1
            if steps > budget:
                raise BudgetExceededError("enumeration budget exhausted", count)
            grown = current + (v,)
            if _shattered(masks, grown):
                count += 1
                if collect:
                    found.append(grown)
                stack.append(grown)
    return (count, sorted(found)) if collect else count


def brute_max_matching(g: Graph) -> int:
    """Exact matching number by exhaustive branching over the lowest free vertex."""
    if g.n > MAX_ORACLE_N and g.edge_count > MAX_MATCHING_EDGES:
        raise CapExceededError("matching oracle refuses graphs this large")
    adj = [g.neighbors(v).tolist() for v in range(g.n)]

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = best(rest)
        for w in adj[v]:
            if rest >> w & 1:
                out = max(out, 1 + best(rest & ~(1 << w)))
        return out

    return best((1 << g.n) - 1)


def max_shattered_sets(g: Graph) -> list[tuple[int, ...]]:
    """All shattered sets of maximum size."""
    d = brute_vcdim(g)
    if d == 0:
        return [()]
    masks = _closed_masks(g)
    return [c for c in combinations(range(g.n), d) if _shattered(masks, c)]

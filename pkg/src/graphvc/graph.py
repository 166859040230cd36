"""Immutable CSR graph, edge-list I/O and the structural primitives used elsewhere."""

from __future__ import annotations

import heapq
import io
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from graphvc.exceptions import GraphParseError


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1`` stored as CSR arrays.

    ``indices[indptr[v]:indptr[v + 1]]`` is the sorted open neighborhood of
    ``v``. ``labels[v]`` is the vertex's label in the input it came from.
    Build instances with :meth:`from_edges` rather than the constructor.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        """Build a graph from an ``(m, 2)`` integer array; loops and duplicates are dropped."""
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError("edge endpoint out of range")
        edges = edges[edges[:, 0] != edges[:, 1]]
        both = np.concatenate([edges, edges[:, ::-1]])
        if both.size:
            keys = np.unique(both[:, 0] * np.int64(max(n, 1)) + both[:, 1])
            src, dst = np.divmod(keys, np.int64(max(n, 1)))
        else:
            src = dst = np.empty(0, dtype=np.int64)
        dst = dst.astype(np.int64, copy=True)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        if labels is None:
            labels = np.arange(n, dtype=np.int64)
        labels = np.asarray(labels, dtype=np.int64)
        if labels.shape != (n,):
            raise ValueError("labels must have one entry per vertex")
        for arr in (indptr, dst, labels):
            arr.flags.writeable = False
        return cls(indptr, dst, labels)

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    m = edge_count

    def neighbors(self, v: int) -> np.ndarray:
        """Open neighborhood of ``v`` (sorted)."""
        self._check_vertex(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.neighbors(v).tolist()) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def degrees(self) -> np.ndarray:
        """Open degrees of all vertices."""
        return np.diff(self.indptr)

    def closed_degrees(self) -> np.ndarray:
        return np.diff(self.indptr) + 1

    def edges(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` array with ``u < v`` in lexicographic order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph with n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def parse_edge_list(source: str | TextIO) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a :class:`Graph`.

    Lines starting with ``#`` or ``%`` are comments and extra columns are
    ignored. Labels are remapped to ``0..n-1`` in order of first appearance.
    Self-loops are dropped without registering their endpoint, so a label
    that only ever occurs in loops does not become a vertex.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    ids: dict[int, int] = {}
    src: list[int] = []
    dst: list[int] = []
    for lineno, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "#%":
            continue
        tokens = stripped.split()
        if len(tokens) < 2:
            raise GraphParseError(f"line {lineno}: expected two vertex labels", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex label", lineno) from None
        if a < 0 or b < 0:
            raise GraphParseError(f"line {lineno}: negative vertex label", lineno)
        if a == b:
            continue
        src.append(ids.setdefault(a, len(ids)))
        dst.append(ids.setdefault(b, len(ids)))
    labels = np.fromiter(ids.keys(), dtype=np.int64, count=len(ids))
    return Graph.from_edges(len(ids), np.column_stack([src, dst]) if src else [], labels)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph, *, use_labels: bool = False) -> str:
    """Canonical serialization: one ``u v`` line per edge, ``u < v``, sorted."""
    e = g.edges()
    if use_labels:
        e = g.labels[e]
    return "".join(f"{u} {v}\n" for u, v in e.tolist())


def degree_closed(g: Graph, v: int) -> int:
    """Closed degree ``|N[v]|``."""
    g._check_vertex(v)
    return int(g.indptr[v + 1] - g.indptr[v]) + 1


def ball(g: Graph, x: int, r: int) -> frozenset[int]:
    """Vertices at distance at most ``r`` from ``x``."""
    g._check_vertex(x)
    if r < 0:
        raise ValueError("radius must be non-negative")
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for w in g.indices[g.indptr[u] : g.indptr[u + 1]].tolist():
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return frozenset(dist)


def kcore_ordering(g: Graph, subset: Iterable[int] | None = None) -> tuple[list[int], int]:
    """Degeneracy ordering of the subgraph induced by ``subset``.

    Repeatedly removes a vertex of minimum open degree (lowest id on ties).
    Returns the removal order and the degeneracy, i.e. the largest degree
    seen at removal time.
    """
    if subset is None:
        members = np.arange(g.n)
    else:
        members = np.unique(np.fromiter(subset, dtype=np.int64))
    inside = np.zeros(g.n, dtype=bool)
    inside[members] = True
    deg = {}
    for v in members.tolist():
        nb = g.indices[g.indptr[v] : g.indptr[v + 1]]
        deg[v] = int(np.count_nonzero(inside[nb]))
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed = np.zeros(g.n, dtype=bool)
    order: list[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, d)
        for w in g.indices[g.indptr[v] : g.indptr[v + 1]].tolist():
            if inside[w] and not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order, degeneracy


def greedy_maximal_matching(g: Graph) -> list[tuple[int, int]]:
    """Scan vertices in id order, matching each free vertex to its first free neighbor."""
    matched = np.zeros(g.n, dtype=bool)
    matching = []
    for u in range(g.n):
        if matched[u]:
            continue
        for w in g.indices[g.indptr[u] : g.indptr[u + 1]].tolist():
            if not matched[w]:
                matched[u] = matched[w] = True
                matching.append((u, w))
                break
    return matching


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``subset``; new ids follow ascending old ids.

    Returns the subgraph (carrying the original labels) and the old-to-new id map.
    """
    keep = np.unique(np.fromiter(subset, dtype=np.int64))
    if keep.size and (keep[0] < 0 or keep[-1] >= g.n):
        raise IndexError("subset contains an invalid vertex")
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[keep] = np.arange(len(keep))
    e = g.edges()
    e = new_id[e]
    e = e[(e[:, 0] >= 0) & (e[:, 1] >= 0)]
    sub = Graph.from_edges(len(keep), e, g.labels[keep])
    return sub, dict(zip(keep.tolist(), range(len(keep))))

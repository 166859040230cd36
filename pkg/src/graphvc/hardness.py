"""Clique-to-VC-dimension gadget.

``build_hardness_graph(g, k)`` returns a split graph whose VC-dimension is
at least ``k`` exactly when ``g`` has a ``k``-clique. Ground vertices are the
pairs ``(v, i)``; every range of the classical set-system reduction becomes
one extra vertex adjacent to its members.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from graphvc.exceptions import CapExceededError
from graphvc.graph import Graph

MAX_K = 16
MAX_CLIQUE_N = 30


@dataclass
class HardnessInstance:
    host: Graph
    k: int
    x_vertices: list[int]
    range_vertices: dict[str, list[int]]
    ranges: list[tuple[int, ...]] = field(repr=False)
    ground: list[tuple[int, int]] = field(repr=False)

    def roles(self):
        """One dict per host vertex describing what it stands for."""
        out = []
        for vid, (v, i) in zip(self.x_vertices, self.ground):
            out.append({"id": vid, "role": "X", "vertex": v, "index": i})
        base = len(self.x_vertices)
        tag_of = {vid: tag for tag, ids in self.range_vertices.items() for vid in ids}
        for offset, members in enumerate(self.ranges):
            vid = base + offset
            out.append({"id": vid, "role": tag_of[vid], "members": list(members)})
        return out


def expected_size(n: int, m: int, k: int) -> int:
    """Vertex count of the gadget for a graph with n vertices and m edges."""
    r3 = (1 << k) - 1 - k - k * (k - 1) // 2 if k >= 3 else 0
    return k * n + 1 + k * n + k * k * m + r3


def build_hardness_graph(g: Graph, k: int) -> HardnessInstance:
    if k < 0 or k > g.n:
        raise ValueError(f"k must lie in [0, n]; got k={k}, n={g.n}")
    if k > MAX_K:
        raise CapExceededError(f"k={k} is above the construction cap {MAX_K}")
    n = g.n
    ground = [(v, i) for v in range(n) for i in range(1, k + 1)]
    xid = {pair: idx for idx, pair in enumerate(ground)}

    ranges: list[tuple[int, ...]] = []
    tags: list[str] = []
    seen: set[tuple[int, ...]] = set()

    def add(tag, members):
        members = tuple(sorted(members))
        if members in seen:
            return
        seen.add(members)
        ranges.append(members)
        tags.append(tag)

    add("R0", ())
    for pair in ground:
        add("R1", (xid[pair],))
    for u, v in g.edges().tolist():
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                add("R2", (xid[u, i], xid[v, j]))
    for mask in range(1 << k):
        picked = [i + 1 for i in range(k) if mask >> i & 1]
        if len(picked) >= 3:
            add("R3", (xid[v, i] for v in range(n) for i in picked))

    base = len(ground)
    edges = []
    for offset, members in enumerate(ranges):
        edges.extend((base + offset, x) for x in members)
    if k >= 3:
        ids = np.arange(base)
        a, b = np.triu_indices(base, 1)
        edges.extend(zip(ids[a].tolist(), ids[b].tolist()))
    host = Graph.from_edges(base + len(ranges), np.array(edges, dtype=np.int64).reshape(-1, 2))
    by_tag: dict[str, list[int]] = {"R0": [], "R1": [], "R2": [], "R3": []}
    for offset, tag in enumerate(tags):
        by_tag[tag].append(base + offset)
    return HardnessInstance(host, k, list(range(base)), by_tag, ranges, ground)


def has_k_clique(g: Graph, k: int) -> bool:
    """Backtracking clique search on small graphs."""
    if g.n > MAX_CLIQUE_N:
        raise CapExceededError(f"clique search refuses graphs with more than {MAX_CLIQUE_N} vertices")
    if k <= 0:
        return True
    adj = [set(g.neighbors(v).tolist()) for v in range(g.n)]

    def extend(size: int, candidates: set[int]) -> bool:
        if size == k:
            return True
        if size + len(candidates) < k:
            return False
        for v in sorted(candidates):
            if extend(size + 1, {w for w in candidates & adj[v] if w > v}):
                return True
        return False

    return extend(0, set(range(g.n)))

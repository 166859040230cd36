"""Input coercion shared by the estimators."""

from __future__ import annotations

import numpy as np

from graphvc.graph import Graph, parse_edge_list


def check_graph(G, *, allow_empty: bool = False) -> Graph:
    """Coerce ``G`` into a :class:`Graph`.

    Accepts a ``Graph``, edge-list text, an ``(m, 2)`` array-like of integer
    labels (remapped by first appearance like parsed text), or a
    ``networkx.Graph``.
    """
    if isinstance(G, Graph):
        g = G
    elif isinstance(G, str):
        g = parse_edge_list(G)
    elif hasattr(G, "nodes") and hasattr(G, "edges"):
        g = _from_networkx(G)
    else:
        edges = np.asarray(G)
        if edges.size == 0:
            edges = edges.reshape(0, 2)
        if edges.ndim != 2 or edges.shape[1] != 2:
            raise ValueError(f"expected an (m, 2) edge array, got shape {edges.shape}")
        if not np.issubdtype(edges.dtype, np.integer):
            raise TypeError("edge endpoints must be integers")
        g = parse_edge_list("".join(f"{u} {v}\n" for u, v in edges.tolist()))
    if not allow_empty and g.n == 0:
        raise ValueError("graph has no vertices")
    return g


def _from_networkx(G) -> Graph:
    nodes = list(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in G.edges()]
    if all(isinstance(v, (int, np.integer)) and v >= 0 for v in nodes):
        labels = np.array(nodes, dtype=np.int64)
    else:
        labels = None
    return Graph.from_edges(len(nodes), np.array(edges, dtype=np.int64).reshape(-1, 2), labels)

"""Degree-based graph indices, all exact integers.

The vertex forms sum over vertices/edges of the graph itself; the edge
("reformulated") forms do the same on edge degrees, where the degree of
an edge uv is deg(u) + deg(v) - 2.  Equivalently, em1 and em2 are m1 and
m2 of the line graph; the test suite holds the package to that identity.
"""

from __future__ import annotations

from .graph import Graph, GraphError

INDEX_IDS = ("m1", "m2", "em1", "em2")


def m1(g: Graph) -> int:
    """First Zagreb index: sum of squared vertex degrees."""
    return sum(len(g.neighbors(v)) ** 2 for v in range(g.n))


def m2(g: Graph) -> int:
    """Second Zagreb index: sum of deg(u)*deg(v) over edges uv."""
    adj = [g.neighbors(v) for v in range(g.n)]
    return sum(len(adj[u]) * len(adj[v]) for u, v in g.edges)


def em1(g: Graph) -> int:
    """First reformulated Zagreb index: sum of squared edge degrees."""
    adj = [g.neighbors(v) for v in range(g.n)]
    return sum((len(adj[u]) + len(adj[v]) - 2) ** 2 for u, v in g.edges)


def em2(g: Graph) -> int:
    """Second reformulated Zagreb index.

    Sum of deg(e)*deg(f) over unordered pairs of distinct adjacent edges,
    each pair counted once.  Two distinct edges of a simple graph share at
    most one endpoint, so grouping the incident pairs per vertex counts
    every adjacent pair exactly once.
    """
    adj = [g.neighbors(v) for v in range(g.n)]
    s = [0] * g.n
    q = [0] * g.n
    for u, v in g.edges:
        ed = len(adj[u]) + len(adj[v]) - 2
        s[u] += ed
        s[v] += ed
        q[u] += ed * ed
        q[v] += ed * ed
    return sum((s[v] * s[v] - q[v]) // 2 for v in range(g.n))


INDEX_FUNCS = {"m1": m1, "m2": m2, "em1": em1, "em2": em2}


def compute_index(g: Graph, index: str) -> int:
    """Dispatch by index id ("m1", "m2", "em1", "em2")."""
    try:
        fn = INDEX_FUNCS[index]
    except KeyError:
        raise GraphError(f"unknown index {index!r}, expected one of {INDEX_IDS}") from None
    return fn(g)

"""Graph products and bespoke constructions used by the verified theorems.

Product vertices (g, h) are indexed row-major as g * n(H) + h so solver
traces and serialized outputs are reproducible.
"""

from __future__ import annotations

from .errors import VertexCapError
from .graphs import VERTEX_CAP, Graph, pendant_requirement


def _product_order(G: Graph, H: Graph) -> int:
    order = G.n * H.n
    if order > VERTEX_CAP:
        raise VertexCapError(
            f"product order {G.n}*{H.n}={order} exceeds cap {VERTEX_CAP}")
    return order


def lexicographic_product(G: Graph, H: Graph) -> Graph:
    """(g1,h1) ~ (g2,h2) iff g1g2 in E(G), or g1=g2 and h1h2 in E(H)."""
    order = _product_order(G, H)
    nh = H.n
    edges = []
    for g1, g2 in G.edges():
        for h1 in range(nh):
            for h2 in range(nh):
                edges.append((g1 * nh + h1, g2 * nh + h2))
    for g in range(G.n):
        for h1, h2 in H.edges():
            edges.append((g * nh + h1, g * nh + h2))
    return Graph(order, edges)


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """(g,h) ~ (g',h') iff gg' in E(G) and h=h', or g=g' and hh' in E(H)."""
    order = _product_order(G, H)
    nh = H.n
    edges = []
    for g1, g2 in G.edges():
        for h in range(nh):
            edges.append((g1 * nh + h, g2 * nh + h))
    for g in range(G.n):
        for h1, h2 in H.edges():
            edges.append((g * nh + h1, g * nh + h2))
    return Graph(order, edges)


def complement(G: Graph) -> Graph:
    return Graph(G.n, [(u, v) for u in range(G.n) for v in range(u + 1, G.n)
                       if not G.has_edge(u, v)])


def hat_construction(G: Graph) -> Graph:
    """Universal vertex w over G, then the same number of pendants hung on
    every vertex of V(G) + w.

    The pendant count is ceil(log2(n+1)) + 1 with n = n(G), which makes
    V(G) + w a supportive dominating set meeting the pendant threshold for
    gamma = n + 1. Vertex order: V(G), then w = n, then pendant blocks per
    support vertex in index order.
    """
    if G.n < 3:
        raise ValueError("hat construction needs n(G) >= 3")
    if not G.is_connected():
        raise ValueError("hat construction needs a connected graph")
    n = G.n
    p = pendant_requirement(n + 1)
    order = (n + 1) * (1 + p)
    if order > VERTEX_CAP:
        raise VertexCapError(f"hat order {order} exceeds cap {VERTEX_CAP}")
    edges = list(G.edges())
    w = n
    edges.extend((u, w) for u in range(n))
    nxt = n + 1
    for u in range(n + 1):
        for _ in range(p):
            edges.append((u, nxt))
            nxt += 1
    return Graph(order, edges)


def bridge_graph(m: int, n: int) -> Graph:
    """Disjoint K_m and K_n joined by the two edges u1v1 and u2v2.

    Vertices 0..m-1 are the K_m side (u1 = 0, u2 = 1), m..m+n-1 the K_n
    side (v1 = m, v2 = m+1).
    """
    if m < 3 or n < 3:
        raise ValueError("bridge graph needs m, n >= 3")
    if m + n > VERTEX_CAP:
        raise VertexCapError(f"order {m + n} exceeds cap {VERTEX_CAP}")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    edges += [(m + i, m + j) for i in range(n) for j in range(i + 1, n)]
    edges += [(0, m), (1, m + 1)]
    return Graph(m + n, edges)

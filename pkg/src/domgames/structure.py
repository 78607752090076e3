"""Structural predicates: twins, claw centers, weakly claw-free graphs,
Z-configurations, and Z-insensitivity.

A Z-configuration in a partially dominated graph is an undominated vertex
whose neighbors are all dominated, each of those neighbors having at least
two undominated neighbors. A graph is Z-insensitive when no choice of
played set D produces a Z-configuration in G|N[D]; this is checked over
the distinct values of N[D] only, built by closing {0} under union with
each closed neighborhood.
"""

from __future__ import annotations

from itertools import combinations

from .errors import IsolatedVertexError, VertexCapError
from .graphs import Graph, VertexSet

DEFAULT_EXHAUSTIVE_CAP = 20


def find_twins(G: Graph, kind: str) -> list[tuple[int, int]]:
    """Unordered pairs with equal closed ('true') or open ('false')
    neighborhoods, sorted."""
    if kind not in ("true", "false"):
        raise ValueError(f"kind must be 'true' or 'false', got {kind!r}")
    masks = G.closed_masks if kind == "true" else G.open_masks
    return sorted((u, v) for u, v in combinations(range(G.n), 2)
                  if masks[u] == masks[v])


def is_claw_center(G: Graph, v: int) -> bool:
    """True iff N(v) holds three pairwise non-adjacent vertices."""
    G._check_vertex(v)
    nbrs = list(G.adj[v])
    if len(nbrs) < 3:
        return False
    for a, b, c in combinations(nbrs, 3):
        if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
            return True
    return False


def is_claw_free(G: Graph) -> bool:
    return not any(is_claw_center(G, v) for v in range(G.n))


def is_weakly_claw_free(G: Graph) -> bool:
    """Every vertex has a neighbor that is not a claw center; an isolated
    vertex has no neighbor at all, so it fails the condition outright."""
    centers = [is_claw_center(G, v) for v in range(G.n)]
    return all(any(not centers[w] for w in G.adj[u]) for u in range(G.n))


def has_Z_configuration(G: Graph, A: VertexSet) -> int | None:
    """Smallest-index witness of a Z-configuration in G|A, or None."""
    if A.universe_size != G.n:
        raise ValueError("universe mismatch between graph and dominated set")
    a = A.mask
    for v in range(G.n):
        if (a >> v) & 1:
            continue
        nb = G.adj[v].mask
        if nb & ~a:
            continue
        ok = True
        m = nb
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if (G.adj[u].mask & ~a).bit_count() < 2:
                ok = False
                break
            m ^= low
        if ok:
            return v
    return None


def closed_neighborhood_images(G: Graph) -> set[int]:
    """All distinct masks N[D] over D subsets of V, via union closure."""
    images = {0}
    for v in range(G.n):
        closed = int(G.closed_masks[v])
        images |= {img | closed for img in images}
    return images


def is_Z_insensitive(G: Graph, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP) -> bool:
    if not G.is_isolate_free():
        raise IsolatedVertexError("Z-insensitivity is defined for isolate-free graphs")
    if G.n > exhaustive_cap:
        raise VertexCapError(
            f"n={G.n} exceeds the exhaustive cap {exhaustive_cap}")
    for img in closed_neighborhood_images(G):
        if has_Z_configuration(G, VertexSet.from_mask(G.n, img)) is not None:
            return False
    return True


def z_insensitivity_witness(G: Graph,
                            exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
                            ) -> tuple[VertexSet, int] | None:
    """The (N[D], vertex) pair witnessing a Z-configuration, or None when
    the graph is Z-insensitive. Smallest witness mask wins, for
    reproducible counterexamples."""
    if not G.is_isolate_free():
        raise IsolatedVertexError("Z-insensitivity is defined for isolate-free graphs")
    if G.n > exhaustive_cap:
        raise VertexCapError(
            f"n={G.n} exceeds the exhaustive cap {exhaustive_cap}")
    for img in sorted(closed_neighborhood_images(G)):
        A = VertexSet.from_mask(G.n, img)
        v = has_Z_configuration(G, A)
        if v is not None:
            return A, v
    return None

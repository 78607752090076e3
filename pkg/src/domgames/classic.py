"""Exact classical invariants: domination and total domination numbers,
support-vertex structures, and the pendant-threshold hypothesis test.

Both numbers come from a branch-and-bound over bitmask covers with a
greedy upper bound; the reported certificate is re-derived at the optimal
size so that ties always break to the lexicographically smallest member
tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsolatedVertexError
from .graphs import Graph, VertexSet, pendant_requirement


@dataclass(frozen=True)
class DominationCertificate:
    kind: str  # "dominating" or "total_dominating"
    set: VertexSet
    size: int

    def is_valid_for(self, G: Graph) -> bool:
        mode = "closed" if self.kind == "dominating" else "open"
        return (self.size == len(self.set)
                and G.neighborhood_of_set(self.set, mode) == VertexSet.full(G.n))


def _min_cover_size(cover: list[int], full: int, preset: int) -> int:
    """Minimum number of cover sets with union `full`; sets listed in
    `preset` are charged and applied up front (caller guarantees some
    optimum uses them)."""
    n = len(cover)
    covered0 = 0
    k0 = 0
    m = preset
    while m:
        low = m & -m
        covered0 |= cover[low.bit_length() - 1]
        k0 += 1
        m ^= low
    if covered0 == full:
        return k0
    max_gain = max((c.bit_count() for c in cover), default=0)
    if max_gain == 0:
        raise ValueError("uncoverable instance")

    def greedy(covered: int) -> int:
        k = 0
        while covered != full:
            gain, pick = 0, -1
            for w in range(n):
                g = (cover[w] & ~covered).bit_count()
                if g > gain:
                    gain, pick = g, w
            if gain == 0:
                raise ValueError("uncoverable instance")
            covered |= cover[pick]
            k += 1
        return k

    def rec(covered: int, k: int, best: int) -> int:
        if covered == full:
            return min(best, k)
        uncov = full & ~covered
        if k + -(-uncov.bit_count() // max_gain) >= best:
            return best
        # branch on the uncovered vertex with the fewest potential coverers
        pick_opts = None
        m = uncov
        while m:
            low = m & -m
            u = low.bit_length() - 1
            opts = [w for w in range(n) if (cover[w] >> u) & 1]
            if pick_opts is None or len(opts) < len(pick_opts):
                pick_opts = opts
                if len(opts) <= 1:
                    break
            m ^= low
        if not pick_opts:
            return best  # a vertex nobody covers: dead branch
        for w in pick_opts:
            best = rec(covered | cover[w], k + 1, best)
        return best

    return rec(covered0, k0, k0 + greedy(covered0))


def _lexmin_cover(cover: list[int], full: int, k: int) -> int:
    """Lexicographically smallest (ascending member tuple) mask of exactly
    k cover sets whose union is `full`, k being the known optimum."""
    n = len(cover)
    max_gain = max(c.bit_count() for c in cover)

    def dfs(start: int, covered: int, left: int, chosen: int) -> int | None:
        if covered == full:
            return chosen
        if left == 0 or start >= n:
            return None
        if left * max_gain < (full & ~covered).bit_count():
            return None
        suffix_union = 0
        for w in range(start, n):
            suffix_union |= cover[w]
        if (full & ~covered) & ~suffix_union:
            return None
        for w in range(start, n):
            if cover[w] & ~covered == 0:
                continue
            got = dfs(w + 1, covered | cover[w], left - 1, chosen | (1 << w))
            if got is not None:
                return got
        return None

    got = dfs(0, 0, k, 0)
    if got is None:
        raise AssertionError("no cover at the computed optimum size")
    return got


def support_vertices(G: Graph) -> VertexSet:
    """Vertices with at least one neighbor of degree 1."""
    supp = 0
    for v in range(G.n):
        if G.degree(v) == 1:
            supp |= G.adj[v].mask
    return VertexSet.from_mask(G.n, supp)


def domination_number(G: Graph) -> tuple[int, DominationCertificate]:
    if G.n < 1:
        raise ValueError("domination number needs n >= 1")
    full = (1 << G.n) - 1
    cover = [int(m) for m in G.closed_masks]
    # Swap argument: a pendant can always be traded for its support, so
    # some optimum contains every support vertex of degree >= 2 (degree-1
    # supports are the K_2 case, where presetting both ends overshoots).
    preset = 0
    for s in support_vertices(G):
        if G.degree(s) >= 2:
            preset |= 1 << s
    k = _min_cover_size(cover, full, preset)
    mask = _lexmin_cover(cover, full, k)
    cert = DominationCertificate("dominating", VertexSet.from_mask(G.n, mask), k)
    return k, cert


def total_domination_number(G: Graph) -> tuple[int, DominationCertificate]:
    if not G.is_isolate_free():
        raise IsolatedVertexError("total domination needs an isolate-free graph")
    full = (1 << G.n) - 1
    cover = [int(m) for m in G.open_masks]
    # a pendant vertex is open-dominated only by its support: truly forced
    k = _min_cover_size(cover, full, support_vertices(G).mask)
    mask = _lexmin_cover(cover, full, k)
    cert = DominationCertificate("total_dominating",
                                 VertexSet.from_mask(G.n, mask), k)
    return k, cert


def has_supportive_dominating_set(G: Graph) -> bool:
    supp = support_vertices(G)
    return G.neighborhood_of_set(supp, "closed") == VertexSet.full(G.n)


def satisfies_pendant_theorem_hypothesis(G: Graph) -> bool:
    """Supportive dominating set present and every support vertex carries
    at least ceil(log2(gamma)) + 1 pendant neighbors."""
    if G.n < 3:
        raise ValueError("hypothesis test needs n >= 3")
    if not G.is_connected():
        raise ValueError("hypothesis test needs a connected graph")
    if not has_supportive_dominating_set(G):
        return False
    gamma, _ = domination_number(G)
    need = pendant_requirement(gamma)
    for s in support_vertices(G):
        pendants = sum(1 for u in G.adj[s] if G.degree(u) == 1)
        if pendants < need:
            return False
    return True

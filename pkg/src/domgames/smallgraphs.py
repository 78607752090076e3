"""Enumeration of small graphs up to isomorphism, plus the stored
connected-graph lists the verifier sweeps over.

Graphs on n vertices are built by extending every (n-1)-vertex graph with
one new vertex per possible neighborhood, deduplicating through a
canonical form: the lexicographically smallest upper-triangle adjacency
bitstring over all vertex orders consistent with an iterated
degree-refinement partition. Exact but exponential in the worst case;
meant for n <= 8.

Lists for n <= 7 ship as package data so sweep suites never pay the
enumeration cost; `connected_graphs` prefers them and falls back to the
generator.
"""

from __future__ import annotations

import random
from importlib import resources
from itertools import permutations, product

from .codec import graph6_str, parse_graph6
from .graphs import Graph


def _refine_partition(G: Graph) -> list[list[int]]:
    """Ordered stable partition of vertices under iterated neighbor-class
    counting; cell order is determined by the class signatures so it is
    isomorphism invariant."""
    labels = {v: G.degree(v) for v in range(G.n)}
    while True:
        sigs = {}
        for v in range(G.n):
            nbr = tuple(sorted(labels[u] for u in G.adj[v]))
            sigs[v] = (labels[v], nbr)
        order = sorted(set(sigs.values()))
        new_labels = {v: order.index(sigs[v]) for v in range(G.n)}
        if new_labels == labels:
            break
        labels = new_labels
    cells: dict[int, list[int]] = {}
    for v in range(G.n):
        cells.setdefault(labels[v], []).append(v)
    return [cells[k] for k in sorted(cells)]


def _triangle_bits(G: Graph, order: list[int]) -> int:
    bits = 0
    k = 0
    for j in range(1, G.n):
        for i in range(j):
            bits <<= 1
            if G.has_edge(order[i], order[j]):
                bits |= 1
            k += 1
    return bits


def canonical_key(G: Graph) -> tuple[int, int]:
    """(n, minimal adjacency bitstring over partition-respecting vertex
    orders); equal exactly for isomorphic graphs."""
    cells = _refine_partition(G)
    best = None
    for perm_parts in product(*(permutations(c) for c in cells)):
        order = [v for part in perm_parts for v in part]
        bits = _triangle_bits(G, order)
        if best is None or bits < best:
            best = bits
    return (G.n, best if best is not None else 0)


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, deterministic order."""
    if n < 1:
        raise ValueError("need n >= 1")
    level = [Graph(1)]
    for k in range(2, n + 1):
        seen = set()
        nxt = []
        for parent in level:
            base = parent.edges()
            for nbhd in range(1 << (k - 1)):
                edges = base + [(u, k - 1) for u in range(k - 1)
                                if (nbhd >> u) & 1]
                cand = Graph(k, edges)
                key = canonical_key(cand)
                if key not in seen:
                    seen.add(key)
                    nxt.append(cand)
        level = nxt
    return level


def enumerate_connected_graphs(n: int) -> list[Graph]:
    return [G for G in enumerate_graphs(n) if G.is_connected()]


def _stored_list(n: int) -> list[Graph] | None:
    name = f"connected_n{n}.g6"
    try:
        path = resources.files("domgames.data").joinpath(name)
        text = path.read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return None
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs of order n up to isomorphism, from the stored
    list when available."""
    stored = _stored_list(n)
    if stored is not None:
        return stored
    return enumerate_connected_graphs(n)


def write_stored_lists(max_n: int, directory) -> None:
    """Regenerate the packaged graph6 lists (maintenance helper)."""
    from pathlib import Path
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for n in range(2, max_n + 1):
        lines = [graph6_str(G) for G in enumerate_connected_graphs(n)]
        (directory / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")


def random_isolate_free_graphs(count: int, max_n: int, seed: int) -> list[Graph]:
    """Deterministic sample of isolate-free graphs with 2 <= n <= max_n and
    mixed edge densities."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.25, 0.75)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        G = Graph(n, edges)
        if G.is_isolate_free():
            out.append(G)
    return out

"""Immutable simple graphs over a small fixed vertex universe.

Vertices are dense 0-based integers. Sets of vertices are bitmasks wrapped
in :class:`VertexSet`; adjacency is an array of open-neighborhood sets.
The universe is capped at :data:`VERTEX_CAP` vertices so every set fits in
a signed 64-bit word, which is what the solver kernels operate on.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import VertexCapError

VERTEX_CAP = 63


def _check_universe(universe_size: int) -> None:
    if not 0 <= universe_size <= VERTEX_CAP:
        raise VertexCapError(
            f"universe size {universe_size} outside [0, {VERTEX_CAP}]")


class VertexSet:
    """A set of vertex indices inside a fixed universe.

    The canonical encoding of a set is the pair ``(universe_size, mask)``
    where bit ``v`` of ``mask`` is membership of vertex ``v``; equal sets
    encode equally, so instances hash and compare by value and can key a
    transposition table directly.
    """

    __slots__ = ("universe_size", "mask")

    def __init__(self, universe_size: int, members: Iterable[int] = ()):
        _check_universe(universe_size)
        mask = 0
        for v in members:
            if not 0 <= v < universe_size:
                raise ValueError(f"vertex {v} outside universe [0, {universe_size})")
            mask |= 1 << v
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, universe_size: int, mask: int) -> "VertexSet":
        _check_universe(universe_size)
        if mask < 0 or mask >> universe_size:
            raise ValueError(f"mask {mask:#x} has bits outside universe {universe_size}")
        s = cls.__new__(cls)
        object.__setattr__(s, "universe_size", universe_size)
        object.__setattr__(s, "mask", mask)
        return s

    @classmethod
    def full(cls, universe_size: int) -> "VertexSet":
        return cls.from_mask(universe_size, (1 << universe_size) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def _coerce(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.universe_size != self.universe_size:
            raise ValueError(
                f"universe mismatch: {self.universe_size} vs {other.universe_size}")
        return other.mask

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.universe_size, self.mask | self._coerce(other))

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.universe_size, self.mask & self._coerce(other))

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.universe_size, self.mask & ~self._coerce(other))

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.universe_size:
            raise ValueError(f"vertex {v} outside universe")
        return VertexSet.from_mask(self.universe_size, self.mask | (1 << v))

    def complement(self) -> "VertexSet":
        full = (1 << self.universe_size) - 1
        return VertexSet.from_mask(self.universe_size, full ^ self.mask)

    def is_subset(self, other: "VertexSet") -> bool:
        return self.mask & ~self._coerce(other) == 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe_size and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, VertexSet)
                and self.universe_size == other.universe_size
                and self.mask == other.mask)

    def __hash__(self) -> int:
        return hash((self.universe_size, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.universe_size}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Simple undirected graph: ``n`` vertices, ``adj[v]`` the open neighborhood.

    Construction validates the cap, rejects loops, collapses duplicate
    edges, and freezes the result; instances are safe to share across
    workers.
    """

    __slots__ = ("n", "adj", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        _check_universe(n)
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has endpoint outside [0, {n})")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "adj", tuple(VertexSet.from_mask(n, m) for m in masks))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- neighborhoods ----------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")

    def open_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet.from_mask(self.n, self.adj[v].mask | (1 << v))

    def neighborhood_of_set(self, S: VertexSet, mode: str = "closed") -> VertexSet:
        if S.universe_size != self.n:
            raise ValueError(
                f"universe mismatch: set has {S.universe_size}, graph has {self.n}")
        if mode not in ("open", "closed"):
            raise ValueError(f"mode must be 'open' or 'closed', got {mode!r}")
        m = 0
        for v in S:
            m |= self.adj[v].mask
        if mode == "closed":
            m |= S.mask
        return VertexSet.from_mask(self.n, m)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no minimum degree")
        return min(len(s) for s in self.adj)

    def is_isolate_free(self) -> bool:
        return self.n > 0 and all(s.mask for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= self.adj[low.bit_length() - 1].mask
                m ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def delete_vertex(self, v: int) -> "Graph":
        """Graph minus one vertex, remaining vertices reindexed densely."""
        self._check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        index = {u: i for i, u in enumerate(keep)}
        return Graph(self.n - 1,
                     [(index[a], index[b]) for a, b in self.edges()
                      if a != v and b != v])

    # -- solver-facing mask views -----------------------------------------

    @cached_property
    def open_masks(self) -> np.ndarray:
        return np.array([s.mask for s in self.adj], dtype=np.int64)

    @cached_property
    def closed_masks(self) -> np.ndarray:
        return np.array([s.mask | (1 << v) for v, s in enumerate(self.adj)],
                        dtype=np.int64)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.adj == other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def generate(family: str, *params: int) -> Graph:
    """Build a standard family member: path, cycle, complete, star, empty,
    or cycle_power.

    ``star k`` is K_{1,k} with the center at index 0; ``cycle_power N n``
    joins vertices at circular distance at most n on an N-cycle.
    """
    if family == "path":
        (n,) = params
        if n < 1:
            raise ValueError("path needs n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        (n,) = params
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "star":
        (k,) = params
        if k < 1:
            raise ValueError("star needs k >= 1")
        return Graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if family == "empty":
        (n,) = params
        if n < 1:
            raise ValueError("empty needs n >= 1")
        return Graph(n)
    if family == "cycle_power":
        N, n = params
        if N < 3 or n < 1:
            raise ValueError("cycle_power needs N >= 3 and n >= 1")
        edges = []
        for i in range(N):
            for j in range(i + 1, N):
                d = min(j - i, N - (j - i))
                if d <= n:
                    edges.append((i, j))
        return Graph(N, edges)
    raise ValueError(f"unknown family {family!r}")


def ceil_log2(x: int) -> int:
    """Smallest k with 2**k >= x, for x >= 1."""
    if x < 1:
        raise ValueError("ceil_log2 needs x >= 1")
    return (x - 1).bit_length()


def pendant_requirement(gamma: int) -> int:
    """Pendant count threshold ceil(log2(gamma)) + 1 used by the
    supportive-dominating-set criterion."""
    return ceil_log2(gamma) + 1

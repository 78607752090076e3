"""Free-tree enumeration and the tree census over the game invariants.

Rooted trees are generated by the level-sequence successor walk (start at
the path, repeatedly clip the deepest leaf chain and recycle the block),
which emits every unlabeled rooted tree exactly once in decreasing
lexicographic order of level sequences. A rooted tree is kept when it is
the first occurrence of its free tree, decided by a canonical certificate
rooted at the centroid (smaller of the two certificates when the tree is
bicentral). The stream order is therefore deterministic.

The census evaluates gamma, gamma_t, and the five Dominator-start game
values for every tree of an order, asserting the invariant lattice order
on each one, and aggregates the equality/comparison counts of the
published tree table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator

from .classic import domination_number, total_domination_number
from .codec import graph6_str, parse_graph6
from .errors import VertexCapError
from .game import (ALL_VARIANTS, DEFAULT_MEMO_CAP, SOLVER_VERSION, Player,
                   game_value)
from .graphs import VERTEX_CAP, Graph


def _level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical rooted-tree level sequences of length n, in
    decreasing lexicographic order (path first, star last)."""
    L = list(range(1, n + 1))
    while True:
        yield L
        p = -1
        for i in range(n - 1, -1, -1):
            if L[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = -1
        for i in range(p - 1, -1, -1):
            if L[i] == L[p] - 1:
                q = i
                break
        nxt = L[:p]
        block = p - q
        for i in range(p, n):
            nxt.append(nxt[i - block])
        L = nxt


def _parents_from_levels(levels: list[int]) -> list[int]:
    parent = [-1] * len(levels)
    last_at_level: dict[int, int] = {}
    for i, lv in enumerate(levels):
        if lv > 1:
            parent[i] = last_at_level[lv - 1]
        last_at_level[lv] = i
    return parent


def _tree_graph(levels: list[int]) -> Graph:
    parent = _parents_from_levels(levels)
    return Graph(len(levels),
                 [(i, parent[i]) for i in range(len(levels)) if parent[i] >= 0])


def _centroids(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    size = [1] * n
    order = []
    seen = [False] * n
    stack = [(0, -1)]
    parent = [-1] * n
    while stack:
        v, par = stack.pop()
        seen[v] = True
        parent[v] = par
        order.append(v)
        for u in adj[v]:
            if not seen[u]:
                stack.append((u, v))
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best, cs = n + 1, []
    for v in range(n):
        heaviest = n - size[v]
        for u in adj[v]:
            if parent[u] == v:
                heaviest = max(heaviest, size[u])
        if heaviest < best:
            best, cs = heaviest, [v]
        elif heaviest == best:
            cs.append(v)
    return cs


def _rooted_cert(adj: list[list[int]], root: int) -> str:
    n = len(adj)
    parent = [-2] * n
    order = []
    stack = [root]
    parent[root] = -1
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adj[v]:
            if parent[u] == -2:
                parent[u] = v
                stack.append(u)
    cert = [""] * n
    for v in reversed(order):
        kids = sorted(cert[u] for u in adj[v] if parent[u] == v)
        cert[v] = "(" + "".join(kids) + ")"
    return cert[root]


def free_tree_certificate(G: Graph) -> str:
    adj = [list(G.adj[v]) for v in range(G.n)]
    return min(_rooted_cert(adj, c) for c in _centroids(adj))


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """Every unlabeled tree of order n exactly once, deterministic order."""
    if not 1 <= n <= VERTEX_CAP:
        raise VertexCapError(f"tree order {n} outside [1, {VERTEX_CAP}]")
    seen: set[str] = set()
    for levels in _level_sequences(n):
        G = _tree_graph(levels)
        cert = free_tree_certificate(G)
        if cert not in seen:
            seen.add(cert)
            yield G


@dataclass(frozen=True)
class TreeRecord:
    graph6: str
    gamma: int
    gamma_t: int
    dom_d: int
    total_d: int
    z_d: int
    l_d: int
    ll_d: int


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    eq_dom: int          # gamma_Zg = gamma_g
    eq_total_game: int   # gamma_Zg = gamma_tg
    eq_gamma: int        # gamma_Zg = gamma
    gt_gamma_t: int      # gamma_Zg > gamma_t
    lt_gamma_t: int      # gamma_Zg < gamma_t

    TSV_HEADER = "n\tT\teq_gg\teq_tg\teq_gamma\tgt_gammat\tlt_gammat"

    def tsv_line(self) -> str:
        return "\t".join(map(str, (self.n, self.total, self.eq_dom,
                                   self.eq_total_game, self.eq_gamma,
                                   self.gt_gamma_t, self.lt_gamma_t)))


class HierarchyViolation(AssertionError):
    """The invariant lattice order failed on a solved graph: solver bug."""


def _check_hasse(g6: str, gamma: int, gamma_t: int, dom_d: int, total_d: int,
                 z_d: int, l_d: int, ll_d: int) -> None:
    ok = (gamma <= z_d <= dom_d and z_d <= total_d
          and max(dom_d, total_d) <= l_d <= ll_d
          and gamma <= gamma_t <= total_d)
    if not ok:
        raise HierarchyViolation(
            f"lattice order violated on {g6}: gamma={gamma} gamma_t={gamma_t} "
            f"z={z_d} dom={dom_d} total={total_d} l={l_d} ll={ll_d}")


def evaluate_tree(g6: str, memo_cap: int = DEFAULT_MEMO_CAP) -> TreeRecord:
    G = parse_graph6(g6)
    gamma, _ = domination_number(G)
    gamma_t, _ = total_domination_number(G)
    vals = {var.name: game_value(G, var, Player.DOMINATOR, memo_cap=memo_cap)
            for var in ALL_VARIANTS}
    _check_hasse(g6, gamma, gamma_t, vals["dom"], vals["total"], vals["z"],
                 vals["l"], vals["ll"])
    return TreeRecord(g6, gamma, gamma_t, vals["dom"], vals["total"],
                      vals["z"], vals["l"], vals["ll"])


def _cache_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, f"census_v{SOLVER_VERSION}_n{n}.tsv")


def _row_from_records(n: int, records: list[TreeRecord]) -> CensusRow:
    return CensusRow(
        n=n,
        total=len(records),
        eq_dom=sum(1 for r in records if r.z_d == r.dom_d),
        eq_total_game=sum(1 for r in records if r.z_d == r.total_d),
        eq_gamma=sum(1 for r in records if r.z_d == r.gamma),
        gt_gamma_t=sum(1 for r in records if r.z_d > r.gamma_t),
        lt_gamma_t=sum(1 for r in records if r.z_d < r.gamma_t),
    )


def tree_records(n: int, jobs: int = 1,
                 memo_cap: int = DEFAULT_MEMO_CAP) -> list[TreeRecord]:
    g6s = [graph6_str(T) for T in enumerate_free_trees(n)]
    if jobs <= 1:
        return [evaluate_tree(g, memo_cap) for g in g6s]
    with Pool(jobs) as pool:
        return pool.starmap(evaluate_tree, ((g, memo_cap) for g in g6s),
                            chunksize=max(1, len(g6s) // (8 * jobs)))


def census_row(n: int, jobs: int = 1, memo_cap: int = DEFAULT_MEMO_CAP,
               cache_dir: str | None = None) -> CensusRow:
    """Tree-table row for order n; counts never depend on jobs."""
    if not 4 <= n <= VERTEX_CAP:
        raise VertexCapError(f"census order {n} outside [4, {VERTEX_CAP}]")
    if cache_dir:
        path = _cache_path(cache_dir, n)
        if os.path.exists(path):
            with open(path) as fh:
                vals = [int(x) for x in fh.read().split()]
            return CensusRow(*vals)
    row = _row_from_records(n, tree_records(n, jobs, memo_cap))
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        with open(_cache_path(cache_dir, n), "w") as fh:
            fh.write(row.tsv_line().replace("\t", " ") + "\n")
    return row


def write_census(min_n: int, max_n: int, out_path: str,
                 detail_path: str | None = None, jobs: int = 1,
                 memo_cap: int = DEFAULT_MEMO_CAP,
                 cache_dir: str | None = None) -> list[CensusRow]:
    rows = []
    detail: list[TreeRecord] = []
    for n in range(min_n, max_n + 1):
        if detail_path is None and cache_dir:
            rows.append(census_row(n, jobs, memo_cap, cache_dir))
            continue
        records = tree_records(n, jobs, memo_cap)
        rows.append(_row_from_records(n, records))
        detail.extend(records)
        if cache_dir:
            os.makedirs(cache_dir, exist_ok=True)
            with open(_cache_path(cache_dir, n), "w") as fh:
                fh.write(rows[-1].tsv_line().replace("\t", " ") + "\n")
    with open(out_path, "w") as fh:
        fh.write(CensusRow.TSV_HEADER + "\n")
        for row in rows:
            fh.write(row.tsv_line() + "\n")
    if detail_path is not None:
        detail.sort(key=lambda r: r.graph6)
        with open(detail_path, "w") as fh:
            fh.write("graph6\tgamma\tgamma_t\tdom_d\ttotal_d\tz_d\tl_d\tll_d\n")
            for r in detail:
                fh.write("\t".join(map(str, (r.graph6, r.gamma, r.gamma_t,
                                             r.dom_d, r.total_d, r.z_d,
                                             r.l_d, r.ll_d))) + "\n")
    return rows


@dataclass(frozen=True)
class ConjectureReport:
    n_max: int
    trees_checked: int
    strict_counterexamples: tuple[str, ...]  # gamma_Zg >= gamma_Lg
    weak_counterexamples: tuple[str, ...]    # gamma_Zg >= gamma_LLg

    @property
    def passed(self) -> bool:
        return not self.strict_counterexamples


def conjecture_scan(n_max: int, jobs: int = 1,
                    memo_cap: int = DEFAULT_MEMO_CAP) -> ConjectureReport:
    """Scan all trees with 2 <= n <= n_max for gamma_Zg < gamma_Lg (and the
    weaker gamma_Zg < gamma_LLg); counterexamples come back as graph6."""
    if not 2 <= n_max <= VERTEX_CAP:
        raise VertexCapError(f"scan order {n_max} outside [2, {VERTEX_CAP}]")
    checked = 0
    strict: list[str] = []
    weak: list[str] = []
    for n in range(2, n_max + 1):
        for rec in tree_records(n, jobs, memo_cap):
            checked += 1
            if rec.z_d >= rec.l_d:
                strict.append(rec.graph6)
            if rec.z_d >= rec.ll_d:
                weak.append(rec.graph6)
    return ConjectureReport(n_max, checked, tuple(strict), tuple(weak))

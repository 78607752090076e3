import random
from itertools import product as iproduct

import pytest

from domgames.codec import graph6_str
from domgames.errors import VertexCapError
from domgames.graphs import Graph
from domgames.smallgraphs import canonical_key
from domgames.trees import (CensusRow, ConjectureReport, census_row,
                            conjecture_scan, enumerate_free_trees,
                            evaluate_tree, free_tree_certificate,
                            tree_records, write_census)

TABLE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47,
                10: 106, 11: 235, 12: 551, 13: 1301, 14: 3159}


@pytest.mark.parametrize("n,count", sorted(TABLE_COUNTS.items()))
def test_tree_counts(n, count):
    assert sum(1 for _ in enumerate_free_trees(n)) == count


def test_trees_are_trees():
    for n in range(1, 11):
        for T in enumerate_free_trees(n):
            assert T.n == n
            assert T.num_edges() == n - 1
            assert n == 1 or T.is_connected()


def test_stream_determinism():
    for n in (6, 9):
        a = [graph6_str(T) for T in enumerate_free_trees(n)]
        b = [graph6_str(T) for T in enumerate_free_trees(n)]
        assert a == b


def test_no_isomorphic_duplicates():
    for n in range(2, 10):
        keys = [canonical_key(T) for T in enumerate_free_trees(n)]
        assert len(keys) == len(set(keys))


def prufer_tree(seq, n):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    ptr = 0
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq
    heapq.heapify(leaves)
    for v in seq:
        u = heapq.heappop(leaves)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_enumeration_matches_prufer_census(n):
    """All labeled trees via Prufer sequences, reduced by isomorphism,
    must equal the enumerated stream."""
    if n == 2:
        labeled = {canonical_key(Graph(2, [(0, 1)]))}
    else:
        labeled = {canonical_key(prufer_tree(seq, n))
                   for seq in iproduct(range(n), repeat=n - 2)}
    enumerated = {canonical_key(T) for T in enumerate_free_trees(n)}
    assert labeled == enumerated


def test_free_certificate_invariance():
    rng = random.Random(2)
    for n in (7, 9, 12):
        for T in list(enumerate_free_trees(n))[:20]:
            perm = list(range(n))
            rng.shuffle(perm)
            relabeled = Graph(n, [(perm[u], perm[v]) for u, v in T.edges()])
            assert free_tree_certificate(T) == free_tree_certificate(relabeled)


def test_census_row_small():
    assert census_row(4) == CensusRow(4, 2, 2, 0, 2, 0, 1)
    assert census_row(5) == CensusRow(5, 3, 3, 1, 2, 0, 1)


def test_census_jobs_do_not_change_counts():
    assert census_row(8, jobs=2) == census_row(8, jobs=1)


def test_census_cache_roundtrip(tmp_path):
    cache = str(tmp_path / "cache")
    first = census_row(6, cache_dir=cache)
    again = census_row(6, cache_dir=cache)
    assert first == again == CensusRow(6, 6, 5, 1, 4, 0, 2)
    assert (tmp_path / "cache" / "census_v1_n6.tsv").exists()


def test_write_census_tsv(tmp_path):
    out = tmp_path / "table.tsv"
    detail = tmp_path / "detail.tsv"
    rows = write_census(4, 5, str(out), str(detail))
    text = out.read_text().splitlines()
    assert text[0] == "n\tT\teq_gg\teq_tg\teq_gamma\tgt_gammat\tlt_gammat"
    assert text[1] == "4\t2\t2\t0\t2\t0\t1"
    assert text[2] == "5\t3\t3\t1\t2\t0\t1"
    dlines = detail.read_text().splitlines()
    assert dlines[0].startswith("graph6\t")
    assert len(dlines) == 1 + 2 + 3
    assert dlines[1:] == sorted(dlines[1:])  # sorted by canonical graph6
    assert len(rows) == 2


def test_evaluate_tree_record():
    g6 = graph6_str(next(enumerate_free_trees(4)))
    rec = evaluate_tree(g6)
    assert rec.graph6 == g6
    assert rec.gamma <= rec.z_d <= rec.dom_d <= rec.l_d <= rec.ll_d


def test_conjecture_scan_small():
    report = conjecture_scan(8)
    assert isinstance(report, ConjectureReport)
    assert report.passed
    assert report.strict_counterexamples == ()
    assert report.weak_counterexamples == ()
    assert report.trees_checked == sum(TABLE_COUNTS[n] for n in range(2, 9))


def test_conjecture_scan_n2():
    report = conjecture_scan(2)
    assert report.passed and report.trees_checked == 1


def test_out_of_range():
    with pytest.raises(VertexCapError):
        list(enumerate_free_trees(0))
    with pytest.raises(VertexCapError):
        census_row(3)
    with pytest.raises(VertexCapError):
        conjecture_scan(1)


def test_records_parallel_consistency():
    seq = tree_records(7, jobs=1)
    par = tree_records(7, jobs=3)
    assert seq == par

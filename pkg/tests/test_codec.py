import random

import networkx as nx
import pytest

from domgames.codec import (graph6_str, parse_edgelist, parse_graph6,
                            serialize_edgelist, serialize_graph6,
                            sniff_and_parse)
from domgames.errors import FormatError
from domgames.graphs import Graph


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < 0.4]
    return Graph(n, edges)


def test_known_word():
    G = parse_graph6("D?{")
    assert G.n == 5
    assert graph6_str(G) == "D?{"
    # D?{ is the star on five vertices with center 4
    assert sorted(G.degree(v) for v in range(5)) == [1, 1, 1, 1, 4]


def _to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_roundtrip_against_reference_codec():
    rng = random.Random(20240917)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 10))
        mine = serialize_graph6(G)
        ref = nx.to_graph6_bytes(_to_nx(G), header=False).strip()
        assert mine == ref
        back = parse_graph6(mine)
        assert back == G


def test_reference_decodes_ours_and_back():
    rng = random.Random(7)
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 12))
        data = serialize_graph6(G)
        H = nx.from_graph6_bytes(data)
        assert set(H.edges()) == set(G.edges())
        assert parse_graph6(nx.to_graph6_bytes(_to_nx(G), header=False).strip()) == G


def test_roundtrip_byte_identity_suite():
    rng = random.Random(99)
    for _ in range(300):
        G = random_graph(rng, rng.randint(1, 12))
        assert parse_graph6(serialize_graph6(G)) == G
        assert serialize_graph6(parse_graph6(serialize_graph6(G))) == serialize_graph6(G)


def test_header_prefix_tolerated():
    assert parse_graph6(b">>graph6<<D?{").n == 5


def test_malformed_graph6():
    with pytest.raises(FormatError):
        parse_graph6("")
    with pytest.raises(FormatError):
        parse_graph6("D?")  # truncated body
    with pytest.raises(FormatError):
        parse_graph6("D?{{")  # oversized body


def test_edgelist_examples():
    G = parse_edgelist("2 1\n0 1")
    assert G.n == 2 and G.num_edges() == 1
    with pytest.raises(FormatError):
        parse_edgelist("3 1\n0 3")
    with pytest.raises(FormatError):
        parse_edgelist("3 1\n1 1")  # loop
    dup = parse_edgelist("3 2\n0 1\n1 0")
    assert dup.num_edges() == 1


def test_edgelist_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        G = random_graph(rng, rng.randint(1, 9))
        assert parse_edgelist(serialize_edgelist(G)) == G


def test_edgelist_malformed_header():
    for text in ("", "3", "a b", "3 1"):
        with pytest.raises(FormatError):
            parse_edgelist(text)


def test_sniffing():
    assert sniff_and_parse("2 1\n0 1").n == 2
    assert sniff_and_parse("D?{").n == 5

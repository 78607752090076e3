import pytest
from hypothesis import given
from hypothesis import strategies as st

from domgames.errors import VertexCapError
from domgames.graphs import VERTEX_CAP, Graph, VertexSet, generate


def test_open_neighborhood_examples():
    assert set(generate("path", 3).open_neighborhood(1)) == {0, 2}
    assert set(generate("complete", 4).open_neighborhood(0)) == {1, 2, 3}
    assert set(generate("cycle", 5).open_neighborhood(0)) == {1, 4}


def test_closed_neighborhood_examples():
    assert set(generate("path", 3).closed_neighborhood(1)) == {0, 1, 2}
    assert set(Graph(1).closed_neighborhood(0)) == {0}
    assert set(generate("cycle", 5).closed_neighborhood(0)) == {0, 1, 4}


def test_neighborhood_of_set_examples():
    P5 = generate("path", 5)
    assert set(P5.neighborhood_of_set(VertexSet(5, [2]), "closed")) == {1, 2, 3}
    assert set(P5.neighborhood_of_set(VertexSet(5, [2]), "open")) == {1, 3}
    assert set(P5.neighborhood_of_set(VertexSet(5, [0, 4]), "closed")) == {0, 1, 3, 4}


def test_neighborhood_of_set_universe_mismatch():
    with pytest.raises(ValueError):
        generate("path", 5).neighborhood_of_set(VertexSet(4, [2]), "open")


def test_vertex_out_of_range():
    with pytest.raises(ValueError):
        generate("path", 3).open_neighborhood(3)
    with pytest.raises(ValueError):
        generate("path", 3).closed_neighborhood(-1)


def test_is_isolate_free():
    assert generate("path", 2).is_isolate_free()
    assert not Graph(1).is_isolate_free()
    assert not Graph(3, [(0, 1)]).is_isolate_free()  # K_2 + K_1


def test_generate_examples():
    assert generate("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert generate("cycle_power", 5, 2).num_edges() == 10  # K_5
    star = generate("star", 3)
    assert star.n == 4 and set(star.open_neighborhood(0)) == {1, 2, 3}
    assert generate("empty", 3).num_edges() == 0


def test_generate_bad_params():
    for family, params in (("path", (0,)), ("cycle", (2,)), ("star", (0,)),
                           ("cycle_power", (2, 1)), ("cycle_power", (5, 0))):
        with pytest.raises(ValueError):
            generate(family, *params)


def test_cycle_power_degenerations():
    for N in range(3, 10):
        assert generate("cycle_power", N, 1) == generate("cycle", N)
        assert generate("cycle_power", N, N // 2) == generate("complete", N)


def test_graph_rejects_loops_and_collapses_duplicates():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    G = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.num_edges() == 1


def test_vertex_cap():
    Graph(VERTEX_CAP)
    with pytest.raises(VertexCapError):
        Graph(VERTEX_CAP + 1)


def test_vertexset_ops_preserve_universe():
    a = VertexSet(6, [0, 2])
    b = VertexSet(6, [2, 5])
    assert set(a | b) == {0, 2, 5}
    assert set(a & b) == {2}
    assert set(a - b) == {0}
    for s in (a | b, a & b, a - b):
        assert s.universe_size == 6
    with pytest.raises(ValueError):
        a | VertexSet(5, [1])


def test_vertexset_canonical_encoding():
    a = VertexSet(6, [0, 2])
    b = VertexSet(6, [2, 0])
    assert a == b and hash(a) == hash(b) and a.mask == b.mask
    assert a != VertexSet(7, [0, 2])


def test_vertexset_immutable():
    a = VertexSet(4, [1])
    with pytest.raises(AttributeError):
        a.mask = 3


adjacency = st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).map(
            lambda e: (min(e), max(e))).filter(lambda e: e[0] != e[1]))))


@given(adjacency)
def test_closed_equals_open_plus_self(case):
    n, edges = case
    G = Graph(n, edges)
    for v in range(n):
        assert G.closed_neighborhood(v) == G.open_neighborhood(v).add(v)


@given(adjacency, st.data())
def test_set_neighborhood_identity(case, data):
    n, edges = case
    G = Graph(n, edges)
    S = VertexSet(n, data.draw(st.sets(st.integers(0, n - 1))))
    closed = G.neighborhood_of_set(S, "closed")
    assert closed == G.neighborhood_of_set(S, "open") | S


@given(adjacency)
def test_adjacency_symmetric_no_loops(case):
    n, edges = case
    G = Graph(n, edges)
    for v in range(n):
        assert v not in G.adj[v]
        for u in G.adj[v]:
            assert v in G.adj[u]

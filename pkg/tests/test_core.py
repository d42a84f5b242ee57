import itertools

import pytest

from cubepath.core import (
    DimensionError,
    enumerate_edges,
    enumerate_vertices,
    fmt,
    from_index,
    hamming,
    incidence,
    index,
    is_edge,
    lifting_edge,
    split,
    vertex,
)

from conftest import A, random_vertex


def test_vertex_parsing():
    assert vertex("0121") == (0, 1, 2, 1)
    assert vertex([2, 0]) == (2, 0)
    with pytest.raises(ValueError):
        vertex("0131")
    assert fmt((0, 1, 2)) == "012"


def test_enumerate_vertices_small():
    assert enumerate_vertices(0) == [()]
    assert enumerate_vertices(1) == [(0,), (1,), (2,)]
    assert len(enumerate_vertices(4)) == 81


@pytest.mark.parametrize("d", range(0, 7))
def test_counts(d):
    vs = enumerate_vertices(d)
    assert len(vs) == 3 ** d == len(set(vs))
    if d >= 1:
        es = enumerate_edges(d)
        assert len(es) == d * 3 ** (d - 1) == len(set(es))
        assert all(is_edge(e) for e in es)


def test_edge_counts_named():
    assert enumerate_edges(1) == [frozenset({(0,), (1,), (2,)})]
    assert len(enumerate_edges(2)) == 6
    assert len(enumerate_edges(3)) == 27


def test_is_edge():
    assert is_edge([vertex("000"), vertex("001"), vertex("002")])
    assert not is_edge([vertex("000"), vertex("011"), vertex("022")])
    assert is_edge([vertex("010"), vertex("110"), vertex("210")])
    assert not is_edge([vertex("000"), vertex("001"), vertex("001")])
    assert not is_edge([vertex("000"), vertex("001")])


def test_is_edge_exhaustive_d2():
    vs = enumerate_vertices(2)
    edges = set(enumerate_edges(2))
    for t in itertools.combinations(vs, 3):
        assert is_edge(t) == (frozenset(t) in edges)


def test_hamming():
    assert hamming(vertex("0000"), vertex("0000")) == 0
    assert hamming(vertex("0000"), vertex("1111")) == 4
    a, b, x, y = A
    assert [hamming(a, v) for v in (b, x, y)] == [4, 4, 4]


def test_lifting_edge():
    assert lifting_edge(vertex("000"), 3) == {vertex(s) for s in ("000", "001", "002")}
    assert lifting_edge(vertex("012"), 1) == {vertex(s) for s in ("012", "112", "212")}
    assert lifting_edge(vertex("21"), 2) == {vertex(s) for s in ("20", "21", "22")}
    assert is_edge(lifting_edge(vertex("21"), 1))


def test_split(rng):
    assert split(vertex("0121"), 4) == vertex("0121")
    assert split(vertex("0121"), 1) == vertex("1120")
    for _ in range(200):
        d = rng.randrange(1, 7)
        v, i = random_vertex(rng, d), rng.randrange(1, d + 1)
        assert split(split(v, i), i) == v


def test_index_roundtrip():
    for i in range(81):
        assert index(from_index(i, 4)) == i
    assert index(vertex("0001")) == 1


def test_incidence_shapes():
    ev, ve = incidence(3)
    assert ev.shape == (27, 3) and ve.shape == (27, 3)
    for u in range(27):
        for e in ve[u]:
            assert u in ev[e]


def test_dimension_errors():
    with pytest.raises(DimensionError):
        enumerate_vertices(-1)
    with pytest.raises(DimensionError):
        hamming(vertex("01"), vertex("012"))

import pytest

from cubepath.core import enumerate_vertices, vertex
from cubepath.paths import (
    LoosePath,
    PathCertificate,
    PathError,
    concat,
    endpoint_variants,
    format_certificate,
    format_packed,
    iter_records,
    reroute,
    reverse,
    reverse_certificate,
    verify,
)


def P(*vs):
    return LoosePath(tuple(vertex(v) for v in vs))


def test_length_zero_path():
    v = vertex("01")
    om = frozenset(enumerate_vertices(2)) - {v}
    cert = PathCertificate(LoosePath.trivial(v), v, v, om, 2)
    assert verify(cert)


def test_one_edge_path_d1():
    cert = PathCertificate.of(P("0", "1", "2"))
    assert verify(cert)
    assert cert.path.length == 1


def test_repeated_vertex():
    p = LoosePath(tuple(vertex(v) for v in ("00", "01", "02", "12", "02")))
    v = verify(PathCertificate(p, p.start, p.end, frozenset(), 2))
    assert not v and "vertices not distinct" in v.reason


def test_diagnostics():
    p = P("00", "01", "02", "12", "22")
    om = frozenset(vertex(s) for s in ("10", "11", "20", "21"))
    assert verify(PathCertificate(p, p.start, p.end, om, 2))
    assert "not an edge" in verify(PathCertificate(P("00", "01", "12"), vertex("00"), vertex("12"), frozenset(), 2)).reason
    assert "start" in verify(PathCertificate(p, vertex("01"), p.end, om, 2)).reason
    bad = verify(PathCertificate(p, p.start, p.end, om - {vertex("21")}, 2))
    assert not bad and "21" in bad.reason
    with pytest.raises(PathError):
        LoosePath(tuple(vertex(v) for v in ("00", "01")))


def test_concat():
    u, m, w = vertex("000"), vertex("001"), vertex("002")
    q = concat(LoosePath.trivial(u), (u, m, w), LoosePath.trivial(w))
    assert q.vertices == (u, m, w)
    p = P("000", "001", "002")
    with pytest.raises(PathError):
        concat(p, (vertex("002"), vertex("012"), vertex("022")), P("022", "012", "002"))
    with pytest.raises(PathError):
        concat(p, (vertex("002"), vertex("001"), vertex("000")), LoosePath.trivial(vertex("000")))


def test_reverse():
    p = P("000", "001", "002", "012", "022")
    assert reverse(reverse(p)) == p
    t = LoosePath.trivial(vertex("1"))
    assert reverse(t) == t
    c = PathCertificate.of(p, frozenset(enumerate_vertices(3)) - set(p.vertices))
    r = reverse_certificate(c)
    assert (r.start, r.end) == (c.end, c.start) and verify(r)


def test_endpoint_variants_one_edge():
    u, v, w = vertex("0"), vertex("1"), vertex("2")
    assert set(endpoint_variants(LoosePath((u, v, w)))) == {(u, w), (v, w), (u, v)}
    for s, e in endpoint_variants(LoosePath((u, v, w))):
        assert verify(PathCertificate(reroute(LoosePath((u, v, w)), s, e), s, e, frozenset(), 1))


def test_endpoint_variants_longer():
    p = P("000", "001", "002", "012", "022")
    om = frozenset(enumerate_vertices(3)) - set(p.vertices)
    vs = endpoint_variants(p)
    assert len(vs) == 4
    for s, e in vs:
        q = reroute(p, s, e)
        assert set(q.vertices) == set(p.vertices) and set(q.edges) == set(p.edges)
        assert verify(PathCertificate(q, s, e, om, 3))


def test_text_roundtrip():
    p = P("000", "001", "002", "012", "022")
    om = frozenset(enumerate_vertices(3)) - set(p.vertices)
    c = PathCertificate.of(p, om)
    (rec,) = iter_records("cubepath-witness v1 d=3 seed=0\n" + format_certificate(c))
    assert rec.cert == c and rec.error is None


def test_packed_form():
    from cubepath.core import enumerate_vertices as ev

    vs = ev(1)
    c = PathCertificate.of(LoosePath(tuple(vs)))
    assert format_packed(c).split() == ["0", "1", "2"]


def test_bad_record_isolated():
    p = P("000", "001", "002", "012", "022")
    om = frozenset(enumerate_vertices(3)) - set(p.vertices)
    good = format_certificate(PathCertificate.of(p, om))
    text = "d=3\n000 022\n\n000 0x1 002 012 022\n" + good
    recs = list(iter_records(text))
    assert recs[0].cert is None and recs[0].error
    assert recs[1].cert is not None and verify(recs[1].cert)

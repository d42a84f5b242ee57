"""Loose-path certificates, their verifier, and path algebra.

A loose path of length l is a vertex sequence v0 .. v2l with edges
{v(2i-2), v(2i-1), v(2i)}.  Only the vertex sequence is stored; edges are
derived from it.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import enumerate_vertices, fmt, is_edge, vertex
from .symmetry import Symmetry, apply


class PathError(ValueError):
    """A path operation's precondition does not hold."""


@dataclass(frozen=True)
class LoosePath:
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        if len(self.vertices) % 2 != 1:
            raise PathError(f"a loose path has an odd number of vertices, got {len(self.vertices)}")

    @classmethod
    def trivial(cls, v) -> "LoosePath":
        return cls((tuple(v),))

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return (len(self.vertices) - 1) // 2

    @property
    def edges(self) -> tuple:
        vs = self.vertices
        return tuple(frozenset(vs[2 * i:2 * i + 3]) for i in range(self.length))

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class PathCertificate:
    """A claimed loose path from ``start`` to ``end`` covering exactly the
    vertices of Q(dim) outside ``omitted``."""

    path: LoosePath
    start: tuple
    end: tuple
    omitted: frozenset = field(default_factory=frozenset)
    dim: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "end", tuple(self.end))
        object.__setattr__(self, "omitted", frozenset(tuple(v) for v in self.omitted))
        if self.dim is None:
            object.__setattr__(self, "dim", len(self.start))

    @classmethod
    def of(cls, path: LoosePath, omitted: Iterable = ()) -> "PathCertificate":
        return cls(path, path.start, path.end, frozenset(omitted), path.dim)

    @property
    def config(self) -> tuple:
        """``(start, end, *omitted)`` with omitted vertices in sorted order."""
        return (self.start, self.end) + tuple(sorted(self.omitted))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def verify(cert: PathCertificate) -> Verdict:
    """Check every loose-path condition from the raw trits."""
    d = cert.dim
    try:
        vs = [tuple(v) for v in cert.path.vertices]
    except Exception as exc:  # malformed input must be diagnosed, not raised
        return Verdict(False, f"malformed path: {exc}")
    if not isinstance(d, int) or d < 0:
        return Verdict(False, f"bad dimension {d!r}")
    if len(vs) % 2 != 1:
        return Verdict(False, "path has an even number of vertices")
    for v in list(vs) + [cert.start, cert.end] + list(cert.omitted):
        if len(v) != d or any(x not in (0, 1, 2) for x in v):
            return Verdict(False, f"vertex {fmt(v) if all(isinstance(x, int) for x in v) else v!r} is not in V_{d}")
    if len(set(vs)) != len(vs):
        seen = set()
        for v in vs:
            if v in seen:
                return Verdict(False, f"vertices not distinct: {fmt(v)} repeats")
            seen.add(v)
    for i in range((len(vs) - 1) // 2):
        tri = vs[2 * i:2 * i + 3]
        if not is_edge(tri):
            return Verdict(False, f"edge {i + 1} {{{', '.join(fmt(v) for v in tri)}}} is not an edge of Q({d})")
    # edges are distinct automatically once vertices are distinct
    if vs[0] != cert.start:
        return Verdict(False, f"path starts at {fmt(vs[0])}, certificate says {fmt(cert.start)}")
    if vs[-1] != cert.end:
        return Verdict(False, f"path ends at {fmt(vs[-1])}, certificate says {fmt(cert.end)}")
    on_path = set(vs)
    clash = on_path & cert.omitted
    if clash:
        return Verdict(False, f"omitted vertex {fmt(min(clash))} lies on the path")
    if len(on_path) + len(cert.omitted) != 3 ** d:
        missing = next(v for v in enumerate_vertices(d) if v not in on_path and v not in cert.omitted)
        return Verdict(False, f"vertex {fmt(missing)} is neither covered nor omitted")
    return Verdict(True)


def check(cert: PathCertificate) -> PathCertificate:
    """Return ``cert`` unchanged if it verifies, else raise ``PathError``."""
    v = verify(cert)
    if not v:
        raise PathError(v.reason)
    return cert


def _is_edge_strict(tri) -> bool:
    return len(set(tri)) == 3 and is_edge(tri)


def concat(p: LoosePath, e: Iterable, q: LoosePath) -> LoosePath:
    """Join ``p`` to ``q`` with the edge ``e`` = {end of p, middle, start of q}."""
    e = frozenset(tuple(v) for v in e)
    if not _is_edge_strict(tuple(e)):
        raise PathError("connecting triple is not an edge")
    pset, qset = set(p.vertices), set(q.vertices)
    common = pset & qset
    if common:
        raise PathError(f"paths share vertex {fmt(min(common))}")
    if p.end not in e:
        raise PathError(f"edge does not contain the end {fmt(p.end)} of the first path")
    if q.start not in e:
        raise PathError(f"edge does not contain the start {fmt(q.start)} of the second path")
    for v in e & pset:
        if v != p.end:
            raise PathError(f"edge meets the first path again at {fmt(v)}")
    for v in e & qset:
        if v != q.start:
            raise PathError(f"edge meets the second path again at {fmt(v)}")
    (mid,) = e - {p.end, q.start}
    return LoosePath(p.vertices + (mid,) + q.vertices)


def chain(*parts) -> LoosePath:
    """``chain(P0, e1, P1, e2, P2, ...)``: alternate paths and connecting edges."""
    out = parts[0]
    for i in range(1, len(parts), 2):
        out = concat(out, parts[i], parts[i + 1])
    return out


def prepend_edge(e: Iterable, q: LoosePath, start) -> LoosePath:
    """The path that walks ``e`` from ``start`` into the start of ``q``."""
    return concat(LoosePath.trivial(start), e, q)


def reverse(p: LoosePath) -> LoosePath:
    return LoosePath(p.vertices[::-1])


def reverse_certificate(c: PathCertificate) -> PathCertificate:
    return PathCertificate(reverse(c.path), c.end, c.start, c.omitted, c.dim)


def endpoint_variants(p: LoosePath) -> list[tuple]:
    """The ``(start, end)`` readings of ``p``'s edge set: either of the first
    two vertices to either of the last two.  A length-0 path has only
    ``(v0, v0)``."""
    vs = p.vertices
    if p.length == 0:
        return [(vs[0], vs[0])]
    if p.length == 1:
        u, m, w = vs
        return [(u, w), (m, w), (u, m)]
    return [(s, e) for s in (vs[0], vs[1]) for e in (vs[-1], vs[-2])]


def reroute(p: LoosePath, start, end) -> LoosePath:
    """Reorder ``p``'s first/last edge so it runs from ``start`` to ``end``."""
    vs = list(p.vertices)
    if p.length == 0:
        if start == end == vs[0]:
            return p
        raise PathError("trivial path has a single reading")
    if p.length == 1:
        (m,) = set(vs) - {start, end}
        if start not in vs or end not in vs or start == end:
            raise PathError("endpoints not on the edge")
        return LoosePath((start, m, end))
    if start == vs[1]:
        vs[0], vs[1] = vs[1], vs[0]
    elif start != vs[0]:
        raise PathError(f"{fmt(start)} is not a valid start")
    if end == vs[-2]:
        vs[-1], vs[-2] = vs[-2], vs[-1]
    elif end != vs[-1]:
        raise PathError(f"{fmt(end)} is not a valid end")
    return LoosePath(vs)


def apply_path(s: Symmetry, p: LoosePath) -> LoosePath:
    return LoosePath(tuple(apply(s, v) for v in p.vertices))


def apply_certificate(s: Symmetry, c: PathCertificate) -> PathCertificate:
    return PathCertificate(
        apply_path(s, c.path),
        apply(s, c.start),
        apply(s, c.end),
        frozenset(apply(s, v) for v in c.omitted),
        c.dim,
    )


# -- text formats -------------------------------------------------------------


def format_certificate(c: PathCertificate) -> str:
    lines = [
        f"d={c.dim}",
        f"{fmt(c.start)} {fmt(c.end)}",
        " ".join(fmt(v) for v in sorted(c.omitted)),
        " ".join(fmt(v) for v in c.path.vertices),
    ]
    return "\n".join(lines) + "\n"


def format_packed(c: PathCertificate) -> str:
    """The one-line form: path vertices followed by the omitted vertices."""
    return " ".join(fmt(v) for v in c.path.vertices + tuple(sorted(c.omitted))) + "\n"


class RecordError(ValueError):
    pass


@dataclass
class Record:
    """One parsed certificate with its source line and (optional) key."""

    line: int
    cert: PathCertificate | None
    error: str | None = None
    key: str | None = None


def _parse_cert_lines(head: str, ends: str, omitted: str, path: str) -> PathCertificate:
    if not head.startswith("d="):
        raise RecordError(f"expected 'd=<dim>', got {head!r}")
    try:
        d = int(head[2:])
    except ValueError:
        raise RecordError(f"bad dimension line {head!r}") from None
    e = ends.split()
    if len(e) != 2:
        raise RecordError("line 2 must hold exactly the start and end vertices")
    start, end = (vertex(s) for s in e)
    om = frozenset(vertex(s) for s in omitted.split())
    vs = tuple(vertex(s) for s in path.split())
    if not vs:
        raise RecordError("empty path line")
    if len(vs) % 2 == 0:
        raise RecordError(f"path line has {len(vs)} vertices, expected an odd count")
    return PathCertificate(LoosePath(vs), start, end, om, d)


def _parse_packed(line: str, d: int | None = None) -> PathCertificate:
    toks = line.split()
    if d is None:
        d = len(toks[0])
    n = 3 ** d
    if len(toks) != n:
        raise RecordError(f"packed record has {len(toks)} vertices, expected {n}")
    vs = tuple(vertex(s) for s in toks)
    path, om = vs[:n - 2], vs[n - 2:]
    return PathCertificate(LoosePath(path), path[0], path[-1], frozenset(om), d)


def _is_packed(line: str) -> bool:
    toks = line.split()
    return len(toks) > 4 and all(len(t) == len(toks[0]) for t in toks) and len(toks) == 3 ** len(toks[0])


def iter_records(text: str | io.TextIOBase) -> Iterator[Record]:
    """Parse certificates in the four-line format or the packed one-line form.

    A line holding 2 or 4 vertex strings directly before a ``d=`` line is
    taken as that record's key.  Malformed records yield a ``Record`` with
    ``error`` set; parsing resumes at the next record.
    """
    lines = text.splitlines() if isinstance(text, str) else text.read().splitlines()
    i = 0
    key = None
    while i < len(lines):
        raw = lines[i]
        s = raw.strip()
        if not s or s.startswith("#") or s.startswith("cubepath-witness"):
            i += 1
            continue
        if s.startswith("d="):
            chunk = lines[i:i + 4]
            lineno = i + 1
            i += 4
            if len(chunk) < 4:
                yield Record(lineno, None, "truncated certificate record", key)
                key = None
                continue
            try:
                yield Record(lineno, _parse_cert_lines(*chunk), None, key)
            except (RecordError, ValueError) as exc:
                yield Record(lineno, None, str(exc), key)
            key = None
            continue
        if _is_packed(s):
            try:
                yield Record(i + 1, _parse_packed(s), None, None)
            except (RecordError, ValueError) as exc:
                yield Record(i + 1, None, str(exc), None)
            i += 1
            continue
        if len(s.split()) in (2, 4) and key is None:
            key = s
            i += 1
            continue
        yield Record(i + 1, None, f"unrecognized line {s[:40]!r}", None)
        key = None
        i += 1


def read_certificates(text) -> list[PathCertificate]:
    """All certificates in ``text``; a malformed record raises RecordError."""
    out = []
    for rec in iter_records(text):
        if rec.cert is None:
            raise RecordError(f"line {rec.line}: {rec.error}")
        out.append(rec.cert)
    return out

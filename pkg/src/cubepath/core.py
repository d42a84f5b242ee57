"""Vertices and edges of the 3-uniform cube hypergraph Q(d).

A vertex is a plain tuple of trits, e.g. ``(0, 1, 2, 1)``; its text form is
``"0121"``.  Coordinates passed to the public functions are 1-based.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

MAX_DIM = 12

TritVector = tuple  # tuple[int, ...] with entries in {0, 1, 2}


class DimensionError(ValueError):
    """Raised for vertices of mismatched or unsupported dimension."""


def check_dim(d: int) -> int:
    if not isinstance(d, (int, np.integer)) or d < 0:
        raise DimensionError(f"dimension must be a non-negative integer, got {d!r}")
    if d > MAX_DIM:
        raise DimensionError(f"dimension {d} exceeds the supported maximum {MAX_DIM}")
    return int(d)


def vertex(v: Iterable[int] | str) -> TritVector:
    """Coerce a string like ``"0121"`` or an iterable of trits to a vertex."""
    if isinstance(v, str):
        v = v.strip()
        if not v or any(ch not in "012" for ch in v):
            raise ValueError(f"not a vertex string: {v!r}")
        return tuple(int(ch) for ch in v)
    t = tuple(int(x) for x in v)
    if any(x not in (0, 1, 2) for x in t):
        raise ValueError(f"vertex entries must lie in {{0,1,2}}: {t!r}")
    return t


def fmt(v: Sequence[int]) -> str:
    return "".join(str(x) for x in v)


def index(v: Sequence[int]) -> int:
    """Base-3 value of ``v`` with the first coordinate most significant."""
    i = 0
    for x in v:
        i = 3 * i + x
    return i


def from_index(i: int, d: int) -> TritVector:
    out = [0] * d
    for k in range(d - 1, -1, -1):
        i, out[k] = divmod(i, 3)
    return tuple(out)


def enumerate_vertices(d: int) -> list[TritVector]:
    """All 3**d vertices in lexicographic order (equal to index order)."""
    d = check_dim(d)
    return list(itertools.product((0, 1, 2), repeat=d))


def _same_dim(vs: Sequence[Sequence[int]]) -> int:
    dims = {len(v) for v in vs}
    if len(dims) != 1:
        raise DimensionError(f"vertices of different dimensions: {sorted(dims)}")
    return dims.pop()


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    _same_dim((u, v))
    return sum(1 for p, q in zip(u, v) if p != q)


def is_edge(t: Iterable[Sequence[int]]) -> bool:
    """True iff ``t`` is three vertices agreeing on all but one coordinate,
    where they take all three values."""
    vs = [tuple(v) for v in t]
    if len(vs) != 3:
        return False
    d = _same_dim(vs)
    diff = [k for k in range(d) if len({v[k] for v in vs}) > 1]
    if len(diff) != 1:
        return False
    return {v[diff[0]] for v in vs} == {0, 1, 2}


def _coord(i: int, d: int) -> int:
    if not 1 <= i <= d:
        raise IndexError(f"coordinate {i} out of range 1..{d}")
    return i - 1


def with_coord(v: Sequence[int], i: int, s: int) -> TritVector:
    """``v`` with (1-based) coordinate ``i`` set to ``s``."""
    k = _coord(i, len(v))
    return tuple(v[:k]) + (s,) + tuple(v[k + 1:])


def lifting_edge(v: Sequence[int], split_coordinate: int) -> frozenset:
    """The edge through ``v`` along ``split_coordinate``."""
    return frozenset(with_coord(v, split_coordinate, s) for s in (0, 1, 2))


def edge_along(v: Sequence[int], i: int) -> tuple:
    """The vertices of the coordinate-``i`` edge through ``v``, ordered by
    their value at ``i``."""
    return tuple(with_coord(v, i, s) for s in (0, 1, 2))


def split(v: Sequence[int], i: int) -> TritVector:
    """Swap coordinate ``i`` with the last one (an involution)."""
    d = len(v)
    k = _coord(i, d)
    w = list(v)
    w[k], w[d - 1] = w[d - 1], w[k]
    return tuple(w)


def enumerate_edges(d: int) -> list[frozenset]:
    """Every edge of Q(d) once: grouped by free coordinate, then by base vertex."""
    d = check_dim(d)
    out = []
    for k in range(1, d + 1):
        for v in enumerate_vertices(d):
            if v[k - 1] == 0:
                out.append(lifting_edge(v, k))
    return out


@lru_cache(maxsize=None)
def incidence(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense index tables for the search kernels.

    Returns ``(edge_vertices, vertex_edges)``: an ``(m, 3)`` array of vertex
    indices per edge and an ``(n, d)`` array giving, for each vertex, the
    index of its edge along each coordinate.
    """
    d = check_dim(d)
    n = 3 ** d
    ev = np.empty((d * 3 ** (d - 1) if d else 0, 3), dtype=np.int64)
    ve = np.empty((n, d), dtype=np.int64)
    e = 0
    for k in range(d):
        stride = 3 ** (d - 1 - k)
        for i in range(n):
            if (i // stride) % 3 == 0:
                tri = (i, i + stride, i + 2 * stride)
                ev[e] = tri
                for t in tri:
                    ve[t, k] = e
                e += 1
    ev.setflags(write=False)
    ve.setflags(write=False)
    return ev, ve

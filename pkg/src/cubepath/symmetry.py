"""Automorphisms of Q(d) and the canonical form of vertex configurations.

A symmetry permutes coordinates and, independently per coordinate, the
values {0, 1, 2}.  Normalization picks one representative per orbit of a
2- or 4-vertex configuration: relabel every row of the configuration
matrix by first traversal, sort the rows, and for 4-vertex configurations
also try the matrix with the two omitted vertices exchanged, keeping the
row-major lexicographic minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import DimensionError, check_dim, enumerate_vertices, from_index

_IDENTITY3 = (0, 1, 2)


def _invert3(p):
    inv = [0, 0, 0]
    for i, q in enumerate(p):
        inv[q] = i
    return tuple(inv)


@dataclass(frozen=True)
class Symmetry:
    """``coord_perm[j]`` is the (1-based) position that coordinate ``j+1``
    moves to; ``value_perms[i]`` relabels values at result coordinate
    ``i+1``."""

    coord_perm: tuple
    value_perms: tuple

    def __post_init__(self):
        d = len(self.coord_perm)
        if sorted(self.coord_perm) != list(range(1, d + 1)):
            raise ValueError(f"coord_perm is not a permutation of 1..{d}: {self.coord_perm}")
        if len(self.value_perms) != d:
            raise ValueError("need one value permutation per coordinate")
        for p in self.value_perms:
            if sorted(p) != [0, 1, 2]:
                raise ValueError(f"not a permutation of {{0,1,2}}: {p}")

    @property
    def dim(self) -> int:
        return len(self.coord_perm)

    @classmethod
    def identity(cls, d: int) -> "Symmetry":
        return cls(tuple(range(1, d + 1)), (_IDENTITY3,) * d)

    @classmethod
    def coordinate_swap(cls, d: int, i: int, j: int) -> "Symmetry":
        p = list(range(1, d + 1))
        p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
        return cls(tuple(p), (_IDENTITY3,) * d)

    @classmethod
    def relabel(cls, d: int, i: int, perm: Sequence[int]) -> "Symmetry":
        """Permute the values of coordinate ``i`` only."""
        vp = [_IDENTITY3] * d
        vp[i - 1] = tuple(perm)
        return cls(tuple(range(1, d + 1)), tuple(vp))

    @classmethod
    def random(cls, d: int, rng) -> "Symmetry":
        p = list(range(1, d + 1))
        rng.shuffle(p)
        vps = []
        for _ in range(d):
            q = [0, 1, 2]
            rng.shuffle(q)
            vps.append(tuple(q))
        return cls(tuple(p), tuple(vps))

    def _source(self):
        src = [0] * self.dim
        for j, p in enumerate(self.coord_perm):
            src[p - 1] = j
        return src

    def __call__(self, v):
        return apply(self, v)

    def __matmul__(self, other: "Symmetry") -> "Symmetry":
        return compose(self, other)


def apply(s: Symmetry, v: Sequence[int]) -> tuple:
    if len(v) != s.dim:
        raise DimensionError(f"symmetry of dimension {s.dim} applied to vertex of dimension {len(v)}")
    src = s._source()
    return tuple(s.value_perms[i][v[src[i]]] for i in range(s.dim))


def apply_all(s: Symmetry, vs):
    return tuple(apply(s, v) for v in vs)


def compose(s: Symmetry, t: Symmetry) -> Symmetry:
    """The symmetry ``v -> s(t(v))``."""
    if s.dim != t.dim:
        raise DimensionError("cannot compose symmetries of different dimensions")
    perm = tuple(s.coord_perm[t.coord_perm[j] - 1] for j in range(t.dim))
    ssrc = s._source()
    vps = tuple(
        tuple(s.value_perms[k][t.value_perms[ssrc[k]][x]] for x in range(3))
        for k in range(s.dim)
    )
    return Symmetry(perm, vps)


def inverse(s: Symmetry) -> Symmetry:
    d = s.dim
    perm = [0] * d
    for j, p in enumerate(s.coord_perm):
        perm[p - 1] = j + 1
    vps = tuple(_invert3(s.value_perms[s.coord_perm[i] - 1]) for i in range(d))
    return Symmetry(tuple(perm), vps)


def first_traversal_row(row: Sequence[int]) -> tuple[tuple, tuple]:
    """Relabel ``row`` so values appear as 0, 1, 2 in order of first
    occurrence.  Returns ``(new_row, perm)`` with ``new_row[j] == perm[row[j]]``."""
    if not row:
        raise ValueError("empty row")
    perm = [-1, -1, -1]
    nxt = 0
    for x in row:
        if perm[x] < 0:
            perm[x] = nxt
            nxt += 1
    for x in range(3):
        if perm[x] < 0:
            perm[x] = nxt
            nxt += 1
    perm = tuple(perm)
    return tuple(perm[x] for x in row), perm


def _canonical(cols):
    d = len(cols[0])
    rows = []
    for i in range(d):
        r, p = first_traversal_row(tuple(c[i] for c in cols))
        rows.append((r, i, p))
    rows.sort(key=lambda t: t[0])  # stable
    matrix = tuple(r for r, _, _ in rows)
    coord_perm = [0] * d
    vps = [None] * d
    for pos, (_, i, p) in enumerate(rows):
        coord_perm[i] = pos + 1
        vps[pos] = p
    return matrix, Symmetry(tuple(coord_perm), tuple(vps))


def matrix_to_config(matrix) -> tuple:
    k = len(matrix[0])
    return tuple(tuple(row[j] for row in matrix) for j in range(k))


def config_matrix(config) -> tuple:
    """Rows of the configuration matrix (column j is the j-th vertex)."""
    d = len(config[0])
    return tuple(tuple(v[i] for v in config) for i in range(d))


def _check_config(config):
    config = tuple(tuple(v) for v in config)
    if len(config) not in (2, 4):
        raise ValueError(f"configurations have 2 or 4 vertices, got {len(config)}")
    if len({len(v) for v in config}) != 1:
        raise DimensionError("configuration vertices have different dimensions")
    if len(set(config)) != len(config):
        raise ValueError("configuration vertices are not distinct")
    return config


def swap_xy(config):
    a, b, x, y = config
    return (a, b, y, x)


def normalize(config) -> tuple[tuple, Symmetry, bool]:
    """Canonical representative of ``config``'s orbit.

    Returns ``(normal, sym, xy_swapped)`` such that applying ``sym`` to every
    vertex of ``config`` (after exchanging x and y when ``xy_swapped``)
    gives ``normal``.
    """
    config = _check_config(config)
    if len(config[0]) == 0:
        raise DimensionError("cannot normalize in dimension 0")
    m, s = _canonical(config)
    if len(config) == 2:
        return matrix_to_config(m), s, False
    m2, s2 = _canonical(swap_xy(config))
    if m2 < m:
        return matrix_to_config(m2), s2, True
    return matrix_to_config(m), s, False


def is_normalized(config) -> bool:
    return normalize(config)[0] == tuple(tuple(v) for v in config)


def enumerate_normalized_4configs(d: int) -> list[tuple]:
    """All normalized 4-vertex configurations of Q(d), sorted.

    Every orbit has a member with a = 0...0 (relabel each coordinate), so
    only those tuples are visited.
    """
    return list(_normalized_4configs(check_dim(d)))


@lru_cache(maxsize=None)
def _normalized_4configs(d):
    if 3 ** d < 4:
        raise ValueError(f"Q({d}) has fewer than four vertices")
    n = 3 ** d
    verts = [from_index(i, d) for i in range(n)]
    zero = verts[0]
    seen = set()
    for bi in range(1, n):
        b = verts[bi]
        for xi in range(1, n):
            if xi == bi:
                continue
            x = verts[xi]
            for yi in range(xi + 1, n):
                # y > x suffices: the x<->y exchange is part of the orbit
                if yi == bi:
                    continue
                seen.add(normalize((zero, b, x, verts[yi]))[0])
    return tuple(sorted(seen))


def enumerate_normalized_2configs(d: int) -> list[tuple]:
    d = check_dim(d)
    zero = (0,) * d
    return sorted({normalize((zero, b))[0] for b in enumerate_vertices(d)[1:]})


def format_config(config) -> str:
    return " ".join("".join(str(x) for x in v) for v in config)


def parse_config(text: str) -> tuple:
    from .core import vertex

    parts = text.split()
    if len(parts) not in (2, 4):
        raise ValueError(f"expected 2 or 4 vertices, got {len(parts)}: {text!r}")
    return _check_config(tuple(vertex(p) for p in parts))

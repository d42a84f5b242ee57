"""Configuration types t1..t5 and their refinements phi1..phi4.

A type is a statement about one split coordinate i: the equality pattern
of (a_i, b_i, x_i, y_i), plus a side condition on the other coordinates.
Because a value permutation of coordinate i can realize any pattern with
the right equalities, scanning every coordinate and both x/y orders
decides the symmetry-closed types exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

BASE_TYPES = ("t1", "t2", "t3", "t4", "t5")
PHI_OF = {"t1": (1,), "t2": (2,), "t3": (3,), "t4": (4,), "t5": (2,)}

PENULTIMATE_ROWS = (
    (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1), (0, 0, 1, 2),
    (0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 0, 2), (0, 1, 1, 0), (0, 1, 1, 1),
    (0, 1, 1, 2), (0, 1, 2, 0), (0, 1, 2, 1), (0, 1, 2, 2),
)
_ROW_INDEX = {r: k + 1 for k, r in enumerate(PENULTIMATE_ROWS)}


@dataclass(frozen=True, order=True)
class TypeAssignment:
    base_type: str
    split_coordinate: int
    xy_swapped: bool = False
    phi: Optional[int] = None

    def __post_init__(self):
        if self.base_type not in BASE_TYPES:
            raise ValueError(f"unknown type {self.base_type!r}")
        if self.phi is not None and self.phi not in PHI_OF[self.base_type]:
            raise ValueError(f"phi{self.phi} is incompatible with {self.base_type}")

    def __str__(self):
        phi = "-" if self.phi is None else str(self.phi)
        return f"{self.base_type} i={self.split_coordinate} swap={int(self.xy_swapped)} phi={phi}"

    @classmethod
    def parse(cls, line: str) -> "TypeAssignment":
        t, i, s, p = line.split()
        return cls(t, int(i[2:]), bool(int(s[5:])), None if p[4:] == "-" else int(p[4:]))


def _differs_off(u, v, i) -> bool:
    return any(p != q for k, (p, q) in enumerate(zip(u, v)) if k != i)


def _agreements_off(u, v, i) -> int:
    return sum(1 for k, (p, q) in enumerate(zip(u, v)) if k != i and p == q)


def _distinct3(p, q, r) -> bool:
    return p != q and q != r and p != r


def _check4(c):
    if len(c) != 4:
        raise ValueError("classification needs a 4-vertex configuration")
    c = tuple(tuple(v) for v in c)
    if len(set(c)) != 4:
        raise ValueError("configuration vertices are not distinct")
    if len({len(v) for v in c}) != 1:
        raise ValueError("configuration vertices have different dimensions")
    return c


def _types_at(a, b, x, y, i):
    """Base types (with phi or None) holding at 0-based coordinate i."""
    A, B, X, Y = a[i], b[i], x[i], y[i]
    out = []
    a_off = lambda: all(_differs_off(a, v, i) for v in (b, x, y))
    b_off = lambda: all(_differs_off(b, v, i) for v in (a, x, y))

    def agree_once(u, others):
        return any(u[k] == v[k] for v in others for k in range(len(u)) if k != i)

    def phi2():
        return any(_agreements_off(u, v, i) >= 2 for u in (a, b) for v in (x, y))

    if A == X and _distinct3(A, B, Y) and a_off():
        out.append(("t1", 1 if agree_once(b, (a, x, y)) else None))
    if A == B and _distinct3(A, X, Y) and a_off():
        out.append(("t2", 2 if phi2() else None))
    if A == X and B == Y and A != B:
        ok = any(a[k] == y[k] or b[k] == x[k] for k in range(len(a)) if k != i)
        out.append(("t3", 3 if ok else None))
    if B == X and _distinct3(A, B, Y) and b_off():
        out.append(("t4", 4 if agree_once(a, (b, x, y)) else None))
    if A == B and _distinct3(A, X, Y) and b_off():
        out.append(("t5", 2 if phi2() else None))
    return out


def classify(c) -> list[TypeAssignment]:
    """Every (type, split coordinate, x/y order) that ``c`` satisfies."""
    a, b, x, y = _check4(c)
    out = []
    for swapped, (xx, yy) in ((False, (x, y)), (True, (y, x))):
        for i in range(len(a)):
            for t, phi in _types_at(a, b, xx, yy, i):
                out.append(TypeAssignment(t, i + 1, swapped, phi))
    return sorted(out, key=lambda t: (t.base_type, -t.split_coordinate, t.xy_swapped))


def in_S(c) -> bool:
    a, b, x, y = _check4(c)
    return any(_types_at(a, b, xx, yy, i) for xx, yy in ((x, y), (y, x)) for i in range(len(a)))


def in_Sprime(c) -> bool:
    return any(t.phi is not None for t in classify(c))


def base_types(c) -> set[str]:
    return {t.base_type for t in classify(c)}


def phi_types(c) -> set[int]:
    return {t.phi for t in classify(c) if t.phi is not None}


def row_index(row) -> int:
    """1-based position of a penultimate-row pattern in r1..r14."""
    try:
        return _ROW_INDEX[tuple(row)]
    except KeyError:
        raise ValueError(f"{''.join(map(str, row))} is not a valid normalized row") from None


def penultimate_row(c) -> int:
    """Row index of coordinate d-1 of a configuration split at coordinate d."""
    a, b, x, y = _check4(c)
    d = len(a)
    if d < 2:
        raise ValueError("need dimension at least 2")
    return row_index(tuple(v[d - 2] for v in (a, b, x, y)))

"""Constructive covering paths for d >= 5 and loose Hamilton paths for d >= 4.

A configuration of type t1, t2 or t3 split at the last coordinate is
covered by three paths, one per layer L0, L1, L2, joined by lifting edges
through two auxiliary vertices v, w of Q(d-1).  Each layer path covers a
4-configuration of Q(d-1) (t3 uses a full loose Hamilton path in L2), so
the recursion bottoms out in the d=4 witness store.

The auxiliary vertices' first d-2 coordinates come from ``choose_aux_i`` /
``choose_aux_ii``; coordinate d-1 depends on the (type, penultimate row)
entry of ``TABLE``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .config import PENULTIMATE_ROWS, TypeAssignment, _types_at, classify, in_S, in_Sprime, row_index
from .core import check_dim, fmt
from .paths import LoosePath, PathCertificate, apply_path, chain, concat, prepend_edge, reverse, verify
from .symmetry import Symmetry, apply_all, compose, first_traversal_row, format_config, inverse, swap_xy


class BuildError(RuntimeError):
    """A construction step failed an internal check."""

    def __init__(self, msg, frame=None):
        super().__init__(msg if frame is None else f"{msg} [{frame.describe()}]")
        self.frame = frame


# -- auxiliary coordinates -----------------------------------------------------


def _smallest_not_in(vals):
    return next(s for s in range(3) if s not in vals)


def _check_aux_args(vs):
    vs = [tuple(v) for v in vs]
    if len({len(v) for v in vs}) != 1:
        raise ValueError("auxiliary inputs have different dimensions")
    if len(vs[0]) < 3:
        raise ValueError(f"auxiliary vertices need d' >= 3, got {len(vs[0])}")
    return vs


def _smallest_outside(d, avoid):
    for v in itertools.product(range(3), repeat=d):
        if v not in avoid:
            return v


def choose_aux_i(alpha, beta, gamma, delta):
    """v', w' outside {alpha, beta, gamma, delta} with v' agreeing with
    alpha somewhere and with beta somewhere."""
    al, be, ga, de = _check_aux_args((alpha, beta, gamma, delta))
    d = len(al)
    v = [0] * d
    same = [k for k in range(d) if al[k] == be[k]]
    if same:
        i = same[0]
        k1, k2 = [k for k in range(d) if k != i][:2]
        v[i] = al[i]
        v[k1] = _smallest_not_in((al[k1], be[k1]))
        v[k2] = _smallest_not_in((ga[k2], de[k2]))
    else:
        v[0] = al[0]
        v[1] = be[1]
        v[2] = _smallest_not_in((ga[2], de[2]))
    v = tuple(v)
    w = _smallest_outside(d, {al, be, ga, de, v})
    return v, w


def choose_aux_ii(alpha, beta, gamma, delta):
    """v', w' outside {alpha, beta, gamma, delta} with v' agreeing with
    alpha somewhere and with w' in at least two coordinates."""
    al, be, ga, de = _check_aux_args((alpha, beta, gamma, delta))
    d = len(al)
    v = [0] * d
    w = [0] * d
    v[0] = al[0]
    w[0] = _smallest_not_in((v[0],))
    v[1] = w[1] = _smallest_not_in((al[1], be[1]))
    v[2] = w[2] = _smallest_not_in((ga[2], de[2]))
    return tuple(v), tuple(w)


# -- the layer schemes and the (type, row) table -------------------------------

# Layer s covers the configuration LAYERS[t][s] of Q(d-1) (symbols stand for
# the first d-1 coordinates); t3's layer 2 is a Hamilton path from v to w.
LAYERS = {
    "t1": ("vwxa", "wbav", "avyw"),
    "t2": ("wbav", "avxw", "vwya"),
    "t3": ("avxw", "wbyv", "vw"),
}
# Path order: an int is a layer path, a triple of (symbol, layer) is a
# connecting edge walked in that order.
ORDER = {
    "t1": ((("a", 0), ("a", 1), ("a", 2)), 2, (("v", 2), ("v", 1), ("v", 0)), 0, (("w", 0), ("w", 2), ("w", 1)), 1),
    "t2": ((("a", 0), ("a", 2), ("a", 1)), 1, (("v", 1), ("v", 0), ("v", 2)), 2, (("w", 2), ("w", 1), ("w", 0)), 0),
    "t3": (0, (("v", 0), ("v", 1), ("v", 2)), 2, (("w", 2), ("w", 0), ("w", 1)), 1),
}
# Canonical last row (a, b, x, y) for each base type.
LAST_ROW = {"t1": (0, 1, 0, 2), "t2": (0, 0, 1, 2), "t3": (0, 1, 0, 1)}
EXCLUDED_ROWS = {
    "t1": frozenset((1, 2, 6, 7, 8)),
    "t2": frozenset((1, 3, 6, 9, 12)),
    "t3": frozenset((1, 2, 6, 7, 8)),
}


@dataclass(frozen=True)
class Entry:
    """``vw``: coordinate d-1 of v and w; ``subtypes``: the type each layer
    configuration has when split at that coordinate; ``aux``: ("ii", alpha)
    or ("i",) for the first d-2 coordinates.  ``derived`` marks values
    worked out here rather than read off the construction figures;
    ``standby`` marks rows normally reduced to another row, used only when
    that reduction would break the target type's side condition."""

    vw: tuple
    subtypes: tuple
    aux: tuple = ("ii", "a")
    derived: bool = False
    standby: bool = False


TABLE = {
    ("t1", 3): Entry((1, 2), ("t1", "t4", "t1")),
    ("t1", 4): Entry((1, 2), ("t1", "t4", "t4")),
    ("t1", 5): Entry((2, 1), ("t4", "t4", "t4")),
    ("t1", 9): Entry((2, 1), ("t4", "t2", "t1")),
    ("t1", 10): Entry((1, 0), ("t3", "t3", "t3")),
    ("t1", 11): Entry((2, 1), ("t4", "t2", "t4")),
    ("t1", 12): Entry((2, 1), ("t1", "t2", "t1"), derived=True),
    ("t1", 13): Entry((1, 0), ("t4", "t3", "t3")),
    ("t1", 14): Entry((2, 1), ("t1", "t2", "t4")),
    ("t2", 2): Entry((2, 1), ("t4", "t1", "t4")),
    ("t2", 4): Entry((1, 2), ("t4", "t4", "t1")),
    ("t2", 5): Entry((1, 2), ("t4", "t4", "t4")),
    ("t2", 7): Entry((2, 1), ("t2", "t1", "t4")),
    ("t2", 10): Entry((1, 0), ("t3", "t3", "t3"), ("ii", "y")),
    ("t2", 13): Entry((2, 1), ("t2", "t4", "t4")),
    ("t2", 14): Entry((2, 1), ("t2", "t4", "t1")),
    ("t3", 3): Entry((2, 2), ("t4", "t3"), ("i",)),
    ("t3", 4): Entry((2, 2), ("t4", "t1"), ("i",)),
    ("t3", 9): Entry((2, 2), ("t4", "t1"), ("i",)),
    ("t3", 10): Entry((2, 2), ("t4", "t3"), ("i",)),
    ("t3", 13): Entry((2, 0), ("t3", "t4")),
    ("t3", 14): Entry((0, 1), ("t5", "t2")),
    # used when the reduction of t3 rows r5 and r12 breaks a side condition
    ("t3", 5): Entry((1, 2), ("t4", "t1"), derived=True, standby=True),
    ("t3", 12): Entry((1, 0), ("t1", "t3"), derived=True, standby=True),
}


def _pattern_types(col):
    """Base types whose equality pattern the column (a, b, x, y) has."""
    a, b, x, y = col
    out = set()
    distinct = lambda p, q, r: len({p, q, r}) == 3
    for xx, yy in ((x, y), (y, x)):
        if a == xx and distinct(a, b, yy):
            out.add("t1")
        if a == b and distinct(a, xx, yy):
            out.update(("t2", "t5"))
        if a == xx and b == yy and a != b:
            out.add("t3")
        if b == xx and distinct(a, b, yy):
            out.add("t4")
    return out


def validate_table() -> list[str]:
    """Consistency problems in TABLE and the layer schemes (empty if none)."""
    problems = []
    for (t, r), e in sorted(TABLE.items()):
        if r in EXCLUDED_ROWS[t]:
            problems.append(f"{t} r{r}: row is excluded for this type")
        row = PENULTIMATE_ROWS[r - 1]
        val = dict(zip("abxy", row), v=e.vw[0], w=e.vw[1])
        for s, (cfg, want) in enumerate(zip(LAYERS[t], e.subtypes)):
            got = _pattern_types([val[ch] for ch in cfg])
            if want not in got:
                problems.append(f"{t} r{r} layer {s}: column fits {sorted(got)}, table says {want}")
    for t in LAYERS:
        problems += [f"{t}: {p}" for p in _scheme_problems(t)]
    return problems


def _scheme_problems(t):
    """Symbolic accounting: every (symbol, layer) is covered exactly once
    except the global x and y, and edges meet paths only at their ends."""
    last = dict(zip("abxy", LAST_ROW[t]))
    # a's lifts appear in other layers only through the first edge of t1, t2
    home = lambda ch, s: ch in "vw" or last[ch] == s or (ch == "a" and t != "t3")
    covered = {}
    problems = []
    ends = []
    for item in ORDER[t]:
        if isinstance(item, int):
            cfg = LAYERS[t][item]
            if len(cfg) == 2:
                ends.append(((cfg[0], item), (cfg[1], item)))
                continue
            start, end, *om = [(ch, item) for ch in cfg]
            for p in (start, end, *om):
                if not home(*p):
                    problems.append(f"{p[0]} does not live in layer {item}")
            ends.append((start, end))
            for p in om:
                covered.setdefault(p, []).append("omitted")
        else:
            covered.setdefault(item[1], []).append("middle")
    # each omitted-in-layer vertex must be a middle or a global omitted vertex
    for p, how in covered.items():
        if "omitted" in how and "middle" not in how and p not in (("x", last["x"]), ("y", last["y"])):
            if not (t in ("t1", "t2") and p == ("a", 0)):
                problems.append(f"{p} is omitted in its layer and never covered")
        if how.count("middle") > 1:
            problems.append(f"{p} is the middle of two edges")
    # each edge leaves the previous path's end and enters the next path's start
    seq = ORDER[t]
    ends = iter(ends)
    spans = {k: next(ends) for k, item in enumerate(seq) if isinstance(item, int)}
    for k, item in enumerate(seq):
        if isinstance(item, int):
            continue
        before = spans[k - 1][1] if k > 0 else ("a", last["a"])
        if k + 1 >= len(seq) or item[0] != before or item[2] != spans[k + 1][0]:
            problems.append(f"edge {item} does not join its neighbours")
    return problems


_PROBLEMS = validate_table()
if _PROBLEMS:  # pragma: no cover - a transcription error must fail loudly
    raise ImportError("inconsistent construction table: " + "; ".join(_PROBLEMS))


# -- frames --------------------------------------------------------------------


@dataclass
class RecursionFrame:
    config: tuple
    assignment: TypeAssignment
    row: int
    aux_v: tuple
    aux_w: tuple
    undo: Symmetry
    xy_swapped: bool = False
    reversed: bool = False
    entry: Optional[Entry] = None
    steps: list = field(default_factory=list)
    fallback: bool = False

    @property
    def dim(self):
        return len(self.config[0])

    @property
    def base_type(self):
        return self.assignment.base_type

    def layer_configs(self):
        """Per layer, the configuration (or vertex pair) of Q(d-1) to cover."""
        d = self.dim
        sym = {ch: v[: d - 1] for ch, v in zip("abxy", self.config)}
        sym["v"], sym["w"] = self.aux_v, self.aux_w
        return tuple(tuple(sym[ch] for ch in cfg) for cfg in LAYERS[self.base_type])

    def describe(self):
        steps = ",".join(self.steps) or "-"
        return (
            f"d={self.dim} type={self.base_type} row=r{self.row} v={fmt(self.aux_v)} w={fmt(self.aux_w)} "
            f"config={format_config(self.config)} steps={steps}{' fallback' if self.fallback else ''}"
        )


class _State:
    """A configuration being moved into canonical split form."""

    def __init__(self, c):
        self.c = tuple(tuple(v) for v in c)
        self.d = len(self.c[0])
        self.sym = Symmetry.identity(self.d)
        self.xy = False
        self.rev = False
        self.steps = []

    def copy(self):
        s = _State(self.c)
        s.sym, s.xy, s.rev, s.steps = self.sym, self.xy, self.rev, list(self.steps)
        return s

    def apply(self, g):
        self.c = apply_all(g, self.c)
        self.sym = compose(g, self.sym)

    def swap_xy(self):
        self.c = swap_xy(self.c)
        self.xy = not self.xy

    def reverse_ab(self):
        a, b, x, y = self.c
        self.c = (b, a, x, y)
        self.rev = not self.rev

    def swap_coords(self, i, j):
        if i != j:
            self.apply(Symmetry.coordinate_swap(self.d, i, j))

    def canon_last(self, t):
        """Relabel coordinate d so (a, b, x, y) reads LAST_ROW[t]."""
        col = [v[-1] for v in self.c]
        perm = [None] * 3
        for val, want in zip(col, LAST_ROW[t]):
            if perm[val] is None:
                perm[val] = want
            elif perm[val] != want:
                raise BuildError(f"last row {col} does not fit {t}")
        rest = [s for s in range(3) if s not in perm]
        perm = tuple(p if p is not None else rest.pop(0) for p in perm)
        self.apply(Symmetry.relabel(self.d, self.d, perm))

    def canon_penultimate(self):
        col = [v[-2] for v in self.c]
        _, perm = first_traversal_row(col)
        self.apply(Symmetry.relabel(self.d, self.d - 1, perm))
        return row_index(tuple(v[-2] for v in self.c))

    def has_type(self, t):
        a, b, x, y = self.c
        return any(tt == t for tt, _ in _types_at(a, b, x, y, self.d - 1))


def _prepare(c, ta: TypeAssignment, j: int):
    """Move ``c`` to split form for assignment ``ta`` with coordinate ``j``
    as the penultimate one.  Returns (state, type, row)."""
    st = _State(c)
    t = ta.base_type
    if ta.xy_swapped:
        st.swap_xy()
        st.steps.append("swap-xy")
    if t in ("t4", "t5"):
        st.reverse_ab()
        st.steps.append("reverse")
        t = {"t4": "t1", "t5": "t2"}[t]
    d = st.d
    i = ta.split_coordinate
    # j is named in original coordinates; track where it lands
    jpos = d if j == i else (i if j == d else j)
    st.swap_coords(i, d)
    st.canon_last(t)
    st.swap_coords(jpos, d - 1)
    return st, t, st.canon_penultimate()


def _reduce(st, t, row):
    """Row reductions; returns (state, type, row) of a directly handled
    (type, row), or None if a reduction lands outside its target type."""
    d = st.d
    for _ in range(4):
        if (t, row) in TABLE and not TABLE[(t, row)].standby:
            return st, t, row
        if t == "t2" and row == 8:
            nxt = st.copy()
            nxt.swap_coords(d - 1, d)
            nxt.steps.append("t2r8>t1r5")
            nt = "t1"
        elif t == "t2" and row == 11:
            nxt = st.copy()
            nxt.reverse_ab()
            nxt.steps.append("t2r11>t2r8")
            nt = "t2"
        elif t == "t3" and row == 5:
            nxt = st.copy()
            nxt.swap_coords(d - 1, d)
            nxt.steps.append("t3r5>t2r7")
            nt = "t2"
        elif t == "t3" and row == 11:
            nxt = st.copy()
            nxt.reverse_ab()
            nxt.swap_xy()
            nxt.steps.append("t3r11>t3r12")
            nt = "t3"
        elif t == "t3" and row == 12:
            nxt = st.copy()
            nxt.swap_xy()
            nxt.swap_coords(d - 1, d)
            nxt.steps.append("t3r12>t1r9")
            nt = "t1"
        else:
            return None
        if not nxt.has_type(nt):
            return (st, t, row) if (t, row) in TABLE else None
        nxt.canon_last(nt)
        st, t, row = nxt, nt, nxt.canon_penultimate()
    return None


def _aux(entry, st, rule=None):
    d = st.d
    a, b, x, y = (v[: d - 2] for v in st.c)
    rule = rule or entry.aux
    if rule[0] == "i":
        vp, wp = choose_aux_i(a, b, x, y)
    else:
        named = dict(a=a, b=b, x=x, y=y)
        alpha = rule[1]
        rest = [named[ch] for ch in "abxy" if ch != alpha]
        vp, wp = choose_aux_ii(named[alpha], *rest)
    return vp, wp


def _frame_problem(fr: RecursionFrame) -> Optional[str]:
    d = fr.dim
    pro = {v[: d - 1] for v in fr.config}
    v, w = fr.aux_v, fr.aux_w
    if v == w:
        return "aux vertices coincide"
    if v in pro or w in pro:
        return "aux vertex collides with a configuration vertex"
    if {v[: d - 2], w[: d - 2]} & {u[: d - 2] for u in fr.config}:
        return "aux vertex is not fresh in the first d-2 coordinates"
    for k, sub in enumerate(fr.layer_configs()):
        if len(set(sub)) != len(sub):
            return f"layer {k} configuration has repeated vertices"
        if len(sub) == 4 and not in_Sprime(sub):
            return f"layer {k} configuration {format_config(sub)} is not in S'({d - 1})"
    return None


def _candidates(c):
    d = len(c[0])
    order = {"t1": 0, "t2": 1, "t3": 2, "t4": 3, "t5": 4}
    tas = sorted(classify(c), key=lambda ta: (order[ta.base_type], ta.split_coordinate, ta.xy_swapped))
    for ta in tas:
        a, b, x, y = c
        if ta.xy_swapped:
            x, y = y, x
        if ta.base_type in ("t4", "t5"):
            a, b = b, a
        other = y if ta.base_type in ("t2", "t5") else x
        i = ta.split_coordinate
        for j in range(1, d + 1):
            if j != i and a[j - 1] != other[j - 1]:
                yield ta, j


def canonicalize_frame(c, *, fallback=True) -> RecursionFrame:
    """Pick a type, split and penultimate coordinate, and aux vertices for
    covering ``c`` (d >= 5) from three layer configurations in S'(d-1)."""
    c = tuple(tuple(v) for v in c)
    d = check_dim(len(c[0]))
    if d == 4:
        raise ValueError("d=4 configurations are covered from the witness store")
    if d < 4:
        raise ValueError(f"no construction below d=4 (got d={d})")
    if not in_S(c):
        raise ValueError(f"{format_config(c)} is not in S({d})")
    tried = []
    for ta, j in _candidates(c):
        st, t, row = _prepare(c, ta, j)
        red = _reduce(st, t, row)
        if red is None:
            tried.append(f"{ta} j={j}: no table entry")
            continue
        st, t, row = red
        entry = TABLE[(t, row)]
        fr = _make_frame(st, t, row, entry, _aux(entry, st))
        why = _frame_problem(fr)
        if why is None:
            return fr
        tried.append(f"{ta} j={j} {t} r{row}: {why}")
    if fallback:
        for ta, j in _candidates(c):
            fr = _fallback(c, ta, j)
            if fr is not None:
                return fr
    raise BuildError(f"no valid frame for {format_config(c)}: " + "; ".join(tried))


def _make_frame(st, t, row, entry, aux, vw=None, fallback=False):
    vw = vw or entry.vw
    vp, wp = aux
    return RecursionFrame(
        config=st.c,
        assignment=TypeAssignment(t, st.d, False),
        row=row,
        aux_v=vp + (vw[0],),
        aux_w=wp + (vw[1],),
        undo=st.sym,
        xy_swapped=st.xy,
        reversed=st.rev,
        entry=entry,
        steps=st.steps,
        fallback=fallback,
    )


_AUX_RULES = (("ii", "a"), ("i",), ("ii", "b"), ("ii", "x"), ("ii", "y"))


def _fallback(c, ta, j):
    """Bounded retry over aux rules and coordinate d-1 values."""
    st, t, row = _prepare(c, ta, j)
    entry = TABLE.get((t, row))
    vws = [entry.vw] if entry else []
    vws += [vw for vw in itertools.product(range(3), repeat=2) if vw not in vws]
    for rule in _AUX_RULES:
        aux = _aux(entry, st, rule)
        for vw in vws:
            fr = _make_frame(st, t, row, entry, aux, vw, fallback=True)
            if _frame_problem(fr) is None:
                return fr
    return None


# -- construction ----------------------------------------------------------------


def _lift(p: LoosePath, s: int) -> LoosePath:
    return LoosePath(tuple(v + (s,) for v in p.vertices))


def _store(store):
    if store is None:
        from .store import open_store

        return open_store()
    return store


def cover(c, store=None, trace: Optional[Callable[[str], None]] = None) -> PathCertificate:
    """A verified loose path from a to b covering every vertex of Q(d)
    except x and y, for ``c = (a, b, x, y)``."""
    c = tuple(tuple(v) for v in c)
    d = check_dim(len(c[0]))
    if d < 4:
        raise ValueError(f"no construction below d=4 (got d={d})")
    if d == 4:
        return _store(store).lookup(c)
    fr = canonicalize_frame(c)
    if trace:
        trace(f"frame {fr.describe()}")
    store = _store(store)
    cert = _build(fr, store, trace)
    out = _undo(fr, cert)
    v = verify(out)
    if not v or out.start != c[0] or out.end != c[1] or out.omitted != frozenset(c[2:]):
        raise BuildError(f"constructed path fails verification: {v.reason}", fr)
    return out


def _build(fr: RecursionFrame, store, trace) -> PathCertificate:
    d = fr.dim
    a, b, x, y = fr.config
    t = fr.base_type
    layers = {}
    for s, sub in enumerate(fr.layer_configs()):
        if len(sub) == 2:
            p = lhc_path(sub[0], sub[1], store=store, trace=trace).path
        else:
            if not in_Sprime(sub):
                raise BuildError(f"layer {s} configuration {format_config(sub)} is not in S'({d - 1})", fr)
            p = cover(sub, store, trace).path
        layers[s] = _lift(p, s)
    sym = {"a": a[: d - 1], "v": fr.aux_v, "w": fr.aux_w}
    parts = []
    start = None
    for item in ORDER[t]:
        if isinstance(item, int):
            parts.append(layers[item])
        else:
            edge = tuple(sym[ch] + (s,) for ch, s in item)
            if not parts:
                start = edge[0]
            parts.append(edge)
    try:
        if start is not None:
            head = prepend_edge(parts[0], parts[1], start)
            path = chain(head, *parts[2:])
        else:
            path = chain(*parts)
    except ValueError as exc:
        raise BuildError(f"layer paths do not join: {exc}", fr) from None
    cert = PathCertificate(path, a, b, frozenset((x, y)), d)
    v = verify(cert)
    if not v:
        raise BuildError(f"frame path fails verification: {v.reason}", fr)
    return cert


def _undo(fr: RecursionFrame, cert: PathCertificate) -> PathCertificate:
    inv = inverse(fr.undo)
    p = apply_path(inv, cert.path)
    if fr.reversed:
        p = reverse(p)
    om = frozenset(apply_all(inv, tuple(cert.omitted)))
    return PathCertificate(p, p.start, p.end, om, cert.dim)


def lhc_path(a, b, d=None, store=None, trace: Optional[Callable[[str], None]] = None) -> PathCertificate:
    """A verified loose Hamilton path of Q(d) from ``a`` to ``b`` (d >= 4)."""
    a, b = tuple(a), tuple(b)
    if d is None:
        d = len(a)
    d = check_dim(d)
    if len(a) != d or len(b) != d:
        raise ValueError(f"vertices must have {d} coordinates")
    if d < 4:
        raise ValueError(f"Q({d}) is not loose Hamilton connected; need d >= 4")
    if a == b:
        raise ValueError("start and end must differ")
    # relabel so that a becomes 0...0
    g = Symmetry(tuple(range(1, d + 1)), tuple(_to_zero(s) for s in a))
    bb = g(b)
    zero = (0,) * d
    agree = [i for i in range(d) if bb[i] == 0]
    if agree:
        i = agree[0]
        u, v = (bb[:i] + (s,) + bb[i + 1:] for s in range(3) if s != bb[i])
        sub = (zero, u, bb, v)
    else:
        v = bb[:-1] + (0,)
        u = bb[:-1] + (3 - bb[-1],)
        sub = (zero, u, v, bb)
    if trace:
        trace(f"lhc d={d} a={fmt(a)} b={fmt(b)} case={1 if agree else 2} config={format_config(sub)}")
    p = cover(sub, store, trace).path
    path = concat(p, (u, v, bb), LoosePath.trivial(bb))
    path = apply_path(inverse(g), path)
    cert = PathCertificate(path, a, b, frozenset(), d)
    res = verify(cert)
    if not res:
        raise BuildError(f"Hamilton path from {fmt(a)} to {fmt(b)} fails verification: {res.reason}")
    return cert


def _to_zero(s):
    """Value permutation of one coordinate sending ``s`` to 0 (a transposition)."""
    p = [0, 1, 2]
    p[s], p[0] = p[0], p[s]
    return tuple(p)

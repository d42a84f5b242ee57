"""Exhaustive search engines: covering paths for d=4 configurations, the
d=4 base-case pipeline, and loose-Hamilton-path nonexistence for d=2, 3."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional

import numpy as np

from . import _kernel
from .core import check_dim, from_index, incidence, index
from .paths import (
    LoosePath,
    PathCertificate,
    apply_certificate,
    iter_records,
    reroute,
    reverse_certificate,
    endpoint_variants,
    verify,
)
from .symmetry import (
    enumerate_normalized_2configs,
    enumerate_normalized_4configs,
    format_config,
    normalize,
    parse_config,
)

log = logging.getLogger(__name__)

FOUND = "found"
EXHAUSTED = "exhausted"
INCONCLUSIVE = "inconclusive"

_QUOTA = 200_000

# The four 4-configurations of Q(4) known to admit no covering path; the
# complete search always runs to exhaustion on these, whatever the budget.
UNCOVERED_MATRICES = (
    "0000 1111 1122 2211",
    "0000 1111 0022 2200",
    "0000 0001 1110 2221",
    "0000 0011 1100 1111",
)
EXPECTED_UNCOVERED = frozenset(normalize(parse_config(m))[0] for m in UNCOVERED_MATRICES)


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one configuration.

    Heuristic attempt k uses ordering seed ``restart_policy[k]`` and a node
    limit that grows by a factor of 4 per attempt, ending at
    ``per_config_node_limit``.  The complete pass that follows is bounded by
    ``exhaustive_node_limit`` and ``exhaustive_time_limit`` (None: run to
    completion).
    """

    per_config_node_limit: int = 4_000_000
    per_config_time_limit: float = 60.0
    restart_policy: tuple = (0, 1, 2, 3, 4)
    exhaustive_node_limit: Optional[int] = None
    exhaustive_time_limit: Optional[float] = None

    def __post_init__(self):
        if self.per_config_node_limit <= 0 or self.per_config_time_limit <= 0:
            raise ValueError("budget limits must be positive")
        for lim in (self.exhaustive_node_limit, self.exhaustive_time_limit):
            if lim is not None and lim <= 0:
                raise ValueError("budget limits must be positive")

    def attempts(self):
        k = len(self.restart_policy)
        return [
            (seed, max(1, self.per_config_node_limit // 4 ** (k - 1 - i)))
            for i, seed in enumerate(self.restart_policy)
        ]

    def shifted(self, offset):
        return replace(self, restart_policy=tuple(s + offset for s in self.restart_policy))


@dataclass
class SearchResult:
    status: str
    certificate: Optional[PathCertificate] = None
    nodes: int = 0

    @property
    def exhaustive(self) -> bool:
        return self.status == EXHAUSTED


def _search(d, a, b, omitted, seed, node_limit, time_limit, prune=True, jitter=1.0):
    ev, ve = incidence(d)
    n = 3 ** d
    ai, bi = index(a), index(b)
    used = np.zeros(n, np.uint8)
    used[ai] = 1
    for v in omitted:
        used[index(v)] = 1
    free = n - 1 - len(omitted)
    if free % 2:
        return SearchResult(EXHAUSTED)
    if free == 0:
        if ai == bi:
            return SearchResult(FOUND, PathCertificate(LoosePath.trivial(a), a, a, frozenset(omitted), d))
        return SearchResult(EXHAUSTED)
    ell = free // 2
    moves = np.zeros((ell + 1, 2 * d, 2), np.int64)
    cnt = np.zeros(ell + 1, np.int64)
    ix = np.zeros(ell + 1, np.int64)
    path = np.zeros(2 * ell + 1, np.int64)
    _kernel.seed_rng(seed)
    _kernel.start(ev, ve, used, ai, bi, free, moves, cnt, ix, path, prune, jitter)
    state = np.array([0, free, 0, 2], np.int64)
    t0 = time.monotonic()
    while True:
        quota = _QUOTA if node_limit is None else max(1, min(_QUOTA, node_limit - int(state[2])))
        _kernel.run(ev, ve, used, bi, state, moves, cnt, ix, path, quota, prune, jitter)
        nodes = int(state[2])
        if state[3] == _kernel.FOUND:
            vs = tuple(from_index(int(i), d) for i in path)
            cert = PathCertificate(LoosePath(vs), a, b, frozenset(omitted), d)
            return SearchResult(FOUND, cert, nodes)
        if state[3] == _kernel.EXHAUSTED:
            return SearchResult(EXHAUSTED, None, nodes)
        if node_limit is not None and nodes >= node_limit:
            return SearchResult(INCONCLUSIVE, None, nodes)
        if time_limit is not None and time.monotonic() - t0 > time_limit:
            return SearchResult(INCONCLUSIVE, None, nodes)


def find_path(a, b, omitted=(), *, seed=0, node_limit=None, time_limit=None, prune=True) -> SearchResult:
    """Search for a loose path from ``a`` to ``b`` covering every vertex
    except ``omitted``.  With no limits the search is complete."""
    a, b = tuple(a), tuple(b)
    d = check_dim(len(a))
    omitted = tuple(sorted({tuple(v) for v in omitted}))
    if a in omitted or b in omitted:
        raise ValueError("endpoints cannot be omitted")
    if a == b and 3 ** d - len(omitted) != 1:
        return SearchResult(EXHAUSTED)
    res = _search(d, a, b, omitted, seed, node_limit, time_limit, prune, 1.0 if seed else 0.0)
    if res.certificate is not None and not verify(res.certificate):
        raise AssertionError(f"search produced an invalid path: {verify(res.certificate).reason}")
    return res


def find_covering_path(c, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Look for a path from a to b omitting x and y.

    Runs the budget's heuristic attempts, then one complete run under the
    exhaustive limits.  Only that last run can report ``exhausted``.
    """
    total = 0
    for seed, limit in budget.attempts():
        r = _attempt(c, seed, limit, budget.per_config_time_limit)
        total += r.nodes
        if r.status != INCONCLUSIVE:
            r.nodes = total
            return r
    r = _complete(c, budget)
    r.nodes += total
    return r


def _attempt(c, seed, limit, time_limit):
    a, b, x, y = (tuple(v) for v in c)
    return find_path(a, b, (x, y), seed=seed, node_limit=limit, time_limit=time_limit)


def _complete(c, budget):
    a, b, x, y = (tuple(v) for v in c)
    if c in EXPECTED_UNCOVERED:
        return find_path(a, b, (x, y))
    return find_path(a, b, (x, y), node_limit=budget.exhaustive_node_limit,
                     time_limit=budget.exhaustive_time_limit)


def settled_configs(cert: PathCertificate) -> dict:
    """Normalized configurations settled by ``cert``'s edge set, each with a
    certificate for it in its own normalized frame."""
    out = {}
    om = tuple(sorted(cert.omitted))
    if len(om) != 2:
        return out
    for c in (cert, reverse_certificate(cert)):
        for s, e in endpoint_variants(c.path):
            p = reroute(c.path, s, e)
            key, sym, _ = normalize((s, e) + om)
            if key not in out:
                out[key] = apply_certificate(sym, PathCertificate(p, s, e, frozenset(om), c.dim))
    return out


@dataclass
class CoverageLedger:
    covered: dict = field(default_factory=dict)
    uncovered: set = field(default_factory=set)
    inconclusive: set = field(default_factory=set)
    rejected: list = field(default_factory=list)
    nodes: dict = field(default_factory=dict)

    def complete(self) -> bool:
        return not self.inconclusive

    def check(self, universe) -> None:
        keys = set(self.covered) | self.uncovered | self.inconclusive
        if keys != set(universe):
            raise AssertionError("ledger does not partition the configuration set")
        if set(self.covered) & (self.uncovered | self.inconclusive) or self.uncovered & self.inconclusive:
            raise AssertionError("ledger sets overlap")


def _settle(ledger, universe, cert):
    n = 0
    for key, kc in settled_configs(cert).items():
        if key in universe and key not in ledger.covered:
            if not verify(kc):
                raise AssertionError(f"derived certificate for {format_config(key)} fails: {verify(kc).reason}")
            if key in ledger.uncovered:
                raise AssertionError(f"{format_config(key)} was proven uncovered but a path covers it")
            ledger.covered[key] = kc
            ledger.inconclusive.discard(key)
            n += 1
    return n


def _attempt_task(args):
    c, seed, limit, time_limit = args
    return _attempt(c, seed, limit, time_limit)


def _complete_task(args):
    c, budget = args
    return _complete(c, budget)


def _map(fn, tasks, jobs, skip):
    """Yield (task, result) pairs; tasks whose key is in ``skip`` when they
    come up are dropped.  Sequential when ``jobs`` <= 1."""
    if jobs <= 1:
        for t in tasks:
            if t[0] not in skip:
                yield t, fn(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        it = iter(tasks)
        inflight = {}
        while True:
            while len(inflight) < 2 * jobs:
                t = next(it, None)
                if t is None:
                    break
                if t[0] not in skip:
                    inflight[pool.submit(fn, t)] = t
            if not inflight:
                return
            done = next(as_completed(inflight))
            yield inflight.pop(done), done.result()


def run_base_case(
    d: int = 4,
    budget: SearchBudget = SearchBudget(),
    *,
    jobs: int = 1,
    seed: int = 0,
    known=None,
    configs=None,
    progress: Callable[[str], None] | None = None,
) -> CoverageLedger:
    """Settle every normalized 4-configuration of Q(d): a verified
    certificate, or an exhaustive proof that none exists.

    Works in rounds: every unsettled configuration gets the budget's k-th
    heuristic attempt before any gets the (k+1)-th, so cheap paths settle
    as many configurations as possible early.  Survivors get a complete
    search.  ``known`` is an optional mapping of verified certificates (e.g.
    a loaded witness store) used before any search.
    """
    if d != 4:
        log.warning("base case requested for d=%d; only d=4 is intended", d)
    universe = list(configs) if configs is not None else enumerate_normalized_4configs(d)
    uset = set(universe)
    ledger = CoverageLedger()
    for cert in (known or {}).values():
        if verify(cert):
            _settle(ledger, uset, cert)
    # rotate the processing order by the seed; the uncovered set does not depend on it
    k = seed % len(universe) if universe else 0
    order = universe[k:] + universe[:k]
    budget = budget.shifted(seed)

    def report(stage):
        if progress:
            left = len(uset) - len(ledger.covered) - len(ledger.uncovered)
            progress(f"progress covered={len(ledger.covered)} remaining={left} "
                     f"uncovered={len(ledger.uncovered)} stage={stage}")

    def add(c, r):
        ledger.nodes[c] = ledger.nodes.get(c, 0) + r.nodes
        if r.status == FOUND:
            _settle(ledger, uset, r.certificate)
        elif r.status == EXHAUSTED:
            if c in ledger.covered:
                raise AssertionError(f"{format_config(c)} is covered but search exhausted")
            ledger.uncovered.add(c)

    for rnd, (s, limit) in enumerate(budget.attempts()):
        tasks = [(c, s, limit, budget.per_config_time_limit) for c in order
                 if c not in ledger.covered and c not in ledger.uncovered]
        for (c, *_), r in _map(_attempt_task, tasks, jobs, _Live(ledger)):
            add(c, r)
        report(f"round{rnd + 1}:{limit}")
    tasks = [(c, budget) for c in order if c not in ledger.covered and c not in ledger.uncovered]
    for (c, _), r in _map(_complete_task, tasks, jobs, _Live(ledger)):
        add(c, r)
        if r.status == INCONCLUSIVE and c not in ledger.covered:
            ledger.inconclusive.add(c)
        report("complete")
    ledger.check(universe)
    return ledger


class _Live:
    """Membership view over configurations already settled in a ledger."""

    def __init__(self, ledger):
        self.ledger = ledger

    def __contains__(self, c):
        return c in self.ledger.covered or c in self.ledger.uncovered


@dataclass
class NonexistenceResult:
    d: int
    absent: bool
    pairs: list
    nodes: int
    counterexample: Optional[PathCertificate] = None


def check_lhp_nonexistence(d: int, *, prune: bool = True) -> NonexistenceResult:
    """Decide whether Q(d) has a loose Hamilton path, by complete search
    from 0...0 to one representative end vertex of each symmetry orbit of
    pairs (the cube is vertex-transitive)."""
    d = check_dim(d)
    if d < 1:
        raise ValueError("dimension must be at least 1")
    pairs = enumerate_normalized_2configs(d)
    nodes = 0
    for a, b in pairs:
        r = find_path(a, b, (), prune=prune)
        nodes += r.nodes
        if r.status == FOUND:
            return NonexistenceResult(d, False, pairs, nodes, r.certificate)
    return NonexistenceResult(d, True, pairs, nodes)


def verify_witness_file(path, d: int = 4, universe=None) -> CoverageLedger:
    """Re-verify every record of a witness file and recompute coverage.

    Nothing in the file is trusted: keys are ignored and coverage is
    derived from each verified path.  Rejected records are listed with a
    diagnostic in ``ledger.rejected``.
    """
    with open(path) as fh:
        text = fh.read()
    return ledger_from_records(iter_records(text), d, universe)


def ledger_from_records(records: Iterable, d: int = 4, universe=None) -> CoverageLedger:
    universe = list(universe) if universe is not None else enumerate_normalized_4configs(d)
    uset = set(universe)
    ledger = CoverageLedger()
    for rec in records:
        if rec.cert is None:
            ledger.rejected.append((rec.line, rec.error))
            continue
        v = verify(rec.cert)
        if not v:
            ledger.rejected.append((rec.line, v.reason))
            continue
        if rec.cert.dim != d or len(rec.cert.omitted) != 2:
            ledger.rejected.append((rec.line, f"not an almost Hamilton path of Q({d})"))
            continue
        _settle(ledger, uset, rec.cert)
    ledger.uncovered = uset - set(ledger.covered)
    return ledger

"""Compiled depth-first search for loose paths with a fixed start and end.

State lives in numpy arrays so a search can be suspended after a node
quota and resumed; the Python side uses that for time limits and progress.

Pruning rules applied at every node (all sound: each only discards states
from which no completion exists).  Notation: F = unused, non-omitted
vertices (b is in F until the last step), t = current tail.  An edge is
*alive* if all its vertices lie in F + {t}; only alive edges can appear in
the rest of the path.  Every vertex of F ends with path degree 1 (a middle,
or b) or 2 (a junction); t needs exactly one more edge; b has degree 1.

  R1  a vertex of F + {t} with no alive edge cannot be covered.
  R2  a vertex whose only alive edge is e forces e into the path (forced).
  R3  path degree is at most 2, and exactly 1 for t and b, so a vertex in
      more forced edges than that is infeasible, and a vertex whose degree
      is already met by forced edges loses its other alive edges.
  R4  a vertex of F - {b} with one alive edge has degree 1, so it is the
      middle of that edge; an edge has one middle unless it is the final
      edge, whose second degree-1 vertex is b.  Two such vertices besides
      b in one forced edge is infeasible.  The remaining vertices of a
      forced edge with a middle are junctions: one with exactly two alive
      edges forces the other.
  R5  every forced edge needs a middle: a vertex other than t, b that is
      not already saturated by two forced edges.
  R6  forced edges are edges of one loose path, so they contain no cycle,
      and if they already connect t to b they must cover all of F.
  R7  the alive edges must connect t to all of F.
  R8  a new tail other than b needs another alive edge; b is never a
      middle and is entered only by the final edge.
"""

import numpy as np
from numba import njit

DEAD = 0
FOUND = 1
EXHAUSTED = 0
LIMIT = -1


@njit(cache=True)
def _find(par, i):
    while par[i] != i:
        par[i] = par[par[i]]
        i = par[i]
    return i


@njit(cache=True)
def _expand(ev, ve, used, tail, b, free, moves, prune, jitter):
    """Write candidate moves (middle, new tail) into ``moves``; return count."""
    n, d = ve.shape
    m = ev.shape[0]
    alive = np.zeros(m, np.uint8)
    vdeg = np.zeros(n, np.int64)
    if prune:
        for e in range(m):
            ok = 1
            for j in range(3):
                w = ev[e, j]
                if used[w] and w != tail:
                    ok = 0
                    break
            alive[e] = ok
        forced = np.zeros(m, np.uint8)
        fcount = np.zeros(n, np.int64)
        for u in range(n):
            if used[u] and u != tail:
                continue
            c = 0
            for k in range(d):
                c += alive[ve[u, k]]
            vdeg[u] = c
        changed = True
        while changed:
            changed = False
            for u in range(n):
                if used[u] and u != tail:
                    continue
                if vdeg[u] == 0:  # R1
                    return 0
                endpoint = u == tail or u == b
                if fcount[u] >= 3 or (endpoint and fcount[u] >= 2):  # R3
                    return 0
                if (fcount[u] >= 2 or (endpoint and fcount[u] == 1)) and vdeg[u] > fcount[u]:
                    for k in range(d):
                        e = ve[u, k]
                        if alive[e] and not forced[e]:
                            alive[e] = 0
                            for j in range(3):
                                vdeg[ev[e, j]] -= 1
                    changed = True
                    continue
                if vdeg[u] == 1 and fcount[u] == 0:  # R2
                    e = -1
                    for k in range(d):
                        if alive[ve[u, k]]:
                            e = ve[u, k]
                    forced[e] = 1
                    for j in range(3):
                        fcount[ev[e, j]] += 1
                    changed = True
            for e in range(m):
                if not forced[e]:
                    continue
                leaves = 0
                for j in range(3):
                    w = ev[e, j]
                    if w != b and w != tail and vdeg[w] == 1:
                        leaves += 1
                if leaves >= 2:  # R4
                    return 0
                if leaves == 1:
                    for j in range(3):
                        w = ev[e, j]
                        if w == b or w == tail or vdeg[w] != 2 or fcount[w] != 1:
                            continue
                        for k in range(d):
                            f = ve[w, k]
                            if alive[f] and not forced[f]:
                                forced[f] = 1
                                for jj in range(3):
                                    fcount[ev[f, jj]] += 1
                                changed = True
                mid = 0
                for j in range(3):
                    w = ev[e, j]
                    if w != b and w != tail and fcount[w] == 1:
                        mid += 1
                if mid == 0:  # R5
                    return 0
        par = np.arange(n)
        for e in range(m):
            if not forced[e]:
                continue
            r0 = _find(par, ev[e, 0])
            r1 = _find(par, ev[e, 1])
            r2 = _find(par, ev[e, 2])
            if r0 == r1 or r0 == r2 or r1 == r2:  # R6 cycle
                return 0
            par[r1] = r0
            par[r2] = r0
        if b >= 0 and _find(par, tail) == _find(par, b):
            rt = _find(par, tail)
            cnt = 0
            for u in range(n):
                if not used[u] and _find(par, u) == rt:
                    cnt += 1
            if cnt != free:  # R6 premature closure
                return 0
        seen = np.zeros(n, np.uint8)
        stack = np.empty(n, np.int64)
        stack[0] = tail
        sp = 1
        seen[tail] = 1
        cnt = 0
        while sp > 0:
            sp -= 1
            u = stack[sp]
            for k in range(d):
                e = ve[u, k]
                if alive[e]:
                    for j in range(3):
                        w = ev[e, j]
                        if not seen[w]:
                            seen[w] = 1
                            stack[sp] = w
                            sp += 1
                            cnt += 1
        if cnt != free:  # R7
            return 0
    else:
        for k in range(d):
            e = ve[tail, k]
            ok = 1
            for j in range(3):
                w = ev[e, j]
                if used[w] and w != tail:
                    ok = 0
            alive[e] = ok
    c = 0
    score = np.empty(2 * d, np.float64)
    for k in range(d):
        e = ve[tail, k]
        if not alive[e]:
            continue
        o0 = -1
        o1 = -1
        for j in range(3):
            w = ev[e, j]
            if w != tail:
                if o0 < 0:
                    o0 = w
                else:
                    o1 = w
        for s in range(2):
            mm = o0 if s == 0 else o1
            t = o1 if s == 0 else o0
            if mm == b:  # R8
                continue
            if t == b and free != 2:
                continue
            if prune and t != b and vdeg[t] < 2:
                continue
            moves[c, 0] = mm
            moves[c, 1] = t
            score[c] = 4.0 * vdeg[t] + vdeg[mm] + jitter * np.random.random()
            c += 1
    # insertion sort by score: most constrained first
    for i in range(1, c):
        j = i
        while j > 0 and score[j] < score[j - 1]:
            score[j], score[j - 1] = score[j - 1], score[j]
            t0 = moves[j, 0]
            t1 = moves[j, 1]
            moves[j, 0] = moves[j - 1, 0]
            moves[j, 1] = moves[j - 1, 1]
            moves[j - 1, 0] = t0
            moves[j - 1, 1] = t1
            j -= 1
    return c


@njit(cache=True)
def seed_rng(seed):
    np.random.seed(seed)


@njit(cache=True)
def start(ev, ve, used, a, b, free, moves, cnt, ix, path, prune, jitter):
    path[0] = a
    cnt[0] = _expand(ev, ve, used, a, b, free, moves[0], prune, jitter)
    ix[0] = 0


@njit(cache=True)
def run(ev, ve, used, b, state, moves, cnt, ix, path, quota, prune, jitter):
    """Advance the search by at most ``quota`` nodes.

    ``state`` holds ``[depth, free, nodes, status]`` with status 2 while
    running, FOUND, EXHAUSTED, or LIMIT when the quota ran out.
    """
    depth = state[0]
    free = state[1]
    nodes = state[2]
    stop = nodes + quota
    while depth >= 0:
        if ix[depth] < cnt[depth]:
            mm = moves[depth, ix[depth], 0]
            t = moves[depth, ix[depth], 1]
            ix[depth] += 1
            used[mm] = 1
            used[t] = 1
            free -= 2
            path[2 * depth + 1] = mm
            path[2 * depth + 2] = t
            depth += 1
            nodes += 1
            if free == 0:
                if t == b:
                    state[0] = depth
                    state[1] = free
                    state[2] = nodes
                    state[3] = FOUND
                    return
                used[mm] = 0
                used[t] = 0
                free += 2
                depth -= 1
                continue
            cnt[depth] = _expand(ev, ve, used, t, b, free, moves[depth], prune, jitter)
            ix[depth] = 0
            if nodes >= stop:
                state[0] = depth
                state[1] = free
                state[2] = nodes
                state[3] = LIMIT
                return
        else:
            if depth == 0:
                break
            depth -= 1
            used[path[2 * depth + 1]] = 0
            used[path[2 * depth + 2]] = 0
            free += 2
    state[0] = -1
    state[1] = free
    state[2] = nodes
    state[3] = EXHAUSTED

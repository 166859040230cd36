"""Compiled inner loops. All graphs arrive as CSR ``(indptr, indices)`` int64 arrays."""

import numpy as np
from numba import njit

# slots of the ``stats`` array filled by ``shatter_search``
VISITED = 0
TENTATIVE = 1
ADDITIONS = 2
NEGATIVE_EXPONENT = 3
WITNESS_LEN = 4
MASK_RESIDUE = 5
N_STATS = 6

MAX_MASK_BITS = 62


@njit(cache=True)
def max_level(indptr):
    """Deepest trace table ever needed: floor(log2(max closed degree)) + 2."""
    n = len(indptr) - 1
    best = 1
    for v in range(n):
        d = indptr[v + 1] - indptr[v] + 1
        if d > best:
            best = d
    lvl = 0
    while (1 << (lvl + 1)) <= best:
        lvl += 1
    return lvl + 2


@njit(cache=True)
def _try_add(s, x, indptr, indices, masks, tables, lb, prune, stats):
    # trace table of level s lives at tables[2^s : 2^(s+1)]
    m = 1 << (s - 1)
    prev = tables[m : 2 * m]
    cur = tables[2 * m : 4 * m]
    cur[:m] = prev
    cur[m:] = 0
    y = masks[x]
    cur[y] -= 1
    cur[y + m] += 1
    for k in range(indptr[x], indptr[x + 1]):
        y = masks[indices[k]]
        cur[y] -= 1
        cur[y + m] += 1
    stats[TENTATIVE] += 1
    threshold = 1
    if prune:
        e = lb + 1 - s
        if e < 0:
            stats[NEGATIVE_EXPONENT] += 1
            e = 0
        threshold = 1 << e
    for y in range(2 * m):
        if cur[y] < threshold:
            return False
    masks[x] += m
    for k in range(indptr[x], indptr[x + 1]):
        masks[indices[k]] += m
    stats[VISITED] += 1
    return True


@njit(cache=True)
def _remove(s, x, indptr, indices, masks):
    m = 1 << (s - 1)
    masks[x] -= m
    for k in range(indptr[x], indptr[x + 1]):
        masks[indices[k]] -= m


@njit(cache=True)
def _ball_candidates(i, x, indptr, indices, pos, mark, out):
    """Positions p > i of members of B[x, 2] in the ordered high set, ascending."""
    cnt = 0
    for a in range(indptr[x] - 1, indptr[x + 1]):
        v = x if a < indptr[x] else indices[a]
        for b in range(indptr[v] - 1, indptr[v + 1]):
            w = v if b < indptr[v] else indices[b]
            p = pos[w]
            if p > i and mark[w] != i:
                mark[w] = i
                out[cnt] = p
                cnt += 1
    out[:cnt].sort()
    return cnt


@njit(cache=True)
def shatter_search(indptr, indices, order, use_ball, lb, prune, stop_at, maxvisits, stats, witness):
    """Depth-first scan of shattered subsets of ``order`` (the ordered high set).

    Returns the final lower bound. ``maxvisits > 0`` switches to the budgeted
    heuristic scan: each vertex is added at most ``maxvisits`` times and every
    inner loop stops after ``maxvisits // 2`` iterations. ``stop_at > 0``
    ends the scan as soon as the bound reaches it.
    """
    n = len(indptr) - 1
    h = len(order)
    if h == 0:
        return lb
    levels = max_level(indptr)
    if levels > MAX_MASK_BITS:
        raise ValueError("trace masks would overflow 64 bits")
    tables = np.zeros(1 << (levels + 1), dtype=np.int64)
    tables[1] = n
    masks = np.zeros(n, dtype=np.int64)
    pos = np.full(n, -1, dtype=np.int64)
    for p in range(h):
        pos[order[p]] = p
    mark = np.full(n, -1, dtype=np.int64)
    cand_pos = np.empty(h, dtype=np.int64)
    cand = np.empty(h, dtype=np.int64)
    stack_vertex = np.empty(levels + 1, dtype=np.int64)
    stack_next = np.empty(levels + 1, dtype=np.int64)
    stack_iters = np.empty(levels + 1, dtype=np.int64)
    visits = np.zeros(n if maxvisits > 0 else 0, dtype=np.int64)
    loop_cap = maxvisits // 2 if maxvisits > 0 else h + 1

    for i in range(h):
        if stop_at > 0 and lb >= stop_at:
            break
        x0 = order[i]
        if maxvisits > 0:
            if visits[x0] >= maxvisits:
                continue
            visits[x0] += 1
        stats[ADDITIONS] += 1
        if not _try_add(1, x0, indptr, indices, masks, tables, lb, prune, stats):
            continue
        if use_ball:
            ncand = _ball_candidates(i, x0, indptr, indices, pos, mark, cand_pos)
            for c in range(ncand):
                cand[c] = order[cand_pos[c]]
        else:
            ncand = h - i - 1
            cand[:ncand] = order[i + 1 :]
        s = 1
        stack_vertex[1] = x0
        stack_next[1] = 0
        stack_iters[1] = 0
        if lb < 1:
            lb = 1
            witness[0] = x0
            stats[WITNESS_LEN] = 1
        while s >= 1:
            done = stop_at > 0 and lb >= stop_at
            if not done and stack_next[s] < ncand and stack_iters[s] < loop_cap:
                j = stack_next[s]
                stack_next[s] += 1
                stack_iters[s] += 1
                x = cand[j]
                if maxvisits > 0:
                    if visits[x] >= maxvisits:
                        continue
                    visits[x] += 1
                stats[ADDITIONS] += 1
                if s + 1 > levels:
                    raise ValueError("shattered set exceeds the degree bound")
                if _try_add(s + 1, x, indptr, indices, masks, tables, lb, prune, stats):
                    s += 1
                    stack_vertex[s] = x
                    stack_next[s] = j + 1
                    stack_iters[s] = 0
                    if s > lb:
                        lb = s
                        witness[:s] = stack_vertex[1 : s + 1]
                        stats[WITNESS_LEN] = s
            else:
                _remove(s, stack_vertex[s], indptr, indices, masks)
                s -= 1
    for v in range(n):
        if masks[v] != 0:
            stats[MASK_RESIDUE] += 1
    return lb


@njit(cache=True)
def ball2_sizes(indptr, indices, high):
    """``|B[v, 2] ∩ high|`` for every ``v`` in ``high``."""
    n = len(indptr) - 1
    inside = np.zeros(n, dtype=np.bool_)
    for v in high:
        inside[v] = True
    mark = np.full(n, -1, dtype=np.int64)
    out = np.zeros(len(high), dtype=np.int64)
    for i in range(len(high)):
        x = high[i]
        cnt = 0
        for a in range(indptr[x] - 1, indptr[x + 1]):
            v = x if a < indptr[x] else indices[a]
            for b in range(indptr[v] - 1, indptr[v + 1]):
                w = v if b < indptr[v] else indices[b]
                if inside[w] and mark[w] != i:
                    mark[w] = i
                    cnt += 1
        out[i] = cnt
    return out


@njit(cache=True)
def refine_partition(indptr, indices, pivots):
    """Refine ``{V}`` by ``N[x]`` for each pivot ``x``; returns (part id per vertex, part count, work)."""
    n = len(indptr) - 1
    elems = np.arange(n)
    where = np.arange(n)
    part = np.zeros(n, dtype=np.int64)
    start = np.zeros(n + 1, dtype=np.int64)
    end = np.zeros(n + 1, dtype=np.int64)
    end[0] = n
    nparts = 1 if n > 0 else 0
    hits = np.zeros(n + 1, dtype=np.int64)
    touched = np.empty(n + 1, dtype=np.int64)
    work = 0
    for x in pivots:
        nt = 0
        for a in range(indptr[x] - 1, indptr[x + 1]):
            v = x if a < indptr[x] else indices[a]
            p = part[v]
            if hits[p] == 0:
                touched[nt] = p
                nt += 1
            target = start[p] + hits[p]
            u = elems[target]
            iv = where[v]
            elems[target] = v
            where[v] = target
            elems[iv] = u
            where[u] = iv
            hits[p] += 1
            work += 1
        for t in range(nt):
            p = touched[t]
            c = hits[p]
            hits[p] = 0
            if c < end[p] - start[p]:
                q = nparts
                nparts += 1
                start[q] = start[p]
                end[q] = start[p] + c
                start[p] += c
                for k in range(start[q], end[q]):
                    part[elems[k]] = q
                    work += 1
    return part, nparts, work

"""Pure-Python kernels: neighbourhood colour counting and exact search.

These mirror the compiled versions in ``_speedups.pyx`` exactly; the parity
test suite runs both backends on the same inputs.
"""

from __future__ import annotations

import time

import numpy as np

FOUND = 1
REFUTED = 0
EXHAUSTED = -1


def neighbourhood_counts(indptr, indices, colours):
    """Per-vertex counts of solitary (multiplicity 1) and odd-multiplicity
    colours over each neighbourhood. Returns two int64 arrays."""
    n = len(indptr) - 1
    solitary = np.zeros(n, dtype=np.int64)
    odd = np.zeros(n, dtype=np.int64)
    ip = indptr.tolist()
    idx = indices.tolist()
    col = colours.tolist()
    for v in range(n):
        mult: dict[int, int] = {}
        for j in range(ip[v], ip[v + 1]):
            c = col[idx[j]]
            mult[c] = mult.get(c, 0) + 1
        s = 0
        o = 0
        for m in mult.values():
            if m == 1:
                s += 1
            if m & 1:
                o += 1
        solitary[v] = s
        odd[v] = o
    return solitary, odd


def monochromatic_edge_count(indptr, indices, colours) -> int:
    """Number of edges whose endpoints share a colour."""
    n = len(indptr) - 1
    ip = indptr.tolist()
    idx = indices.tolist()
    col = colours.tolist()
    bad = 0
    for u in range(n):
        cu = col[u]
        for j in range(ip[u], ip[u + 1]):
            w = idx[j]
            if w > u and col[w] == cu:
                bad += 1
    return bad


def search_colouring(indptr, indices, h, k, use_odd, order, max_nodes, time_limit):
    """Backtracking search for a proper k-colouring in which every vertex v
    sees at least min(h, deg(v)) solitary (or odd-multiplicity) colours.

    Colour classes are introduced in increasing order (the first vertex is
    forced to colour 1), which breaks colour symmetry without losing
    completeness. A vertex w is pruned as soon as its currently achievable
    count (present count plus one per still-uncoloured neighbour) drops below
    its demand; once all of N(w) is coloured this check is exact.

    Returns (status, colours-or-None, nodes).
    """
    n = len(indptr) - 1
    if n == 0:
        return FOUND, np.zeros(0, dtype=np.int64), 0
    ip = indptr.tolist()
    idx = indices.tolist()
    deg = [ip[v + 1] - ip[v] for v in range(n)]
    demanded = [min(h, deg[v]) for v in range(n)]
    K1 = k + 1
    cnt = [0] * (n * K1)
    singles = [0] * n
    odds = [0] * n
    unc = deg[:]
    colour = [0] * n
    order = [int(v) for v in order]
    cand = [1] * (n + 1)
    maxu = [0] * (n + 1)
    nodes = 0
    deadline = None if time_limit is None else time.monotonic() + time_limit
    pos = 0
    while pos < n:
        v = order[pos]
        limit = min(maxu[pos] + 1, k)
        c = cand[pos]
        advanced = False
        while c <= limit:
            if cnt[v * K1 + c] == 0:
                nodes += 1
                if nodes > max_nodes:
                    return EXHAUSTED, None, nodes
                if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                    return EXHAUSTED, None, nodes
                ok = True
                for j in range(ip[v], ip[v + 1]):
                    w = idx[j]
                    base = w * K1 + c
                    m = cnt[base] + 1
                    cnt[base] = m
                    if m == 1:
                        singles[w] += 1
                        odds[w] += 1
                    elif m == 2:
                        singles[w] -= 1
                        odds[w] -= 1
                    elif m & 1:
                        odds[w] += 1
                    else:
                        odds[w] -= 1
                    unc[w] -= 1
                for j in range(ip[v], ip[v + 1]):
                    w = idx[j]
                    have = odds[w] if use_odd else singles[w]
                    if have + unc[w] < demanded[w]:
                        ok = False
                        break
                if ok:
                    colour[v] = c
                    cand[pos] = c + 1
                    pos += 1
                    maxu[pos] = c if c > maxu[pos - 1] else maxu[pos - 1]
                    cand[pos] = 1
                    advanced = True
                    break
                _undo(ip, idx, cnt, singles, odds, unc, v, c, K1)
            c += 1
        if not advanced:
            cand[pos] = 1
            if pos == 0:
                return REFUTED, None, nodes
            pos -= 1
            pv = order[pos]
            _undo(ip, idx, cnt, singles, odds, unc, pv, colour[pv], K1)
            colour[pv] = 0
    return FOUND, np.asarray(colour, dtype=np.int64), nodes


def _undo(ip, idx, cnt, singles, odds, unc, v, c, K1):
    for j in range(ip[v], ip[v + 1]):
        w = idx[j]
        base = w * K1 + c
        m = cnt[base]
        cnt[base] = m - 1
        if m == 1:
            singles[w] -= 1
            odds[w] -= 1
        elif m == 2:
            singles[w] += 1
            odds[w] += 1
        elif m & 1:
            odds[w] -= 1
        else:
            odds[w] += 1
        unc[w] += 1

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: neighbourhood colour counting and exact search.

Behaviourally identical to ``_pure.py``; kept in lockstep by the parity
tests. Only flat int64 buffers cross the boundary.
"""

import time

import numpy as np

FOUND = 1
REFUTED = 0
EXHAUSTED = -1


def neighbourhood_counts(indptr, indices, colours):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const long long[::1] col = np.ascontiguousarray(colours, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    sol_arr = np.zeros(n, dtype=np.int64)
    odd_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] sol = sol_arr
    cdef long long[::1] odd = odd_arr
    cdef long long cmax = 0
    cdef Py_ssize_t i
    for i in range(col.shape[0]):
        if col[i] > cmax:
            cmax = col[i]
    scratch_arr = np.zeros(cmax + 2, dtype=np.int64)
    cdef long long[::1] scratch = scratch_arr
    touched_arr = np.zeros(col.shape[0] + 1, dtype=np.int64)
    cdef long long[::1] touched = touched_arr
    cdef Py_ssize_t v, j, t
    cdef long long c, m, s, o
    for v in range(n):
        t = 0
        for j in range(ip[v], ip[v + 1]):
            c = col[idx[j]]
            if scratch[c] == 0:
                touched[t] = c
                t += 1
            scratch[c] += 1
        s = 0
        o = 0
        for j in range(t):
            m = scratch[touched[j]]
            if m == 1:
                s += 1
            if m & 1:
                o += 1
            scratch[touched[j]] = 0
        sol[v] = s
        odd[v] = o
    return sol_arr, odd_arr


def monochromatic_edge_count(indptr, indices, colours):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const long long[::1] col = np.ascontiguousarray(colours, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef Py_ssize_t u, j
    cdef long long bad = 0
    for u in range(n):
        for j in range(ip[u], ip[u + 1]):
            if idx[j] > u and col[idx[j]] == col[u]:
                bad += 1
    return int(bad)


cdef inline void _undo(const long long[::1] ip, const long long[::1] idx, long long[::1] cnt,
                       long long[::1] singles, long long[::1] odds, long long[::1] unc,
                       Py_ssize_t v, long long c, long long K1) noexcept:
    cdef Py_ssize_t j, w
    cdef long long m
    for j in range(ip[v], ip[v + 1]):
        w = idx[j]
        m = cnt[w * K1 + c]
        cnt[w * K1 + c] = m - 1
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


def search_colouring(indptr, indices, h, k, use_odd, order, max_nodes, time_limit):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    if n == 0:
        return FOUND, np.zeros(0, dtype=np.int64), 0
    cdef long long hh = h
    cdef long long kk = k
    cdef bint odd_mode = bool(use_odd)
    cdef const long long[::1] ordv = np.ascontiguousarray(order, dtype=np.int64)
    cdef long long budget = max_nodes
    cdef double deadline = -1.0
    if time_limit is not None:
        deadline = time.monotonic() + float(time_limit)

    cdef long long K1 = kk + 1
    cnt_arr = np.zeros(n * K1, dtype=np.int64)
    cdef long long[::1] cnt = cnt_arr
    singles_arr = np.zeros(n, dtype=np.int64)
    odds_arr = np.zeros(n, dtype=np.int64)
    unc_arr = np.zeros(n, dtype=np.int64)
    dem_arr = np.zeros(n, dtype=np.int64)
    col_arr = np.zeros(n, dtype=np.int64)
    cand_arr = np.ones(n + 1, dtype=np.int64)
    maxu_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] singles = singles_arr
    cdef long long[::1] odds = odds_arr
    cdef long long[::1] unc = unc_arr
    cdef long long[::1] demanded = dem_arr
    cdef long long[::1] colour = col_arr
    cdef long long[::1] cand = cand_arr
    cdef long long[::1] maxu = maxu_arr

    cdef Py_ssize_t v, w, j, pos
    cdef long long c, limit, m, have, nodes
    cdef bint ok, advanced
    for v in range(n):
        unc[v] = ip[v + 1] - ip[v]
        demanded[v] = hh if hh < unc[v] else unc[v]
    nodes = 0
    pos = 0
    while pos < n:
        v = ordv[pos]
        limit = maxu[pos] + 1
        if limit > kk:
            limit = kk
        c = cand[pos]
        advanced = False
        while c <= limit:
            if cnt[v * K1 + c] == 0:
                nodes += 1
                if nodes > budget:
                    return EXHAUSTED, None, int(nodes)
                if deadline >= 0.0 and nodes % 4096 == 0:
                    if time.monotonic() > deadline:
                        return EXHAUSTED, None, int(nodes)
                ok = True
                for j in range(ip[v], ip[v + 1]):
                    w = idx[j]
                    m = cnt[w * K1 + c] + 1
                    cnt[w * K1 + c] = m
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
                    have = odds[w] if odd_mode else singles[w]
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
                return REFUTED, None, int(nodes)
            pos -= 1
            v = ordv[pos]
            _undo(ip, idx, cnt, singles, odds, unc, v, colour[v], K1)
            colour[v] = 0
    return FOUND, col_arr, int(nodes)

"""numba-compiled kernels. Same contracts as :mod:`topodeck._kernels_numpy`."""

import numpy as np
from numba import njit


@njit(cache=True)
def _row_cmp(a, b):
    for i in range(a.shape[0]):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


@njit(cache=True)
def _rank_rows(sig):
    n = sig.shape[0]
    order = np.arange(n)
    # insertion sort; n is a handful of vertices
    for i in range(1, n):
        j = i
        while j > 0 and _row_cmp(sig[order[j - 1]], sig[order[j]]) > 0:
            t = order[j - 1]
            order[j - 1] = order[j]
            order[j] = t
            j -= 1
    ranks = np.empty(n, np.int64)
    r = 0
    ranks[order[0]] = 0
    for i in range(1, n):
        if _row_cmp(sig[order[i - 1]], sig[order[i]]) != 0:
            r += 1
        ranks[order[i]] = r
    return ranks


@njit(cache=True)
def compress(colors):
    sig = np.empty((colors.shape[0], 1), np.int64)
    sig[:, 0] = colors
    return _rank_rows(sig)


@njit(cache=True)
def refine(adj, colors):
    n = adj.shape[0]
    cur = compress(colors)
    while True:
        k = cur.max() + 1
        sig = np.zeros((n, k + 1), np.int64)
        for v in range(n):
            sig[v, 0] = cur[v]
            for u in range(n):
                sig[v, 1 + cur[u]] += adj[v, u]
        new = _rank_rows(sig)
        if new.max() + 1 == k:
            return new
        cur = new


@njit(cache=True)
def _cmp_perm(mult, opens, loops, p, q):
    n = p.shape[0]
    for i in range(n):
        a = opens[p[i]]
        b = opens[q[i]]
        if a != b:
            return -1 if a < b else 1
    for i in range(n):
        a = loops[p[i]]
        b = loops[q[i]]
        if a != b:
            return -1 if a < b else 1
    for i in range(n):
        for j in range(i + 1, n):
            a = mult[p[i], p[j]]
            b = mult[q[i], q[j]]
            if a != b:
                return -1 if a < b else 1
    return 0


@njit(cache=True)
def min_encoding(mult, opens, loops, perms):
    best = 0
    for k in range(1, perms.shape[0]):
        if _cmp_perm(mult, opens, loops, perms[k], perms[best]) < 0:
            best = k
    return best

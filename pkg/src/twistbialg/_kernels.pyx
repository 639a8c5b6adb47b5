# cython: boundscheck=False, wraparound=False
"""Compiled enumeration kernels; see _kernels_py for the reference versions."""
from itertools import permutations

cdef enum:
    MAXN = 32
    MAXE = 64


cdef void _qsh_walk(int k, int l, int i, int j, int v, int* img, list out):
    if i == k and j == l:
        out.append(tuple([img[t] for t in range(k + l)]))
        return
    if i < k:
        img[i] = v + 1
        _qsh_walk(k, l, i + 1, j, v + 1, img, out)
    if j < l:
        img[k + j] = v + 1
        _qsh_walk(k, l, i, j + 1, v + 1, img, out)
    if i < k and j < l:
        img[i] = v + 1
        img[k + j] = v + 1
        _qsh_walk(k, l, i + 1, j + 1, v + 1, img, out)


def qsh(int k, int l):
    cdef int img[MAXN]
    if k + l > MAXN:
        raise ValueError("run lengths too large")
    out = []
    _qsh_walk(k, l, 0, 0, 0, img, out)
    return out


cdef void _rgs_walk(int n, int pos, int nblocks, int* rgs, list out):
    cdef int b
    if pos == n:
        out.append(tuple([rgs[t] for t in range(n)]))
        return
    for b in range(nblocks + 1):
        rgs[pos] = b
        _rgs_walk(n, pos + 1, nblocks if nblocks > b + 1 else b + 1, rgs, out)


def set_partitions(int n):
    cdef int rgs[MAXN]
    if n > MAXN:
        raise ValueError("n too large")
    out = []
    _rgs_walk(n, 0, 0, rgs, out)
    return out


def packed_words(int n):
    out = []
    for rgs in set_partitions(n):
        m = max(rgs) + 1 if n else 0
        for perm in permutations(range(1, m + 1)):
            out.append(tuple([perm[b] for b in rgs]))
    out.sort()
    return out


cdef bint _acyclic(int n, int ne, int* src, int* dst):
    cdef int indeg[MAXN]
    cdef int stack[MAXN]
    cdef int top = 0, seen = 0, v, e
    for v in range(n):
        indeg[v] = 0
    for e in range(ne):
        indeg[dst[e]] += 1
    for v in range(n):
        if indeg[v] == 0:
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        seen += 1
        for e in range(ne):
            if src[e] == v:
                indeg[dst[e]] -= 1
                if indeg[dst[e]] == 0:
                    stack[top] = dst[e]
                    top += 1
    return seen == n


def count_acyclic_orientations(int n, edges):
    cdef int ea[MAXE]
    cdef int eb[MAXE]
    cdef int src[MAXE]
    cdef int dst[MAXE]
    cdef int ne = 0, i
    cdef long long mask, total = 0
    for a, b in edges:
        ea[ne] = a
        eb[ne] = b
        ne += 1
    if n > MAXN or ne > 40:
        raise ValueError("graph too large")
    for mask in range((<long long>1) << ne):
        for i in range(ne):
            if (mask >> i) & 1:
                src[i] = eb[i]
                dst[i] = ea[i]
            else:
                src[i] = ea[i]
                dst[i] = eb[i]
        if _acyclic(n, ne, src, dst):
            total += 1
    return total


cdef bint _next_word(int n, int k, int* f):
    # Odometer increment; returns False after the last word.
    cdef int p = 0
    while p < n:
        f[p] += 1
        if f[p] < k:
            return True
        f[p] = 0
        p += 1
    return False


def count_proper_colorings(int n, edges, int k):
    cdef int ea[MAXE]
    cdef int eb[MAXE]
    cdef int f[MAXN]
    cdef int ne = 0, i
    cdef long long total = 0
    cdef bint ok
    for a, b in edges:
        ea[ne] = a
        eb[ne] = b
        ne += 1
    if n == 0:
        return 1
    if k <= 0:
        return 0
    for i in range(n):
        f[i] = 0
    while True:
        ok = True
        for i in range(ne):
            if f[ea[i]] == f[eb[i]]:
                ok = False
                break
        if ok:
            total += 1
        if not _next_word(n, k, f):
            break
    return total


def count_monotone_maps(int n, relations, int k, bint strict):
    cdef int ea[MAXE * 4]
    cdef int eb[MAXE * 4]
    cdef int f[MAXN]
    cdef int ne = 0, i
    cdef long long total = 0
    cdef bint ok
    for a, b in relations:
        ea[ne] = a
        eb[ne] = b
        ne += 1
    if n == 0:
        return 1
    if k <= 0:
        return 0
    for i in range(n):
        f[i] = 0
    while True:
        ok = True
        for i in range(ne):
            if strict:
                if f[ea[i]] >= f[eb[i]]:
                    ok = False
                    break
            elif f[ea[i]] > f[eb[i]]:
                ok = False
                break
        if ok:
            total += 1
        if not _next_word(n, k, f):
            break
    return total

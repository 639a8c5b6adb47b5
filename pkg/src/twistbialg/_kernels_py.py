"""Pure-Python versions of the enumeration kernels.

Every function here has a twin in ``_kernels.pyx`` with the same signature and the
same output order; ``twistbialg.kernels`` picks whichever is importable.
"""
from itertools import permutations, product


def qsh(k, l):
    # Quasi-shuffles of a k-run and an l-run: surjections onto 1..m that are
    # strictly increasing on each run.  Order: take-left, take-right, take-both.
    out = []
    img = [0] * (k + l)

    def walk(i, j, v):
        if i == k and j == l:
            out.append(tuple(img))
            return
        if i < k:
            img[i] = v + 1
            walk(i + 1, j, v + 1)
        if j < l:
            img[k + j] = v + 1
            walk(i, j + 1, v + 1)
        if i < k and j < l:
            img[i] = v + 1
            img[k + j] = v + 1
            walk(i + 1, j + 1, v + 1)

    walk(0, 0, 0)
    return out


def set_partitions(n):
    # Restricted growth strings of length n (block index of each element).
    out = []
    rgs = [0] * n

    def walk(pos, nblocks):
        if pos == n:
            out.append(tuple(rgs))
            return
        for b in range(nblocks + 1):
            rgs[pos] = b
            walk(pos + 1, max(nblocks, b + 1))

    walk(0, 0)
    return out


def packed_words(n):
    # All surjections {1..n} -> {1..m}, lexicographically sorted.
    out = []
    for rgs in set_partitions(n):
        m = max(rgs) + 1 if n else 0
        for perm in permutations(range(1, m + 1)):
            out.append(tuple(perm[b] for b in rgs))
    out.sort()
    return out


def _acyclic(n, arcs):
    indeg = [0] * n
    succ = [[] for _ in range(n)]
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def count_acyclic_orientations(n, edges):
    edges = list(edges)
    total = 0
    for mask in range(1 << len(edges)):
        arcs = [(b, a) if mask >> i & 1 else (a, b) for i, (a, b) in enumerate(edges)]
        if _acyclic(n, arcs):
            total += 1
    return total


def count_proper_colorings(n, edges, k):
    edges = list(edges)
    total = 0
    for col in product(range(k), repeat=n):
        if all(col[a] != col[b] for a, b in edges):
            total += 1
    return total


def count_monotone_maps(n, relations, k, strict):
    relations = list(relations)
    total = 0
    for f in product(range(k), repeat=n):
        if strict:
            ok = all(f[a] < f[b] for a, b in relations)
        else:
            ok = all(f[a] <= f[b] for a, b in relations)
        if ok:
            total += 1
    return total

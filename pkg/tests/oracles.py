"""Slow reference implementations, written without reusing library internals."""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction

import numpy as np


def _frac(x):
    return x if isinstance(x, float) else Fraction(x)


def brute_partition(n, edges, A, nu=None):
    """Straight sum over all q^n colourings; no pruning, no vectorisation."""
    q = len(A)
    nu = nu or [1] * q
    exact = not any(isinstance(x, float) for row in A for x in row) and not any(isinstance(x, float) for x in nu)
    total = Fraction(0) if exact else 0.0
    for phi in itertools.product(range(q), repeat=n):
        term = Fraction(1) if exact else 1.0
        for v in range(n):
            term *= _frac(nu[phi[v]])
        for u, v in edges:
            term *= _frac(A[phi[u]][phi[v]])
        total += term
    return total


def brute_hom_count(n, edges, A):
    """Unpruned count of 0/1 homomorphisms, all q^n maps at once as a numpy grid."""
    A = np.asarray(A, dtype=np.int64)
    q = len(A)
    phi = np.indices((q,) * n).reshape(n, -1)
    keep = np.ones(phi.shape[1], dtype=np.int64)
    for u, v in edges:
        keep *= A[phi[u], phi[v]]
    return int(keep.sum())


def components(n, edges):
    """Connected-component count by repeated BFS."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    k = 0
    for s in range(n):
        if seen[s]:
            continue
        k += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return k


def subset_random_cluster(n, edges, q, w):
    """Sum of q^k(F) w^|F| over all 2^m edge subsets, checking k(F) >= n - |F|."""
    q, w = Fraction(q), Fraction(w)
    total = Fraction(0)
    m = len(edges)
    for mask in range(2**m):
        F = [edges[i] for i in range(m) if mask >> i & 1]
        k = components(n, F)
        assert k >= n - len(F)
        total += q**k * w ** len(F)
    return total


def brute_girth(n, edges):
    """For each edge, shortest u-v path avoiding that edge, plus one."""
    best = float("inf")
    for idx, (u, v) in enumerate(edges):
        if u == v:
            return 1
        adj = [[] for _ in range(n)]
        for j, (a, b) in enumerate(edges):
            if j != idx:
                adj[a].append(b)
                adj[b].append(a)
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def brute_independent_counts(n, edges):
    """i_k by checking every vertex subset; a looped vertex is never independent."""
    counts = [0] * (n + 1)
    looped = {u for u, v in edges if u == v}
    for mask in range(2**n):
        S = {v for v in range(n) if mask >> v & 1}
        if S & looped:
            continue
        if all(not (u in S and v in S) for u, v in edges):
            counts[len(S)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_matching_counts(n, edges):
    counts = [1]
    proper = [e for e in edges if e[0] != e[1]]
    for k in range(1, len(proper) + 1):
        c = 0
        for sub in itertools.combinations(proper, k):
            ends = [x for e in sub for x in e]
            if len(set(ends)) == 2 * k:
                c += 1
        if c == 0:
            break
        counts.append(c)
    return counts


def cycle_hom_trace(n, A):
    """hom(C_n, A) = trace(A^n) with Python integers."""
    M = np.array(A, dtype=object)
    P = np.identity(len(A), dtype=object)
    for _ in range(n):
        P = P.dot(M)
    return int(sum(P[i][i] for i in range(len(A))))


def lift_edges(n, edges, signs):
    """The 2-lift written out from the definition: (u, i) -> u + i n."""
    out = []
    for (u, v), s in zip(edges, signs):
        if s == 1:
            out += [(u, v), (u + n, v + n)]
        else:
            out += [(u, v + n), (u + n, v)]
    return out

"""Exact partition functions, homomorphism counts, independent-set and matching
counts, and the random-cluster (Tutte) function.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .graph import CapExceeded, Graph, minor
from .models import ModelError, SpinModel, adjacency_model, to_scalar

DEFAULT_ASSIGNMENT_CAP = 10**8
DEFAULT_EXPANSION_CAP = 10**7
SUBSET_SCAN_LIMIT = 30

_INT64_SAFE = 2**62


def _lcm_denominator(values) -> int:
    d = 1
    for x in values:
        d = math.lcm(d, x.denominator)
    return d


def _vertex_order(g: Graph) -> list[int]:
    """BFS order starting from high-degree vertices, so early vertices share edges."""
    adj = g.adjacency()
    deg = g.degrees()
    seen = [False] * g.n
    order = []
    for s in sorted(range(g.n), key=lambda v: -deg[v]):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y, _ in sorted(adj[x], key=lambda t: -deg[t[0]]):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def partition_value(g: Graph, m: SpinModel, cap: int = DEFAULT_ASSIGNMENT_CAP, block: int = 2**16):
    """``Z(G, A, nu)``: sum over all colourings of edge and vertex weights.

    The first vertices (in BFS order) are assigned by backtracking, skipping any
    branch whose partial product is already zero. The remaining vertices are
    enumerated as a whole numpy block of at most ``block`` colourings. Exact
    models are scaled to integers and the result is returned as a ``Fraction``;
    float models give a ``float``.
    """
    q, n = m.q, g.n
    cost = q**n
    if cost > cap:
        raise CapExceeded(
            f"Z needs {cost} assignment evaluations, above the cap of {cap}", required=cost, cap=cap
        )

    if m.exact:
        dA = _lcm_denominator(x for r in m.A for x in r)
        dnu = _lcm_denominator(m.nu)
        A = [[int(x * dA) for x in r] for r in m.A]
        nu = [int(x * dnu) for x in m.nu]
        top = max(max(r) for r in A) ** g.m * max(nu) ** n * q**n
        dtype = np.int64 if top < _INT64_SAFE else object
        zero = 0
    else:
        A = [[float(x) for x in r] for r in m.A]
        nu = [float(x) for x in m.nu]
        dtype = np.float64
        zero = 0.0

    order = _vertex_order(g)
    r = 0
    while r < n and q ** (r + 1) <= block:
        r += 1
    outer, inner = order[: n - r], order[n - r :]
    pos_outer = {v: i for i, v in enumerate(outer)}
    pos_inner = {v: k for k, v in enumerate(inner)}

    A_arr = np.array(A, dtype=dtype)
    nu_arr = np.array(nu, dtype=dtype)
    size = q**r
    idx = np.arange(size, dtype=np.int64)
    digits = [(idx // q**k) % q for k in range(r)]

    base = np.ones(size, dtype=dtype)
    for k in range(r):
        base = base * nu_arr[digits[k]]
    # edges between outer vertices are checked once the later endpoint is set
    closing: list[list[tuple[int, int]]] = [[] for _ in outer]
    # inner vertex k -> outer neighbours (with multiplicity)
    to_outer: list[list[int]] = [[] for _ in inner]
    for u, v in g.edges:
        if u in pos_inner and v in pos_inner:
            base = base * A_arr[digits[pos_inner[u]], digits[pos_inner[v]]]
        elif u in pos_outer and v in pos_outer:
            later = max(pos_outer[u], pos_outer[v])
            closing[later].append((pos_outer[u], pos_outer[v]))
        else:
            o, k = (u, v) if u in pos_outer else (v, u)
            to_outer[pos_inner[k]].append(pos_outer[o])

    colors = [0] * len(outer)
    total = zero

    def leaf(weight):
        vec = base
        for k, nbrs in enumerate(to_outer):
            if not nbrs:
                continue
            f = A_arr[colors[nbrs[0]]]
            for o in nbrs[1:]:
                f = f * A_arr[colors[o]]
            vec = vec * f[digits[k]]
        s = vec.sum()
        return weight * (int(s) if dtype is np.int64 else s)

    def descend(i, weight):
        nonlocal total
        if i == len(outer):
            total += leaf(weight)
            return
        for c in range(q):
            colors[i] = c
            w = weight * nu[c]
            for a, b in closing[i]:
                w = w * A[colors[a]][colors[b]]
                if not w:
                    break
            if w:
                descend(i + 1, w)

    descend(0, 1 if m.exact else 1.0)
    if m.exact:
        return Fraction(int(total), dA**g.m * dnu**n)
    return float(total)


def hom(g: Graph, target) -> int:
    """Number of homomorphisms into a target graph or 0/1 model."""
    model = adjacency_model(target) if isinstance(target, Graph) else target
    if any(x not in (0, 1) for r in model.A for x in r) or not model.unweighted:
        raise ModelError("hom expects an unweighted 0/1 target")
    return int(partition_value(g, model))


def matrix_power_trace(A, n: int):
    q = len(A)
    P = [[int(i == j) for j in range(q)] for i in range(q)]
    for _ in range(n):
        P = [[sum(P[i][k] * A[k][j] for k in range(q)) for j in range(q)] for i in range(q)]
    return sum(P[i][i] for i in range(q))


def hom_cycle_oracle(n: int, m: SpinModel):
    """``trace(A^n)``, which equals ``Z(C_n, A)`` for unit vertex weights."""
    if n < 1:
        raise ValueError("cycle length must be at least 1")
    if not m.unweighted:
        raise ValueError("the trace oracle needs unit vertex weights")
    return matrix_power_trace(m.A, n)


# -- independent sets and matchings -------------------------------------------


def _popcount(x: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(x).astype(np.int64)
    out = np.zeros_like(x)
    y = x.copy()
    while np.any(y):
        out += y & 1
        y >>= 1
    return out


def _subset_scan(nbits: int, bad_pairs, forced_out, chunk: int = 2**20) -> list[int]:
    """Histogram by size of the subsets of ``range(nbits)`` avoiding every bad pair.

    ``bad_pairs`` is a list of bitmasks with two bits set (or one bit, for an
    element that may never be chosen on its own).
    """
    counts = [0] * (nbits + 1)
    forbidden_single = 0
    for b in forced_out:
        forbidden_single |= 1 << b
    pairs = np.array(bad_pairs, dtype=np.int64) if bad_pairs else np.zeros(0, dtype=np.int64)
    total = 1 << nbits
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        ok = (masks & forbidden_single) == 0
        for p in pairs:
            ok &= (masks & p) != p
        sizes = _popcount(masks[ok])
        for k, c in enumerate(np.bincount(sizes, minlength=nbits + 1)):
            counts[k] += int(c)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def independent_set_counts(g: Graph, limit: int = SUBSET_SCAN_LIMIT) -> list[int]:
    """``[i_0, i_1, ...]`` by scanning all ``2**v`` vertex subsets.

    A looped vertex can never be chosen, matching ``Z(G, A_ind)``.
    """
    if g.n > limit:
        raise CapExceeded(f"{g.n} vertices exceed the subset-scan limit {limit}", g.n, limit)
    pairs, looped = [], []
    for u, v in g.edges:
        if u == v:
            looped.append(u)
        else:
            pairs.append((1 << u) | (1 << v))
    return _subset_scan(g.n, sorted(set(pairs)), looped)


def eval_I(g: Graph, lam=1):
    """Independence polynomial ``sum_k i_k lam^k`` (exact for rational ``lam``)."""
    lam = to_scalar(lam)
    total = 0 if isinstance(lam, Fraction) else 0.0
    for k, c in enumerate(independent_set_counts(g)):
        total += c * lam**k
    return total


def matching_counts(g: Graph, limit: int = SUBSET_SCAN_LIMIT) -> list[int]:
    """``[m_0, m_1, ...]`` by scanning all ``2**m`` edge subsets; loops never match."""
    if g.m > limit:
        raise CapExceeded(f"{g.m} edges exceed the subset-scan limit {limit}", g.m, limit)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    loops = []
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            loops.append(e)
        else:
            incident[u].append(e)
            incident[v].append(e)
    pairs = set()
    for es in incident:
        for a, b in itertools.combinations(es, 2):
            pairs.add((1 << a) | (1 << b))
    return _subset_scan(g.m, sorted(pairs), loops)


# -- random-cluster model ----------------------------------------------------


@dataclass(frozen=True)
class RCParams:
    q: object
    w: object

    def __post_init__(self):
        object.__setattr__(self, "q", to_scalar(self.q))
        object.__setattr__(self, "w", to_scalar(self.w))
        if self.q < 0 or self.w < 0:
            raise ValueError("random-cluster parameters must be non-negative")


def _contract_pair(n: int, edges: list[tuple[int, int]], e: int):
    u, v = edges[e]
    keep, gone = min(u, v), max(u, v)

    def relabel(x):
        if x == gone:
            return keep
        return x - 1 if x > gone else x

    rest = [(relabel(a), relabel(b)) for i, (a, b) in enumerate(edges) if i != e]
    return n - 1, rest


def _poly_mul(p: dict, r: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in r.items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def rc_polynomial(g: Graph, memo: bool = True, budget: int = DEFAULT_EXPANSION_CAP) -> dict:
    """Coefficients ``{(k, f): count}`` of ``Z(G; q, w) = sum_F q^k(F) w^|F|``.

    Deletion-contraction: loops are stripped first as ``(1 + w)`` factors, then
    the highest-index non-loop edge (in sorted edge order) is split. With
    ``memo`` the recursion caches on the sorted edge multiset.
    """
    cache: dict = {}
    expansions = 0

    def rec(n: int, edges: list[tuple[int, int]]) -> dict:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise CapExceeded(
                f"deletion-contraction exceeded {budget} node expansions", required=expansions, cap=budget
            )
        loops = sum(1 for a, b in edges if a == b)
        plain = sorted((min(a, b), max(a, b)) for a, b in edges if a != b)
        key = (n, tuple(plain))
        if memo and key in cache:
            core = cache[key]
        elif not plain:
            core = {(n, 0): 1}
        else:
            e = len(plain) - 1
            deleted = rec(n, plain[:e])
            cn, cedges = _contract_pair(n, plain, e)
            contracted = rec(cn, cedges)
            core = dict(deleted)
            for (a, b), c in contracted.items():
                core[(a, b + 1)] = core.get((a, b + 1), 0) + c
            if memo:
                cache[key] = core
        if loops:
            factor = {(0, j): math.comb(loops, j) for j in range(loops + 1)}
            return _poly_mul(core, factor)
        return core

    return rec(g.n, list(g.edges))


def eval_rc_polynomial(poly: dict, q, w):
    q, w = to_scalar(q), to_scalar(w)
    exact = isinstance(q, Fraction) and isinstance(w, Fraction)
    total = Fraction(0) if exact else 0.0
    for (k, f), c in sorted(poly.items()):
        total += c * q**k * w**f
    return total


def random_cluster(g: Graph, q, w=None, memo: bool = True, budget: int = DEFAULT_EXPANSION_CAP):
    """``Z(G, q, w)``; accepts ``random_cluster(g, RCParams(q, w))`` or ``(g, q, w)``."""
    if isinstance(q, RCParams):
        q, w = q.q, q.w
    return eval_rc_polynomial(rc_polynomial(g, memo=memo, budget=budget), q, w)


def tutte_from_rc(g: Graph, x, y):
    """``T(G; x, y)`` through the random-cluster substitution (needs ``x, y != 1``)."""
    x, y = to_scalar(x), to_scalar(y)
    if x == 1 or y == 1:
        raise ValueError("the conversion is singular at x = 1 or y = 1")
    k_all = len(g.components())
    z = random_cluster(g, (x - 1) * (y - 1), y - 1)
    return z / ((x - 1) ** k_all * (y - 1) ** g.n)


def edge_probabilities(g: Graph, q, w, e: int):
    """``(P(e not in F), P(e in F))`` under the random-cluster measure."""
    p = RCParams(q, w)
    z = random_cluster(g, p)
    if z == 0:
        raise ZeroDivisionError("Z(G, q, w) vanished")
    out = random_cluster(minor(g, delete=[e]), p) / z
    inside = p.w * random_cluster(minor(g, contract=[e]), p) / z
    return out, inside


@dataclass
class FKGMargins:
    lhs: object
    rhs: object
    p_e: object
    p_f: object
    p_ef: object
    poscor_ok: bool
    correlation_ok: bool

    @property
    def ok(self) -> bool:
        return self.poscor_ok and self.correlation_ok

    @property
    def margin(self):
        return self.lhs - self.rhs


def fkg_check(g: Graph, q, w, e: int, f: int, slack: float = 1e-9) -> FKGMargins:
    """Both sides of ``Z(G-{e,f}) Z(G/{e,f}) >= Z((G-e)/f) Z((G/e)-f)`` and of
    ``P(e in F) P(f in F) <= P(e, f in F)``.

    Comparisons are exact for rational ``q, w``; floats get a relative slack.
    """
    if e == f:
        raise ValueError("fkg_check needs two distinct edges")
    p = RCParams(q, w)

    def Z(delete=(), contract=()):
        return random_cluster(minor(g, delete=delete, contract=contract), p)

    lhs = Z(delete=[e, f]) * Z(contract=[e, f])
    rhs = Z(delete=[e], contract=[f]) * Z(delete=[f], contract=[e])
    z = Z()
    if z == 0:
        raise ZeroDivisionError("Z(G, q, w) vanished")
    p_e = p.w * Z(contract=[e]) / z
    p_f = p.w * Z(contract=[f]) / z
    p_ef = p.w**2 * Z(contract=[e, f]) / z
    exact = isinstance(lhs, Fraction)

    def geq(a, b):
        if exact:
            return a >= b
        return a >= b - slack * max(abs(a), abs(b), 1.0)

    return FKGMargins(lhs, rhs, p_e, p_f, p_ef, geq(lhs, rhs), geq(p_ef, p_e * p_f))


def potts_sidorenko_bounds(g: Graph, q, w):
    """The two elementary lower bounds ``q^v (1 + w/q)^e`` and ``(1 + w)^e``."""
    q, w = to_scalar(q), to_scalar(w)
    return q**g.n * (1 + w / q) ** g.m, (1 + w) ** g.m

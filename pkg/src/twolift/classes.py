"""Sufficient conditions for a matrix to favour ``G u G`` or ``G x K2`` among 2-lifts.

``classify`` tests whether the antisymmetric part ``D1`` of the pair matrices
can be sign-switched to a non-negative (class A) or non-positive (class B)
matrix. Failing both tests only means this certificate is unavailable; it is
never a proof of non-membership.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .models import ModelError, SpinModel, pair_order, skew_tensor_square, tensor_square

FLOAT_ZERO_TOL = 1e-12

CLASS_A = "ClassA_certified"
CLASS_B = "ClassB_certified"
BOTH = "Both"
UNKNOWN = "Unknown"


def _minors(A):
    q = len(A)
    for i, j in itertools.combinations(range(q), 2):
        for r, s in itertools.combinations(range(q), 2):
            yield A[i][r] * A[j][s] - A[i][s] * A[j][r]


def _tol(A) -> float:
    if isinstance(A[0][0], Fraction):
        return 0
    scale = max(abs(x) for row in A for x in row) or 1.0
    return FLOAT_ZERO_TOL * scale * scale


def tp2_check(m) -> bool:
    """Every 2x2 minor (rows i<j, columns r<s) is non-negative."""
    A = m.A if isinstance(m, SpinModel) else m
    tol = _tol(A)
    return all(d >= -tol for d in _minors(A))


def tn2_check(m) -> bool:
    """Every 2x2 minor (rows i<j, columns r<s) is non-positive."""
    A = m.A if isinstance(m, SpinModel) else m
    tol = _tol(A)
    return all(d <= tol for d in _minors(A))


@dataclass(frozen=True)
class PairMatrices:
    q: int
    A_eq: tuple
    A_cross: tuple
    E: tuple
    D: tuple
    D1: tuple

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return pair_order(self.q)

    def _block(self, M, rows, cols):
        return tuple(tuple(M[r][c] for c in cols) for r in rows)

    @property
    def E0(self):
        d = range(self.q)
        return self._block(self.E, d, d)

    @property
    def E01(self):
        k = self.q * (self.q - 1) // 2
        return self._block(self.E, range(self.q), range(self.q, self.q + k))

    @property
    def E1(self):
        k = self.q * (self.q - 1) // 2
        up = range(self.q, self.q + k)
        return self._block(self.E, up, up)


def build_pair_matrices(m: SpinModel) -> PairMatrices:
    eq = tensor_square(m).A
    cross = skew_tensor_square(m).A
    half = Fraction(1, 2) if m.exact else 0.5
    size = len(eq)
    E = tuple(tuple(half * (eq[a][b] + cross[a][b]) for b in range(size)) for a in range(size))
    D = tuple(tuple(half * (eq[a][b] - cross[a][b]) for b in range(size)) for a in range(size))
    q = m.q
    k = q * (q - 1) // 2
    up = range(q, q + k)
    D1 = tuple(tuple(D[a][b] for b in up) for a in up)
    return PairMatrices(q, eq, cross, E, D, D1)


class ParityUnionFind:
    """Union-find that also tracks the parity of each element relative to its root."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.rank = [0] * n

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating parity from the top of the path down
        acc = 0
        for y in reversed(path):
            acc ^= self.parity[y]
            self.parity[y] = acc
            self.parent[y] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, a: int, b: int, odd: int) -> bool:
        """Require ``parity(a) xor parity(b) == odd``; False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == odd
        if self.rank[ra] < self.rank[rb]:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ odd
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def _sign(x, tol) -> int:
    if x > tol:
        return 1
    if x < -tol:
        return -1
    return 0


def switched(Dm, S):
    return [[S[i] * Dm[i][j] * S[j] for j in range(len(Dm))] for i in range(len(Dm))]


def _pattern_ok(M, direction, tol) -> bool:
    want = 1 if direction == "nonneg" else -1
    return all(_sign(x, tol) in (0, want) for row in M for x in row)


def sign_switchable(Dm: Sequence[Sequence], direction: str = "nonneg") -> Optional[tuple[int, ...]]:
    """A diagonal +-1 vector ``S`` with ``S Dm S`` entrywise non-negative
    (``direction="nonneg"``) or non-positive (``"nonpos"``), or ``None``.

    Nonzero off-diagonal entries become parity constraints ``s_i s_j = sign``;
    the system is solvable iff the signed graph they form is balanced.
    """
    if direction not in ("nonneg", "nonpos"):
        raise ValueError("direction must be 'nonneg' or 'nonpos'")
    n = len(Dm)
    if n == 0:
        return ()
    tol = _tol(Dm)
    want = 1 if direction == "nonneg" else -1
    for i in range(n):
        if _sign(Dm[i][i], tol) == -want:
            return None
    uf = ParityUnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            s = _sign(Dm[i][j], tol)
            if s and not uf.union(i, j, 0 if s * want == 1 else 1):
                return None
    S = tuple(-1 if uf.find(i)[1] else 1 for i in range(n))
    assert _pattern_ok(switched(Dm, S), direction, tol), "sign switching witness failed re-check"
    return S


def expand_certificate(q: int, S1: Sequence[int]) -> tuple[int, ...]:
    """Lift a reduced ``C(q,2)`` witness to the full ``q^2`` one (pair order):
    diagonal pairs get ``+1``, ``(i,j)`` keeps ``s``, ``(j,i)`` gets ``-s``."""
    return (1,) * q + tuple(S1) + tuple(-s for s in S1)


@dataclass(frozen=True)
class Classification:
    verdict: str
    certificate_nonneg: Optional[tuple[int, ...]]
    certificate_nonpos: Optional[tuple[int, ...]]
    tp2: bool
    tn2: bool
    D1: tuple

    @property
    def certificate(self) -> Optional[tuple[int, ...]]:
        if self.certificate_nonneg is not None:
            return self.certificate_nonneg
        return self.certificate_nonpos

    @property
    def certifies_union(self) -> bool:
        return self.verdict in (CLASS_A, BOTH)

    @property
    def certifies_cross(self) -> bool:
        return self.verdict in (CLASS_B, BOTH)


def classify(m: SpinModel) -> Classification:
    pm = build_pair_matrices(m)
    s_pos = sign_switchable(pm.D1, "nonneg")
    s_neg = sign_switchable(pm.D1, "nonpos")
    tol = _tol(pm.D) if pm.D else 0
    for S1, direction in ((s_pos, "nonneg"), (s_neg, "nonpos")):
        if S1 is not None:
            full = expand_certificate(m.q, S1)
            assert _pattern_ok(switched(pm.D, full), direction, tol), "expanded certificate failed"
    if s_pos is not None and s_neg is not None:
        verdict = BOTH
    elif s_pos is not None:
        verdict = CLASS_A
    elif s_neg is not None:
        verdict = CLASS_B
    else:
        verdict = UNKNOWN
    return Classification(verdict, s_pos, s_neg, tp2_check(m), tn2_check(m), pm.D1)


# -- staircase recognisers ----------------------------------------------------


@dataclass(frozen=True)
class Staircase:
    kind: str
    ordering: tuple[int, ...]
    weights: tuple[int, ...]  # indexed by original spin value
    alpha: int

    def realizes(self, A) -> bool:
        q = len(A)
        w, a = self.weights, self.alpha
        for i in range(q):
            for j in range(q):
                if self.kind == "loop_threshold":
                    edge = w[i] + w[j] <= a
                else:
                    edge = abs(w[i] - w[j]) <= a
                if edge != bool(A[i][j]):
                    return False
        return True


def _01(m) -> list[list[int]]:
    A = m.A if isinstance(m, SpinModel) else m
    if any(x not in (0, 1) for r in A for x in r):
        raise ModelError("staircase recognition needs a 0/1 matrix")
    return [[int(x) for x in r] for r in A]


def _loop_threshold(A) -> Optional[Staircase]:
    q = len(A)
    order = sorted(range(q), key=lambda i: -sum(A[i]))
    P = [[A[a][b] for b in order] for a in order]
    lengths = []
    for row in P:
        r = sum(row)
        if row != [1] * r + [0] * (q - r):
            return None
        lengths.append(r)
    # position p with row length r_p gets weight p - r_p; threshold -1 (shifted by q)
    weights = [0] * q
    for p, v in enumerate(order):
        weights[v] = p - lengths[p] + q
    return Staircase("loop_threshold", tuple(order), tuple(weights), 2 * q - 1)


def _proper_interval_order(A) -> Optional[list[int]]:
    q = len(A)
    if any(A[i][i] != 1 for i in range(q)):
        return None
    order: list[int] = []
    used = [False] * q

    def ok_with(k):
        # no i < j < k in the order with A[i][k] = 1 but A[i][j] = 0 or A[j][k] = 0
        for a in range(len(order)):
            i = order[a]
            if not A[i][k]:
                continue
            for b in range(a + 1, len(order)):
                j = order[b]
                if not (A[i][j] and A[j][k]):
                    return False
        return True

    def extend():
        if len(order) == q:
            return True
        for k in range(q):
            if not used[k] and ok_with(k):
                used[k] = True
                order.append(k)
                if extend():
                    return True
                order.pop()
                used[k] = False
        return False

    return order if extend() else None


def _difference_solution(q: int, constraints) -> Optional[list[int]]:
    """Integer ``x`` with ``x[b] - x[a] <= c`` for every ``(a, b, c)`` (Bellman-Ford)."""
    dist = [0] * q
    for _ in range(q + 1):
        changed = False
        for a, b, c in constraints:
            if dist[a] + c < dist[b]:
                dist[b] = dist[a] + c
                changed = True
        if not changed:
            low = min(dist)
            return [x - low for x in dist]
    return None


def _thick_path(A) -> Optional[Staircase]:
    q = len(A)
    order = _proper_interval_order(A)
    if order is None:
        return None
    for alpha in range(0, 2 * q * q + 1):
        cons = []
        for p in range(q):
            for s in range(p + 1, q):
                a, b = order[p], order[s]
                if A[a][b]:
                    cons.append((a, b, alpha))  # w_b - w_a <= alpha
                else:
                    cons.append((b, a, -alpha - 1))  # w_a - w_b <= -alpha-1
            if p + 1 < q:
                cons.append((order[p + 1], order[p], 0))  # w_p <= w_{p+1}
        w = _difference_solution(q, cons)
        if w is not None:
            return Staircase("thick_path", tuple(order), tuple(w), alpha)
    return None


def staircase_recognize(m, kind: str, max_q: int = 8) -> Optional[Staircase]:
    """Recognise a loop-threshold (``w_i + w_j <= alpha``) or thick-path
    (``|w_i - w_j| <= alpha``) 0/1 matrix and return integer weights for it.
    """
    A = _01(m)
    if len(A) > max_q:
        raise ValueError(f"staircase search is limited to q <= {max_q}")
    if kind == "loop_threshold":
        found = _loop_threshold(A)
    elif kind in ("thick_path", "thick-path"):
        found = _thick_path(A)
    else:
        raise ValueError(f"unknown staircase kind {kind!r}")
    if found is not None:
        assert found.realizes(A), "emitted staircase weights do not realise the matrix"
    return found


def reorder(A, order: Sequence[int]):
    return [[A[a][b] for b in order] for a in order]

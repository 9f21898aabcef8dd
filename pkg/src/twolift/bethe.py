"""Bethe free energy on the infinite d-regular tree.

Two routes to the same number are provided: the entropy functional of a
symmetric pair distribution ``h`` (:func:`phi_h`) and the belief-propagation
functional of a message distribution (:func:`phi_tilde`) evaluated at BP fixed
points. Closed forms for the hard-core and Ising models serve as references.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graph import Graph
from .models import SpinModel

NEG_INF = float("-inf")


class DegenerateInput(ValueError):
    pass


class NoFixedPoint(RuntimeError):
    """No BP run converged; the supremum over fixed points is undefined."""


def _arrays(m: SpinModel):
    A = np.array([[float(x) for x in r] for r in m.A])
    nu = np.array([float(x) for x in m.nu])
    return A, nu


def is_permissive(m: SpinModel) -> bool:
    return any(all(x > 0 for x in row) for row in m.A)


def entropy(p) -> float:
    p = np.asarray(p, dtype=float).ravel()
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum())


def kl_divergence(p, r) -> float:
    """``sum p ln(p / r)`` with ``0 ln 0 = 0``; ``inf`` if ``p`` charges a zero of ``r``."""
    p = np.asarray(p, dtype=float).ravel()
    r = np.asarray(r, dtype=float).ravel()
    mask = p > 0
    if np.any(r[mask] <= 0):
        return math.inf
    return float((p[mask] * np.log(p[mask] / r[mask])).sum())


# -- belief propagation --------------------------------------------------------


def bp_step(m: SpinModel, d: int, h_tilde) -> np.ndarray:
    """``BP h(i) ~ nu(i) (sum_j a_ij h(j))^(d-1)``, normalised."""
    if d < 2:
        raise ValueError("d must be at least 2")
    A, nu = _arrays(m)
    h = np.asarray(h_tilde, dtype=float)
    v = nu * (A @ h) ** (d - 1)
    z = v.sum()
    if not z > 0:
        raise DegenerateInput("BP image vanishes identically")
    return v / z


def phi_tilde(m: SpinModel, d: int, h_tilde) -> float:
    """``ln(sum_i nu_i (A h)_i^d) - (d/2) ln(h^T A h)``; ``-inf`` when ``h^T A h = 0``."""
    A, nu = _arrays(m)
    h = np.asarray(h_tilde, dtype=float)
    Ah = A @ h
    first = float((nu * Ah**d).sum())
    second = float(h @ Ah)
    if second <= 0 or first <= 0:
        return NEG_INF
    return math.log(first) - d / 2 * math.log(second)


def pair_from_marginal(m: SpinModel, h_tilde) -> tuple[np.ndarray, float]:
    """``h(i,j) = a_ij h(i) h(j) / S`` together with the normaliser ``S``."""
    A, _ = _arrays(m)
    h = np.asarray(h_tilde, dtype=float)
    P = A * np.outer(h, h)
    S = float(P.sum())
    if not S > 0:
        raise DegenerateInput("pair normaliser vanishes")
    return P / S, S


def phi_h(m: SpinModel, d: int, h) -> float:
    """Entropy functional of a symmetric pair distribution ``h``.

    ``sum hbar ln nu - (d-1) H(hbar) + (d/2)(H(h) + sum h ln a)``; a positive
    ``h(i,j)`` on a zero ``a_ij`` gives ``-inf``.
    """
    A, nu = _arrays(m)
    h = np.asarray(h, dtype=float)
    if np.any((h > 0) & (A <= 0)):
        return NEG_INF
    hbar = h.sum(axis=1)
    mask = h > 0
    energy = float((h[mask] * np.log(A[mask])).sum())
    return float(hbar @ np.log(nu)) - (d - 1) * entropy(hbar) + d / 2 * (entropy(h) + energy)


@dataclass
class BetheSolution:
    h_tilde: np.ndarray
    h: np.ndarray
    value: float
    value_h: float
    iterations: int
    residual: float

    def to_json(self) -> dict:
        return {
            "h_tilde": [float(f"{x:.17g}") for x in self.h_tilde],
            "value": float(f"{self.value:.17g}"),
            "value_pair": float(f"{self.value_h:.17g}"),
            "iterations": self.iterations,
            "residual": self.residual,
        }


@dataclass
class BPSearch:
    solutions: list[BetheSolution]
    runs: int
    converged: int
    warnings: list[str] = field(default_factory=list)

    @property
    def best(self) -> BetheSolution:
        return self.solutions[0]

    @property
    def value(self) -> float:
        return self.solutions[0].value


def solve_bp(
    m: SpinModel,
    d: int,
    restarts: int = 50,
    seed: int = 0,
    tol: float = 1e-12,
    max_iter: int = 10**5,
    damping: float = 0.5,
    dedup: float = 1e-8,
) -> BPSearch:
    """Damped BP from the uniform start plus ``restarts - 1`` Dirichlet starts.

    Starting points come from ``numpy.random.default_rng(seed)`` (PCG64).
    Converged fixed points closer than ``dedup`` in max-norm are merged; the
    rest are sorted by value (largest first), then lexicographically.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    notes = []
    if not is_permissive(m):
        msg = "model is not permissive; BP dynamics may degenerate"
        warnings.warn(msg)
        notes.append(msg)
    rng = np.random.default_rng(seed)
    q = m.q
    starts = [np.full(q, 1.0 / q)] + [rng.dirichlet(np.ones(q)) for _ in range(restarts - 1)]
    found: list[BetheSolution] = []
    converged = 0
    for h in starts:
        residual = math.inf
        it = 0
        try:
            for it in range(1, max_iter + 1):
                nxt = bp_step(m, d, h)
                residual = float(np.max(np.abs(nxt - h)))
                if residual <= tol:
                    h = nxt
                    break
                h = damping * h + (1 - damping) * nxt
        except DegenerateInput:
            continue
        if residual > tol:
            continue
        converged += 1
        if any(np.max(np.abs(s.h_tilde - h)) < dedup for s in found):
            continue
        pair, _ = pair_from_marginal(m, h)
        found.append(BetheSolution(h, pair, phi_tilde(m, d, h), phi_h(m, d, pair), it, residual))
    if not found:
        raise NoFixedPoint(f"none of {restarts} BP runs converged to tol={tol}")
    found.sort(key=lambda s: (-s.value, tuple(s.h_tilde)))
    return BPSearch(found, restarts, converged, notes)


# -- Sidorenko bound -----------------------------------------------------------


def sidorenko_bound(m: SpinModel, d: int) -> float:
    A, nu = _arrays(m)
    total = nu.sum()
    return math.log(total) + d / 2 * math.log(float(nu @ A @ nu) / total**2)


def sidorenko_pair(m: SpinModel) -> np.ndarray:
    """``h(i,j) = nu_i nu_j a_ij / S``, the pair distribution behind the bound."""
    A, nu = _arrays(m)
    P = A * np.outer(nu, nu)
    return P / P.sum()


# -- hard-core model -------------------------------------------------------------


def hardcore_residual(alpha: float, lam: float, d: int) -> float:
    return alpha / (lam * (1 - alpha)) - ((1 - 2 * alpha) / (1 - alpha)) ** d


def hardcore_alpha(lam: float, d: int) -> float:
    """Root in ``[0, 1/2)`` of ``alpha / (lam (1 - alpha)) = ((1 - 2 alpha)/(1 - alpha))^d``."""
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    if lam == 0:
        return 0.0
    lo, hi = 0.0, 0.5
    # residual is increasing: -1 at 0, 1/lam at 1/2
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        f = hardcore_residual(mid, lam, d)
        if f == 0:
            return mid
        if f < 0:
            lo = mid
        else:
            hi = mid
    return min((lo, hi), key=lambda a: abs(hardcore_residual(a, lam, d)))


def hardcore_phi_forms(lam: float, d: int) -> tuple[float, float]:
    """The two closed forms of the hard-core tree value at the root ``alpha``."""
    if lam == 0:
        return 0.0, 0.0
    a = hardcore_alpha(lam, d)
    first = 0.5 * math.log(lam * (1 - a) ** (d - 1) / a)
    second = 0.5 * math.log((1 - a) ** (2 * (d - 1)) / (1 - 2 * a) ** d)
    return first, second


def hardcore_phi(lam: float, d: int) -> float:
    return hardcore_phi_forms(lam, d)[0]


def hardcore_uniqueness_threshold(d: int) -> float:
    return (d - 1) ** (d - 1) / (d - 2) ** d


# -- Ising model -------------------------------------------------------------------


def _ising_map(h: float, B: float, theta: float, d: int) -> float:
    return B + (d - 1) * math.atanh(theta * math.tanh(h)) - h


def ising_hstar(beta: float, B: float, d: int, grid: int = 10**4, tol: float = 1e-12) -> float:
    """Largest solution of ``h = B + (d-1) atanh(tanh(beta) tanh(h))``.

    All solutions lie within ``(d-1) atanh|theta|`` of ``B``; that interval is
    cut into ``grid`` brackets, scanned from the top for the first sign change,
    and the bracket is bisected.
    """
    theta = math.tanh(beta)
    if abs(theta) >= 1:
        raise ValueError("tanh(beta) must lie in (-1, 1)")
    if theta == 0:
        return float(B)
    reach = (d - 1) * math.atanh(abs(theta))
    pts = np.linspace(B - reach, B + reach, grid + 1)
    vals = [_ising_map(float(x), B, theta, d) for x in pts]
    for k in range(grid, 0, -1):
        hi, lo = float(pts[k]), float(pts[k - 1])
        fhi, flo = vals[k], vals[k - 1]
        if fhi == 0:
            return hi
        if flo == 0:
            return lo
        if (flo > 0) != (fhi > 0):
            while hi - lo > tol:
                mid = (lo + hi) / 2
                fm = _ising_map(mid, B, theta, d)
                if fm == 0:
                    return mid
                if (fm > 0) == (flo > 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            return (lo + hi) / 2
    raise RuntimeError("no fixed point bracketed")  # unreachable: map changes sign on the interval


def ising_phi_at(beta: float, B: float, d: int, h: float) -> float:
    theta = math.tanh(beta)
    t = math.tanh(h)
    return d / 2 * (-0.5 * math.log(1 - theta**2) - math.log(1 + theta * t * t)) + math.log(
        math.exp(B) * (1 + theta * t) ** d + math.exp(-B) * (1 - theta * t) ** d
    )


def ising_phi(beta: float, B: float, d: int) -> float:
    """Tree value at the largest fixed point; a negative field is first flipped
    (spin symmetry), since there the largest root is the misaligned state."""
    if B < 0:
        B = -B
    return ising_phi_at(beta, B, d, ising_hstar(beta, B, d))


# -- Bethe functional on a finite graph ---------------------------------------------


@dataclass
class LocalMarginals:
    vertex: list  # per vertex, length-q probability vector
    edge: list  # per edge index, q x q joint with rows indexed by the first endpoint

    @classmethod
    def translation_invariant(cls, g: Graph, h) -> "LocalMarginals":
        h = np.asarray(h, dtype=float)
        hbar = h.sum(axis=1)
        return cls([hbar.copy() for _ in range(g.n)], [h.copy() for _ in range(g.m)])

    @classmethod
    def product(cls, g: Graph, vertex) -> "LocalMarginals":
        vertex = [np.asarray(p, dtype=float) for p in vertex]
        return cls(vertex, [np.outer(vertex[u], vertex[v]) for u, v in g.edges])


def _check_marginals(g: Graph, tau: LocalMarginals, q: int, tol: float):
    if len(tau.vertex) != g.n or len(tau.edge) != g.m:
        raise ValueError("marginals do not match the graph's vertex/edge counts")
    for u, p in enumerate(tau.vertex):
        p = np.asarray(p, dtype=float)
        if p.shape != (q,) or np.any(p < -tol) or abs(p.sum() - 1) > tol:
            raise ValueError(f"vertex {u}: not a probability vector on {q} values")
    for e, (u, v) in enumerate(g.edges):
        t = np.asarray(tau.edge[e], dtype=float)
        if t.shape != (q, q) or np.any(t < -tol):
            raise ValueError(f"edge {e} ({u}, {v}): not a non-negative {q}x{q} table")
        if np.max(np.abs(t.sum(axis=1) - tau.vertex[u])) > tol or np.max(
            np.abs(t.sum(axis=0) - tau.vertex[v])
        ) > tol:
            raise ValueError(f"edge {e} ({u}, {v}): marginals inconsistent with vertex distributions")


def vontobel_eval(g: Graph, tau: LocalMarginals, m: SpinModel, tol: float = 1e-10) -> float:
    """Bethe functional ``(U - H) / v`` at given local marginals (no optimisation)."""
    if g.n == 0:
        raise ValueError("empty graph")
    A, nu = _arrays(m)
    _check_marginals(g, tau, m.q, tol)
    U = 0.0
    H = 0.0
    for p in tau.vertex:
        p = np.asarray(p, dtype=float)
        U += float(p @ np.log(nu))
        H -= entropy(p)
    for e, (u, v) in enumerate(g.edges):
        t = np.asarray(tau.edge[e], dtype=float)
        mask = t > 0
        if np.any(A[mask] <= 0):
            return NEG_INF
        U += float((t[mask] * np.log(A[mask])).sum())
        outer = np.outer(tau.vertex[u], tau.vertex[v])
        H += float((t[mask] * np.log(t[mask] / outer[mask])).sum())
    return (U - H) / g.n

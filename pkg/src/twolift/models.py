"""Spin models ``(A, nu)`` and the matrix constructions built from them.

Entries are either exact (``fractions.Fraction``) or ``float``. A model is one
or the other throughout; mixing raises instead of silently rounding. Call
:meth:`SpinModel.to_float` to promote deliberately.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence

from .graph import CapExceeded, Graph


class ModelError(ValueError):
    pass


def to_scalar(x):
    """Exact where the input is exact, ``float`` otherwise.

    Strings are read as decimals/fractions (``"0.2"`` -> ``1/5``) and fall back
    to ``float`` only when they are not rational literals.
    """
    if isinstance(x, bool):
        raise ModelError("booleans are not model entries")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            try:
                return float(x)
            except ValueError:
                raise ModelError(f"cannot parse entry {x!r}") from None
    try:
        return float(x)
    except (TypeError, ValueError):
        raise ModelError(f"unsupported entry type {type(x).__name__}") from None


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def format_scalar(x):
    """JSON-facing form: exact values as ``"num/den"`` strings, floats unchanged."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, int):
        return str(x)
    return float(f"{x:.17g}")


@dataclass(frozen=True)
class SpinModel:
    A: tuple[tuple, ...]
    nu: tuple = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in self.A)
        q = len(rows)
        if q == 0:
            raise ModelError("model needs at least one spin value")
        if any(len(r) != q for r in rows):
            raise ModelError("A must be square")
        nu = (1,) * q if self.nu is None else self.nu
        nu = tuple(to_scalar(x) for x in nu)
        if len(nu) != q:
            raise ModelError(f"nu has length {len(nu)}, expected {q}")
        kinds = {is_exact(x) for r in rows for x in r} | {is_exact(x) for x in nu}
        if len(kinds) > 1:
            raise ModelError("model mixes exact and float entries; use to_float() to promote")
        for i in range(q):
            for j in range(q):
                if rows[i][j] < 0:
                    raise ModelError(f"negative entry A[{i}][{j}]")
                if rows[i][j] != rows[j][i]:
                    raise ModelError(f"A is not symmetric at ({i}, {j})")
        if any(not (x > 0) for x in nu):
            raise ModelError("vertex weights must be positive")
        object.__setattr__(self, "A", rows)
        object.__setattr__(self, "nu", nu)

    @property
    def q(self) -> int:
        return len(self.A)

    @property
    def exact(self) -> bool:
        return is_exact(self.A[0][0])

    @property
    def unweighted(self) -> bool:
        return all(x == 1 for x in self.nu)

    def to_float(self) -> "SpinModel":
        return SpinModel(
            tuple(tuple(float(x) for x in r) for r in self.A),
            tuple(float(x) for x in self.nu),
            self.name,
        )

    def with_nu(self, nu) -> "SpinModel":
        return SpinModel(self.A, tuple(nu), self.name)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "A": [[format_scalar(x) for x in r] for r in self.A],
            "nu": [format_scalar(x) for x in self.nu],
        }


def model_from_json(obj) -> SpinModel:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        A = obj["A"]
        q = int(obj.get("q", len(A)))
        nu = obj.get("nu")
    except (KeyError, TypeError, AttributeError) as exc:
        raise ModelError(f"bad model JSON: {exc}") from None
    if len(A) != q:
        raise ModelError(f"q={q} but A has {len(A)} rows")
    model = SpinModel(tuple(tuple(r) for r in A), None if nu is None else tuple(nu), obj.get("name", ""))
    return model


def load_model(path: str) -> SpinModel:
    with open(path) as fh:
        return model_from_json(json.load(fh))


# -- named instances ---------------------------------------------------------

A_THR = (
    (1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 0),
    (1, 1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0, 0),
    (1, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
)

A_THICK_PATH = (
    (1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0, 0),
    (1, 1, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 0),
    (0, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 1, 1),
)


def hardcore(lam=1) -> SpinModel:
    """Independent sets weighted by ``lam`` per occupied vertex; a float ``lam`` gives a float model."""
    lam = to_scalar(lam)
    one = 1.0 if isinstance(lam, float) else 1
    return SpinModel(((one, one), (one, 0 * one)), (one, lam), f"ind(lam={lam})")


def widom_rowlinson() -> SpinModel:
    return SpinModel(((1, 1, 0), (1, 1, 1), (0, 1, 1)), None, "wr")


def ising(beta: float, B: float = 0.0) -> SpinModel:
    """Ising interaction with external field; spin ``+1`` is index 0."""
    a, b = math.exp(beta), math.exp(-beta)
    return SpinModel(((a, b), (b, a)), (math.exp(B), math.exp(-B)), f"ising(beta={beta},B={B})")


def potts(q: int, w=1) -> SpinModel:
    """``J + w I`` of size ``q``: the matrix form of the random-cluster model."""
    if isinstance(q, float) and q.is_integer():
        q = int(q)
    if not isinstance(q, int) or q < 1:
        raise ModelError("the matrix form of potts needs an integer q >= 1")
    w = to_scalar(w)
    if w < 0:
        raise ModelError("potts needs w >= 0")
    one = 1.0 if isinstance(w, float) else Fraction(1)
    A = tuple(tuple(one + w if i == j else one for j in range(q)) for i in range(q))
    return SpinModel(A, (one,) * q, f"potts(q={q},w={w})")


def coloring(q: int) -> SpinModel:
    """Adjacency matrix of ``K_q``; ``Z(G, .)`` counts proper q-colourings."""
    return SpinModel(tuple(tuple(int(i != j) for j in range(q)) for i in range(q)), None, f"K{q}")


def adjacency_model(g: Graph) -> SpinModel:
    """0/1 matrix of a target graph (parallel edges collapse, a loop gives 1)."""
    A = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        A[u][v] = A[v][u] = 1
    return SpinModel(tuple(tuple(r) for r in A), None, "adj")


def named_model(name: str, **params) -> SpinModel:
    """Look up ``ind``, ``wr``, ``ising``, ``potts``, ``coloring``, ``thr`` or ``thick_path``."""
    key = name.lower()
    try:
        if key in ("ind", "hardcore"):
            return hardcore(params.get("lam", 1))
        if key == "wr":
            return widom_rowlinson()
        if key == "ising":
            return ising(float(params.get("beta", 0.0)), float(params.get("B", 0.0)))
        if key == "potts":
            return potts(params["q"], params.get("w", 1))
        if key == "coloring":
            return coloring(int(params["q"]))
        if key == "thr":
            return SpinModel(A_THR, None, "thr")
        if key in ("thick_path", "thick-path"):
            return SpinModel(A_THICK_PATH, None, "thick_path")
    except KeyError as exc:
        raise ModelError(f"model {name!r} needs parameter {exc}") from None
    raise ModelError(f"unknown model {name!r}")


# -- constructions -----------------------------------------------------------


def pair_order(q: int) -> list[tuple[int, int]]:
    """Row order for q^2-sized pair matrices: ``(i,i)``, then ``(i,j)`` with i<j, then ``(j,i)``."""
    upper = list(itertools.combinations(range(q), 2))
    return [(i, i) for i in range(q)] + upper + [(j, i) for i, j in upper]


def blow_up(m: SpinModel, weights: Optional[Sequence[int]] = None) -> SpinModel:
    """Replace ``a_ij`` by a constant ``w_i x w_j`` block; the result is unweighted."""
    weights = m.nu if weights is None else weights
    ws = []
    for x in weights:
        if isinstance(x, float) and x.is_integer():
            x = int(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            x = int(x)
        if not isinstance(x, int) or x < 1:
            raise ModelError("blow_up needs positive integer weights")
        ws.append(x)
    if len(ws) != m.q:
        raise ModelError("one weight per spin value")
    index = [i for i, w in enumerate(ws) for _ in range(w)]
    A = tuple(tuple(m.A[i][j] for j in index) for i in index)
    one = Fraction(1) if m.exact else 1.0
    return SpinModel(A, (one,) * len(index), f"blowup({m.name})")


def tensor(m1: SpinModel, m2: SpinModel) -> SpinModel:
    """Kronecker product; index ``(i, j)`` is ``i * m2.q + j``."""
    q2 = m2.q
    idx = [(i, j) for i in range(m1.q) for j in range(q2)]
    A = tuple(tuple(m1.A[i][k] * m2.A[j][l] for k, l in idx) for i, j in idx)
    nu = tuple(m1.nu[i] * m2.nu[j] for i, j in idx)
    return SpinModel(A, nu, f"({m1.name})x({m2.name})")


def tensor_square(m: SpinModel) -> SpinModel:
    """``A=((i,j),(k,l)) = A(i,k) A(j,l)`` in :func:`pair_order`."""
    P = pair_order(m.q)
    A = tuple(tuple(m.A[i][k] * m.A[j][l] for k, l in P) for i, j in P)
    return SpinModel(A, tuple(m.nu[i] * m.nu[j] for i, j in P), f"eq({m.name})")


def skew_tensor_square(m: SpinModel) -> SpinModel:
    """``Ax((i,j),(k,l)) = A(i,l) A(j,k)`` in :func:`pair_order`."""
    P = pair_order(m.q)
    A = tuple(tuple(m.A[i][l] * m.A[j][k] for k, l in P) for i, j in P)
    return SpinModel(A, tuple(m.nu[i] * m.nu[j] for i, j in P), f"cross({m.name})")


def square(m: SpinModel) -> SpinModel:
    """``A diag(nu) A`` with the same ``nu``.

    For unit weights this is the plain matrix square; with weights it is what
    the subdivision identity needs, since each subdividing vertex carries a
    weight of its own.
    """
    q = m.q
    A = tuple(
        tuple(sum(m.A[i][k] * m.nu[k] * m.A[k][j] for k in range(q)) for j in range(q))
        for i in range(q)
    )
    return SpinModel(A, m.nu, f"sq({m.name})")


def _require_01(m: SpinModel, what: str):
    if any(x not in (0, 1) for r in m.A for x in r):
        raise ModelError(f"{what} needs a 0/1 matrix")


def exponentiation(h: SpinModel, g: Graph, cap: int = 4096) -> SpinModel:
    """``H^G`` on all maps ``f: V(G) -> [q]``.

    ``f ~ f'`` iff ``A(f(u), f'(v)) = A(f(v), f'(u)) = 1`` for every edge ``uv``
    of ``G``. Maps are listed in ``itertools.product`` order.
    """
    _require_01(h, "exponentiation")
    size = h.q**g.n
    if size > cap:
        raise CapExceeded(f"H^G would have {size} vertices (cap {cap})", required=size, cap=cap)
    maps = list(itertools.product(range(h.q), repeat=g.n))
    A = h.A

    def adjacent(f, f2):
        return all(A[f[u]][f2[v]] and A[f[v]][f2[u]] for u, v in g.edges)

    rows = tuple(tuple(int(adjacent(f, f2)) for f2 in maps) for f in maps)
    return SpinModel(rows, None, f"({h.name})^G")


def loop_restrict(h: SpinModel) -> SpinModel:
    """Sub-matrix on the indices carrying a loop (``A(i,i) = 1``)."""
    _require_01(h, "loop_restrict")
    keep = [i for i in range(h.q) if h.A[i][i] == 1]
    if not keep:
        raise ModelError("no looped vertex to keep")
    return SpinModel(
        tuple(tuple(h.A[i][j] for j in keep) for i in keep),
        tuple(h.nu[i] for i in keep),
        f"loops({h.name})",
    )


def permutation_equivalent(m1: SpinModel, m2: SpinModel) -> Optional[tuple[int, ...]]:
    """A permutation ``p`` with ``m2.A[p[i]][p[j]] == m1.A[i][j]``, if one exists."""
    if m1.q != m2.q:
        return None
    q = m1.q
    for p in itertools.permutations(range(q)):
        if all(m1.nu[i] == m2.nu[p[i]] for i in range(q)) and all(
            m1.A[i][j] == m2.A[p[i]][p[j]] for i in range(q) for j in range(q)
        ):
            return p
    return None

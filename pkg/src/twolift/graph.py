"""Finite undirected multigraphs, 2-lifts, k-lifts and graph transforms.

Vertices are ``0..n-1``. Edges are kept in a tuple so that every edge has a
stable index; loops ``(u, u)`` and repeated pairs are allowed because
deletion-contraction produces them.

A 2-lift is encoded by a :class:`Signing`: one sign per base edge. Vertex
``(u, i)`` of a lift is stored as ``u + i * n``.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

DEFAULT_SIGNING_CAP = 2**24


class GraphParseError(ValueError):
    """Raised on malformed edge-list or JSON graph input."""


class CapExceeded(RuntimeError):
    """Raised when an exhaustive computation would exceed its configured cap."""

    def __init__(self, message: str, required: int | float, cap: int | float):
        super().__init__(message)
        self.required = required
        self.cap = cap


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of ``(neighbour, edge_index)``; a loop appears once."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            if u != v:
                adj[v].append((u, e))
        return adj

    def is_regular(self, d: Optional[int] = None) -> bool:
        deg = self.degrees()
        if not deg:
            return True
        if d is None:
            d = deg[0]
        return all(x == d for x in deg)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted((min(u, v), max(u, v)) for u, v in self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``u`` renamed ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabel needs a permutation of the vertex set")
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y, _ in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}


@dataclass(frozen=True)
class Signing:
    base: Graph
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if len(signs) != self.base.m:
            raise ValueError(f"signing has {len(signs)} signs for {self.base.m} edges")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def constant(cls, base: Graph, sign: int) -> "Signing":
        return cls(base, (sign,) * base.m)

    def index(self) -> int:
        """Position of this signing in :func:`enumerate_signings` order."""
        t = 0
        for s in self.signs:
            t = 2 * t + (1 if s == -1 else 0)
        return t

    def __str__(self) -> str:
        return "".join("+" if s == 1 else "-" for s in self.signs)


# -- parsing -----------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` edge-list format.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphParseError("empty graph file: missing 'n m' header")

    def ints(lineno, line):
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}") from None
        return a, b

    lineno, header = rows[0]
    n, m = ints(lineno, header)
    if n < 0 or m < 0:
        raise GraphParseError(f"line {lineno}: negative vertex or edge count")
    body = rows[1:]
    if len(body) != m:
        raise GraphParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, line in body:
        u, v = ints(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        edges.append((u, v))
    return Graph(n, tuple(edges))


def graph_from_json(obj) -> Graph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphParseError(f"bad JSON graph: {exc}") from None
    if n < 0:
        raise GraphParseError("negative vertex count")
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge {i}: endpoint out of range 0..{n - 1}")
    return Graph(n, tuple(edges))


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_graph(text)


# -- structure ---------------------------------------------------------------


def _bfs_cycle_scan(g: Graph):
    """Yield, per root, the shortest cycle length found by BFS from that root.

    A root lying on a shortest cycle of ``g`` reports exactly the girth; other
    roots report something no smaller.
    """
    adj = g.adjacency()
    inf = float("inf")
    for root in range(g.n):
        dist = [-1] * g.n
        parent_edge = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        best = inf
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y, e in adj[x]:
                if e == parent_edge[x]:
                    continue
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent_edge[y] = e
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
        yield best


def girth(g: Graph) -> float:
    """Shortest cycle length; a loop counts 1, a parallel pair 2, forests give inf."""
    return min(_bfs_cycle_scan(g), default=float("inf"))


def girth_profile(g: Graph) -> tuple[float, int]:
    """Girth together with the number of vertices lying on a shortest cycle."""
    per_root = list(_bfs_cycle_scan(g))
    gi = min(per_root, default=float("inf"))
    if gi == float("inf"):
        return gi, 0
    return gi, sum(1 for x in per_root if x == gi)


def is_bipartite(g: Graph) -> Optional[tuple[int, ...]]:
    """Return a 0/1 side per vertex, or ``None`` when an odd cycle (or loop) exists."""
    side = [-1] * g.n
    adj = g.adjacency()
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return tuple(side)


# -- lifts -------------------------------------------------------------------


def apply_lift(signing: Signing) -> Graph:
    """Build the 2-lift: a ``+1`` edge stays in its layer, a ``-1`` edge crosses.

    Base edge ``e`` becomes lift edges ``2e`` and ``2e + 1``.
    """
    g = signing.base
    n = g.n
    edges = []
    for (u, v), s in zip(g.edges, signing.signs):
        if s == 1:
            edges.append((u, v))
            edges.append((u + n, v + n))
        else:
            edges.append((u, v + n))
            edges.append((u + n, v))
    return Graph(2 * n, tuple(edges))


def k_lift(g: Graph, perms: Sequence[Sequence[int]], k: int) -> Graph:
    """k-fold cover: edge ``e = (u, v)`` becomes ``((u, i), (v, perms[e][i]))``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(perms) != g.m:
        raise ValueError(f"need one permutation per edge ({g.m}), got {len(perms)}")
    n = g.n
    edges = []
    for (u, v), pi in zip(g.edges, perms):
        if sorted(pi) != list(range(k)):
            raise ValueError(f"{pi!r} is not a permutation of 0..{k - 1}")
        for i in range(k):
            edges.append((u + i * n, v + pi[i] * n))
    return Graph(k * n, tuple(edges))


def signing_to_perms(signing: Signing) -> list[tuple[int, int]]:
    return [(0, 1) if s == 1 else (1, 0) for s in signing.signs]


def signing_from_index(g: Graph, t: int) -> Signing:
    m = g.m
    if not 0 <= t < 2**m:
        raise ValueError(f"signing index {t} out of range for {m} edges")
    return Signing(g, tuple(-1 if (t >> (m - 1 - e)) & 1 else 1 for e in range(m)))


def enumerate_signings(
    g: Graph, cap: int = DEFAULT_SIGNING_CAP, start: int = 0, stop: Optional[int] = None
) -> Iterator[Signing]:
    """All ``2**m`` signings in lexicographic order with ``+1`` before ``-1``.

    ``start``/``stop`` select a contiguous range of that order so that callers
    can split the work and merge results back in order.
    """
    total = 2**g.m
    if total > cap:
        raise CapExceeded(
            f"{total} signings exceed the cap of {cap}; raise the cap to at least {total}",
            required=total,
            cap=cap,
        )
    stop = total if stop is None else min(stop, total)
    for t in range(start, stop):
        yield signing_from_index(g, t)


def random_signing(g: Graph, rng: random.Random) -> Signing:
    return Signing(g, tuple(rng.choice((1, -1)) for _ in range(g.m)))


@dataclass
class BoostResult:
    graphs: list[Graph]
    girths: list[float]
    reached: bool
    exhaustive_steps: list[bool]

    @property
    def status(self) -> str:
        return "reached" if self.reached else "budget-exhausted"


def girth_boost(
    g: Graph,
    target: int,
    budget: int = 64,
    seed: int = 0,
    exhaustive_cap: int = 2**12,
) -> BoostResult:
    """Iterate 2-lifts, each chosen to push the girth up, until ``target`` is met.

    Each round scans every signing when ``2**m <= exhaustive_cap`` and otherwise
    ``budget`` signings drawn from ``random.Random(seed)``. Candidates are ranked
    by girth, then by fewer vertices on a shortest cycle; ties keep the earliest
    candidate. At most ``budget`` rounds are taken.
    """
    if not g.is_connected():
        raise ValueError("girth_boost expects a connected base graph")
    rng = random.Random(seed)
    graphs = [g]
    girths = [girth(g)]
    exhaustive_steps: list[bool] = []
    current = g
    rounds = 0
    while girths[-1] < target and rounds < budget:
        rounds += 1
        exhaustive = 2**current.m <= exhaustive_cap
        if exhaustive:
            candidates = enumerate_signings(current, cap=exhaustive_cap)
        else:
            candidates = (random_signing(current, rng) for _ in range(budget))
        best_key, best_graph = None, None
        for s in candidates:
            h = apply_lift(s)
            gi, on_short = girth_profile(h)
            key = (gi, -on_short)
            if best_key is None or key > best_key:
                best_key, best_graph = key, h
        current = best_graph
        graphs.append(current)
        girths.append(best_key[0])
        exhaustive_steps.append(exhaustive)
    return BoostResult(graphs, girths, girths[-1] >= target, exhaustive_steps)


# -- transforms --------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + off, v + off) for u, v in h.edges))


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Categorical product; vertex ``(u, v)`` is ``u * h.n + v``.

    Its adjacency matrix (loops counted once on the diagonal) is the Kronecker
    product of the factors' adjacency matrices.
    """
    nh = h.n
    edges = []
    for u, u2 in g.edges:
        for v, v2 in h.edges:
            edges.append((u * nh + v, u2 * nh + v2))
            if u != u2 and v != v2:
                edges.append((u * nh + v2, u2 * nh + v))
    return Graph(g.n * nh, tuple(edges))


def times_k2(g: Graph) -> Graph:
    return tensor_product(g, Graph(2, ((0, 1),)))


def add_loops(g: Graph) -> Graph:
    return Graph(g.n, g.edges + tuple((u, u) for u in range(g.n)))


def subdivision(g: Graph) -> Graph:
    """Replace edge ``e = (u, v)`` by the path ``u - (n + e) - v``."""
    edges = []
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + e))
        edges.append((g.n + e, v))
    return Graph(g.n + g.m, tuple(edges))


def minor(g: Graph, delete=(), contract=()) -> Graph:
    """Delete the edges in ``delete`` and contract those in ``contract``.

    Contracting a loop is the same as deleting it. Surviving vertex classes are
    numbered in order of their smallest original vertex; surviving edges keep
    their relative order.
    """
    delete, contract = set(delete), set(contract)
    if delete & contract:
        raise ValueError("an edge cannot be both deleted and contracted")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in contract:
        u, v = g.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    label: dict[int, int] = {}
    for x in range(g.n):
        r = find(x)
        if r not in label:
            label[r] = len(label)
    edges = tuple(
        (label[find(u)], label[find(v)])
        for e, (u, v) in enumerate(g.edges)
        if e not in delete and e not in contract
    )
    return Graph(len(label), edges)

"""Named graphs and seeded random regular generators used as fixtures.

Random generators take a ``seed`` and use ``random.Random`` (Mersenne Twister),
whose output for a given seed is fixed across platforms and Python versions.
"""

from __future__ import annotations

import itertools
import random

from .graph import Graph


def empty(n: int) -> Graph:
    return Graph(n, ())


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("simple cycles need n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def heawood() -> Graph:
    """Incidence graph of the Fano plane (3-regular, bipartite, girth 6)."""
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    return Graph(14, tuple((p, 7 + li) for li, line in enumerate(lines) for p in line))


def named_graphs() -> dict[str, Graph]:
    graphs = {
        "K2": complete(2),
        "K3": complete(3),
        "K4": complete(4),
        "K5": complete(5),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "C8": cycle(8),
        "Petersen": petersen(),
        "Heawood": heawood(),
    }
    for d in range(1, 5):
        graphs[f"K{d},{d}"] = complete_bipartite(d, d)
    for n in range(2, 7):
        graphs[f"P{n}"] = path(n)
    return graphs


def get_graph(name: str) -> Graph:
    graphs = named_graphs()
    if name in graphs:
        return graphs[name]
    key = name.replace("_", "").replace("{", "").replace("}", "")
    for k, g in graphs.items():
        if k.replace(",", "").lower() == key.replace(",", "").lower():
            return g
    raise KeyError(f"no catalog graph named {name!r}")


def random_regular(d: int, n: int, seed: int = 0, max_tries: int = 10**5) -> Graph:
    """Uniform simple d-regular graph by the configuration model with rejection."""
    if (n * d) % 2 or not 0 <= d < n:
        raise ValueError("need n*d even and 0 <= d < n")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = [(min(a, b), max(a, b)) for a, b in zip(stubs[::2], stubs[1::2])]
        if all(a != b for a, b in pairs) and len(set(pairs)) == len(pairs):
            return Graph(n, tuple(sorted(pairs)))
    raise RuntimeError(f"no simple {d}-regular graph on {n} vertices after {max_tries} tries")


def random_bipartite_regular(d: int, n: int, seed: int = 0, max_tries: int = 10**5) -> Graph:
    """Simple d-regular bipartite graph with ``n`` vertices per side (left ``0..n-1``)."""
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n")
    rng = random.Random(seed)
    right = [v for v in range(n) for _ in range(d)]
    left = [u for u in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(right)
        pairs = [(u, n + v) for u, v in zip(left, right)]
        if len(set(pairs)) == len(pairs):
            return Graph(2 * n, tuple(sorted(pairs)))
    raise RuntimeError(f"no simple bipartite {d}-regular graph after {max_tries} tries")


def random_multigraph(rng: random.Random, max_n: int = 6, max_m: int = 8, min_m: int = 2) -> Graph:
    """Small multigraph with loops and parallel edges allowed."""
    n = rng.randint(1, max_n)
    m = rng.randint(min_m, max_m)
    return Graph(n, tuple((rng.randrange(n), rng.randrange(n)) for _ in range(m)))

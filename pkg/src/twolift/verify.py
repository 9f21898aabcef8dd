"""Certification harness: exhaustive or sampled 2-lift scans for every inequality
the library checks, plus identity and bound suites. Each suite returns report
objects whose ``ok`` flag is False exactly when a violation was observed.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import catalog as cat
from .classes import classify
from .graph import (
    CapExceeded,
    Graph,
    Signing,
    apply_lift,
    add_loops,
    disjoint_union,
    enumerate_signings,
    girth,
    is_bipartite,
    k_lift,
    random_signing,
    signing_from_index,
    subdivision,
    tensor_product,
    times_k2,
)
from .models import (
    SpinModel,
    blow_up,
    coloring,
    exponentiation,
    format_scalar,
    hardcore,
    ising,
    loop_restrict,
    named_model,
    permutation_equivalent,
    potts,
    square,
    tensor,
    widom_rowlinson,
)
from .partition import (
    DEFAULT_ASSIGNMENT_CAP,
    eval_rc_polynomial,
    fkg_check,
    hom,
    independent_set_counts,
    matching_counts,
    partition_value,
    random_cluster,
    rc_polynomial,
)

UNION_MAX = "UnionMax"
CROSS_MAX = "CrossMax"
EXHAUSTIVE_LIFT_CAP = 2**20
REL_SLACK = 1e-9


def compare(claimed, other, slack: float = REL_SLACK) -> tuple[bool, bool]:
    """``(passes, marginal)`` for ``claimed >= other``.

    Exact values compare exactly. Floats may fall short by ``slack`` relative
    to the larger magnitude; such passes are flagged marginal.
    """
    if isinstance(claimed, Fraction) and isinstance(other, Fraction):
        return claimed >= other, False
    if claimed >= other:
        return True, False
    allowed = slack * max(abs(claimed), abs(other))
    return other - claimed <= allowed, other - claimed <= allowed


@dataclass
class ScanReport:
    suite: str
    graph: str
    model: str
    claim: str
    scanned: int
    exhaustive: bool
    claimed_value: object = None
    max_other: object = None
    violations: list = field(default_factory=list)
    marginal: bool = False
    seconds: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        if not self.ok:
            return "FAIL"
        return "PASS-marginal" if self.marginal else "PASS"

    @property
    def margin(self):
        if self.max_other is None:
            return None
        return self.claimed_value - self.max_other

    def to_json(self) -> dict:
        fmt = lambda x: None if x is None else format_scalar(x)  # noqa: E731
        return {
            "suite": self.suite,
            "graph": self.graph,
            "model": self.model,
            "claim": self.claim,
            "scanned": self.scanned,
            "exhaustive": self.exhaustive,
            "claimed_value": fmt(self.claimed_value),
            "max_other": fmt(self.max_other),
            "margin": fmt(self.margin),
            "status": self.status,
            "violations": [{"case": str(c), "value": fmt(v)} for c, v in self.violations],
            "seconds": round(self.seconds, 4),
            "detail": self.detail,
        }

    def csv_row(self) -> list:
        margin = self.margin
        return [
            self.suite,
            self.graph,
            self.model,
            self.claim,
            self.scanned,
            self.exhaustive,
            "" if margin is None else format_scalar(margin),
            self.status,
        ]


CSV_COLUMNS = ["suite", "graph", "model", "claim", "scanned", "exhaustive", "margin", "status"]


# -- lift scans ------------------------------------------------------------------


class LiftCapExceeded(CapExceeded):
    """A lift's partition function exceeded the assignment cap; names the signing."""

    def __init__(self, signing: Signing, cause: CapExceeded):
        super().__init__(f"lift {signing}: {cause}", cause.required, cause.cap)
        self.signing = str(signing)


def lift_value(s: Signing, model: SpinModel, assignment_cap: int):
    try:
        return partition_value(apply_lift(s), model, cap=assignment_cap)
    except LiftCapExceeded:
        raise
    except CapExceeded as exc:
        raise LiftCapExceeded(s, exc) from exc


def _z_range(args):
    g, model, start, stop, assignment_cap = args
    return [lift_value(signing_from_index(g, t), model, assignment_cap) for t in range(start, stop)]


def lift_partition_values(
    g: Graph, model: SpinModel, workers: int = 1, assignment_cap: int = DEFAULT_ASSIGNMENT_CAP
) -> list:
    """``Z(H, model)`` for every 2-lift ``H`` in signing order.

    With ``workers > 1`` contiguous signing ranges go to a process pool and the
    results are concatenated back in order.
    """
    total = 2**g.m
    if workers <= 1 or total < 64:
        return _z_range((g, model, 0, total, assignment_cap))
    step = -(-total // (workers * 4))
    chunks = [(g, model, s, min(total, s + step), assignment_cap) for s in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_z_range, chunks))
    return [z for part in parts for z in part]


def verify_two_lift_extremal(
    g: Graph,
    model: SpinModel,
    claim: str,
    graph_name: str = "",
    lift_cap: int | None = None,
    samples: int = 2000,
    seed: int = 0,
    workers: int = 1,
    assignment_cap: int = DEFAULT_ASSIGNMENT_CAP,
) -> ScanReport:
    """Check ``Z(claimed lift) >= Z(H)`` over all (or sampled) 2-lifts ``H``.

    The claimed lift is ``G u G`` (all ``+1``) for ``UnionMax`` and ``G x K2``
    (all ``-1``) for ``CrossMax``.
    """
    if claim not in (UNION_MAX, CROSS_MAX):
        raise ValueError(f"claim must be {UNION_MAX} or {CROSS_MAX}")
    t0 = time.perf_counter()
    extreme = Signing.constant(g, 1 if claim == UNION_MAX else -1)
    claimed = lift_value(extreme, model, assignment_cap)
    if lift_cap is None:
        lift_cap = EXHAUSTIVE_LIFT_CAP
    exhaustive = 2**g.m <= lift_cap
    if exhaustive:
        values = lift_partition_values(g, model, workers, assignment_cap)
        cases = ((signing_from_index(g, t), z) for t, z in enumerate(values))
        scanned = len(values)
    else:
        rng = random.Random(seed)
        sampled = [random_signing(g, rng) for _ in range(samples)]
        cases = ((s, lift_value(s, model, assignment_cap)) for s in sampled)
        scanned = samples
    report = ScanReport("lifts", graph_name, model.name, claim, scanned, exhaustive, claimed)
    best_other = None
    for s, z in cases:
        if s.signs != extreme.signs and (best_other is None or z > best_other):
            best_other = z
        passes, marginal = compare(claimed, z)
        if not passes:
            report.violations.append((s, z))
        report.marginal |= marginal
    report.max_other = best_other
    report.seconds = time.perf_counter() - t0
    return report


def verify_counts(g: Graph, graph_name: str = "", lift_cap: int = 2**16) -> list[ScanReport]:
    """``i_k(H) <= i_k(G x K2)`` and ``m_k(H) <= m_k(G x K2)`` for every lift and every k."""
    t0 = time.perf_counter()
    cross = apply_lift(Signing.constant(g, -1))
    reports = []
    for name, counter in (("independent_sets", independent_set_counts), ("matchings", matching_counts)):
        ref = counter(cross)
        rep = ScanReport("counts", graph_name, name, CROSS_MAX, 0, True)
        per_k_max = [0] * len(ref)
        best_total = None
        for s in enumerate_signings(g, cap=lift_cap):
            rep.scanned += 1
            vec = counter(apply_lift(s))
            if any(x == 1 for x in s.signs) and (best_total is None or sum(vec) > best_total):
                best_total = sum(vec)
            for k, c in enumerate(vec):
                r = ref[k] if k < len(ref) else 0
                if k < len(per_k_max):
                    per_k_max[k] = max(per_k_max[k], c)
                if c > r:
                    rep.violations.append((f"{s} k={k}", Fraction(c)))
        rep.detail = {"reference": ref, "max_over_lifts": per_k_max}
        rep.claimed_value = Fraction(sum(ref))
        rep.max_other = None if best_total is None else Fraction(best_total)
        rep.seconds = time.perf_counter() - t0
        reports.append(rep)
    return reports


DEFAULT_TUTTE_GRID = [
    (Fraction(q), Fraction(w))
    for q in ("1", "3/2", "2", "3")
    for w in ("0", "1/2", "1", "2")
]


def verify_tutte_lifts(
    g: Graph, grid: Sequence = DEFAULT_TUTTE_GRID, graph_name: str = "", lift_cap: int = 2**16
) -> list[ScanReport]:
    """``Z(G u G, q, w) >= Z(H, q, w)`` for all lifts at every grid point.

    Each lift's random-cluster polynomial is computed once by
    deletion-contraction and evaluated exactly at all grid points.
    """
    t0 = time.perf_counter()
    for q, w in grid:
        if q < 1 or w < 0:
            raise ValueError("the Tutte lift inequality needs q >= 1 and w >= 0")
    signings = list(enumerate_signings(g, cap=lift_cap))
    polys = [rc_polynomial(apply_lift(s)) for s in signings]
    union_poly = rc_polynomial(apply_lift(Signing.constant(g, 1)))
    reports = []
    for q, w in grid:
        claimed = eval_rc_polynomial(union_poly, q, w)
        rep = ScanReport("tutte", graph_name, f"rc(q={q},w={w})", UNION_MAX, len(signings), True, claimed)
        best = None
        for s, poly in zip(signings, polys):
            z = eval_rc_polynomial(poly, q, w)
            if any(x == -1 for x in s.signs) and (best is None or z > best):
                best = z
            if z > claimed:
                rep.violations.append((s, z))
        rep.max_other = best
        reports.append(rep)
    elapsed = time.perf_counter() - t0
    for rep in reports:
        rep.seconds = elapsed / len(reports)
    return reports


def random_k_lift(g: Graph, k: int, rng: random.Random) -> Graph:
    perms = []
    for _ in g.edges:
        p = list(range(k))
        rng.shuffle(p)
        perms.append(p)
    return k_lift(g, perms, k)


def verify_klift_potts(g: Graph, k: int, q, w, samples: int = 50, seed: int = 0, graph_name: str = "") -> ScanReport:
    """``Z(H, q, w) <= Z(G, q, w)^k`` on seeded random k-lifts ``H``."""
    t0 = time.perf_counter()
    q, w = Fraction(q), Fraction(w)
    rng = random.Random(seed)
    bound = random_cluster(g, q, w) ** k
    rep = ScanReport("klift", graph_name, f"rc(q={q},w={w}),k={k}", "Z(G)^k", samples, False, bound)
    best = None
    for i in range(samples):
        z = random_cluster(random_k_lift(g, k, rng), q, w)
        best = z if best is None or z > best else best
        if z > bound:
            rep.violations.append((f"sample {i}", z))
    rep.max_other = best
    rep.seconds = time.perf_counter() - t0
    return rep


# -- identity and bound suites -------------------------------------------------


@dataclass
class IdentityCheck:
    identity: str
    case: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "case": self.case,
            "lhs": format_scalar(self.lhs) if not isinstance(self.lhs, str) else self.lhs,
            "rhs": format_scalar(self.rhs) if not isinstance(self.rhs, str) else self.rhs,
            "ok": self.ok,
        }

    def csv_row(self) -> list:
        return ["identities", self.case, self.identity, "lhs=rhs", 1, True, "", "PASS" if self.ok else "FAIL"]


def identity_models() -> dict[str, SpinModel]:
    return {
        "ind": hardcore(),
        "ind(lam=2/3)": hardcore(Fraction(2, 3)),
        "wr": widom_rowlinson(),
        "K3": coloring(3),
        "potts(2,1/2)": potts(2, Fraction(1, 2)),
        "w3": SpinModel(((2, 1, 0), (1, 0, 3), (0, 3, 1)), (1, 2, Fraction(1, 3)), "w3"),
    }


def verify_identity_suite(graphs: Optional[dict] = None, assignment_cap: int = 2 * 10**6) -> list[IdentityCheck]:
    """Exact checks of the product, exponent, loop, subdivision and blow-up identities."""
    if graphs is None:
        names = ["K2", "K3", "P3", "P4", "C4", "C5", "K1,1", "K4"]
        graphs = {k: cat.get_graph(k) for k in names}
        graphs["K1"] = cat.empty(1)
    models = identity_models()
    checks: list[IdentityCheck] = []

    def Z(g, m):
        return partition_value(g, m, cap=assignment_cap)

    def small(g, q):
        return q**g.n <= assignment_cap

    pairs = [("ind", "wr"), ("K3", "ind"), ("potts(2,1/2)", "w3"), ("ind(lam=2/3)", "K3")]
    for gname, g in graphs.items():
        for a, b in pairs:
            prod = tensor(models[a], models[b])
            if small(g, prod.q):
                checks.append(IdentityCheck("tensor", f"{gname};{a}x{b}", Z(g, prod), Z(g, models[a]) * Z(g, models[b])))
        for mname, m in models.items():
            if small(subdivision(g), m.q):
                checks.append(IdentityCheck("subdivision", f"{gname};{mname}", Z(subdivision(g), m), Z(g, square(m))))
        for mname in ("w3", "ind(lam=2/3)"):
            m = models[mname]
            scale = 3
            integer_nu = [int(x * scale) for x in m.nu]
            mi = m.with_nu(integer_nu)
            if small(g, sum(integer_nu)):
                checks.append(IdentityCheck("blow_up", f"{gname};{mname}*{scale}", Z(g, mi), Z(g, blow_up(mi))))
        targets = {"ind": hardcore(), "wr": widom_rowlinson(), "K3": coloring(3), "thr": named_model("thr")}
        for tname, h in targets.items():
            if not small(g, h.q):
                continue
            if not any(h.A[i][i] for i in range(h.q)):
                # empty loop restriction: no map survives once every vertex is looped
                rhs = 1 if g.n == 0 else 0
            else:
                rhs = hom(g, loop_restrict(h))
            checks.append(IdentityCheck("loops", f"{gname};{tname}", hom(add_loops(g), h), rhs))

    exp_graphs = {k: graphs[k] for k in ("K2", "K3", "P3", "C4") if k in graphs}
    exponents = {"K2": cat.complete(2), "P3": cat.path(3), "K1": cat.empty(1)}
    for gname, g in exp_graphs.items():
        for ename, g2 in exponents.items():
            for tname, h in (("ind", hardcore()), ("K3", coloring(3))):
                power = exponentiation(h, g2)
                if small(g, power.q) and small(tensor_product(g, g2), h.q):
                    checks.append(
                        IdentityCheck("exponent", f"{gname}x{ename};{tname}", hom(tensor_product(g, g2), h), hom(g, power))
                    )

    wr_from_ind = loop_restrict(exponentiation(hardcore(), cat.complete(2)))
    perm = permutation_equivalent(wr_from_ind, widom_rowlinson())
    checks.append(IdentityCheck("loops(ind^K2)=WR", "matrix", "equivalent" if perm else "different", "equivalent"))

    for gname, g in graphs.items():
        for mname, m in models.items():
            if small(apply_lift(Signing.constant(g, 1)), m.q):
                checks.append(
                    IdentityCheck(
                        "times_k2=cross_lift",
                        f"{gname};{mname}",
                        Z(times_k2(g), m),
                        Z(apply_lift(Signing.constant(g, -1)), m),
                    )
                )
                if is_bipartite(g) is not None:
                    checks.append(
                        IdentityCheck(
                            "bipartite_union=cross",
                            f"{gname};{mname}",
                            Z(apply_lift(Signing.constant(g, 1)), m),
                            Z(times_k2(g), m),
                        )
                    )
                checks.append(
                    IdentityCheck("union=square", f"{gname};{mname}", Z(disjoint_union(g, g), m), Z(g, m) ** 2)
                )
    return checks


@dataclass
class BoundCheck:
    bound: str
    case: str
    value: object
    lower: object

    @property
    def ok(self) -> bool:
        return self.value >= self.lower

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "case": self.case,
            "value": format_scalar(self.value),
            "lower": format_scalar(self.lower),
            "ok": self.ok,
        }

    def csv_row(self) -> list:
        margin = format_scalar(self.value - self.lower)
        suite = "coloring" if self.bound == "coloring" else "sidorenko"
        return [suite, self.case, self.bound, "value>=bound", 1, True, margin, "PASS" if self.ok else "FAIL"]


def verify_coloring_bound(graphs: Optional[dict] = None, qs: Iterable[int] = (2, 3, 4), max_v: int = 8) -> list[BoundCheck]:
    """``hom(G, K_q) >= q^v ((q-1)/q)^e`` for bipartite ``G``, exact rationals."""
    if graphs is None:
        graphs = cat.named_graphs()
    out = []
    for name, g in graphs.items():
        if g.n > max_v or is_bipartite(g) is None:
            continue
        for q in qs:
            bound = Fraction(q) ** g.n * Fraction(q - 1, q) ** g.m
            out.append(BoundCheck("coloring", f"{name};q={q}", Fraction(hom(g, coloring(q))), bound))
    return out


def verify_potts_sidorenko(graphs: Optional[dict] = None, grid=DEFAULT_TUTTE_GRID) -> list[BoundCheck]:
    """The two elementary random-cluster lower bounds on catalog graphs."""
    if graphs is None:
        graphs = {k: g for k, g in cat.named_graphs().items() if g.m <= 12}
    out = []
    for name, g in graphs.items():
        poly = rc_polynomial(g)
        for q, w in grid:
            z = eval_rc_polynomial(poly, q, w)
            out.append(BoundCheck("q^v(1+w/q)^e", f"{name};q={q},w={w}", z, q**g.n * (1 + w / q) ** g.m))
            out.append(BoundCheck("(1+w)^e", f"{name};q={q},w={w}", z, (1 + w) ** g.m))
    return out


def verify_fkg(
    n_graphs: int = 50,
    seed: int = 0,
    qs=(1, 2, 3),
    ws=(Fraction(1, 2), 1, 2),
    max_n: int = 6,
    max_m: int = 8,
) -> list[ScanReport]:
    """Positive-correlation inequality on seeded random multigraphs, exact rationals."""
    rng = random.Random(seed)
    reports = []
    cases = []
    for i in range(n_graphs):
        g = cat.random_multigraph(rng, max_n=max_n, max_m=max_m)
        e, f = rng.sample(range(g.m), 2)
        cases.append((i, g, e, f))
    for q in qs:
        for w in ws:
            q_, w_ = Fraction(q), Fraction(w)
            rep = ScanReport("fkg", f"{n_graphs} random multigraphs", f"rc(q={q_},w={w_})", "pos-cor", 0, False)
            smallest = None
            for i, g, e, f in cases:
                res = fkg_check(g, q_, w_, e, f)
                rep.scanned += 1
                margin = res.lhs - res.rhs
                smallest = margin if smallest is None or margin < smallest else smallest
                if not res.ok:
                    rep.violations.append((f"graph {i} {g.to_json()} e={e} f={f}", margin))
            rep.claimed_value, rep.max_other = smallest, Fraction(0)
            reports.append(rep)
    return reports


def verify_girth_lifts(graphs: Optional[dict] = None, lifts_per_graph: int = 100, seed: int = 0) -> ScanReport:
    """``girth(H) >= girth(G)`` on seeded random 2-lifts."""
    if graphs is None:
        names = ["K3", "K4", "K5", "C4", "C5", "C6", "K3,3", "Petersen", "Heawood", "K4,4"]
        graphs = {k: cat.get_graph(k) for k in names}
    rng = random.Random(seed)
    rep = ScanReport("girth", ",".join(graphs), "-", "girth(H)>=girth(G)", 0, False)
    for name, g in graphs.items():
        base = girth(g)
        for _ in range(lifts_per_graph):
            s = random_signing(g, rng)
            rep.scanned += 1
            if girth(apply_lift(s)) < base:
                rep.violations.append((f"{name}:{s}", None))
    return rep


def verify_classifier_consistency(
    graphs: Optional[dict] = None, models: Optional[dict] = None, max_edges: int = 12, workers: int = 1
) -> list[ScanReport]:
    """Scan the claim implied by each model's certificate on every small catalog graph."""
    if graphs is None:
        graphs = {k: g for k, g in cat.named_graphs().items() if g.m <= 9 and g.n <= 8}
    if models is None:
        models = {
            "wr": widom_rowlinson(),
            "ind": hardcore(),
            "ising(0.5,0.2)": ising(0.5, 0.2),
            "ising(-0.5,0)": ising(-0.5, 0.0),
            "thr": named_model("thr"),
        }
    reports = []
    for mname, m in models.items():
        c = classify(m)
        claims = []
        if c.certifies_union:
            claims.append(UNION_MAX)
        if c.certifies_cross:
            claims.append(CROSS_MAX)
        for gname, g in graphs.items():
            if g.m > max_edges or m.q ** (2 * g.n) > DEFAULT_ASSIGNMENT_CAP:
                continue
            for claim in claims:
                rep = verify_two_lift_extremal(g, m, claim, graph_name=gname, workers=workers)
                rep.suite = "classifier"
                rep.detail["verdict"] = c.verdict
                reports.append(rep)
    return reports


def explore_bipartite_question(
    n_models: int = 20, seed: int = 0, q: int = 3, bases: Optional[dict] = None, max_entry: int = 4
) -> list[ScanReport]:
    """Search random integer symmetric matrices for a bipartite base ``G`` and a
    2-lift ``H`` with ``Z(H) > Z(G u G)``. Findings are reported, not presumed.
    """
    if bases is None:
        bases = {"C4": cat.cycle(4), "C6": cat.cycle(6), "K2,2+P": cat.path(4)}
    rng = random.Random(seed)
    reports = []
    for i in range(n_models):
        A = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                A[a][b] = A[b][a] = rng.randint(0, max_entry)
        if all(x == 0 for r in A for x in r):
            A[0][0] = 1
        m = SpinModel(tuple(tuple(r) for r in A), None, f"random{i}")
        for gname, g in bases.items():
            rep = verify_two_lift_extremal(g, m, UNION_MAX, graph_name=gname)
            rep.suite = "bipartite-question"
            rep.detail["A"] = A
            reports.append(rep)
    return reports


# -- everything -------------------------------------------------------------------


@dataclass
class MasterReport:
    suites: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(item.ok for items in self.suites.values() for item in items)

    def violations(self) -> int:
        return sum(1 for items in self.suites.values() for item in items if not item.ok)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "suites": {name: [item.to_json() for item in items] for name, items in self.suites.items()},
        }

    def summary(self) -> str:
        lines = []
        for name, items in self.suites.items():
            bad = sum(1 for x in items if not x.ok)
            lines.append(f"{name:12s} {len(items):5d} checks  {'PASS' if not bad else f'FAIL ({bad})'}")
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'} in {self.seconds:.1f}s")
        return "\n".join(lines)


LIFT_SCAN_CASES = [
    ("wr", UNION_MAX),
    ("ind", CROSS_MAX),
    ("ising(0.5,0.2)", UNION_MAX),
    ("ising(-0.5,0)", CROSS_MAX),
]


def lift_scan_models() -> dict[str, SpinModel]:
    return {
        "wr": widom_rowlinson(),
        "ind": hardcore(),
        "ising(0.5,0.2)": ising(0.5, 0.2),
        "ising(-0.5,0)": ising(-0.5, 0.0),
    }


def run_suite(name: str, graphs: Optional[dict] = None, seed: int = 0, workers: int = 1) -> list:
    if name == "lifts":
        bases = graphs or {k: cat.get_graph(k) for k in ("K3", "C5", "K4", "K3,3")}
        models = lift_scan_models()
        return [
            verify_two_lift_extremal(g, models[mname], claim, graph_name=gname, seed=seed, workers=workers)
            for gname, g in bases.items()
            for mname, claim in LIFT_SCAN_CASES
        ]
    if name == "counts":
        bases = graphs or {k: cat.get_graph(k) for k in ("K3", "C5", "K4")}
        return [r for gname, g in bases.items() for r in verify_counts(g, gname)]
    if name == "tutte":
        bases = graphs or {k: cat.get_graph(k) for k in ("K4", "C5")}
        return [r for gname, g in bases.items() for r in verify_tutte_lifts(g, graph_name=gname)]
    if name == "klift":
        bases = graphs or {"K3": cat.complete(3)}
        return [verify_klift_potts(g, 3, 2, 1, samples=50, seed=seed, graph_name=gname) for gname, g in bases.items()]
    if name == "identities":
        return verify_identity_suite(graphs)
    if name == "coloring":
        return verify_coloring_bound(graphs)
    if name == "fkg":
        return verify_fkg(seed=seed)
    if name == "girth":
        return [verify_girth_lifts(graphs, seed=seed)]
    if name == "classifier":
        return verify_classifier_consistency(graphs, workers=workers)
    if name == "sidorenko":
        return verify_potts_sidorenko(graphs)
    raise ValueError(f"unknown suite {name!r}")


ALL_SUITES = ["lifts", "counts", "tutte", "klift", "identities", "coloring", "fkg", "girth", "classifier", "sidorenko"]


def run_all(suites: Sequence[str] = ALL_SUITES, graphs: Optional[dict] = None, seed: int = 0, workers: int = 1) -> MasterReport:
    t0 = time.perf_counter()
    report = MasterReport()
    for name in suites:
        report.suites[name] = run_suite(name, graphs, seed=seed, workers=workers)
    report.seconds = time.perf_counter() - t0
    return report

"""Command-line entry point: ``twolift <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 file not
found, 4 parse error, 5 cap refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import bethe, catalog
from .classes import build_pair_matrices, classify, staircase_recognize
from .config import FORMATS, Config, ConfigError, load_config
from .graph import (
    CapExceeded,
    Graph,
    GraphParseError,
    Signing,
    apply_lift,
    enumerate_signings,
    girth,
    girth_boost,
    graph_from_json,
    load_graph,
    signing_from_index,
)
from .models import ModelError, SpinModel, format_scalar, load_model, named_model
from .partition import (
    eval_I,
    hom,
    independent_set_counts,
    matching_counts,
    partition_value,
    random_cluster,
)
from . import verify as vf

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_PARSE = 4
EXIT_CAP = 5


class UsageError(ValueError):
    pass


# -- input helpers ---------------------------------------------------------------


def read_graph(args) -> Graph:
    if getattr(args, "named", None):
        try:
            return catalog.get_graph(args.named)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    if not args.graph:
        raise UsageError("give --graph FILE or --named NAME")
    return load_graph(args.graph)


def _param(raw: str):
    try:
        return Fraction(raw)
    except ValueError:
        return raw


def read_model(spec: str) -> SpinModel:
    """A JSON model file, or a name with optional parameters such as
    ``ising:beta=0.5,B=0.2`` or ``potts:q=3,w=1/2``."""
    if spec.endswith(".json") or os.path.isfile(spec):
        return load_model(spec)
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ModelError(f"bad model parameter {item!r}")
        params[key.strip()] = _param(val.strip())
    if "q" in params:
        params["q"] = int(params["q"])
    return named_model(name, **params)


def read_catalog(path: str) -> dict:
    """A JSON object mapping names to graphs, or a directory of ``*.edges`` files."""
    if os.path.isdir(path):
        return {
            os.path.splitext(f)[0]: load_graph(os.path.join(path, f))
            for f in sorted(os.listdir(path))
            if f.endswith(".edges")
        }
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"{path}: {exc}") from None
    return {name: graph_from_json(obj) for name, obj in data.items()}


def _scalar_text(x) -> str:
    return str(format_scalar(x))


# -- output ----------------------------------------------------------------------


def emit(args, payload: dict, text: str, rows=None):
    fmt = args.format
    if fmt == "json":
        out = json.dumps(payload, indent=2)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows if rows is not None else [[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in payload.items()]:
            writer.writerow(row)
        out = buf.getvalue().rstrip("\n")
    else:
        out = text
    print(out)


# -- subcommands -----------------------------------------------------------------


def cmd_z(args, cfg: Config) -> int:
    g = read_graph(args)
    if args.rc:
        if args.q is None or args.w is None:
            raise UsageError("--rc needs --q and --w")
        value = random_cluster(g, _param(args.q), _param(args.w), budget=cfg.expansion_cap)
        kind = "random_cluster"
    else:
        if not args.model:
            raise UsageError("give --model or --rc")
        model = read_model(args.model)
        if args.hom:
            value = hom(g, model)
            kind = "hom"
        else:
            value = partition_value(g, model, cap=cfg.assignment_cap)
            kind = "partition_value"
    emit(args, {"kind": kind, "n": g.n, "m": g.m, "value": format_scalar(value)}, _scalar_text(value))
    return EXIT_OK


def cmd_counts(args, cfg: Config) -> int:
    g = read_graph(args)
    i_k = independent_set_counts(g)
    m_k = matching_counts(g)
    lam = _param(args.lam)
    I = eval_I(g, lam)
    payload = {"i_k": i_k, "m_k": m_k, "lambda": format_scalar(lam), "I": format_scalar(I)}
    text = f"i_k: {' '.join(map(str, i_k))}\nm_k: {' '.join(map(str, m_k))}\nI(G,{format_scalar(lam)}) = {_scalar_text(I)}"
    rows = [["k", "i_k", "m_k"]] + [
        [k, i_k[k] if k < len(i_k) else 0, m_k[k] if k < len(m_k) else 0] for k in range(max(len(i_k), len(m_k)))
    ]
    emit(args, payload, text, rows)
    return EXIT_OK


def _parse_signing(g: Graph, raw: str) -> Signing:
    if len(raw) != g.m or set(raw) - set("+-"):
        raise UsageError(f"signing must be {g.m} characters from '+-'")
    return Signing(g, tuple(1 if c == "+" else -1 for c in raw))


def cmd_lift(args, cfg: Config) -> int:
    g = read_graph(args)
    if args.enumerate:
        rows = [["index", "signing", "girth"]]
        items = []
        for s in enumerate_signings(g, cap=cfg.signing_cap):
            h = apply_lift(s)
            gi = girth(h)
            items.append({"index": s.index(), "signing": str(s), "girth": gi if gi != float("inf") else None})
            rows.append([s.index(), str(s), gi])
        text = "\n".join(f"{r[0]}\t{r[1]}\tgirth={r[2]}" for r in rows[1:])
        emit(args, {"lifts": items}, text, rows)
        return EXIT_OK
    if args.extremal:
        if not args.model:
            raise UsageError("--extremal needs --model")
        model = read_model(args.model)
        if 2**g.m > cfg.lift_cap:
            raise CapExceeded(f"{2**g.m} lifts exceed lift_cap {cfg.lift_cap}", 2**g.m, cfg.lift_cap)
        values = vf.lift_partition_values(g, model, cfg.threads, cfg.assignment_cap)
        best = max(range(len(values)), key=lambda t: (values[t], -t))
        s = signing_from_index(g, best)
        payload = {"signing": str(s), "index": best, "value": format_scalar(values[best]), "lift": apply_lift(s).to_json()}
        emit(args, payload, f"{s}\t{_scalar_text(values[best])}")
        return EXIT_OK
    if args.signing is not None:
        s = _parse_signing(g, args.signing)
    elif args.index is not None:
        if not 0 <= args.index < 2**g.m:
            raise UsageError(f"index must lie in [0, {2**g.m})")
        s = signing_from_index(g, args.index)
    else:
        raise UsageError("give --signing, --index, --enumerate or --extremal")
    h = apply_lift(s)
    emit(args, {"signing": str(s), "lift": h.to_json()}, h.to_text().rstrip("\n"))
    return EXIT_OK


def cmd_girth_boost(args, cfg: Config) -> int:
    g = read_graph(args)
    res = girth_boost(g, args.target, budget=args.budget, seed=cfg.seed)
    final = res.graphs[-1]
    gir = [None if x == float("inf") else x for x in res.girths]
    payload = {"status": res.status, "girths": gir, "exhaustive_steps": res.exhaustive_steps, "graph": final.to_json()}
    if args.out_graph:
        with open(args.out_graph, "w") as fh:
            fh.write(final.to_text())
    text = f"{res.status}: girth path {' -> '.join(str(x) for x in gir)}; final n={final.n} m={final.m}"
    emit(args, payload, text)
    return EXIT_OK if res.reached else EXIT_VIOLATION


def cmd_classify(args, cfg: Config) -> int:
    model = read_model(args.model)
    c = classify(model)
    pm = build_pair_matrices(model)
    cert = c.certificate
    payload = {
        "verdict": c.verdict,
        "certificate": list(cert) if cert is not None else None,
        "certificate_nonneg": list(c.certificate_nonneg) if c.certificate_nonneg is not None else None,
        "certificate_nonpos": list(c.certificate_nonpos) if c.certificate_nonpos is not None else None,
        "tp2": c.tp2,
        "tn2": c.tn2,
        "d1": [[format_scalar(x) for x in row] for row in pm.D1],
    }
    if args.staircase:
        found = staircase_recognize(model, args.staircase)
        payload["staircase"] = None if found is None else {
            "kind": found.kind,
            "ordering": list(found.ordering),
            "weights": list(found.weights),
            "alpha": found.alpha,
        }
    text = f"verdict: {c.verdict}\ncertificate: {cert}\ntp2: {c.tp2} tn2: {c.tn2}"
    emit(args, payload, text)
    return EXIT_OK


def _floats(raw: str | None) -> list[float]:
    return [float(x) for x in raw.split(",")] if raw else []


def cmd_bethe(args, cfg: Config) -> int:
    """BP fixed points and Bethe values for a model or a parameter grid."""
    entries = []
    if args.lam:
        models = [(f"ind(lam={lam})", named_model("ind", lam=Fraction(lam).limit_denominator(10**9)), {"lam": lam}) for lam in _floats(args.lam)]
    elif args.beta:
        Bs = _floats(args.B) or [0.0]
        models = [(f"ising({b},{B})", named_model("ising", beta=b, B=B), {"beta": b, "B": B}) for b in _floats(args.beta) for B in Bs]
    else:
        if not args.model:
            raise UsageError("give --model, --lam or --beta")
        models = [(args.model, read_model(args.model), {})]
    for label, model, params in models:
        search = bethe.solve_bp(model, args.d, restarts=args.restarts, seed=cfg.seed, tol=cfg.tol)
        entry = {
            "model": label,
            "d": args.d,
            "params": params,
            "value": search.value,
            "fixed_points": [s.to_json() for s in search.solutions],
            "runs": search.runs,
            "converged": search.converged,
            "sidorenko": bethe.sidorenko_bound(model.to_float(), args.d),
            "warnings": search.warnings,
        }
        if "lam" in params:
            entry["closed_form"] = bethe.hardcore_phi(params["lam"], args.d)
        if "beta" in params:
            entry["h_star"] = bethe.ising_hstar(params["beta"], params["B"], args.d)
            entry["closed_form"] = bethe.ising_phi(params["beta"], params["B"], args.d)
        entries.append(entry)
    text = "\n".join(
        f"{e['model']} d={e['d']}: Phi={e['value']:.12g} ({len(e['fixed_points'])} fixed points) S={e['sidorenko']:.12g}"
        for e in entries
    )
    rows = [["model", "d", "phi", "sidorenko", "fixed_points"]] + [
        [e["model"], e["d"], repr(e["value"]), repr(e["sidorenko"]), len(e["fixed_points"])] for e in entries
    ]
    emit(args, {"results": entries}, text, rows)
    return EXIT_OK


VERIFY_SUITES = ["lifts", "counts", "tutte", "klift", "identities", "coloring", "fkg", "girth", "classifier", "sidorenko"]


def cmd_verify(args, cfg: Config) -> int:
    graphs = read_catalog(args.catalog) if args.catalog else None
    if args.suite == "all":
        suites = vf.ALL_SUITES
    elif args.suite == "bipartite-question":
        suites = []
    else:
        suites = [args.suite]
    old_cap = vf.EXHAUSTIVE_LIFT_CAP
    vf.EXHAUSTIVE_LIFT_CAP = cfg.lift_cap
    try:
        report = vf.run_all(suites, graphs, seed=cfg.seed, workers=cfg.threads)
        if args.suite == "bipartite-question":
            report.suites["bipartite-question"] = vf.explore_bipartite_question(seed=cfg.seed)
    finally:
        vf.EXHAUSTIVE_LIFT_CAP = old_cap
    payload = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
    rows = [vf.CSV_COLUMNS] + [item.csv_row() for items in report.suites.values() for item in items]
    emit(args, payload, report.summary(), rows)
    if args.suite == "bipartite-question":
        return EXIT_OK
    return EXIT_OK if report.ok else EXIT_VIOLATION


# -- parser ----------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="key = value settings file")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--assignment-cap", type=int)
    p.add_argument("--expansion-cap", type=int)
    p.add_argument("--signing-cap", type=int)
    p.add_argument("--tol", type=float)
    return p


def _graph_args(p):
    p.add_argument("--graph", help="edge-list or JSON graph file")
    p.add_argument("--named", help="catalog graph name, e.g. K4 or Petersen")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="twolift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("z", parents=[common], help="partition function, hom count or random-cluster value")
    _graph_args(p)
    p.add_argument("--model", help="model name (ind, wr, ising:beta=..,B=.., ...) or JSON file")
    p.add_argument("--hom", action="store_true", help="count homomorphisms (0/1 model)")
    p.add_argument("--rc", action="store_true", help="random-cluster Z(G,q,w)")
    p.add_argument("--q")
    p.add_argument("--w")
    p.set_defaults(func=cmd_z)

    p = sub.add_parser("counts", parents=[common], help="independent set and matching counts")
    _graph_args(p)
    p.add_argument("--lam", default="1", help="fugacity for I(G, lam)")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("lift", parents=[common], help="apply, enumerate or search 2-lifts")
    _graph_args(p)
    p.add_argument("--signing", help="one '+' or '-' per edge")
    p.add_argument("--index", type=int, help="signing index in enumeration order")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--extremal", action="store_true", help="lift maximising Z for --model")
    p.add_argument("--model")
    p.add_argument("--lift-cap", type=int)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("girth-boost", parents=[common], help="iterate 2-lifts to raise the girth")
    _graph_args(p)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--budget", type=int, default=64)
    p.add_argument("--out-graph", help="write the final graph as an edge list")
    p.set_defaults(func=cmd_girth_boost)

    p = sub.add_parser("classify", parents=[common], help="certify a model for G u G or G x K2")
    p.add_argument("--model", required=True)
    p.add_argument("--staircase", choices=["loop_threshold", "thick_path"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bethe", parents=[common], help="BP fixed points and Bethe values")
    p.add_argument("--model")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--lam", help="comma-separated hard-core fugacities")
    p.add_argument("--beta", help="comma-separated Ising couplings")
    p.add_argument("--B", help="comma-separated Ising fields")
    p.add_argument("--restarts", type=int, default=50)
    p.set_defaults(func=cmd_bethe)

    p = sub.add_parser("verify", parents=[common], help="run certification suites")
    p.add_argument("--suite", default="all", choices=VERIFY_SUITES + ["all", "bipartite-question"])
    p.add_argument("--catalog", help="JSON {name: graph} file or directory of .edges files")
    p.add_argument("--cap", type=int, dest="lift_cap", help="largest exhaustive lift scan")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def resolve_config(args) -> Config:
    cfg = load_config(args.config) if args.config else Config()
    return cfg.updated(
        assignment_cap=args.assignment_cap,
        expansion_cap=args.expansion_cap,
        signing_cap=args.signing_cap,
        lift_cap=getattr(args, "lift_cap", None),
        tol=args.tol,
        seed=args.seed,
        threads=args.threads,
        format=args.format,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        args.format = cfg.format
        return args.func(args, cfg)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (GraphParseError, ModelError, ConfigError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, bethe.DegenerateInput, bethe.NoFixedPoint) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

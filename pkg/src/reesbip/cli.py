"""Command-line front end: ``reesbip <command> GRAPH [options]``.

GRAPH is an edge-list file or a corpus name (K11, P4, C6, K23, example).
Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input
error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from . import reports
from .betti import (
    DEFAULT_VAR_CAP,
    POWER,
    REES,
    BettiTable,
    bounds_report,
    checks_pass,
    koszul_betti_power,
    reg_stats,
)
from .errors import GraphError, OrderSpecError, ReesError, SizeLimitError
from .graph import DEFAULT_EDGE_CAP, BipartiteGraph, load_graph, named_graph
from .groebner import rees_groebner_basis
from .orders import parse_order_spec
from .walks import (
    DEFAULT_COLUMN_CAP,
    KINDS,
    binomial_json,
    circuit_binomials,
    circuits,
    sorted_binomials,
    universal_groebner_basis,
    walks_with_binomials,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
COMMANDS = ("info", "ugb", "circuits", "gb", "verify", "betti", "bounds", "report")


@dataclass
class RunConfig:
    command: str
    graph: str
    orders: list[str] = field(default_factory=list)
    samples: int = 25
    seed: int = 0
    s_max: int = 3
    window: tuple[int, int] | None = None
    fmt: str = "text"
    cap_edges: int = DEFAULT_EDGE_CAP
    cap_vars: int = DEFAULT_VAR_CAP
    cap_columns: int = DEFAULT_COLUMN_CAP
    rees: bool = False
    power: int | None = None
    source: str = "ugb"
    drop: int | None = None

    def __post_init__(self):
        for name in ("cap_edges", "cap_vars", "cap_columns", "samples", "s_max"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


def resolve_graph(spec: str) -> BipartiteGraph:
    path = Path(spec)
    if path.is_file():
        return load_graph(path)
    try:
        return named_graph(spec)
    except KeyError:
        raise GraphError(f"no such file or corpus graph: {spec!r}") from None


# ---------------------------------------------------------------------------
# commands: each returns (payload, passed)


def cmd_info(G: BipartiteGraph, cfg: RunConfig):
    if G.q > cfg.cap_edges:
        raise SizeLimitError(f"{G.q} edges exceeds --cap-edges {cfg.cap_edges} (needed for b(G))")
    return reports.info_report(G), True


def cmd_ugb(G: BipartiteGraph, cfg: RunConfig):
    fams = walks_with_binomials(G)
    out = {
        "counts": {k: len(fams[k]) for k in KINDS},
        "total": sum(len(v) for v in fams.values()),
        "binomials": {k: [binomial_json(G, k, w, b) for w, b in fams[k]] for k in KINDS},
    }
    if not out["total"]:
        out["note"] = "no walks of any of the three kinds: the Rees ideal is zero"
    return out, True


def cmd_circuits(G: BipartiteGraph, cfg: RunConfig):
    vecs = circuits(G, cfg.cap_columns)
    oracle = circuit_binomials(G, vecs)
    ugb = universal_groebner_basis(G)
    out = {
        "count": len(vecs),
        "vectors": sorted(list(v) for v in vecs),
        "binomials": [str(b) for b in sorted_binomials(oracle)],
        "equal_to_ugb": oracle == ugb,
    }
    return out, oracle == ugb


def cmd_gb(G: BipartiteGraph, cfg: RunConfig):
    specs = cfg.orders or ["grevlex"]
    ugb = universal_groebner_basis(G)
    names = G.var_names()
    out = []
    for spec in specs:
        for order in parse_order_spec(spec, G):
            gb = rees_groebner_basis(G, order, source=cfg.source)
            out.append({
                "order": order.describe(names),
                "size": len(gb.elements),
                "basis": gb.to_json(),
                "subset_of_ugb": all(b in ugb for b in gb.binomials()),
            })
    return {"bases": out}, all(e["subset_of_ugb"] for e in out)


def cmd_verify(G: BipartiteGraph, cfg: RunConfig):
    gens = None
    if cfg.drop is not None:
        gens = sorted_binomials(universal_groebner_basis(G))
        if not 0 <= cfg.drop < len(gens):
            raise ValueError(f"--drop index {cfg.drop} out of range 0..{len(gens) - 1}")
        dropped = gens.pop(cfg.drop)
    out = reports.verify_report(G, cfg.samples, cfg.seed, generators=gens, source=cfg.source,
                                cap_columns=cfg.cap_columns)
    if cfg.drop is not None:
        out["dropped"] = str(dropped)
    return out, out["passed"]


def cmd_betti(G: BipartiteGraph, cfg: RunConfig):
    if cfg.power is not None:
        table = koszul_betti_power(G, cfg.power, cap_vars=cfg.cap_vars)
        out = {"table": table.to_json(), "stats": reg_stats(table), "checks_pass": checks_pass(table)}
        return out, out["checks_pass"]
    out = reports.rees_report(G, cfg.cap_vars, cfg.window)
    return out, out["passed"]


def cmd_bounds(G: BipartiteGraph, cfg: RunConfig):
    out = bounds_report(G, cfg.s_max)
    return out, out["passed"]


def cmd_report(G: BipartiteGraph, cfg: RunConfig):
    out = reports.full_report(G, cfg.s_max, cfg.samples, cfg.seed, cfg.cap_vars)
    return out, out["passed"]


HANDLERS = {
    "info": cmd_info,
    "ugb": cmd_ugb,
    "circuits": cmd_circuits,
    "gb": cmd_gb,
    "verify": cmd_verify,
    "betti": cmd_betti,
    "bounds": cmd_bounds,
    "report": cmd_report,
}


# ---------------------------------------------------------------------------
# text rendering


def _claims_text(claims) -> list[str]:
    lines = []
    for c in claims:
        if c["holds"] is None:
            mark = "INFO"
        elif c.get("status") == "KNOWN-DISCREPANCY":
            mark = "KNOWN-DISCREPANCY"
        else:
            mark = "ok" if c["holds"] else "FAIL"
        lines.append(f"  [{mark}] {c['claim']}: {c['lhs']} vs {c['rhs']}")
    return lines


def _text_betti(out: dict) -> list[str]:
    t = out["table"]
    if t["mode"] == REES:
        entries = {(e["i"], (e["a"], e["b"])): e["beta"] for e in t["entries"]}
    else:
        entries = {(e["i"], e["d"]): e["beta"] for e in t["entries"]}
    table = BettiTable(t["mode"], entries, tuple(t["window"]), t["complete"], t.get("s"))
    head = f"mode {t['mode']}" + (f", s = {t['s']}" if t["mode"] == POWER else "")
    lines = [head + f", window {tuple(t['window'])}, complete {t['complete']}", table.text()]
    if "stats" in out:
        lines.append("  " + ", ".join(f"{k} = {v}" for k, v in sorted(out["stats"].items())))
    if "match" in out:
        lines.append(f"  match(G) = {out['match']}")
    if "note" in out:
        lines.append("  note: " + out["note"])
    lines += _claims_text(out.get("claims", []))
    if "checks_pass" in out:
        lines.append(f"  complex checks: {'ok' if out['checks_pass'] else 'FAIL'}")
    return lines


def _text_verify(out: dict) -> list[str]:
    lines = []
    c = out["circuits"]
    if "skipped" in c:
        lines.append(f"circuits oracle: skipped ({c['skipped']})")
    else:
        lines.append(f"circuits oracle: {c['count']} circuits, equal to UGB: {c['equal']}")
        lines += [f"  missing from UGB: {b}" for b in c["missing_from_ugb"]]
        lines += [f"  extra in UGB: {b}" for b in c["extra_in_ugb"]]
    o = out["orders"]
    if "dropped" in out:
        lines.append(f"mutation: dropped {out['dropped']}")
    lines.append(f"orders: {o['orders']} sampled, UGB size {o['ugb_size']}")
    for r in o["results"]:
        if not (r["subset"] and r["reduces"]):
            lines.append(f"  FAIL {r['order']}: subset {r['subset']}, reduces {r['reduces']}")
            lines += [f"    not in UGB: {b}" for b in r.get("not_in_ugb", [])]
            lines += [f"    nonzero remainder: {b}" for b in r.get("nonzero_remainder", [])]
    return lines


def render_text(command: str, out: dict) -> str:
    lines: list[str] = []
    if command == "info":
        for key in ("n", "m", "q", "N", "match", "b", "tau", "beta0", "rees_dimension"):
            lines.append(f"{key}: {out[key]}")
        lines.append("X: " + " ".join(out["x_labels"]))
        lines.append("Y: " + " ".join(out["y_labels"]))
    elif command == "ugb":
        lines.append(f"{out['total']} binomials")
        for kind in KINDS:
            lines.append(f"{kind}: {out['counts'][kind]}")
            lines += [f"  {b['text']}" for b in out["binomials"][kind]]
        if "note" in out:
            lines.append("note: " + out["note"])
    elif command == "circuits":
        lines.append(f"{out['count']} circuits, equal to UGB: {out['equal_to_ugb']}")
        lines += [f"  {b}" for b in out["binomials"]]
    elif command == "gb":
        for e in out["bases"]:
            lines.append(f"{e['order']}: {e['size']} elements, subset of UGB: {e['subset_of_ugb']}")
            for b in e["basis"]:
                lead, other = (b["text"].split(" - ") if b["lead"] == "plus"
                               else b["text"].split(" - ")[::-1])
                lines.append(f"  [{lead}] - {other}")
    elif command == "verify":
        lines += _text_verify(out)
    elif command == "betti":
        lines += _text_betti(out)
    elif command == "bounds":
        lines.append(f"match(G) = {out['match']}, min{{|X|-1,|Y|-1,2b-1}} = {out['bound_min']}")
        lines.append("reg(I^s): " + ", ".join(f"s={s}: {r}" for s, r in out["reg_powers"].items()))
        lines += _claims_text(out["claims"])
    elif command == "report":
        for key in ("info", "ugb", "verify", "rees", "bounds", "linearity"):
            sec = out[key]
            status = sec.get("status", "pass")
            lines.append(f"== {key}: {status}")
            if status == "skipped":
                lines.append("  " + sec["reason"])
            elif key == "info":
                lines.append("  " + ", ".join(f"{k} = {sec[k]}" for k in ("n", "m", "q", "match", "b", "tau")))
            elif key == "ugb":
                lines.append(f"  {sec['total']} binomials: " + ", ".join(f"{k} {v}" for k, v in sec["counts"].items()))
            elif key == "verify":
                lines += ["  " + ln for ln in _text_verify(sec)]
            elif key == "rees":
                lines += ["  " + ln for ln in _text_betti(sec)]
            else:
                lines += _claims_text(sec["claims"])
    flagged = _flagged(out)
    if flagged:
        lines.append("known discrepancies:")
        lines += [f"  KNOWN-DISCREPANCY {c['claim']}: computed {c['lhs']} vs {c['rhs']}" for c in flagged]
    return "\n".join(lines)


def _flagged(out: dict) -> list[dict]:
    if "known_discrepancies" in out:
        return out["known_discrepancies"]
    return [c for c in out.get("claims", []) if c.get("status") == "KNOWN-DISCREPANCY"]


# ---------------------------------------------------------------------------
# argument parsing


def _window(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("window must be 'A,B'") from None
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("window entries must be nonnegative")
    return a, b


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="edge-list file or corpus name (K11, P4, C6, K23, example)")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--cap-edges", type=_positive, default=DEFAULT_EDGE_CAP)
    common.add_argument("--cap-vars", type=_positive, default=DEFAULT_VAR_CAP)
    common.add_argument("--cap-columns", type=_positive, default=DEFAULT_COLUMN_CAP)
    common.add_argument("--window", type=_window, default=None, help="Rees bidegree box A,B")

    parser = argparse.ArgumentParser(prog="reesbip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="graph invariants")
    sub.add_parser("ugb", parents=[common], help="universal Gröbner basis by walk kind")
    sub.add_parser("circuits", parents=[common], help="circuits of the Rees matrix")
    p = sub.add_parser("gb", parents=[common], help="reduced Gröbner basis for an order")
    p.add_argument("--order", action="append", default=[], help="lex[:vars], grevlex[:vars], match[:T..], weight:...")
    p.add_argument("--source", choices=("ugb", "elimination"), default="ugb")
    p = sub.add_parser("verify", parents=[common], help="circuits oracle and sampled orders")
    p.add_argument("--samples", type=_positive, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--source", choices=("ugb", "elimination"), default="ugb")
    p.add_argument("--drop", type=int, default=None, help="test mode: remove one UGB element first")
    p = sub.add_parser("betti", parents=[common], help="Betti table of S/J or R/I^s")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--rees", action="store_true")
    mode.add_argument("--power", type=_positive, metavar="S")
    p = sub.add_parser("bounds", parents=[common], help="reg(I^s) against the upper bounds")
    p.add_argument("--max-s", dest="s_max", type=_positive, default=3)
    p = sub.add_parser("report", parents=[common], help="all checks in one run")
    p.add_argument("--max-s", dest="s_max", type=_positive, default=3)
    p.add_argument("--samples", type=_positive, default=25)
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        graph=args.graph,
        orders=getattr(args, "order", []),
        samples=getattr(args, "samples", 25),
        seed=getattr(args, "seed", 0),
        s_max=getattr(args, "s_max", 3),
        window=args.window,
        fmt=args.fmt,
        cap_edges=args.cap_edges,
        cap_vars=args.cap_vars,
        cap_columns=args.cap_columns,
        rees=getattr(args, "rees", False),
        power=getattr(args, "power", None),
        source=getattr(args, "source", "ugb"),
        drop=getattr(args, "drop", None),
    )


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        G = resolve_graph(cfg.graph)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            out, passed = HANDLERS[cfg.command](G, cfg)
    except (GraphError, OrderSpecError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"size cap exceeded: {exc} (raise the matching --cap-* flag)", file=stderr)
        return EXIT_CAP
    except ReesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT
    if cfg.fmt == "json":
        payload = {"schema": reports.SCHEMA, "command": cfg.command, **out, "passed": bool(passed)}
        print(json.dumps(payload, sort_keys=True, indent=2, default=str), file=stdout)
    else:
        print(render_text(cfg.command, out), file=stdout)
        print("PASS" if passed else "FAIL", file=stdout)
    return EXIT_OK if passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

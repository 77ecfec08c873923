"""Claim-by-claim verification reports shared by the CLI and the tests."""

from __future__ import annotations

from .betti import (
    bound_min,
    bounds_report,
    checks_pass,
    koszul_betti_rees,
    linearity_check,
    minimal_generator_bidegrees,
    reg_stats,
    rees_dimension,
    taylor_xy_bound,
)
from .errors import SizeLimitError
from .graph import BipartiteGraph, graph_summary, maximal_matchings, maximum_matching
from .groebner import initial_ideal, rees_groebner_basis, grevlex, verify_ugb
from .orders import match_order, sample_orders
from .walks import KINDS, circuit_binomials, circuits, walks_with_binomials

SCHEMA = "1"

# Claims whose computed value disagrees with the closed formula on a
# boundary case.  Flagged items are printed but do not fail a run.
KNOWN_DISCREPANCIES = (
    {
        "id": "single-edge-total-regularity",
        "claim": "reg(Rees) = match(G)",
        "applies_to": "K_{1,1} (q = 1)",
        "note": "J = 0, so the Rees algebra is free over S and reg = 0, while match = 1",
    },
)


def known_discrepancy(G: BipartiteGraph, claim: str) -> dict | None:
    if claim == "reg(Rees) = match(G)" and G.q == 1:
        return KNOWN_DISCREPANCIES[0]
    return None


def claim(name: str, lhs, rhs, holds: bool, G: BipartiteGraph | None = None) -> dict:
    out = {"claim": name, "lhs": lhs, "rhs": rhs, "holds": bool(holds)}
    if not holds and G is not None:
        flag = known_discrepancy(G, name)
        if flag:
            out["status"] = "KNOWN-DISCREPANCY"
            out["discrepancy"] = flag["id"]
    return out


def claims_pass(claims) -> bool:
    return all(c["holds"] or c.get("status") == "KNOWN-DISCREPANCY" for c in claims if c["holds"] is not None)


def info_report(G: BipartiteGraph) -> dict:
    out = graph_summary(G)
    out.update(n=G.n, m=G.m, q=G.q, N=G.N, rees_dimension=rees_dimension(G))
    return out


def ugb_report(G: BipartiteGraph) -> dict:
    fams = walks_with_binomials(G)
    return {
        "counts": {k: len(fams[k]) for k in KINDS},
        "total": sum(len(v) for v in fams.values()),
    }


def verify_report(G: BipartiteGraph, samples: int = 25, seed: int = 0, generators=None,
                  source: str = "ugb", cap_columns: int = 18) -> dict:
    fams = walks_with_binomials(G)
    ugb = {b for v in fams.values() for _, b in v}
    out: dict = {}
    try:
        oracle = circuit_binomials(G, circuits(G, cap_columns))
        out["circuits"] = {
            "count": len(oracle),
            "equal": oracle == ugb,
            "missing_from_ugb": sorted(str(b) for b in oracle - ugb),
            "extra_in_ugb": sorted(str(b) for b in ugb - oracle),
        }
    except SizeLimitError as exc:
        out["circuits"] = {"skipped": str(exc)}
    orders = sample_orders(G, samples, seed)
    out["orders"] = verify_ugb(G, orders, generators=generators, source=source)
    circ_ok = out["circuits"].get("equal", True)
    out["passed"] = bool(circ_ok and out["orders"]["passed"])
    return out


def rees_report(G: BipartiteGraph, cap_vars: int = 12, window=None) -> dict:
    """Rees Betti table plus every claim that can be read off it."""
    table = koszul_betti_rees(G, window=window, cap_vars=cap_vars)
    match = maximum_matching(G).size
    bmin = bound_min(G)
    out = {"table": table.to_json(), "match": match}
    if not table.complete:
        out["claims"] = []
        out["passed"] = checks_pass(table)
        out["note"] = "window not certified; regularity not evaluated"
        return out
    st = reg_stats(table)
    out["stats"] = st
    beta1 = {bd: v for (i, bd), v in table.entries.items() if i == 1}
    mingens = minimal_generator_bidegrees(G)
    claims = [
        claim("reg(Rees) = match(G)", st["reg"], match, st["reg"] == match, G),
        claim("reg_xy <= match(G)-1", st["reg_xy"], match - 1, st["reg_xy"] <= match - 1),
        claim("reg_T <= match(G)", st["reg_T"], match, st["reg_T"] <= match),
        claim("reg_xy <= min{|X|-1,|Y|-1,2b-1}", st["reg_xy"], bmin, st["reg_xy"] <= bmin),
        claim("pd = q-1", st["pd"], G.q - 1, st["pd"] == G.q - 1),
        claim("dim Rees = N+1", rees_dimension(G), G.N + 1, rees_dimension(G) == G.N + 1),
        claim(
            "beta_1 bidegrees = minimal generator bidegrees",
            {f"{a},{b}": v for (a, b), v in sorted(beta1.items())},
            {f"{a},{b}": v for (a, b), v in sorted(mingens.items())},
            beta1 == mingens,
        ),
        claim("Koszul d∘d = 0 and Euler identity", checks_pass(table), True, checks_pass(table)),
    ]
    orders = [("grevlex", grevlex(G))]
    if G.n <= G.m:
        orders += [("match:" + ",".join(M.names()), match_order(G, M)) for M in maximal_matchings(G)]
    for name, order in orders:
        init = initial_ideal(rees_groebner_basis(G, order))
        try:
            bound = taylor_xy_bound(init)
        except SizeLimitError:
            continue
        claims.append(claim(f"reg_xy <= Taylor bound ({name})", st["reg_xy"], bound, st["reg_xy"] <= bound))
    out["claims"] = claims
    out["passed"] = claims_pass(claims)
    return out


def _section(fn, *args, **kwargs) -> dict:
    try:
        res = fn(*args, **kwargs)
    except SizeLimitError as exc:
        return {"status": "skipped", "reason": str(exc)}
    status = "pass" if res.get("passed", True) else "fail"
    return {"status": status, **res}


def full_report(G: BipartiteGraph, s_max: int = 3, samples: int = 25, seed: int = 0,
                cap_vars: int = 12) -> dict:
    report = {
        "schema": SCHEMA,
        "info": info_report(G),
        "ugb": ugb_report(G),
        "verify": _section(verify_report, G, samples, seed),
        "rees": _section(rees_report, G, cap_vars),
        "bounds": _section(bounds_report, G, s_max),
    }
    threshold = maximum_matching(G).size + G.q + 1
    if s_max > threshold:
        report["linearity"] = _section(linearity_check, G, threshold, s_max)
    else:
        report["linearity"] = {
            "status": "skipped",
            "threshold": threshold,
            "reason": f"threshold {threshold} out of requested range (max s = {s_max})",
        }
    report["known_discrepancies"] = [
        c for c in report["rees"].get("claims", []) if c.get("status") == "KNOWN-DISCREPANCY"
    ]
    report["passed"] = all(
        sec.get("status") != "fail" for key, sec in report.items() if isinstance(sec, dict) and "status" in sec
    )
    return report

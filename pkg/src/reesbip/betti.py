"""Betti numbers of the Rees algebra and of R/I^s by Koszul homology.

Both modules are spanned by monomials, so Tor is computed one
multidegree at a time.  For the Rees algebra the fine degree of
``u * t^b`` is ``(exponents of u, b)``; each bigraded piece (a, b) is the
direct sum of its fine pieces and the Koszul differential respects that
split, so the bigraded complex is computed block by block.  In a fine
degree the Koszul term K_i has one basis vector per i-subset of the
variables whose shifted piece is nonzero, and the differential is the
signed multiplication map, i.e. a 0/+-1 matrix.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import IncompleteTableError, IncompleteWindowWarning, SizeLimitError
from .graph import BipartiteGraph, maximum_matching, minimum_maximal_matching
from .groebner import grevlex, psi, rees_groebner_basis, reduce_basis, buchberger, normal_form
from .linalg import rank, sparse_rank
from .monomials import Exps, Monomial, lcm
from .walks import rees_matrix, sorted_binomials, universal_groebner_basis

DEFAULT_VAR_CAP = 12
DEFAULT_DEGREE_CAP = 24
DEFAULT_TAYLOR_CAP = 20
REES, POWER = "rees", "power"


@dataclass
class BettiTable:
    """Nonzero Betti numbers.

    Rees mode keys are ``(i, (a, b))``; power mode keys are ``(i, d)``
    and describe R/I^s.  ``checks`` holds the per-degree complex
    diagnostics (d∘d = 0 and the Euler characteristic identity).
    """

    mode: str
    entries: dict
    window: tuple
    complete: bool
    s: int | None = None
    checks: dict = field(default_factory=dict)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def to_json(self) -> dict:
        if self.mode == REES:
            rows = [
                {"i": i, "a": a, "b": b, "beta": v}
                for (i, (a, b)), v in sorted(self.entries.items())
            ]
        else:
            rows = [{"i": i, "d": d, "beta": v} for (i, d), v in sorted(self.entries.items())]
        out = {"mode": self.mode, "window": list(self.window), "complete": self.complete, "entries": rows}
        if self.s is not None:
            out["s"] = self.s
        return out

    def text(self) -> str:
        """Macaulay-style grid: column i, row j, entry sum of beta_{i, j+i}."""
        grid: dict[tuple[int, int], int] = defaultdict(int)
        for (i, deg), v in self.entries.items():
            total = sum(deg) if self.mode == REES else deg
            grid[(total - i, i)] += v
        cols = range(self.pd + 1)
        rows = sorted({j for j, _ in grid})
        width = max([len(str(v)) for v in grid.values()] + [len(str(self.pd))]) + 1
        lines = [" " * 6 + "".join(f"{i:>{width}}" for i in cols)]
        lines.append("total:" + "".join(
            f"{sum(v for (j, ii), v in grid.items() if ii == i):>{width}}" for i in cols))
        for j in rows:
            cells = "".join(f"{grid.get((j, i), 0) or '.':>{width}}" for i in cols)
            lines.append(f"{j:>5}:" + cells)
        if self.mode == REES:
            lines.append("bigraded:")
            for (i, (a, b)), v in sorted(self.entries.items()):
                lines.append(f"  beta_{i},({a},{b}) = {v}")
        return "\n".join(lines)


@dataclass(frozen=True)
class PieceBasis:
    bidegree: tuple[int, int]
    monomials: tuple[Exps, ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)


# ---------------------------------------------------------------------------
# membership in powers of the edge ideal


@lru_cache(maxsize=None)
def _max_flow(n: int, edges: tuple[tuple[int, int], ...], mon: Exps) -> int:
    """Max flow source -> x_i (cap mon[x_i]) -> y_j (edges, unbounded) ->
    sink (cap mon[y_j])."""
    N = len(mon)
    src, snk = N, N + 1
    cap: dict[tuple[int, int], int] = defaultdict(int)
    adj: dict[int, set[int]] = defaultdict(set)

    def arc(u, v, c):
        cap[(u, v)] += c
        adj[u].add(v)
        adj[v].add(u)

    inf = sum(mon) + 1
    for i in range(n):
        if mon[i]:
            arc(src, i, mon[i])
    for j in range(n, N):
        if mon[j]:
            arc(j, snk, mon[j])
    for i, j in edges:
        arc(i, n + j, inf)
    flow = 0
    while True:
        parent = {src: None}
        frontier = [src]
        while frontier and snk not in parent:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in parent and cap[(u, v)] > 0:
                        parent[v] = u
                        nxt.append(v)
            frontier = nxt
        if snk not in parent:
            break
        path = []
        v = snk
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        push = min(cap[e] for e in path)
        for u, v in path:
            cap[(u, v)] -= push
            cap[(v, u)] += push
        flow += push
    return flow


def edge_power_membership(mon, b: int, G: BipartiteGraph) -> bool:
    """Is the R-monomial ``mon`` (exponents of x then y) in I(G)^b?"""
    flat = mon.x + mon.y if isinstance(mon, Monomial) else tuple(mon)
    if b < 0:
        raise ValueError("power must be nonnegative")
    if any(e < 0 for e in flat):
        return False
    if b == 0:
        return True
    if 2 * b > sum(flat):
        return False
    return _max_flow(G.n, G.edges, flat) >= b


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for combo in combinations_with_replacement(range(parts), total):
        e = [0] * parts
        for c in combo:
            e[c] += 1
        yield tuple(e)


def piece_basis(G: BipartiteGraph, a: int, b: int, cap_degree: int = DEFAULT_DEGREE_CAP) -> PieceBasis:
    """Monomials of degree a+2b in I^b: a basis of the (a, b) piece of the
    Rees algebra."""
    if a < 0 or b < 0:
        return PieceBasis((a, b), ())
    if a + 2 * b > cap_degree:
        raise SizeLimitError(f"degree {a + 2 * b} exceeds the piece cap of {cap_degree}")
    mons = tuple(sorted(
        c for c in _compositions(a + 2 * b, G.N) if edge_power_membership(c, b, G)
    ))
    return PieceBasis((a, b), mons)


# ---------------------------------------------------------------------------
# Koszul blocks


def _koszul_block(levels: list[list[tuple[int, ...]]], modulus: int | None = None):
    """Homology of a Koszul block.

    ``levels[i]`` lists the i-subsets (sorted tuples) spanning K_i.  The
    differential sends e_σ to sum_j (-1)^j e_{σ minus σ_j}; targets absent
    from ``levels`` are zero in the module.  Returns (dims, homology,
    d∘d == 0).
    """
    index = [{s: k for k, s in enumerate(level)} for level in levels]
    diffs: list[list[dict[int, int]]] = [[]]
    for i in range(1, len(levels)):
        rows = []
        for s in levels[i]:
            row = {}
            for j in range(len(s)):
                t = s[:j] + s[j + 1 :]
                k = index[i - 1].get(t)
                if k is not None:
                    row[k] = (-1) ** j
            rows.append(row)
        diffs.append(rows)
    dd_zero = True
    for i in range(2, len(levels)):
        for row in diffs[i]:
            acc: dict[int, int] = defaultdict(int)
            for k, c in row.items():
                for k2, c2 in diffs[i - 1][k].items():
                    acc[k2] += c * c2
            if any(acc.values()):
                dd_zero = False
                break
    ranks = [0] + [sparse_rank(diffs[i], modulus) for i in range(1, len(levels))] + [0]
    dims = [len(level) for level in levels]
    homology = [dims[i] - ranks[i] - ranks[i + 1] for i in range(len(levels))]
    return dims, homology, dd_zero


def _var_degrees(G: BipartiteGraph) -> list[tuple[Exps, int]]:
    """Fine degree (vertex exponents, t-power) of each variable of S."""
    out = []
    for v in range(G.N):
        e = [0] * G.N
        e[v] = 1
        out.append((tuple(e), 0))
    for k in range(G.q):
        e = [0] * G.N
        for v in G.edge_vertices(k):
            e[v] = 1
        out.append((tuple(e), 1))
    return out


def _rees_block(G: BipartiteGraph, c: Exps, b: int, degs, modulus=None):
    def shifted(sigma):
        cc = list(c)
        bb = b
        for v in sigma:
            e, t = degs[v]
            bb -= t
            for idx, x in enumerate(e):
                cc[idx] -= x
        return tuple(cc), bb

    def present(sigma):
        cc, bb = shifted(sigma)
        return bb >= 0 and min(cc) >= 0 and edge_power_membership(cc, bb, G)

    usable = [v for v in range(len(degs)) if present((v,))]
    levels = [[()]] if present(()) else [[]]
    # the Rees algebra is a domain: a face's subsets are faces
    while levels[-1]:
        nxt = []
        for s in levels[-1]:
            for v in usable:
                if s and v <= s[-1]:
                    continue
                t = s + (v,)
                if present(t):
                    nxt.append(t)
        if not nxt:
            break
        levels.append(nxt)
    return _koszul_block(levels, modulus)


@dataclass
class ReesCertificate:
    """Window data from the Taylor resolution of a grevlex initial ideal."""

    leads: list[Exps]
    lcms: dict[Exps, int]  # lcm -> least size of a subset with that lcm
    fine_degrees: set[tuple[Exps, int]]
    box: tuple[int, int]


def _lcm_lattice(leads: list[Exps], cap: int) -> dict[Exps, int]:
    if len(leads) > cap:
        raise SizeLimitError(f"{len(leads)} initial generators exceeds the Taylor cap of {cap}")
    if not leads:
        return {}
    zero = tuple(0 for _ in leads[0])
    best: dict[Exps, int] = {zero: 0}
    for g in leads:
        for l, k in list(best.items()):
            m = lcm(l, g)
            if best.get(m, k + 2) > k + 1:
                best[m] = k + 1
    return best


def rees_certificate(G: BipartiteGraph, order=None, cap: int = DEFAULT_TAYLOR_CAP) -> ReesCertificate:
    """Fine degrees that can carry Betti numbers of S/J.

    Betti numbers of S/in(J) sit at lcms of subsets of its generators
    (Taylor), and those of S/J are bounded by them degree by degree.
    """
    gb = rees_groebner_basis(G, order or grevlex(G))
    leads = gb.leads()
    lat = _lcm_lattice(leads, cap)
    fine = {psi(l, G) for l in lat} | {((0,) * G.N, 0)}
    A = max([sum(l[: G.N]) for l in lat] + [0])
    B = max([sum(l[G.N :]) for l in lat] + [0])
    return ReesCertificate(leads, lat, fine, (A, B))


def _bidegree(c: Exps, b: int) -> tuple[int, int]:
    return sum(c) - 2 * b, b


def koszul_betti_rees(
    G: BipartiteGraph,
    window: tuple[int, int] | None = None,
    fine: str = "certified",
    cap_vars: int = DEFAULT_VAR_CAP,
    check: bool = True,
    modulus: int | None = None,
) -> BettiTable:
    """Bigraded Betti numbers of S/J.

    ``fine="certified"`` only visits fine degrees from the Taylor
    certificate; ``fine="all"`` visits every monomial of every piece in
    the window.  With ``check`` every bidegree in the window is also
    tested against the Hilbert-function form of the Euler characteristic.
    """
    if G.nvars > cap_vars:
        raise SizeLimitError(f"{G.nvars} variables exceeds the Rees cap of {cap_vars}")
    cert = rees_certificate(G)
    box = tuple(window) if window is not None else cert.box
    complete = box[0] >= cert.box[0] and box[1] >= cert.box[1]
    if not complete:
        warnings.warn(
            f"window {box} does not contain the certified box {cert.box}", IncompleteWindowWarning
        )
    degs = _var_degrees(G)
    if fine == "certified":
        targets = sorted(
            (c, b) for c, b in cert.fine_degrees
            if _bidegree(c, b)[0] <= box[0] and b <= box[1]
        )
    elif fine == "all":
        targets = [
            (c, b)
            for a in range(box[0] + 1)
            for b in range(box[1] + 1)
            for c in piece_basis(G, a, b).monomials
        ]
    else:
        raise ValueError(f"unknown fine-degree mode {fine!r}")

    entries: dict = defaultdict(int)
    checks: dict = {}
    for c, b in targets:
        dims, hom, dd_zero = _rees_block(G, c, b, degs, modulus)
        bideg = _bidegree(c, b)
        for i, h in enumerate(hom):
            if h:
                entries[(i, bideg)] += h
        slot = checks.setdefault(bideg, {"dd_zero": True, "blocks": 0})
        slot["dd_zero"] &= dd_zero
        slot["blocks"] += 1

    if check:
        dims_cache: dict[tuple[int, int], int] = {}

        def piece_dim(a, b):
            if (a, b) not in dims_cache:
                dims_cache[(a, b)] = piece_basis(G, a, b).dim if a >= 0 and b >= 0 else 0
            return dims_cache[(a, b)]

        for a in range(box[0] + 1):
            for b in range(box[1] + 1):
                terms = sum(
                    (-1) ** (p + r) * comb(G.N, p) * comb(G.q, r) * piece_dim(a - p, b - r)
                    for p in range(min(a, G.N) + 1)
                    for r in range(min(b, G.q) + 1)
                )
                homology = sum((-1) ** i * v for (i, bd), v in entries.items() if bd == (a, b))
                slot = checks.setdefault((a, b), {"dd_zero": True, "blocks": 0})
                slot["euler_terms"] = terms
                slot["euler_homology"] = homology
                slot["euler_ok"] = terms == homology
    return BettiTable(REES, dict(entries), box, complete, checks=checks)


def _power_generators(G: BipartiteGraph, s: int) -> list[Exps]:
    gens = set()
    for combo in combinations_with_replacement(range(G.q), s):
        e = [0] * G.N
        for k in combo:
            for v in G.edge_vertices(k):
                e[v] += 1
        gens.add(tuple(e))
    return sorted(gens)


def _boxes(upper: Exps):
    if not upper:
        yield ()
        return
    for head in range(upper[0] + 1):
        for rest in _boxes(upper[1:]):
            yield (head,) + rest


def koszul_betti_power(
    G: BipartiteGraph,
    s: int,
    d_max: int | None = None,
    check: bool = True,
    modulus: int | None = None,
    cap_vars: int = DEFAULT_VAR_CAP,
) -> BettiTable:
    """Graded Betti numbers of R/I^s.

    Multidegrees range over the box below the lcm of the generators of
    I^s; only lcms of generators can carry Betti numbers, so other
    multidegrees are skipped.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if G.N > cap_vars:
        raise SizeLimitError(f"{G.N} variables exceeds the power cap of {cap_vars}")
    gens = _power_generators(G, s)
    L = gens[0]
    for g in gens[1:]:
        L = lcm(L, g)
    full = sum(L)
    d_max = full if d_max is None else d_max
    complete = d_max >= full

    def member(c):
        return edge_power_membership(c, s, G)

    entries: dict = defaultdict(int)
    checks: dict = {}
    for c in _boxes(L):
        d = sum(c)
        if d > d_max:
            continue
        if d == 0:
            entries[(0, 0)] += 1
            continue
        below = [g for g in gens if all(x <= y for x, y in zip(g, c))]
        if not below:
            continue
        top = below[0]
        for g in below[1:]:
            top = lcm(top, g)
        if top != c:
            continue
        support = [v for v in range(G.N) if c[v]]
        levels: list[list[tuple[int, ...]]] = []
        for i in range(len(support) + 1):
            level = []
            for sigma in combinations(support, i):
                cc = list(c)
                for v in sigma:
                    cc[v] -= 1
                if not member(tuple(cc)):
                    level.append(sigma)
            levels.append(level)
        dims, hom, dd_zero = _koszul_block(levels, modulus)
        for i, h in enumerate(hom):
            if h:
                entries[(i, d)] += h
        slot = checks.setdefault(d, {"dd_zero": True, "blocks": 0})
        slot["dd_zero"] &= dd_zero
        slot["blocks"] += 1

    if check:
        hilb: dict[int, int] = {}

        def standard(d):
            if d < 0:
                return 0
            if d not in hilb:
                hilb[d] = sum(1 for c in _compositions(d, G.N) if not member(c))
            return hilb[d]

        for d in range(d_max + 1):
            terms = sum((-1) ** p * comb(G.N, p) * standard(d - p) for p in range(min(d, G.N) + 1))
            homology = sum((-1) ** i * v for (i, dd), v in entries.items() if dd == d)
            slot = checks.setdefault(d, {"dd_zero": True, "blocks": 0})
            slot.update(euler_terms=terms, euler_homology=homology, euler_ok=terms == homology)
    return BettiTable(POWER, dict(entries), (d_max,), complete, s=s, checks=checks)


# ---------------------------------------------------------------------------
# invariants


def reg_stats(table: BettiTable) -> dict:
    if not table.complete:
        raise IncompleteTableError("regularity needs a complete table")
    nz = [(i, deg) for (i, deg), v in table.entries.items() if v]
    if table.mode == REES:
        return {
            "reg": max(a + b - i for i, (a, b) in nz),
            "reg_xy": max(a - i for i, (a, _) in nz),
            "reg_T": max(b - i for i, (_, b) in nz),
            "pd": max(i for i, _ in nz),
        }
    reg_q = max(d - i for i, d in nz)
    return {"reg_quotient": reg_q, "reg_power": reg_q + 1, "pd": max(i for i, _ in nz)}


def checks_pass(table: BettiTable) -> bool:
    return all(c["dd_zero"] and c.get("euler_ok", True) for c in table.checks.values())


def taylor_xy_bound(init, cap: int = DEFAULT_TAYLOR_CAP, N: int | None = None) -> int:
    """max over subsets of generators of (xy-degree of lcm - size), and 0."""
    mons = list(init)
    if not mons:
        return 0
    if isinstance(mons[0], Monomial):
        N = len(mons[0].x) + len(mons[0].y)
        mons = [m.flat for m in mons]
    elif N is None:
        raise ValueError("N is required for flat exponent tuples")
    lat = _lcm_lattice(mons, cap)
    return max(sum(l[:N]) - k for l, k in lat.items())


def rees_dimension(G: BipartiteGraph) -> int:
    return rank(rees_matrix(G))


def minimal_generator_bidegrees(G: BipartiteGraph) -> dict[tuple[int, int], int]:
    """Bidegrees of a minimal generating set of J, by greedy pruning of the
    walk binomials in order of total degree."""
    chosen = []
    order = grevlex(G)
    for g in sorted_binomials(universal_groebner_basis(G)):
        if chosen:
            gb = reduce_basis(buchberger(chosen, order, G.n, G.m))
            if normal_form(g, gb) is None:
                continue
        chosen.append(g)
    out: dict[tuple[int, int], int] = defaultdict(int)
    for g in chosen:
        out[g.plus.bidegree] += 1
    return dict(out)


def power_regularity(G: BipartiteGraph, s: int, check: bool = False) -> int:
    return reg_stats(koszul_betti_power(G, s, check=check))["reg_power"]


def bound_min(G: BipartiteGraph) -> int:
    """min{|X| - 1, |Y| - 1, 2b(G) - 1}."""
    b = minimum_maximal_matching(G).size
    return min(G.n - 1, G.m - 1, 2 * b - 1)


def _claim(claim: str, lhs, rhs, holds: bool, **extra) -> dict:
    return {"claim": claim, "lhs": lhs, "rhs": rhs, "holds": bool(holds), **extra}


def bounds_report(G: BipartiteGraph, s_max: int, check: bool = False) -> dict:
    match = maximum_matching(G).size
    bmin = bound_min(G)
    claims = [_claim("match-1 <= min{|X|-1,|Y|-1,2b-1}", match - 1, bmin, match - 1 <= bmin)]
    regs = {}
    for s in range(1, s_max + 1):
        r = power_regularity(G, s, check=check)
        regs[s] = r
        claims.append(_claim(f"reg(I^{s}) <= 2s+match-1", r, 2 * s + match - 1, r <= 2 * s + match - 1, s=s))
        claims.append(_claim(f"reg(I^{s}) <= 2s+min{{|X|-1,|Y|-1,2b-1}}", r, 2 * s + bmin, r <= 2 * s + bmin, s=s))
    return {
        "match": match,
        "bound_min": bmin,
        "reg_powers": {str(s): r for s, r in regs.items()},
        "claims": claims,
        "passed": all(c["holds"] for c in claims),
    }


def linearity_check(G: BipartiteGraph, s_lo: int, s_hi: int, check: bool = False) -> dict:
    """reg(I^{s+1}) - reg(I^s) for s_lo <= s < s_hi; only differences at or
    past match(G) + q + 1 are asserted to equal 2."""
    if s_lo < 1 or s_hi <= s_lo:
        raise ValueError("need 1 <= s_lo < s_hi")
    threshold = maximum_matching(G).size + G.q + 1
    regs = {s: power_regularity(G, s, check=check) for s in range(s_lo, s_hi + 1)}
    claims = []
    for s in range(s_lo, s_hi):
        diff = regs[s + 1] - regs[s]
        if s >= threshold:
            claims.append(_claim(f"reg(I^{s + 1}) - reg(I^{s}) = 2", diff, 2, diff == 2, s=s, status="asserted"))
        else:
            claims.append({"claim": f"reg(I^{s + 1}) - reg(I^{s})", "lhs": diff, "rhs": None,
                           "holds": None, "s": s, "status": "not asserted by the theorem"})
    asserted = [c for c in claims if c["holds"] is not None]
    return {
        "threshold": threshold,
        "reg_powers": {str(s): r for s, r in regs.items()},
        "claims": claims,
        "passed": all(c["holds"] for c in asserted),
        "asserted": len(asserted),
    }

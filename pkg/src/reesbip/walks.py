"""Walk families of a bipartite graph, their binomials, and the circuits oracle.

The universal Gröbner basis of the Rees ideal is read off from three
kinds of walks: even cycles, even paths, and pairs of vertex-disjoint
odd paths.  ``circuits`` computes the same set independently from the
kernel of the presentation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import MalformedCircuitError, MalformedWalkError, SizeLimitError
from .graph import BipartiteGraph
from .linalg import nullspace, primitive, rank
from .monomials import Binomial, Monomial

CYCLE, PATH, PAIR = "cycle", "path", "pair"
KINDS = (CYCLE, PATH, PAIR)
DEFAULT_WALK_CAP = 200_000
DEFAULT_COLUMN_CAP = 18


@dataclass(frozen=True)
class Walk:
    """A canonical walk.

    ``sequences`` holds one vertex tuple (cycle, path) or two (pair).  A
    cycle lists each vertex once; its closing edge is implicit.
    ``edges`` holds the T-indices of the steps of each sequence.
    """

    kind: str
    sequences: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, ...], ...]

    def describe(self, G: BipartiteGraph) -> str:
        seqs = []
        for seq in self.sequences:
            names = [G.vertex_name(v) for v in seq]
            if self.kind == CYCLE:
                names.append(names[0])
            seqs.append("(" + ",".join(names) + ")")
        return " + ".join(seqs)

    def to_json(self, G: BipartiteGraph) -> list:
        return [[G.vertex_name(v) for v in seq] for seq in self.sequences]


def _edges_along(G: BipartiteGraph, seq: tuple[int, ...], closed: bool) -> tuple[int, ...]:
    index = G.edge_index()
    steps = list(zip(seq, seq[1:]))
    if closed:
        steps.append((seq[-1], seq[0]))
    out = []
    for u, v in steps:
        k = index.get(frozenset((u, v)))
        if k is None:
            raise MalformedWalkError(f"{G.vertex_name(u)}-{G.vertex_name(v)} is not an edge")
        out.append(k)
    return tuple(out)


def make_walk(G: BipartiteGraph, kind: str, *sequences: tuple[int, ...]) -> Walk:
    """Validate vertex sequences and return the canonical walk."""
    seqs = [tuple(s) for s in sequences]
    if kind == CYCLE:
        if len(seqs) != 1:
            raise MalformedWalkError("a cycle has one vertex sequence")
        (c,) = seqs
        if len(c) > 1 and c[0] == c[-1]:
            c = c[:-1]
        if len(c) < 4 or len(c) % 2 or len(set(c)) != len(c):
            raise MalformedWalkError("cycle must be simple with an even number >= 4 of edges")
        i = c.index(min(c))
        c = c[i:] + c[:i]
        if c[-1] < c[1]:
            c = (c[0],) + c[1:][::-1]
        return Walk(CYCLE, (c,), (_edges_along(G, c, closed=True),))
    if kind == PATH:
        if len(seqs) != 1:
            raise MalformedWalkError("a path has one vertex sequence")
        (p,) = seqs
        if len(p) < 3 or (len(p) - 1) % 2 or len(set(p)) != len(p):
            raise MalformedWalkError("even path must be simple with >= 2 edges")
        if p[-1] < p[0]:
            p = p[::-1]
        return Walk(PATH, (p,), (_edges_along(G, p, closed=False),))
    if kind == PAIR:
        if len(seqs) != 2:
            raise MalformedWalkError("a pair has two vertex sequences")
        fixed = []
        for p in seqs:
            if len(p) < 2 or (len(p) - 1) % 2 == 0 or len(set(p)) != len(p):
                raise MalformedWalkError("pair members must be simple odd paths")
            fixed.append(p if p[0] < G.n else p[::-1])
        if set(fixed[0]) & set(fixed[1]):
            raise MalformedWalkError("paths of a pair must be vertex-disjoint")
        fixed.sort(key=lambda p: p[0])
        return Walk(PAIR, tuple(fixed), tuple(_edges_along(G, p, closed=False) for p in fixed))
    raise MalformedWalkError(f"unknown walk kind {kind!r}")


# ---------------------------------------------------------------------------
# enumeration


def _simple_paths(G: BipartiteGraph, starts, cap: int) -> Iterator[tuple[int, ...]]:
    """All simple paths with at least one edge from the given start vertices."""
    adj = G.adjacency()
    count = 0
    for s in starts:
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w, _ in adj[v]:
                if w in path:
                    continue
                p = path + (w,)
                count += 1
                if count > cap:
                    raise SizeLimitError(f"more than {cap} simple paths; raise the walk cap")
                yield p
                stack.append((w, p))


def enumerate_even_cycles(G: BipartiteGraph, cap: int = DEFAULT_WALK_CAP) -> set[Walk]:
    adj = G.adjacency()
    found: set[Walk] = set()
    steps = 0
    for s in range(G.N):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w, _ in adj[v]:
                if w == s and len(path) >= 3:
                    if path[1] < path[-1]:
                        found.add(make_walk(G, CYCLE, path))
                    continue
                if w <= s or w in path:
                    continue
                steps += 1
                if steps > cap:
                    raise SizeLimitError(f"cycle search exceeded {cap} steps")
                stack.append((w, path + (w,)))
    return found


def enumerate_even_paths(G: BipartiteGraph, cap: int = DEFAULT_WALK_CAP) -> set[Walk]:
    return {
        make_walk(G, PATH, p)
        for p in _simple_paths(G, range(G.N), cap)
        if len(p) % 2 == 1 and p[0] < p[-1]
    }


def odd_paths(G: BipartiteGraph, cap: int = DEFAULT_WALK_CAP) -> list[tuple[int, ...]]:
    """Simple odd paths, each once, oriented to start in X."""
    return sorted(p for p in _simple_paths(G, range(G.n), cap) if len(p) % 2 == 0)


def enumerate_disjoint_odd_pairs(G: BipartiteGraph, cap: int = DEFAULT_WALK_CAP) -> set[Walk]:
    paths = odd_paths(G, cap)
    masks = [sum(1 << v for v in p) for p in paths]
    out: set[Walk] = set()
    for a, b in combinations(range(len(paths)), 2):
        if masks[a] & masks[b]:
            continue
        out.add(make_walk(G, PAIR, paths[a], paths[b]))
        if len(out) > cap:
            raise SizeLimitError(f"more than {cap} odd-path pairs")
    return out


# ---------------------------------------------------------------------------
# translation to binomials


def _signed_parts(edges: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """(edges at even steps, edges at odd steps), steps numbered from 1."""
    plus = [k for j, k in enumerate(edges, start=1) if j % 2 == 0]
    minus = [k for j, k in enumerate(edges, start=1) if j % 2 == 1]
    return plus, minus


def binomial_of_walk(G: BipartiteGraph, w: Walk) -> Binomial:
    if w.kind not in KINDS:
        raise MalformedWalkError(f"unknown walk kind {w.kind!r}")
    # a hand-built Walk may be non-canonical or inconsistent with G
    w = make_walk(G, w.kind, *w.sequences)
    size = G.N + G.q
    a = [0] * size
    b = [0] * size

    def put(vec, vertices=(), tvars=()):
        for v in vertices:
            vec[v] += 1
        for k in tvars:
            vec[G.N + k] += 1

    if w.kind == CYCLE:
        plus, minus = _signed_parts(w.edges[0])
        put(a, tvars=plus)
        put(b, tvars=minus)
    elif w.kind == PATH:
        seq = w.sequences[0]
        plus, minus = _signed_parts(w.edges[0])
        put(a, (seq[0],), plus)
        put(b, (seq[-1],), minus)
    else:
        (u, v), (e1, e2) = w.sequences, w.edges
        p1, m1 = _signed_parts(e1)
        p2, m2 = _signed_parts(e2)
        put(a, (u[0], u[-1]), p1 + m2)
        put(b, (v[0], v[-1]), m1 + p2)
    return Binomial.from_flat(tuple(a), tuple(b), G.n, G.m)


def walks_with_binomials(G: BipartiteGraph, cap: int = DEFAULT_WALK_CAP) -> dict[str, list[tuple[Walk, Binomial]]]:
    """Walks of each kind with their binomials, sorted by binomial."""
    families = {
        CYCLE: enumerate_even_cycles(G, cap),
        PATH: enumerate_even_paths(G, cap),
        PAIR: enumerate_disjoint_odd_pairs(G, cap),
    }
    out = {}
    for kind, walks in families.items():
        pairs = [(w, binomial_of_walk(G, w)) for w in walks]
        pairs.sort(key=lambda wb: binomial_sort_key(wb[1]))
        out[kind] = pairs
    return out


def universal_groebner_basis(G: BipartiteGraph, cap: int = DEFAULT_WALK_CAP) -> set[Binomial]:
    return {b for fam in walks_with_binomials(G, cap).values() for _, b in fam}


def binomial_sort_key(b: Binomial) -> tuple:
    return (sum(b.plus.flat), b.plus.flat[::-1], b.minus.flat[::-1])


def sorted_binomials(bs) -> list[Binomial]:
    return sorted(bs, key=binomial_sort_key)


# ---------------------------------------------------------------------------
# presentation matrix and circuits


def rees_matrix(G: BipartiteGraph) -> list[list[int]]:
    """(N+1) x (q+N): edge columns (incidence plus a final 1), then e_1..e_N."""
    rows = [[0] * (G.q + G.N) for _ in range(G.N + 1)]
    for k in range(G.q):
        u, v = G.edge_vertices(k)
        rows[u][k] = rows[v][k] = rows[G.N][k] = 1
    for v in range(G.N):
        rows[v][G.q + v] = 1
    return rows


def circuits(G: BipartiteGraph, cap_columns: int = DEFAULT_COLUMN_CAP) -> set[tuple[int, ...]]:
    """Support-minimal primitive kernel vectors of the presentation matrix.

    Exhaustive over column subsets.  A subset is a circuit support when
    its restricted kernel is one-dimensional and the generator uses every
    column.  Vectors are indexed like the matrix columns (T first, then
    vertices) and signed so the first nonzero entry is positive.
    """
    M = rees_matrix(G)
    ncols = G.q + G.N
    if ncols > cap_columns:
        raise SizeLimitError(f"{ncols} columns exceeds the circuit oracle cap of {cap_columns}")
    r = rank(M)
    col_rows = [sum(1 << i for i in range(len(M)) if M[i][c]) for c in range(ncols)]
    found: set[tuple[int, ...]] = set()
    for size in range(2, r + 2):
        for C in combinations(range(ncols), size):
            # a row met by exactly one column of C forces a zero coordinate
            once = 0
            twice = 0
            for c in C:
                twice |= once & col_rows[c]
                once |= col_rows[c]
            if once & ~twice:
                continue
            sub = [[row[c] for c in C] for row in M]
            ker = nullspace(sub, size)
            if len(ker) != 1 or any(v == 0 for v in ker[0]):
                continue
            vec = primitive(ker[0])
            if vec[0] < 0:
                vec = tuple(-v for v in vec)
            full = [0] * ncols
            for c, v in zip(C, vec):
                full[c] = v
            found.add(tuple(full))
    return found


def circuit_binomials(G: BipartiteGraph, vectors) -> set[Binomial]:
    """Map each circuit to xyT^{alpha+} - xyT^{alpha-}."""
    out = set()
    for alpha in vectors:
        alpha = tuple(alpha)
        if len(alpha) != G.q + G.N:
            raise MalformedCircuitError("circuit has the wrong length")
        if not any(alpha):
            raise MalformedCircuitError("zero vector is not a circuit")
        # matrix columns are T first, then vertices; flat monomials are vertices first
        reordered = alpha[G.q :] + alpha[: G.q]
        plus = tuple(max(v, 0) for v in reordered)
        minus = tuple(max(-v, 0) for v in reordered)
        if plus == minus:
            raise MalformedCircuitError("circuit gives a zero binomial")
        out.add(Binomial.from_flat(plus, minus, G.n, G.m))
    return out


def binomial_json(G: BipartiteGraph, kind: str | None, walk: Walk | None, b: Binomial) -> dict:
    return {
        "kind": kind,
        "walk": walk.to_json(G) if walk is not None else None,
        "plus": list(b.plus.flat),
        "minus": list(b.minus.flat),
        "text": str(b),
    }


def parse_binomial(text: str, G: BipartiteGraph) -> Binomial:
    """Parse ``"x3*T2 - x2*T3"`` in the canonical variable names of G."""
    names = {v: i for i, v in enumerate(G.var_names())}

    def mono(s: str) -> tuple[int, ...]:
        e = [0] * G.nvars
        s = s.strip()
        if s == "1":
            return tuple(e)
        for factor in s.split("*"):
            var, _, power = factor.strip().partition("^")
            if var not in names:
                raise MalformedWalkError(f"unknown variable {var!r}")
            e[names[var]] += int(power) if power else 1
        return tuple(e)

    left, sep, right = text.partition(" - ")
    if not sep:
        raise MalformedWalkError(f"not a binomial: {text!r}")
    return Binomial.from_flat(mono(left), mono(right), G.n, G.m)


def monomial_of(G: BipartiteGraph, flat) -> Monomial:
    return Monomial.from_flat(tuple(flat), G.n, G.m)

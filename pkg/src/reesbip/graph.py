"""Bipartite graphs, matchings, covers and the matching invariants.

Vertices are addressed by a global id: ``x_i`` is ``i`` and ``y_j`` is
``n + j`` (both 0-based).  Edges are numbered by position; edge ``k``
carries the variable ``T{k+1}``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    EmptyComponentError,
    EmptyGraphError,
    GraphFormatError,
    NotMaximalError,
    OddCycleError,
    SizeLimitError,
)

DEFAULT_EDGE_CAP = 24


@dataclass(frozen=True)
class BipartiteGraph:
    x_labels: tuple[str, ...]
    y_labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "x_labels", tuple(self.x_labels))
        object.__setattr__(self, "y_labels", tuple(self.y_labels))
        object.__setattr__(self, "edges", tuple((int(i), int(j)) for i, j in self.edges))
        if not self.edges:
            raise EmptyGraphError("graph has no edges")
        if len(set(self.x_labels) | set(self.y_labels)) != self.n + self.m:
            raise GraphFormatError("vertex labels must be distinct")
        if len(set(self.edges)) != len(self.edges):
            raise DuplicateEdgeError("duplicate edge")
        for i, j in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.m):
                raise GraphFormatError(f"edge ({i}, {j}) out of range")
        covered = {i for i, _ in self.edges} | {self.n + j for _, j in self.edges}
        if len(covered) != self.n + self.m:
            missing = sorted(set(range(self.n + self.m)) - covered)
            raise EmptyComponentError(
                "isolated vertices: " + ", ".join(self.label(v) for v in missing)
            )

    @property
    def n(self) -> int:
        return len(self.x_labels)

    @property
    def m(self) -> int:
        return len(self.y_labels)

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def N(self) -> int:
        return self.n + self.m

    @property
    def nvars(self) -> int:
        """Number of variables of S = k[x, y, T]."""
        return self.n + self.m + self.q

    def vertex_name(self, v: int) -> str:
        return f"x{v + 1}" if v < self.n else f"y{v - self.n + 1}"

    def label(self, v: int) -> str:
        return self.x_labels[v] if v < self.n else self.y_labels[v - self.n]

    def var_names(self) -> list[str]:
        return (
            [f"x{i + 1}" for i in range(self.n)]
            + [f"y{j + 1}" for j in range(self.m)]
            + [f"T{k + 1}" for k in range(self.q)]
        )

    def edge_vertices(self, k: int) -> tuple[int, int]:
        i, j = self.edges[k]
        return i, self.n + j

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> sorted list of (neighbour, edge index)."""
        adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for k in range(self.q):
            u, v = self.edge_vertices(k)
            adj[u].append((v, k))
            adj[v].append((u, k))
        return {v: sorted(adj[v]) for v in range(self.N)}

    def edge_index(self) -> dict[frozenset[int], int]:
        return {frozenset(self.edge_vertices(k)): k for k in range(self.q)}


@dataclass(frozen=True)
class Matching:
    edge_indices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edge_indices)

    def names(self) -> list[str]:
        return [f"T{k + 1}" for k in sorted(self.edge_indices)]


@dataclass(frozen=True)
class SimpleGraph:
    """A general undirected graph, used for the cone graph."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Relabeling:
    """``x_order[new] = old`` and likewise for ``y_order``; the first
    ``r`` positions hold the matched pairs."""

    x_order: tuple[int, ...]
    y_order: tuple[int, ...]
    r: int

    def is_identity(self) -> bool:
        return self.x_order == tuple(range(len(self.x_order))) and self.y_order == tuple(
            range(len(self.y_order))
        )


# ---------------------------------------------------------------------------
# parsing and construction


def from_edge_list(pairs: Iterable[tuple[str, str]], lines: Iterable[int] | None = None) -> BipartiteGraph:
    """Build the canonical graph from labelled edges in T-order.

    Each connected component is 2-coloured from its least label; the
    colour class of that label goes to X unless it is strictly larger
    than the other class, in which case the component is flipped.
    """
    pairs = list(pairs)
    lines = list(lines) if lines is not None else list(range(1, len(pairs) + 1))
    if not pairs:
        raise EmptyGraphError("graph has no edges")
    order: dict[str, int] = {}
    adj: dict[str, list[str]] = defaultdict(list)
    seen: set[frozenset[str]] = set()
    for (u, v), ln in zip(pairs, lines):
        if u == v:
            raise OddCycleError(f"self-loop at {u!r}", ln)
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", ln)
        seen.add(key)
        for w in (u, v):
            order.setdefault(w, len(order))
        adj[u].append(v)
        adj[v].append(u)

    color: dict[str, int] = {}
    for root in sorted(order):
        if root in color:
            continue
        comp = [root]
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    comp.append(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    bad = next(ln for (a, b), ln in zip(pairs, lines) if {a, b} == {u, w})
                    raise OddCycleError(f"odd cycle through edge {u} {w}; graph is not bipartite", bad)
        zeros = sum(1 for w in comp if color[w] == 0)
        if zeros > len(comp) - zeros:
            for w in comp:
                color[w] = 1 - color[w]

    by_appearance = sorted(order, key=order.__getitem__)
    x_labels = [w for w in by_appearance if color[w] == 0]
    y_labels = [w for w in by_appearance if color[w] == 1]
    xi = {w: i for i, w in enumerate(x_labels)}
    yj = {w: j for j, w in enumerate(y_labels)}
    edges = [(xi[u], yj[v]) if color[u] == 0 else (xi[v], yj[u]) for u, v in pairs]
    return BipartiteGraph(tuple(x_labels), tuple(y_labels), tuple(edges))


def parse_graph(text: str) -> BipartiteGraph:
    """Parse an edge list: one ``u v`` pair per line, ``#`` starts a comment."""
    pairs, lines = [], []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", ln)
        pairs.append((tokens[0], tokens[1]))
        lines.append(ln)
    return from_edge_list(pairs, lines)


def load_graph(path: str | Path) -> BipartiteGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def to_text(G: BipartiteGraph) -> str:
    return "".join(f"{G.x_labels[i]} {G.y_labels[j]}\n" for i, j in G.edges)


def path_graph(k: int) -> BipartiteGraph:
    """P_k, the path on k >= 2 vertices."""
    return from_edge_list((f"v{i}", f"v{i + 1}") for i in range(1, k))


def cycle_graph(k: int) -> BipartiteGraph:
    """C_k for even k >= 4, edges in cyclic order."""
    if k < 4 or k % 2:
        raise OddCycleError(f"C_{k} is not a bipartite cycle")
    return from_edge_list((f"v{i}", f"v{i % k + 1}") for i in range(1, k + 1))


def complete_bipartite(n: int, m: int) -> BipartiteGraph:
    return from_edge_list((f"a{i}", f"b{j}") for i in range(1, n + 1) for j in range(1, m + 1))


def star_graph(k: int) -> BipartiteGraph:
    return complete_bipartite(1, k)


def example_graph() -> BipartiteGraph:
    """Two components: the edge x1y1 and the path x2-y2-x3-y3."""
    return parse_graph("x1 y1\nx2 y2\nx3 y2\nx3 y3\n")


def named_graph(name: str) -> BipartiteGraph:
    """Corpus graphs by name: K11, K23, P4, C6, example, star3."""
    key = name.strip().lower().replace("_", "").replace("{", "").replace("}", "").replace(",", "")
    if key == "example":
        return example_graph()
    if key.startswith("k") and len(key) == 3 and key[1:].isdigit():
        return complete_bipartite(int(key[1]), int(key[2]))
    if key.startswith("p") and key[1:].isdigit():
        return path_graph(int(key[1:]))
    if key.startswith("c") and key[1:].isdigit():
        return cycle_graph(int(key[1:]))
    if key.startswith("star") and key[4:].isdigit():
        return star_graph(int(key[4:]))
    raise KeyError(name)


# ---------------------------------------------------------------------------
# matchings


def is_matching(G: BipartiteGraph, edges: Iterable[int]) -> bool:
    used: set[int] = set()
    for k in edges:
        u, v = G.edge_vertices(k)
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_maximal_matching(G: BipartiteGraph, edges: Iterable[int]) -> bool:
    edges = set(edges)
    if not is_matching(G, edges):
        return False
    covered = {v for k in edges for v in G.edge_vertices(k)}
    return all(
        u in covered or v in covered for u, v in (G.edge_vertices(k) for k in range(G.q))
    )


def maximum_matching(G: BipartiteGraph) -> Matching:
    """Maximum matching by repeated augmenting paths from the X side."""
    adj = G.adjacency()
    match_of: dict[int, tuple[int, int]] = {}  # y vertex -> (x vertex, edge)

    def augment(x: int, visited: set[int]) -> bool:
        for y, k in adj[x]:
            if y in visited:
                continue
            visited.add(y)
            if y not in match_of or augment(match_of[y][0], visited):
                match_of[y] = (x, k)
                return True
        return False

    for x in range(G.n):
        augment(x, set())
    return Matching(frozenset(k for _, k in match_of.values()))


def maximal_matchings(G: BipartiteGraph) -> Iterator[Matching]:
    """Every maximal matching exactly once.

    Branches on the least uncovered edge {u, v}: a maximal matching must
    cover u or v, so it contains an edge at u or at v.
    """
    ends = [G.edge_vertices(k) for k in range(G.q)]
    adj = G.adjacency()

    def rec(chosen: frozenset[int], covered: frozenset[int], banned: frozenset[int]):
        free = [k for k in range(G.q) if ends[k][0] not in covered and ends[k][1] not in covered]
        if not free:
            yield chosen
            return
        # edges tried in an earlier sibling branch are excluded below it
        u, v = ends[free[0]]
        options = sorted(
            {k for _, k in adj[u] + adj[v] if k in free and k not in banned}
        )
        local_banned = set(banned)
        for k in options:
            a, b = ends[k]
            yield from rec(chosen | {k}, covered | {a, b}, frozenset(local_banned))
            local_banned.add(k)

    seen: set[frozenset[int]] = set()
    for mm in rec(frozenset(), frozenset(), frozenset()):
        if mm not in seen and is_maximal_matching(G, mm):
            seen.add(mm)
            yield Matching(mm)


def minimum_maximal_matching(G: BipartiteGraph, cap_edges: int = DEFAULT_EDGE_CAP) -> Matching:
    """A smallest maximal matching (size b(G)), by branch and bound."""
    if G.q > cap_edges:
        raise SizeLimitError(f"{G.q} edges exceeds the exhaustion cap of {cap_edges}")
    ends = [G.edge_vertices(k) for k in range(G.q)]
    adj = G.adjacency()
    best: list[frozenset[int]] = [maximum_matching(G).edge_indices]

    def rec(chosen: frozenset[int], covered: frozenset[int]):
        if len(chosen) >= len(best[0]):
            return
        free = [k for k in range(G.q) if ends[k][0] not in covered and ends[k][1] not in covered]
        if not free:
            best[0] = chosen
            return
        if len(chosen) + 1 >= len(best[0]):
            return
        u, v = ends[free[0]]
        for k in sorted({k for _, k in adj[u] + adj[v] if k in free}):
            a, b = ends[k]
            rec(chosen | {k}, covered | {a, b})

    rec(frozenset(), frozenset())
    return Matching(best[0])


def min_vertex_cover(G: BipartiteGraph, matching: Matching | None = None) -> frozenset[int]:
    """Minimum vertex cover from a maximum matching (König construction)."""
    matching = matching or maximum_matching(G)
    adj = G.adjacency()
    mate: dict[int, int] = {}
    for k in matching.edge_indices:
        u, v = G.edge_vertices(k)
        mate[u], mate[v] = v, u
    # alternating BFS from unmatched X vertices
    reach = {x for x in range(G.n) if x not in mate}
    queue = deque(reach)
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if y in reach:
                continue
            reach.add(y)
            if y in mate and mate[y] not in reach:
                reach.add(mate[y])
                queue.append(mate[y])
    return frozenset(
        [x for x in range(G.n) if x not in reach] + [y for y in range(G.n, G.N) if y in reach]
    )


def independence_number(G: BipartiteGraph) -> int:
    return G.N - len(min_vertex_cover(G))


def cone_graph(G: BipartiteGraph) -> SimpleGraph:
    """G plus a new vertex z joined to every vertex; z has id N."""
    names = tuple(G.vertex_name(v) for v in range(G.N)) + ("z",)
    edges = tuple(G.edge_vertices(k) for k in range(G.q)) + tuple((v, G.N) for v in range(G.N))
    return SimpleGraph(names, edges)


def renumber_for_matching(G: BipartiteGraph, M: Matching) -> Relabeling:
    """Relabel so that M = {x1y1, ..., xryr}; unmatched vertices keep their
    relative order after the matched ones."""
    if not is_matching(G, M.edge_indices):
        raise NotMaximalError("edge set is not a matching")
    if not is_maximal_matching(G, M.edge_indices):
        raise NotMaximalError("matching is extendable")
    pairs = [G.edges[k] for k in sorted(M.edge_indices)]
    mx = [i for i, _ in pairs]
    my = [j for _, j in pairs]
    x_order = tuple(mx + [i for i in range(G.n) if i not in mx])
    y_order = tuple(my + [j for j in range(G.m) if j not in my])
    return Relabeling(x_order, y_order, len(pairs))


def graph_summary(G: BipartiteGraph) -> dict:
    mm = maximum_matching(G)
    cover = min_vertex_cover(G, mm)
    b = minimum_maximal_matching(G).size if G.q <= DEFAULT_EDGE_CAP else None
    return {
        "x_labels": list(G.x_labels),
        "y_labels": list(G.y_labels),
        "edges": [[i + 1, j + 1] for i, j in G.edges],
        "match": mm.size,
        "b": b,
        "tau": len(cover),
        "beta0": G.N - len(cover),
    }

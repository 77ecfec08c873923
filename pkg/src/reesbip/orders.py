"""Monomial orders on flat exponent tuples.

Every order exposes ``key(flat)``: a < b exactly when key(a) < key(b).
Variable permutations list variable indices from greatest to least.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, OrderSpecError
from .graph import BipartiteGraph, Matching, maximal_matchings, maximum_matching, renumber_for_matching
from .monomials import Exps, Monomial


@dataclass(frozen=True)
class Lex:
    perm: tuple[int, ...]

    @property
    def nvars(self) -> int:
        return len(self.perm)

    def key(self, flat: Exps) -> tuple:
        return tuple(flat[i] for i in self.perm)

    def describe(self, names: Sequence[str]) -> str:
        return "lex:" + ",".join(names[i] for i in self.perm)


@dataclass(frozen=True)
class GrevLex:
    perm: tuple[int, ...]

    @property
    def nvars(self) -> int:
        return len(self.perm)

    def key(self, flat: Exps) -> tuple:
        return (sum(flat),) + tuple(-flat[i] for i in reversed(self.perm))

    def describe(self, names: Sequence[str]) -> str:
        return "grevlex:" + ",".join(names[i] for i in self.perm)


@dataclass(frozen=True)
class WeightOrder:
    """Compare by weight rows, then break ties with ``tiebreak``."""

    weights: tuple[tuple[int, ...], ...]
    tiebreak: Lex

    @property
    def nvars(self) -> int:
        return self.tiebreak.nvars

    def key(self, flat: Exps) -> tuple:
        head = tuple(sum(w * e for w, e in zip(row, flat)) for row in self.weights)
        return head + self.tiebreak.key(flat)

    def describe(self, names: Sequence[str]) -> str:
        return "weight:" + ";".join(",".join(map(str, row)) for row in self.weights)


@dataclass(frozen=True)
class MatchProduct:
    """Lex on the xy-part first, the T-order only on ties.

    ``xy_perm`` ranks vertex variables greatest first; it is built by
    :func:`match_order` from a relabeling that puts the matching first.
    """

    xy_perm: tuple[int, ...]
    t_order: object
    matching: tuple[int, ...] = field(default=())

    @property
    def nvars(self) -> int:
        return len(self.xy_perm) + self.t_order.nvars

    def key(self, flat: Exps) -> tuple:
        N = len(self.xy_perm)
        return (tuple(flat[i] for i in self.xy_perm), self.t_order.key(flat[N:]))

    def describe(self, names: Sequence[str]) -> str:
        return "match:" + ",".join(f"T{k + 1}" for k in self.matching)


@dataclass(frozen=True)
class EliminateLast:
    """Block order that eliminates the last variable (used for t)."""

    inner: object

    @property
    def nvars(self) -> int:
        return self.inner.nvars + 1

    def key(self, flat: Exps) -> tuple:
        return (flat[-1], self.inner.key(flat[:-1]))


MonomialOrder = Lex | GrevLex | WeightOrder | MatchProduct


def compare(order, a, b) -> int:
    """-1, 0 or 1 as a <, =, > b."""
    fa = a.flat if isinstance(a, Monomial) else tuple(a)
    fb = b.flat if isinstance(b, Monomial) else tuple(b)
    if len(fa) != len(fb) or len(fa) != order.nvars:
        raise DimensionMismatch(f"order on {order.nvars} variables, monomials of length {len(fa)}, {len(fb)}")
    ka, kb = order.key(fa), order.key(fb)
    return (ka > kb) - (ka < kb)


def default_perm(G: BipartiteGraph) -> tuple[int, ...]:
    """x1 > ... > xn > y1 > ... > ym > T1 > ... > Tq."""
    return tuple(range(G.nvars))


def match_order(
    G: BipartiteGraph,
    M: Matching,
    t_order=None,
    enforce_n_le_m: bool = True,
) -> MatchProduct:
    """The product order attached to a maximal matching.

    After relabeling so that M = {x1y1, ..., xryr}, the xy-part is
    compared lexicographically with xn > ... > x1 > ym > ... > y1.  The
    T-order defaults to grevlex with T1 > ... > Tq.
    """
    if enforce_n_le_m and G.n > G.m:
        raise OrderSpecError("match order expects |X| <= |Y|")
    rel = renumber_for_matching(G, M)
    xy = [rel.x_order[i] for i in reversed(range(G.n))]
    xy += [G.n + rel.y_order[j] for j in reversed(range(G.m))]
    t_order = t_order or GrevLex(tuple(range(G.q)))
    if t_order.nvars != G.q:
        raise DimensionMismatch("T-order must act on q variables")
    return MatchProduct(tuple(xy), t_order, tuple(sorted(M.edge_indices)))


def random_weight_orders(G: BipartiteGraph, k: int, seed: int) -> list[WeightOrder]:
    rng = random.Random(seed)
    tie = Lex(default_perm(G))
    return [
        WeightOrder((tuple(rng.randint(1, 100) for _ in range(G.nvars)),), tie)
        for _ in range(k)
    ]


def sample_orders(G: BipartiteGraph, k: int = 25, seed: int = 0, matching_cap: int = 32) -> list:
    """Named orders plus ``k`` random positive weight orders.

    Named: lex and grevlex under the default permutation, its reverse and
    two seeded shuffles, and the match order of every maximal matching
    (at most ``matching_cap`` of them).
    """
    rng = random.Random(seed)
    base = list(default_perm(G))
    perms = [tuple(base), tuple(reversed(base))]
    for _ in range(2):
        p = base[:]
        rng.shuffle(p)
        perms.append(tuple(p))
    orders: list = []
    for p in perms:
        orders.append(Lex(p))
        orders.append(GrevLex(p))
    if G.n <= G.m:
        for i, M in enumerate(maximal_matchings(G)):
            if i >= matching_cap:
                break
            orders.append(match_order(G, M))
    orders.extend(random_weight_orders(G, k, rng.randrange(2**32)))
    return orders


def _resolve_names(G: BipartiteGraph, items: list[str]) -> list[int]:
    names = {v: i for i, v in enumerate(G.var_names())}
    out = []
    for item in items:
        item = item.strip()
        if item not in names:
            raise OrderSpecError(f"unknown variable {item!r}")
        if names[item] in out:
            raise OrderSpecError(f"variable {item!r} listed twice")
        out.append(names[item])
    return out


def parse_order_spec(spec: str, G: BipartiteGraph) -> list:
    """Parse a CLI order spec into one or more orders.

    ``lex``, ``lex:x3,x2,...`` (unlisted variables follow in default
    order), ``grevlex[:...]``, ``match[:T1,T3]`` (maximum matching when
    no edges are given), ``weight:3,1,4,...`` or ``weight:seed=7,k=25``.
    """
    kind, _, arg = spec.strip().partition(":")
    kind = kind.lower()
    if kind in ("lex", "grevlex"):
        head = _resolve_names(G, arg.split(",")) if arg else []
        perm = tuple(head + [i for i in default_perm(G) if i not in head])
        return [Lex(perm) if kind == "lex" else GrevLex(perm)]
    if kind == "match":
        if arg:
            edges = []
            for item in arg.split(","):
                item = item.strip()
                if not (item.startswith("T") and item[1:].isdigit()) or not 1 <= int(item[1:]) <= G.q:
                    raise OrderSpecError(f"bad edge name {item!r}")
                edges.append(int(item[1:]) - 1)
            M = Matching(frozenset(edges))
        else:
            M = maximum_matching(G)
        return [match_order(G, M)]
    if kind == "weight":
        if "=" in arg:
            opts = dict(part.split("=", 1) for part in arg.split(","))
            try:
                return random_weight_orders(G, int(opts.get("k", 25)), int(opts.get("seed", 0)))
            except ValueError as exc:
                raise OrderSpecError(f"bad weight spec {spec!r}") from exc
        try:
            w = tuple(int(v) for v in arg.split(","))
        except ValueError as exc:
            raise OrderSpecError(f"bad weight vector {arg!r}") from exc
        if len(w) != G.nvars or min(w) <= 0:
            raise OrderSpecError(f"weight vector needs {G.nvars} positive entries")
        return [WeightOrder((w,), Lex(default_perm(G)))]
    raise OrderSpecError(f"unknown order kind {kind!r}")

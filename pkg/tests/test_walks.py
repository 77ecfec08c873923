from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CORPUS, CORPUS_NAMES, bipartite_graphs
from reesbip.errors import MalformedCircuitError, MalformedWalkError, SizeLimitError
from reesbip.graph import example_graph, named_graph
from reesbip.groebner import psi
from reesbip.linalg import rank
from reesbip.walks import (
    CYCLE,
    PAIR,
    PATH,
    binomial_of_walk,
    circuit_binomials,
    circuits,
    enumerate_disjoint_odd_pairs,
    enumerate_even_cycles,
    enumerate_even_paths,
    make_walk,
    parse_binomial,
    rees_matrix,
    universal_groebner_basis,
    walks_with_binomials,
)

# the seven expected binomials of the running example, in canonical names
EXAMPLE_UGB = (
    "x2*y2*T1 - x1*y1*T2",
    "x2*y3*T1*T3 - x1*y1*T2*T4",
    "x3*T2 - x2*T3",
    "x3*y2*T1 - x1*y1*T3",
    "x3*y3*T1 - x1*y1*T4",
    "y3*T3 - y2*T4",
    "x3*y3*T2 - x2*y2*T4",
)


# brute-force walk oracles: vertex permutations instead of DFS


def brute_paths(G):
    """Every simple path with >= 1 edge as a vertex tuple, least endpoint first."""
    adj = {frozenset(G.edge_vertices(k)) for k in range(G.q)}
    out = set()
    for r in range(2, G.N + 1):
        for seq in permutations(range(G.N), r):
            if seq[0] > seq[-1]:
                continue
            if all(frozenset(p) in adj for p in zip(seq, seq[1:])):
                out.add(seq)
    return out


def brute_cycle_count(G):
    """Edge subsets in which every vertex has degree 0 or 2 and that are connected."""
    count = 0
    for r in range(4, G.q + 1):
        for sub in combinations(range(G.q), r):
            deg = {}
            for k in sub:
                for v in G.edge_vertices(k):
                    deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            comp, stack = set(), [next(iter(deg))]
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack += [w for k in sub for w in G.edge_vertices(k) if v in G.edge_vertices(k)]
            count += comp == set(deg)
    return count


def test_example_golden_ugb():
    G = example_graph()
    assert universal_groebner_basis(G) == {parse_binomial(s, G) for s in EXAMPLE_UGB}


def test_example_walk_counts_and_binomials():
    G = example_graph()
    fams = walks_with_binomials(G)
    assert [len(fams[k]) for k in (CYCLE, PATH, PAIR)] == [0, 2, 5]
    paths = {w.describe(G) for w, _ in fams[PATH]}
    assert paths == {"(x2,y2,x3)", "(y2,x3,y3)"}
    x, y = lambda i: i - 1, lambda j: G.n + j - 1
    w = make_walk(G, PAIR, (x(1), y(1)), (x(2), y(2), x(3), y(3)))
    assert binomial_of_walk(G, w) == parse_binomial("x1*y1*T2*T4 - x2*y3*T1*T3", G)
    w = make_walk(G, PATH, (x(2), y(2), x(3)))
    assert binomial_of_walk(G, w) == parse_binomial("x3*T2 - x2*T3", G)


def test_c4():
    G = CORPUS["C4"]
    assert len(enumerate_even_cycles(G)) == 1
    assert len(enumerate_even_paths(G)) == 4
    assert len(enumerate_disjoint_odd_pairs(G)) == 2
    (cyc,) = enumerate_even_cycles(G)
    assert binomial_of_walk(G, cyc) == parse_binomial("T1*T3 - T2*T4", G)
    assert len(universal_groebner_basis(G)) == 7


def test_small_cases():
    assert enumerate_even_cycles(CORPUS["P4"]) == set()
    assert len(enumerate_even_cycles(CORPUS["C6"])) == 1
    assert enumerate_even_paths(CORPUS["K11"]) == set()
    assert universal_groebner_basis(CORPUS["K11"]) == set()
    assert enumerate_disjoint_odd_pairs(named_graph("star3")) == set()


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_enumeration_against_permutation_oracle(name):
    G = CORPUS[name]
    paths = brute_paths(G)
    even = {p for p in paths if (len(p) - 1) % 2 == 0}
    assert {w.sequences[0] for w in enumerate_even_paths(G)} == even
    odd = [p for p in paths if (len(p) - 1) % 2 == 1]
    pairs = sum(1 for a, b in combinations(odd, 2) if not set(a) & set(b))
    assert len(enumerate_disjoint_odd_pairs(G)) == pairs
    assert len(enumerate_even_cycles(G)) == brute_cycle_count(G)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_ugb_equals_circuits(name):
    G = CORPUS[name]
    assert universal_groebner_basis(G) == circuit_binomials(G, circuits(G))


@settings(max_examples=25, deadline=None)
@given(bipartite_graphs(max_side=3, max_edges=6))
def test_ugb_equals_circuits_random(G):
    assert universal_groebner_basis(G) == circuit_binomials(G, circuits(G))


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_binomial_shape(name):
    G = CORPUS[name]
    fams = walks_with_binomials(G)
    for kind, items in fams.items():
        for w, b in items:
            assert b.is_squarefree()
            assert b.is_coprime()
            assert psi(b.plus, G) == psi(b.minus, G)
            for term in (b.plus, b.minus):
                assert sum(term.x) <= 1 and sum(term.y) <= 1
            xy_deg, t_deg = b.plus.bidegree
            assert b.minus.bidegree == (xy_deg, t_deg)
            length = sum(len(e) for e in w.edges)
            if kind == CYCLE:
                assert (xy_deg, t_deg) == (0, length // 2)
            elif kind == PATH:
                assert (xy_deg, t_deg) == (1, length // 2)
            else:
                assert xy_deg == 2 and t_deg == (length - 2) // 2 + 1


def test_circuits_are_support_minimal():
    G = CORPUS["C4"]
    vecs = circuits(G)
    M = rees_matrix(G)
    supports = [frozenset(i for i, v in enumerate(a) if v) for a in vecs]
    for a in vecs:
        assert all(sum(row[c] * a[c] for c in range(len(a))) == 0 for row in M)
    for s1 in supports:
        assert not any(s2 < s1 for s2 in supports)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_canonicalisation_idempotent(name):
    G = CORPUS[name]
    for items in walks_with_binomials(G).values():
        for w, b in items:
            assert make_walk(G, w.kind, *w.sequences) == w
            assert b.canonical() == b
            if w.kind == PATH:
                assert make_walk(G, PATH, w.sequences[0][::-1]) == w
            elif w.kind == CYCLE:
                c = w.sequences[0]
                assert make_walk(G, CYCLE, c[2:] + c[:2]) == w
                assert make_walk(G, CYCLE, c[::-1]) == w
            else:
                u, v = w.sequences
                assert make_walk(G, PAIR, v[::-1], u) == w


def test_malformed_walks():
    G = CORPUS["C4"]
    with pytest.raises(MalformedWalkError):
        make_walk(G, PATH, (0,))
    with pytest.raises(MalformedWalkError):
        make_walk(G, PATH, (0, 1, 2))
    with pytest.raises(MalformedWalkError):
        make_walk(G, PAIR, (0, 2), (0, 3))
    with pytest.raises(MalformedWalkError):
        make_walk(G, "spiral", (0, 2))


def test_rees_matrix():
    assert rees_matrix(CORPUS["K11"]) == [[1, 1, 0], [1, 0, 1], [1, 0, 0]]
    M = rees_matrix(CORPUS["C4"])
    assert (len(M), len(M[0]), rank(M)) == (5, 8, 5)
    M = rees_matrix(example_graph())
    assert (len(M), len(M[0]), rank(M)) == (7, 10, 7)
    for G in CORPUS.values():
        M = rees_matrix(G)
        assert all(sum(row[k] for row in M) == 3 for k in range(G.q))


def test_circuit_errors():
    G = CORPUS["C4"]
    with pytest.raises(MalformedCircuitError):
        circuit_binomials(G, [(0,) * 8])
    with pytest.raises(SizeLimitError):
        circuits(CORPUS["C6"], cap_columns=10)
    assert circuits(CORPUS["K11"]) == set()


@given(st.sampled_from(sorted(universal_groebner_basis(example_graph()), key=str)))
def test_binomial_text_round_trip(b):
    assert parse_binomial(str(b), example_graph()) == b

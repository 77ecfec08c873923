from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import CORPUS, bipartite_graphs
from reesbip.errors import (
    DuplicateEdgeError,
    EmptyComponentError,
    EmptyGraphError,
    GraphFormatError,
    NotMaximalError,
    OddCycleError,
    SizeLimitError,
)
from reesbip.graph import (
    BipartiteGraph,
    Matching,
    cone_graph,
    example_graph,
    graph_summary,
    independence_number,
    is_matching,
    is_maximal_matching,
    maximal_matchings,
    maximum_matching,
    min_vertex_cover,
    minimum_maximal_matching,
    parse_graph,
    renumber_for_matching,
    to_text,
)


# brute-force oracles over edge and vertex subsets


def brute_matchings(G):
    for r in range(G.q + 1):
        for sub in combinations(range(G.q), r):
            if is_matching(G, sub):
                yield sub


def brute_match(G):
    return max(len(s) for s in brute_matchings(G))


def brute_b(G):
    return min(len(s) for s in brute_matchings(G) if is_maximal_matching(G, s))


def brute_cover(G):
    for r in range(G.N + 1):
        for sub in combinations(range(G.N), r):
            if all(set(G.edge_vertices(k)) & set(sub) for k in range(G.q)):
                return r


def brute_independence(G):
    best = 0
    for r in range(G.N + 1):
        for sub in combinations(range(G.N), r):
            if not any(set(G.edge_vertices(k)) <= set(sub) for k in range(G.q)):
                best = r
    return best


# parsing


def test_single_edge():
    G = parse_graph("x1 y1")
    assert (G.n, G.m, G.q) == (1, 1, 1)
    assert G.edges == ((0, 0),)


def test_example_graph_in_line_order():
    G = parse_graph("x1 y1\nx2 y2\nx3 y2\nx3 y3\n")
    assert G.q == 4
    assert G.x_labels == ("x1", "x2", "x3") and G.y_labels == ("y1", "y2", "y3")
    assert [(G.x_labels[i], G.y_labels[j]) for i, j in G.edges] == [
        ("x1", "y1"), ("x2", "y2"), ("x3", "y2"), ("x3", "y3")
    ]


def test_comments_and_blank_lines():
    G = parse_graph("# header\n\nu v  # trailing\n\nw v\n")
    assert G.q == 2


def test_triangle_rejected_with_line():
    with pytest.raises(OddCycleError) as exc:
        parse_graph("a b\nb c\nc a\n")
    assert exc.value.line in (1, 2, 3)
    assert "line" in str(exc.value)


def test_errors():
    with pytest.raises(EmptyGraphError):
        parse_graph("# nothing\n")
    with pytest.raises(DuplicateEdgeError) as exc:
        parse_graph("a b\nb a\n")
    assert exc.value.line == 2
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("a b\na b c\n")
    assert exc.value.line == 2
    with pytest.raises(OddCycleError):
        parse_graph("a a\n")
    with pytest.raises(EmptyComponentError):
        BipartiteGraph(("a", "b"), ("c",), ((0, 0),))


def test_sides_satisfy_n_le_m(corpus_graph):
    assert corpus_graph.n <= corpus_graph.m


def test_star_centre_goes_to_smaller_side():
    G = parse_graph("c l1\nc l2\nc l3\n")
    assert G.x_labels == ("c",)


@given(bipartite_graphs())
def test_round_trip(G):
    H = parse_graph(to_text(G))
    assert H == G
    assert G.n <= G.m


# matchings, covers and the invariants


def test_spec_invariants_example():
    G = example_graph()
    assert maximum_matching(G).size == 3
    assert minimum_maximal_matching(G).size == 2
    assert len(min_vertex_cover(G)) == 3
    assert independence_number(G) == 3
    M = minimum_maximal_matching(G)
    assert is_maximal_matching(G, M.edge_indices)


def test_min_maximal_example_is_t1_t3():
    G = example_graph()
    small = [M for M in maximal_matchings(G) if M.size == 2]
    assert [M.names() for M in small] == [["T1", "T3"]]


def test_c4_and_k11():
    C4, K11 = CORPUS["C4"], CORPUS["K11"]
    assert maximum_matching(C4).size == 2
    assert minimum_maximal_matching(C4).size == 2
    assert len(min_vertex_cover(C4)) == 2 and independence_number(C4) == 2
    assert maximum_matching(K11).size == 1 and minimum_maximal_matching(K11).size == 1
    assert len(min_vertex_cover(K11)) == 1 and independence_number(K11) == 1


@settings(max_examples=60, deadline=None)
@given(bipartite_graphs())
def test_against_brute_force(G):
    M = maximum_matching(G)
    assert is_matching(G, M.edge_indices)
    assert M.size == brute_match(G)
    cover = min_vertex_cover(G)
    assert all(set(G.edge_vertices(k)) & cover for k in range(G.q))
    assert len(cover) == brute_cover(G) == M.size
    assert independence_number(G) == brute_independence(G)
    b = minimum_maximal_matching(G).size
    assert b == brute_b(G)
    assert b <= M.size <= 2 * b


@settings(max_examples=40, deadline=None)
@given(bipartite_graphs())
def test_maximal_matchings_enumeration(G):
    got = {M.edge_indices for M in maximal_matchings(G)}
    want = {frozenset(s) for s in brute_matchings(G) if is_maximal_matching(G, s)}
    assert got == want


def test_exhaustion_cap():
    with pytest.raises(SizeLimitError):
        minimum_maximal_matching(CORPUS["K23"], cap_edges=5)


def test_cone_graph_counts():
    assert len(cone_graph(CORPUS["K11"]).edges) == 3
    assert len(cone_graph(CORPUS["C4"]).edges) == 8
    assert len(cone_graph(example_graph()).edges) == 10


def test_renumbering():
    G = example_graph()
    rel = renumber_for_matching(G, Matching(frozenset({0, 2})))
    assert [G.x_labels[i] for i in rel.x_order] == ["x1", "x3", "x2"]
    assert [G.y_labels[j] for j in rel.y_order[:2]] == ["y1", "y2"]
    assert rel.r == 2
    for new, k in enumerate(sorted({0, 2})):
        assert G.edges[k] == (rel.x_order[new], rel.y_order[new])
    assert renumber_for_matching(CORPUS["K11"], Matching(frozenset({0}))).is_identity()
    with pytest.raises(NotMaximalError):
        renumber_for_matching(G, Matching(frozenset({0})))
    with pytest.raises(NotMaximalError):
        renumber_for_matching(G, Matching(frozenset({1, 2})))


def test_renumber_c4_perfect_matching():
    G = CORPUS["C4"]
    M = Matching(frozenset({0, 2}))
    rel = renumber_for_matching(G, M)
    assert rel.r == 2
    assert sorted(rel.x_order) == list(range(G.n)) and sorted(rel.y_order) == list(range(G.m))


def test_summary_json_fields():
    s = graph_summary(example_graph())
    assert set(s) == {"x_labels", "y_labels", "edges", "match", "b", "tau", "beta0"}
    assert s["edges"] == [[1, 1], [2, 2], [3, 2], [3, 3]]
    assert (s["match"], s["b"], s["tau"], s["beta0"]) == (3, 2, 3, 3)

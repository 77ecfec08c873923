from __future__ import annotations

import pytest
from hypothesis import strategies as st

from reesbip.graph import from_edge_list, named_graph

CORPUS_NAMES = ("K11", "P3", "P4", "P5", "P6", "C4", "C6", "K22", "K23", "example")
CORPUS = {name: named_graph(name) for name in CORPUS_NAMES}

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=CORPUS_NAMES)
def corpus_graph(request):
    return CORPUS[request.param]


@st.composite
def bipartite_graphs(draw, max_side: int = 4, max_edges: int = 8):
    """Random bipartite graphs without isolated vertices, random T-order."""
    n = draw(st.integers(1, max_side))
    m = draw(st.integers(1, max_side))
    all_edges = [(i, j) for i in range(n) for j in range(m)]
    chosen = draw(
        st.lists(st.sampled_from(all_edges), min_size=1, max_size=min(max_edges, len(all_edges)), unique=True)
    )
    return from_edge_list((f"a{i}", f"b{j}") for i, j in chosen)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcfcolour import (
    ALL_EDGES,
    Graph,
    gen_complete,
    gen_cycle,
    gen_random_graph,
    gen_random_regular,
    gen_subdivided_complete,
    vertex_split,
)
from pcfcolour.graphs import graph_from_col_text, graph_to_col_text

from conftest import star_graph


def assert_well_formed(g: Graph):
    assert len(g.indptr) == g.n + 1
    assert g.indptr[-1] == 2 * g.edge_count
    for v in range(g.n):
        row = g.neighbours(v)
        assert np.all(np.diff(row) > 0), "adjacency must be sorted strictly ascending"
        assert v not in row, "no self-loops"
        for u in row:
            assert v in g.neighbours(int(u)), "adjacency must be symmetric"


def test_cycle_basics():
    g = gen_cycle(5)
    assert (g.n, g.edge_count, g.max_degree, g.min_degree) == (5, 5, 2, 2)
    assert gen_cycle(3) == gen_complete(3)
    g7 = gen_cycle(7)
    assert g7.degrees.tolist() == [2] * 7
    assert_well_formed(g7)


def test_cycle_rejects_small():
    with pytest.raises(ValueError):
        gen_cycle(2)


def test_subdivided_complete_all():
    g = gen_subdivided_complete(5, ALL_EDGES)
    assert (g.n, g.edge_count, g.max_degree, g.min_degree) == (15, 20, 4, 2)
    for v in range(5):
        assert g.degree(v) == 4
    for w in range(5, 15):
        assert g.degree(w) == 2
    assert_well_formed(g)


def test_subdivided_complete_empty_is_complete():
    g = gen_subdivided_complete(5, [])
    assert g == gen_complete(5)
    assert g.edge_count == 10


def test_subdivided_one_edge():
    g = gen_subdivided_complete(4, [(0, 1)])
    assert (g.n, g.edge_count) == (5, 7)
    assert not g.has_edge(0, 1)
    assert g.has_edge(0, 4) and g.has_edge(1, 4)


def test_subdivided_rejects_bad_subsets():
    with pytest.raises(ValueError):
        gen_subdivided_complete(4, [(0, 4)])
    with pytest.raises(ValueError):
        gen_subdivided_complete(4, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        gen_subdivided_complete(4, [(2, 2)])


def test_random_graph_extremes():
    assert gen_random_graph(10, 0.0, 1).edge_count == 0
    assert gen_random_graph(10, 1.0, 1) == gen_complete(10)


def test_random_graph_deterministic():
    a = gen_random_graph(50, 0.2, 42)
    b = gen_random_graph(50, 0.2, 42)
    assert a == b
    assert graph_to_col_text(a) == graph_to_col_text(b)
    assert a != gen_random_graph(50, 0.2, 43)


def test_random_regular():
    assert gen_random_regular(4, 3, 7) == gen_complete(4)
    assert gen_random_regular(6, 5, 7) == gen_complete(6)
    g = gen_random_regular(10, 3, 123)
    assert g.degrees.tolist() == [3] * 10
    assert_well_formed(g)
    assert g == gen_random_regular(10, 3, 123)
    with pytest.raises(ValueError):
        gen_random_regular(5, 3, 1)  # odd stub count
    with pytest.raises(ValueError):
        gen_random_regular(4, 4, 1)


def test_vertex_split():
    star = star_graph(5)
    le, gt = vertex_split(star, 2.5)
    assert le.tolist() == [1, 2, 3, 4, 5] and gt.tolist() == [0]
    g = gen_cycle(5)
    assert vertex_split(g, g.max_degree)[1].size == 0
    assert vertex_split(g, 1)[0].size == 0


def test_from_edges_rejects_malformed():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_col_round_trip():
    g = gen_random_graph(30, 0.2, 5)
    text = graph_to_col_text(g)
    assert text.startswith(f"p edge {g.n} {g.edge_count}\n")
    lines = text.strip().splitlines()[1:]
    assert lines == sorted(lines), "edge lines are sorted lexicographically"
    back = graph_from_col_text(text)
    assert back == g
    assert graph_to_col_text(back) == text


def test_col_parses_comments_and_rejects_junk():
    g = graph_from_col_text("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g.n == 3 and g.edge_count == 2
    with pytest.raises(ValueError):
        graph_from_col_text("e 1 2\n")
    with pytest.raises(ValueError):
        graph_from_col_text("p edge 3 1\nq 1 2\n")


@settings(max_examples=25, deadline=None)
@given(
    n=st.integers(2, 25),
    p=st.floats(0.0, 1.0),
    seed=st.integers(0, 2**63 - 1),
)
def test_random_graph_always_well_formed(n, p, seed):
    g = gen_random_graph(n, p, seed)
    assert_well_formed(g)
    assert graph_from_col_text(graph_to_col_text(g)) == g


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_random_regular_always_regular(data):
    n = data.draw(st.integers(3, 16))
    d = data.draw(st.integers(1, n - 1))
    if (n * d) % 2 == 1:
        d -= 1
    if d < 1:
        return
    g = gen_random_regular(n, d, data.draw(st.integers(0, 2**32)))
    assert set(g.degrees.tolist()) == {d}
    assert_well_formed(g)

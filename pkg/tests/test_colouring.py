from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcfcolour import (
    Colouring,
    Graph,
    ThresholdSpec,
    check_conflict_free,
    check_h_odd,
    gen_complete,
    gen_cycle,
    gen_random_graph,
    is_proper,
    odd_colours,
    solitary_colours,
    witness_lists,
)

from conftest import path_graph, star_graph


def col(*cs) -> Colouring:
    return Colouring(np.asarray(cs, dtype=np.int64))


def test_is_proper_examples():
    assert is_proper(gen_complete(3), col(1, 2, 3))
    assert not is_proper(gen_complete(2), col(1, 1))
    assert is_proper(gen_cycle(5), col(1, 2, 1, 2, 3))


def test_is_proper_size_mismatch():
    with pytest.raises(ValueError):
        is_proper(gen_cycle(5), col(1, 2, 3))


def test_colouring_validation():
    with pytest.raises(ValueError):
        col(0, 1)
    c = col(1, 5, 5)
    assert c.colours_used == 2 and c.max_colour == 5
    assert c.colours_used <= c.max_colour


def test_solitary_examples():
    star = star_graph(3)
    c = col(9, 2, 2, 3)  # centre 9; leaves 2,2,3
    assert solitary_colours(star, c, 0) == {3}
    assert solitary_colours(star, c, 1) == {9}
    isolated = Graph.from_edges(1, [])
    assert solitary_colours(isolated, col(1), 0) == set()
    rainbow = col(1, 2, 3, 4, 5)
    c5 = gen_cycle(5)
    for v in range(5):
        nbrs = c5.neighbours(v)
        assert solitary_colours(c5, rainbow, v) == {int(rainbow.colours[u]) for u in nbrs}


def test_odd_examples():
    star5 = star_graph(5)
    c = col(9, 1, 1, 1, 2, 2)  # neighbourhood multiset {1,1,1,2,2}
    assert odd_colours(star5, c, 0) == {1}
    star3 = star_graph(3)
    assert odd_colours(star3, col(9, 1, 2, 3), 0) == {1, 2, 3}
    star2 = star_graph(2)
    assert odd_colours(star2, col(9, 1, 1), 0) == set()


def test_vertex_out_of_range():
    with pytest.raises(ValueError):
        solitary_colours(gen_cycle(3), col(1, 2, 3), 5)


def test_check_conflict_free_examples():
    c5 = gen_cycle(5)
    rainbow = col(1, 2, 3, 4, 5)
    assert check_conflict_free(c5, rainbow, ThresholdSpec.constant(1)).all_pass
    assert check_conflict_free(c5, rainbow, ThresholdSpec.constant(2)).all_pass
    k2 = gen_complete(2)
    rep = check_conflict_free(k2, col(1, 2), ThresholdSpec.constant(3))
    assert rep.all_pass  # demanded = min(3, deg) = 1
    assert rep.demanded.tolist() == [1, 1]


def test_check_conflict_free_counts_and_flags():
    # improper but witness-satisfying: properness isolated in its own flag
    k2 = gen_complete(2)
    rep = check_conflict_free(k2, col(1, 1), ThresholdSpec.constant(0))
    assert rep.witnesses_ok and not rep.proper and not rep.all_pass
    assert rep.monochromatic_edges == 1


def test_check_h_odd_examples():
    c6 = gen_cycle(6)
    assert check_h_odd(c6, col(1, 2, 3, 1, 2, 3), 2).all_pass
    assert check_h_odd(gen_complete(3), col(1, 2, 3), 2).all_pass
    p3 = path_graph(3)
    rep = check_h_odd(p3, col(1, 2, 1), 1)
    assert not rep.all_pass and rep.failing_vertices().tolist() == [1]


def test_witness_report_json_shape():
    g = gen_cycle(5)
    rep = check_conflict_free(g, col(1, 2, 3, 4, 5), ThresholdSpec.constant(1))
    obj = json.loads(rep.to_json())
    assert obj["all_pass"] is True
    assert len(obj["vertices"]) == 5
    assert {"v", "degree", "solitary", "odd", "demanded", "pass"} <= set(obj["vertices"][0])


def test_colouring_json_round_trip():
    c = col(1, 2, 7)
    assert Colouring.from_json(c.to_json()) == c
    with pytest.raises(ValueError):
        Colouring.from_json('{"n": 2, "colours": [1, 2, 3]}')


def test_threshold_spec():
    g = star_graph(5)
    f = ThresholdSpec.degree_split(g, 2.5, inside=1, outside=0)
    assert f.value(1) == 1 and f.value(0) == 0
    assert f.values(6).tolist() == [0, 1, 1, 1, 1, 1]
    with pytest.raises(ValueError):
        ThresholdSpec(frozenset(), -1, 0)


def _random_colouring(n: int, kmax: int, rng) -> Colouring:
    return Colouring(rng.integers(1, kmax + 1, size=n).astype(np.int64))


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(1, 20),
    p=st.floats(0.0, 0.8),
    kmax=st.integers(1, 8),
    seed=st.integers(0, 2**32),
)
def test_solitary_subset_of_odd(n, p, kmax, seed):
    g = gen_random_graph(n, p, seed)
    rng = np.random.default_rng(seed)
    c = _random_colouring(n, kmax, rng)
    for v in range(n):
        sol = solitary_colours(g, c, v)
        odd = odd_colours(g, c, v)
        assert sol <= odd
        assert len(odd) <= g.degree(v)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 16), p=st.floats(0.0, 0.7), seed=st.integers(0, 2**32))
def test_zero_demand_passes_any_proper_colouring(n, p, seed):
    g = gen_random_graph(n, p, seed)
    rainbow = Colouring(np.arange(1, n + 1, dtype=np.int64))
    rep = check_conflict_free(g, rainbow, ThresholdSpec.constant(0))
    assert rep.all_pass


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(1, 14),
    p=st.floats(0.0, 0.8),
    seed=st.integers(0, 2**32),
    a=st.integers(0, 4),
    b=st.integers(0, 4),
    d=st.integers(0, 8),
)
def test_threshold_monotonicity(n, p, seed, a, b, d):
    g = gen_random_graph(n, p, seed)
    rng = np.random.default_rng(seed + 1)
    c = _random_colouring(n, 6, rng)
    f_hi = ThresholdSpec.degree_split(g, d, a, b)
    f_lo = ThresholdSpec.degree_split(g, d, max(0, a - 1), max(0, b - 1))
    rep_hi = check_conflict_free(g, c, f_hi)
    if rep_hi.witnesses_ok:
        assert check_conflict_free(g, c, f_lo).witnesses_ok


@settings(max_examples=20, deadline=None)
@given(n=st.integers(2, 12), p=st.floats(0.0, 0.6), seed=st.integers(0, 2**32))
def test_distance2_rainbow_passes_everything(n, p, seed):
    # All-distinct colours make every neighbourhood rainbow, so any demand
    # up to the max degree is met.
    g = gen_random_graph(n, p, seed)
    rainbow = Colouring(np.arange(1, n + 1, dtype=np.int64))
    delta = g.max_degree
    for a, b in [(delta, delta), (delta, 0), (0, delta)]:
        f = ThresholdSpec.degree_split(g, delta / 2, a, b)
        assert check_conflict_free(g, rainbow, f).all_pass


def test_witness_lists_against_definitions(rng):
    g = gen_random_graph(18, 0.3, 99)
    c = _random_colouring(18, 5, rng)
    lists = witness_lists(g, c)
    for v in range(g.n):
        sol = solitary_colours(g, c, v)
        expect = [int(u) for u in g.neighbours(v) if int(c.colours[u]) in sol]
        assert lists[v] == expect

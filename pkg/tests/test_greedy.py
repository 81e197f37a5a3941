from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcfcolour import (
    ThresholdSpec,
    check_conflict_free,
    degeneracy_ordering,
    gen_complete,
    gen_cycle,
    gen_random_graph,
    gen_random_regular,
    greedy_hpcf,
    greedy_hpcf_degenerate,
    is_proper,
    partial_greedy,
)

from conftest import petersen, random_tree, star_graph


def test_k2_h1():
    g = gen_complete(2)
    c, trace = greedy_hpcf(g, 1)
    assert c.colours.tolist() == [1, 2]
    assert check_conflict_free(g, c, ThresholdSpec.constant(1)).all_pass
    assert trace.colours_used == 2


def test_c5_h1_bound():
    g = gen_cycle(5)
    c, _ = greedy_hpcf(g, 1)
    assert c.max_colour <= (1 + 1) * 2 + 1 == 5
    assert check_conflict_free(g, c, ThresholdSpec.constant(1)).all_pass


def test_petersen_h2():
    g = petersen()
    c, _ = greedy_hpcf(g, 2)
    assert c.max_colour <= 3 * 3 + 1 == 10
    assert check_conflict_free(g, c, ThresholdSpec.constant(2)).all_pass


def test_invalid_ordering_rejected():
    g = gen_cycle(4)
    with pytest.raises(ValueError):
        greedy_hpcf(g, 1, ordering=[0, 1, 2, 2])
    with pytest.raises(ValueError):
        greedy_hpcf(g, 0)


def test_trace_witness_sets_structure():
    g = petersen()
    order = list(range(10))[::-1]
    c, trace = greedy_hpcf(g, 2, ordering=order)
    pos = {v: i for i, v in enumerate(trace.ordering)}
    for v in range(g.n):
        w = trace.reserved_witnesses[v]
        assert len(w) == min(2, g.degree(v))
        nbrs = set(g.neighbours(v).tolist())
        assert set(w) <= nbrs
        rest = nbrs - set(w)
        if w and rest:
            assert max(pos[x] for x in w) < min(pos[y] for y in rest)


def test_degenerate_on_tree(rng):
    g = random_tree(60, rng)
    order = degeneracy_ordering(g)
    c, _ = greedy_hpcf_degenerate(g, 1, order)
    # trees have degeneracy 1
    assert c.max_colour <= g.max_degree + 1 + 1
    assert check_conflict_free(g, c, ThresholdSpec.constant(1)).all_pass


def test_degenerate_on_cycle():
    g = gen_cycle(9)
    c, _ = greedy_hpcf_degenerate(g, 1, degeneracy_ordering(g))
    assert c.max_colour <= 2 + 2 + 1 == 5
    assert check_conflict_free(g, c, ThresholdSpec.constant(1)).all_pass


def test_degenerate_bound_never_better_than_plain_on_complete():
    g = gen_complete(6)
    h = 2
    c, _ = greedy_hpcf_degenerate(g, h, degeneracy_ordering(g))
    # back-degree is n-1, so the cap degrades to the plain greedy cap
    assert c.max_colour <= h * 5 + 5 + 1 == (h + 1) * 5 + 1


def test_partial_greedy_k2():
    g = gen_complete(2)
    c, _, spec = partial_greedy(g, 1)
    assert c.max_colour <= 1 * 1 + 1 == 2
    assert spec.value(0) == 0  # both endpoints exceed the degree threshold 1/2
    assert check_conflict_free(g, c, spec).all_pass


def test_partial_greedy_star():
    g = star_graph(5)
    c, _, spec = partial_greedy(g, 1)
    assert c.max_colour <= 1 * 5 + 1 == 6
    assert spec.value(0) == 0 and spec.value(1) == 1  # centre is past the threshold
    assert check_conflict_free(g, c, spec).all_pass


def test_partial_greedy_4regular():
    g = gen_random_regular(30, 4, seed=17)
    c, _, spec = partial_greedy(g, 1)
    # threshold is 2, so every vertex is demanded h-1 = 0
    assert spec.values(g.n).tolist() == [0] * g.n
    assert c.max_colour <= 5
    assert is_proper(g, c)


def test_partial_greedy_ordering_places_high_before_low():
    g = star_graph(4)
    _, trace, _ = partial_greedy(g, 1)
    assert trace.ordering[0] == 0  # the centre has the top degree


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(2, 40),
    p=st.floats(0.02, 0.5),
    h=st.integers(1, 3),
    seed=st.integers(0, 2**32),
    shuffle_seed=st.integers(0, 2**32),
)
def test_greedy_always_valid_any_ordering(n, p, h, seed, shuffle_seed):
    g = gen_random_graph(n, p, seed)
    order = np.random.default_rng(shuffle_seed).permutation(n).tolist()
    c, _ = greedy_hpcf(g, h, ordering=order)
    assert check_conflict_free(g, c, ThresholdSpec.constant(h)).all_pass
    assert c.max_colour <= (h + 1) * g.max_degree + 1


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(2, 40),
    p=st.floats(0.02, 0.5),
    h=st.integers(1, 3),
    seed=st.integers(0, 2**32),
)
def test_partial_greedy_always_valid(n, p, h, seed):
    g = gen_random_graph(n, p, seed)
    c, _, spec = partial_greedy(g, h)
    assert check_conflict_free(g, c, spec).all_pass
    assert c.max_colour <= h * g.max_degree + 1

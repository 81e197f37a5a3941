from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcfcolour import (
    SearchBudget,
    ThresholdSpec,
    check_conflict_free,
    check_h_odd,
    exact_chi_odd,
    exact_chi_pcf,
    gen_complete,
    gen_cycle,
    gen_random_graph,
    gen_subdivided_complete,
    greedy_hpcf,
)

from conftest import brute_force_chi


def test_tiny_exact_values():
    assert exact_chi_pcf(gen_complete(2), 1).value == 2
    assert exact_chi_pcf(gen_complete(3), 1).value == 3
    assert exact_chi_odd(gen_complete(2), 1).value == 2
    assert exact_chi_odd(gen_complete(3), 1).value == 3


def test_cycle_values_match_brute_force():
    for n, expected in [(4, 4), (5, 5), (6, 3)]:
        g = gen_cycle(n)
        assert brute_force_chi(g, 1) == expected
        res = exact_chi_pcf(g, 1)
        assert res.value == expected
        assert res.status == "exact"


def test_certificate_reverifies_independently():
    g = gen_subdivided_complete(4)
    res = exact_chi_pcf(g, 1)
    rep = check_conflict_free(g, res.certificate, ThresholdSpec.constant(1))
    assert rep.all_pass
    assert res.certificate.max_colour <= res.value


def test_refutations_are_recorded():
    res = exact_chi_pcf(gen_cycle(5), 1)
    assert res.value == 5
    assert set(res.refutations) == {2, 3, 4}
    assert all(n > 0 for n in res.refutations.values())


def test_odd_oracle_cycle():
    res = exact_chi_odd(gen_cycle(5), 1)
    assert res.value == brute_force_chi(gen_cycle(5), 1, use_odd=True)
    assert res.value <= exact_chi_pcf(gen_cycle(5), 1).value
    rep = check_h_odd(gen_cycle(5), res.certificate, 1)
    assert rep.all_pass


def test_budget_exhaustion_reported():
    g = gen_subdivided_complete(5)
    res = exact_chi_pcf(g, 1, SearchBudget(max_nodes=5))
    assert res.exhausted and res.value is None
    res_t = exact_chi_pcf(g, 1, SearchBudget(time_limit=0.0))
    assert res_t.exhausted


def test_h_must_be_positive():
    with pytest.raises(ValueError):
        exact_chi_pcf(gen_cycle(4), 0)


def test_edgeless_graph():
    from pcfcolour import Graph

    g = Graph.from_edges(4, [])
    assert exact_chi_pcf(g, 1).value == 1


@settings(max_examples=12, deadline=None)
@given(n=st.integers(2, 6), p=st.floats(0.1, 0.9), h=st.integers(1, 2), seed=st.integers(0, 2**32))
def test_search_matches_exhaustive_enumeration(n, p, h, seed):
    g = gen_random_graph(n, p, seed)
    assert exact_chi_pcf(g, h).value == brute_force_chi(g, h)
    assert exact_chi_odd(g, h).value == brute_force_chi(g, h, use_odd=True)


@settings(max_examples=12, deadline=None)
@given(n=st.integers(2, 7), p=st.floats(0.1, 0.8), seed=st.integers(0, 2**32))
def test_odd_never_exceeds_pcf_and_greedy_never_beats_oracle(n, p, seed):
    g = gen_random_graph(n, p, seed)
    pcf_val = exact_chi_pcf(g, 1).value
    assert exact_chi_odd(g, 1).value <= pcf_val
    col, _ = greedy_hpcf(g, 1)
    assert col.colours_used >= pcf_val

from __future__ import annotations

import itertools

import numpy as np
import pytest

from pcfcolour import Colouring, Graph, ThresholdSpec, check_conflict_free, check_h_odd


def petersen() -> Graph:
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    ]
    return Graph.from_edges(10, edges)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def brute_force_chi(g: Graph, h: int, use_odd: bool = False) -> int:
    """Exhaustive minimum colour count for tiny graphs; the independent
    oracle against which the backtracking search is checked."""
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(1, k + 1), repeat=g.n):
            c = Colouring(np.asarray(assignment, dtype=np.int64))
            report = (
                check_h_odd(g, c, h)
                if use_odd
                else check_conflict_free(g, c, ThresholdSpec.constant(h))
            )
            if report.all_pass:
                return k
    raise AssertionError("no colouring found up to n colours")


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)

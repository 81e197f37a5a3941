"""Deterministic greedy colourings with reserved witness sets.

All three variants share one sequential scheme: walk the vertices in a fixed
order, reserve for each vertex v the earliest-processed min-size subset W(v)
of its neighbours, and colour each vertex with the smallest colour that
clashes neither with its coloured neighbours nor with any coloured member of
W(u) for a neighbour u. Avoiding W(u)'s colours is what keeps every member
of W(u) solitary in N(u) for good, so the reserved sets end up as witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .colouring import Colouring, ThresholdSpec
from .graphs import Graph

__all__ = [
    "GreedyTrace",
    "greedy_hpcf",
    "greedy_hpcf_degenerate",
    "partial_greedy",
    "degeneracy_ordering",
]


@dataclass(frozen=True)
class GreedyTrace:
    """Audit record of one greedy run."""

    ordering: tuple[int, ...]
    reserved_witnesses: tuple[tuple[int, ...], ...]
    colours_used: int

    def to_json_obj(self) -> dict:
        return {
            "ordering": list(self.ordering),
            "reserved_witnesses": [list(w) for w in self.reserved_witnesses],
            "colours_used": self.colours_used,
        }


def _validate_ordering(g: Graph, ordering) -> list[int]:
    order = [int(v) for v in ordering]
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    return order


def _reserve_witness_sets(g: Graph, order: list[int], size_of) -> list[tuple[int, ...]]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    reserved: list[tuple[int, ...]] = []
    for v in range(g.n):
        nbrs = sorted(g.neighbours(v).tolist(), key=lambda u: pos[u])
        reserved.append(tuple(nbrs[: size_of(v)]))
    return reserved


def _run(g: Graph, order: list[int], reserved, max_forbidden: int):
    colour = [0] * g.n
    for v in order:
        forbidden: set[int] = set()
        for u in g.neighbours(v):
            cu = colour[u]
            if cu:
                forbidden.add(cu)
            for w in reserved[u]:
                cw = colour[w]
                if cw:
                    forbidden.add(cw)
        assert len(forbidden) <= max_forbidden, (
            f"{len(forbidden)} forbidden colours at vertex {v}, cap {max_forbidden}"
        )
        c = 1
        while c in forbidden:
            c += 1
        colour[v] = c
    return Colouring(np.asarray(colour, dtype=np.int64))


def greedy_hpcf(g: Graph, h: int, ordering=None) -> tuple[Colouring, GreedyTrace]:
    """Proper colouring with >= min(h, deg(v)) witnesses everywhere, using at
    most (h+1)*maxdeg + 1 colours, for any vertex ordering."""
    if h < 1:
        raise ValueError("h must be >= 1")
    order = list(range(g.n)) if ordering is None else _validate_ordering(g, ordering)
    reserved = _reserve_witness_sets(g, order, lambda v: min(h, g.degree(v)))
    col = _run(g, order, reserved, (h + 1) * g.max_degree)
    trace = GreedyTrace(tuple(order), tuple(reserved), col.colours_used)
    return col, trace


def degeneracy_ordering(g: Graph) -> list[int]:
    """Smallest-last colouring order: every vertex has at most degeneracy(G)
    neighbours before it."""
    remaining_deg = g.degrees.copy()
    alive = [True] * g.n
    removal: list[int] = []
    import heapq

    heap = [(int(remaining_deg[v]), v) for v in range(g.n)]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != remaining_deg[v]:
            continue
        alive[v] = False
        removal.append(v)
        for u in g.neighbours(v):
            if alive[u]:
                remaining_deg[u] -= 1
                heapq.heappush(heap, (int(remaining_deg[u]), int(u)))
    removal.reverse()
    return removal


def greedy_hpcf_degenerate(g: Graph, h: int, ordering) -> tuple[Colouring, GreedyTrace]:
    """Greedy run over a supplied low-back-degree ordering.

    With back-degree d (max number of neighbours of a vertex that precede it
    in the ordering), the colour count is at most h*maxdeg + d + 1.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    order = _validate_ordering(g, ordering)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    back = 0
    for v in range(g.n):
        back = max(back, sum(1 for u in g.neighbours(v) if pos[u] < pos[v]))
    reserved = _reserve_witness_sets(g, order, lambda v: min(h, g.degree(v)))
    col = _run(g, order, reserved, h * g.max_degree + back)
    trace = GreedyTrace(tuple(order), tuple(reserved), col.colours_used)
    return col, trace


def partial_greedy(g: Graph, h: int) -> tuple[Colouring, GreedyTrace, ThresholdSpec]:
    """Precolouring that spends only h*maxdeg + 1 colours.

    Vertices of degree above h*maxdeg/(h+1) are processed first (decreasing
    degree, ties by index) and reserve one witness fewer; the low-degree tail
    still gets its full min(h, deg) reserved witnesses. At every step at most
    h*maxdeg colours are forbidden, hence the colour bound.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    delta = g.max_degree
    threshold = h * delta / (h + 1)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    high = g.degrees > threshold

    def size_of(v: int) -> int:
        cap = h - 1 if high[v] else h
        return max(0, min(cap, g.degree(v)))

    reserved = _reserve_witness_sets(g, order, size_of)
    col = _run(g, order, reserved, h * delta)
    trace = GreedyTrace(tuple(order), tuple(reserved), col.colours_used)
    spec = ThresholdSpec.degree_split(g, threshold, inside=h, outside=h - 1)
    return col, trace, spec

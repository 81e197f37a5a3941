"""Immutable simple undirected graphs, deterministic generators, and .col I/O.

Graphs are stored in CSR form (``indptr``/``indices`` int64 arrays) with
adjacency lists sorted ascending, which gives deterministic iteration and a
layout the counting kernels can consume directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .rng import generator, mix

ALL_EDGES = "all"

__all__ = [
    "Graph",
    "ALL_EDGES",
    "gen_cycle",
    "gen_complete",
    "gen_subdivided_complete",
    "gen_random_graph",
    "gen_random_regular",
    "vertex_split",
    "read_col",
    "write_col",
    "graph_to_col_text",
    "graph_from_col_text",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency."""

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    edge_count: int
    _degrees: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; rejects loops and duplicates."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        deg = np.zeros(n, dtype=np.int64)
        for u, v in seen:
            deg[u] += 1
            deg[v] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.zeros(int(indptr[-1]), dtype=np.int64)
        cursor = indptr[:-1].copy()
        for u, v in sorted(seen):
            indices[cursor[u]] = v
            cursor[u] += 1
            indices[cursor[v]] = u
            cursor[v] += 1
        for v in range(n):
            seg = indices[indptr[v] : indptr[v + 1]]
            seg.sort()
        indptr.flags.writeable = False
        indices.flags.writeable = False
        deg.flags.writeable = False
        return cls(n=n, indptr=indptr, indices=indices, edge_count=len(seen), _degrees=deg)

    # -- queries ----------------------------------------------------------

    def neighbours(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return int(self._degrees.max()) if self.n else 0

    @property
    def min_degree(self) -> int:
        return int(self._degrees.min()) if self.n else 0

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbours(u):
                if u < v:
                    yield u, int(v)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbours(u)
        i = int(np.searchsorted(row, v))
        return i < len(row) and row[i] == v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- generators -------------------------------------------------------------


def gen_cycle(n: int) -> Graph:
    """Cycle C_n on n >= 3 vertices."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_subdivided_complete(n: int, edges_to_subdivide=ALL_EDGES) -> Graph:
    """K_n with each selected edge uv replaced by a path u-w-v.

    Subdivision vertices are appended after the original n vertices, one per
    selected edge in lexicographic edge order, so vertex ids are stable.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    kn_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if edges_to_subdivide == ALL_EDGES:
        chosen = list(kn_edges)
    else:
        chosen = []
        seen = set()
        for u, v in edges_to_subdivide:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"({u},{v}) is not an edge of K_{n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e} in subdivision set")
            seen.add(e)
            chosen.append(e)
        chosen.sort()
    chosen_set = set(chosen)
    out_edges: list[tuple[int, int]] = [e for e in kn_edges if e not in chosen_set]
    w = n
    for u, v in chosen:
        out_edges.append((u, w))
        out_edges.append((w, v))
        w += 1
    return Graph.from_edges(n + len(chosen), out_edges)


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); deterministic for fixed (n, p, seed)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = generator(seed)
    edges: list[tuple[int, int]] = []
    if n >= 2 and p > 0.0:
        us, vs = np.triu_indices(n, k=1)
        hit = rng.random(len(us)) < p
        edges = list(zip(us[hit].tolist(), vs[hit].tolist()))
    return Graph.from_edges(n, edges)


def gen_random_regular(n: int, d: int, seed: int, max_retries: int = 1000) -> Graph:
    """Simple d-regular graph from the pairing (configuration) model.

    Stubs are paired uniformly; loops and duplicate pairs are rejected and
    their stubs re-paired until none remain, and an attempt that can no
    longer place any leftover stub is abandoned. Each attempt draws from a
    seed derived by folding the retry counter into the seed stream, so the
    result is a pure function of (n, d, seed).
    """
    if d < 0 or d >= n:
        raise ValueError("need 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    if d == 0:
        return Graph.from_edges(n, [])
    if d > (n - 1) // 2 and (n * (n - 1 - d)) % 2 == 0:
        # Dense case: pair the complement instead, which is sparse and makes
        # the rejection loop converge quickly.
        co = gen_random_regular(n, n - 1 - d, seed, max_retries)
        all_edges = ((u, v) for u in range(n) for v in range(u + 1, n))
        return Graph.from_edges(n, [e for e in all_edges if not co.has_edge(*e)])

    def attempt_once(rng) -> set[tuple[int, int]] | None:
        edges: set[tuple[int, int]] = set()
        stubs = list(range(n)) * d
        while stubs:
            rejected: list[int] = []
            perm = rng.permutation(np.asarray(stubs, dtype=np.int64))
            it = iter(perm.tolist())
            for u, v in zip(it, it):
                if u > v:
                    u, v = v, u
                if u != v and (u, v) not in edges:
                    edges.add((u, v))
                else:
                    rejected.append(u)
                    rejected.append(v)
            if not rejected:
                return edges
            placeable = any(
                a != b and ((a, b) if a < b else (b, a)) not in edges
                for i, a in enumerate(rejected)
                for b in rejected[i + 1 :]
            )
            if not placeable:
                return None
            stubs = rejected
        return edges

    for attempt in range(max_retries):
        edges = attempt_once(generator(mix(seed, attempt)))
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise RuntimeError(f"no simple {d}-regular pairing found in {max_retries} retries")


def vertex_split(g: Graph, d: float) -> tuple[np.ndarray, np.ndarray]:
    """Partition V(G) into (degree <= d, degree > d), both sorted ascending."""
    le = np.flatnonzero(g.degrees <= d)
    gt = np.flatnonzero(g.degrees > d)
    return le, gt


# -- DIMACS-style .col text ---------------------------------------------------


def graph_to_col_text(g: Graph) -> str:
    """Canonical .col text: header then edge lines sorted lexicographically."""
    lines = [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    lines.sort()
    return "\n".join([f"p edge {g.n} {g.edge_count}", *lines]) + "\n"


def graph_from_col_text(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"bad problem line: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError("edge line before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise ValueError(f"unrecognized line: {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    return Graph.from_edges(n, edges)


def write_col(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(graph_to_col_text(g))


def read_col(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return graph_from_col_text(fh.read())

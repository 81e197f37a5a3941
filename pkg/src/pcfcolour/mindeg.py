"""Precolouring for graphs of large minimum degree.

The target is a proper (maxdeg + 3d)-colouring in which every vertex of
degree at most d has 2h witnesses. With that many colours, every vertex
always has at least 3d admissible colours while at most d of them can occur
in a low-degree neighbourhood, so random resampling drives neighbourhoods
towards mostly-solitary colours. We approximate a uniformly random proper
colouring by greedy seeding plus full resampling sweeps, then gate the
result through the verifier and restart on rejection; accepted outputs are
correct by construction of the gate, not by trust in the sampler.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .colouring import Colouring, ThresholdSpec, check_conflict_free
from .errors import RestartsExhausted, StrictModeWarning
from .graphs import Graph
from .rng import generator, mix

__all__ = ["ResampleState", "precolour_mindeg", "resample_sweep", "greedy_proper_seed"]


@dataclass
class ResampleState:
    """Mutable colouring state for the resampling sweeps; kept proper at all
    times."""

    colours: np.ndarray
    k: int

    def available(self, g: Graph, v: int) -> np.ndarray:
        """Colours in [1, k] not used on N(v); at least k - deg(v) of them."""
        mask = np.ones(self.k + 1, dtype=bool)
        mask[0] = False
        mask[self.colours[g.neighbours(v)]] = False
        return np.flatnonzero(mask)


def greedy_proper_seed(g: Graph, k: int) -> np.ndarray:
    """First-fit proper colouring; uses at most maxdeg + 1 <= k colours."""
    colours = np.zeros(g.n, dtype=np.int64)
    for v in range(g.n):
        used = set(int(colours[u]) for u in g.neighbours(v) if colours[u])
        c = 1
        while c in used:
            c += 1
        if c > k:
            raise ValueError(f"k={k} too small for a first-fit proper colouring")
        colours[v] = c
    return colours


def _sweep_inplace(g: Graph, state: ResampleState, order, rng: np.random.Generator) -> None:
    lower = max(1, state.k - g.max_degree)
    for v in order:
        avail = state.available(g, int(v))
        assert len(avail) >= lower, "available-colour floor violated"
        state.colours[int(v)] = int(avail[rng.integers(len(avail))])


def resample_sweep(g: Graph, state: ResampleState, order, seed: int) -> ResampleState:
    """Resample every vertex once, in the given order, uniformly from its
    currently available colours. Properness is preserved by construction."""
    order = [int(v) for v in order]
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    new = ResampleState(colours=state.colours.copy(), k=state.k)
    _sweep_inplace(g, new, order, generator(seed))
    return new


def precolour_mindeg(
    g: Graph,
    h: int,
    d: int,
    seed: int,
    max_restarts: int = 20,
    strict: bool = False,
    sweeps: int | None = None,
) -> tuple[Colouring, ThresholdSpec, int]:
    """Proper (maxdeg + 3d)-colouring giving 2h witnesses below degree d.

    Returns (colouring, demands, attempts). Each attempt reseeds the
    resampling sweeps from the deterministic greedy seed; an attempt is
    accepted only if the verifier passes its threshold spec. Raises
    RestartsExhausted when the budget runs out.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    if d < 1:
        raise ValueError("degree threshold d must be >= 1")
    delta_max, delta_min = g.max_degree, g.min_degree
    problems = []
    if not delta_min <= d <= delta_max:
        problems.append(f"d={d} outside [min degree {delta_min}, max degree {delta_max}]")
    if delta_max >= 2:
        if h < 20 * math.log(delta_max):
            problems.append("h below 20 log maxdeg")
    if delta_min < 16 * h:
        problems.append("min degree below 16h")
    if problems:
        if strict:
            raise ValueError("; ".join(problems))
        warnings.warn("; ".join(problems), StrictModeWarning, stacklevel=2)

    k = delta_max + 3 * d
    f = ThresholdSpec.degree_split(g, d, inside=2 * h, outside=0)
    seed_colours = greedy_proper_seed(g, k)
    n_sweeps = sweeps if sweeps is not None else max(1, math.ceil(10 * math.log(max(g.n, 2))))
    for attempt in range(1, max_restarts + 1):
        rng = generator(mix(seed, attempt))
        state = ResampleState(colours=seed_colours.copy(), k=k)
        order = list(range(g.n))
        for _ in range(n_sweeps):
            _sweep_inplace(g, state, order, rng)
        candidate = Colouring(state.colours)
        if check_conflict_free(g, candidate, f).all_pass:
            return candidate, f, attempt
    raise RestartsExhausted(
        f"no accepted colouring in {max_restarts} attempts (k={k}, d={d}, h={h})",
        max_restarts,
    )

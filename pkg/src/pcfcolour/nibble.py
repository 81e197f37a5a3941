"""Randomized recolouring rounds that add witnesses to high-degree vertices.

One run executes m rounds. Round i samples a vertex set A_i (each vertex
independently with probability p), blocks every vertex whose blocking
neighbourhood meets A_i or that was already kept since the last reset, and
keeps the rest as C_i, an independent set recoloured with fresh colour k+i.
A fail-safe resets the kept window whenever some high-degree vertex has lost
more than half its neighbourhood to recolouring. Success demands that the
window was never reset and that every high-degree vertex gained at least eta
fresh witnesses (variant B also demands that at most half of each reserved
witness set was ever sampled).

Variant A blocks through N(u) plus the reserved witness sets of N(u), which
deterministically preserves every reserved witness; variant B blocks through
N(u) only and preserves just the reserved witnesses that were never sampled.

A restart driver resamples whole runs with derived seeds until one succeeds,
standing in for the positive-probability existence argument.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .colouring import Colouring, ThresholdSpec, check_conflict_free, witness_lists
from .errors import StrictModeWarning
from .graphs import Graph
from .rng import generator, mix

__all__ = [
    "NibbleParams",
    "NibbleOutcome",
    "make_params",
    "select_witness_sets",
    "nibble_run",
    "restart_driver",
    "conclusion_spec",
]


@dataclass(frozen=True)
class NibbleParams:
    variant: str  # "A" or "B"
    h: int
    h0: int
    d: float
    eta: int
    p: float
    m: int
    base_colours: int
    strict_ok: bool
    strict_violations: tuple[str, ...] = field(default_factory=tuple)

    def to_json_obj(self) -> dict:
        return {
            "variant": self.variant,
            "h": self.h,
            "h0": self.h0,
            "d": self.d,
            "eta": self.eta,
            "p": self.p,
            "m": self.m,
            "base_colours": self.base_colours,
            "strict_ok": self.strict_ok,
            "strict_violations": list(self.strict_violations),
        }


def make_params(
    variant: str, h: int, h0: int, d: float, eta: int, g: Graph, k: int, warn: bool = True
) -> NibbleParams:
    """Derive (p, m) for one run and record which hypotheses hold.

    Variant A: p = 1/((h+2) * maxdeg), m = ceil(8e (h+2) maxdeg eta / d).
    Variant B: p = 1/(2 * maxdeg),     m = ceil(8e maxdeg eta / d).
    Logs are natural.
    """
    if variant not in ("A", "B"):
        raise ValueError("variant must be 'A' or 'B'")
    if d <= 0:
        raise ValueError("degree threshold d must be positive")
    if eta <= 0:
        raise ValueError("eta must be positive")
    if not h >= h0 >= 0:
        raise ValueError("need h >= h0 >= 0")
    delta_max = g.max_degree
    if delta_max < 1:
        raise ValueError("graph has no edges to recolour around")
    log_delta = math.log(delta_max)
    violations: list[str] = []
    if variant == "A":
        p = 1.0 / ((h + 2) * delta_max)
        m = math.ceil(8 * math.e * (h + 2) * delta_max * eta / d)
        if delta_max < 30000:
            violations.append("max degree below 30000")
        if h0 > d / 4:
            violations.append("h0 exceeds d/4")
        if eta < 28 * log_delta:
            violations.append("eta below 28 log maxdeg")
    else:
        p = 1.0 / (2 * delta_max)
        m = math.ceil(8 * math.e * delta_max * eta / d)
        if delta_max < 20000:
            violations.append("max degree below 20000")
        if eta < 20 * log_delta:
            violations.append("eta below 20 log maxdeg")
        if h0 < 20 * log_delta:
            violations.append("h0 below 20 log maxdeg")
        if g.min_degree < h0:
            violations.append("min degree below h0")
    if eta > d / 100:
        violations.append("eta exceeds d/100")
    strict_ok = not violations
    if warn and violations:
        warnings.warn(
            f"variant {variant} run outside guaranteed regime: {'; '.join(violations)}",
            StrictModeWarning,
            stacklevel=2,
        )
    return NibbleParams(variant, h, h0, d, eta, p, m, k, strict_ok, tuple(violations))


def select_witness_sets(
    g: Graph, sigma0: Colouring, f0: ThresholdSpec, params: NibbleParams
) -> tuple[tuple[int, ...], ...]:
    """Reserved witness sets drawn from the precolouring.

    Variant A reserves min(h, deg) witnesses below the degree threshold and
    min(h0, deg) above it; variant B reserves min(h0, deg) below and nothing
    above. Witnesses are taken lowest-index-first for determinism.
    """
    report = check_conflict_free(g, sigma0, f0)
    if not report.all_pass:
        raise ValueError("precolouring does not satisfy its threshold spec")
    lists = witness_lists(g, sigma0)
    out: list[tuple[int, ...]] = []
    for v in range(g.n):
        low = g.degree(v) <= params.d
        if params.variant == "A":
            want = min(params.h, g.degree(v)) if low else min(params.h0, g.degree(v))
        else:
            want = min(params.h0, g.degree(v)) if low else 0
        if len(lists[v]) < want:
            raise ValueError(f"vertex {v} has {len(lists[v])} witnesses, needs {want}")
        out.append(tuple(lists[v][:want]))
    return tuple(out)


@dataclass
class NibbleOutcome:
    colouring: Colouring
    success: bool
    i0: int
    x_counts: np.ndarray
    failsafe_triggers: int
    sampled_any: np.ndarray  # vertex ever drawn into some A_i
    seed: int
    params: NibbleParams
    attempts: int = 1
    rounds_a: list[list[int]] | None = None
    rounds_c: list[list[int]] | None = None

    def x_histogram(self) -> dict[int, int]:
        vals, counts = np.unique(self.x_counts, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def to_json_obj(self) -> dict:
        return {
            "success": self.success,
            "attempts": self.attempts,
            "i0": self.i0,
            "failsafe_triggers": self.failsafe_triggers,
            "seed": self.seed,
            "max_colour": self.colouring.max_colour,
            "x_histogram": {str(k): v for k, v in sorted(self.x_histogram().items())},
            "params": self.params.to_json_obj(),
        }


def _blocking_sets(g: Graph, witness_sets, variant: str):
    """Per-vertex blocking neighbourhood, built lazily.

    Variant A: N(u), plus the reserved sets of all neighbours, minus u.
    Variant B: N(u).
    """
    cache: dict[int, list[int]] = {}

    def block(u: int) -> list[int]:
        got = cache.get(u)
        if got is None:
            if variant == "A":
                s = set(g.neighbours(u).tolist())
                for x in g.neighbours(u):
                    s.update(witness_sets[x])
                s.discard(u)
                got = list(s)
            else:
                got = g.neighbours(u).tolist()
            cache[u] = got
        return got

    return block


def nibble_run(
    g: Graph,
    sigma0: Colouring,
    witness_sets,
    params: NibbleParams,
    seed: int,
    retain_sets: bool = False,
) -> NibbleOutcome:
    """One full pass of the m recolouring rounds. Always terminates with a
    proper colouring; the success flag reports whether the run met its
    witness-gain targets without a fail-safe reset."""
    if sigma0.n != g.n:
        raise ValueError("precolouring size mismatch")
    n = g.n
    rng = generator(seed)
    p, m, k = params.p, params.m, params.base_colours
    degrees = g.degrees
    high = degrees > params.d
    block = _blocking_sets(g, witness_sets, params.variant)
    in_a = np.zeros(n, dtype=bool)
    sampled_any = np.zeros(n, dtype=bool)
    in_kept = np.zeros(n, dtype=bool)
    kept_nbrs = np.zeros(n, dtype=np.int64)
    rounds_c: list[list[int]] = []
    rounds_a: list[list[int]] | None = [] if retain_sets else None
    round_hits: list[dict[int, tuple[int, int]]] = []
    i0 = 1
    failsafe_triggers = 0
    for i in range(1, m + 1):
        size = int(rng.binomial(n, p))
        members = np.sort(rng.choice(n, size=size, replace=False)) if size else np.empty(0, dtype=np.int64)
        in_a[members] = True
        sampled_any[members] = True
        if rounds_a is not None:
            rounds_a.append([int(a) for a in members])
        c_i: list[int] = []
        for a in members:
            a = int(a)
            if in_kept[a]:
                continue
            if any(in_a[b] for b in block(a)):
                continue
            c_i.append(a)
        in_a[members] = False
        rounds_c.append(c_i)
        hits: dict[int, tuple[int, int]] = {}
        trigger = False
        for cvx in c_i:
            in_kept[cvx] = True
        for cvx in c_i:
            for w in g.neighbours(cvx):
                w = int(w)
                prev = hits.get(w)
                hits[w] = (1, cvx) if prev is None else (prev[0] + 1, cvx)
                kept_nbrs[w] += 1
                if high[w] and 2 * kept_nbrs[w] > degrees[w]:
                    trigger = True
        round_hits.append(hits)
        if trigger:
            i0 = i + 1
            failsafe_triggers += 1
            in_kept[:] = False
            kept_nbrs[:] = 0
    final = np.array(sigma0.colours, dtype=np.int64)
    for i in range(i0, m + 1):
        for cvx in rounds_c[i - 1]:
            final[cvx] = k + i
    x_counts = np.zeros(n, dtype=np.int64)
    for i in range(i0, m + 1):
        for v, (count, u) in round_hits[i - 1].items():
            if count == 1 and high[v]:
                if params.variant == "B" or u not in witness_sets[v]:
                    x_counts[v] += 1
    ok = i0 == 1 and bool(np.all(x_counts[high] >= params.eta))
    if ok and params.variant == "B":
        for v in np.flatnonzero(~high):
            hit = sum(1 for u in witness_sets[int(v)] if sampled_any[u])
            if 2 * hit > params.h0:
                ok = False
                break
    return NibbleOutcome(
        colouring=Colouring(final),
        success=ok,
        i0=i0,
        x_counts=x_counts,
        failsafe_triggers=failsafe_triggers,
        sampled_any=sampled_any,
        seed=seed,
        params=params,
        rounds_a=rounds_a,
        rounds_c=rounds_c if retain_sets else None,
    )


def conclusion_spec(g: Graph, params: NibbleParams) -> ThresholdSpec:
    """Witness demands that a successful run certifies.

    Variant A: full h below the degree threshold (reserved witnesses
    survive), h0 + eta above it. Variant B: ceil(h0/2) below (at most
    floor(h0/2) reserved witnesses were sampled), eta above.
    """
    if params.variant == "A":
        inside, outside = params.h, params.h0 + params.eta
    else:
        inside, outside = (params.h0 + 1) // 2, params.eta
    return ThresholdSpec.degree_split(g, params.d, inside, outside)


def restart_driver(
    g: Graph,
    sigma0: Colouring,
    f0: ThresholdSpec,
    params: NibbleParams,
    max_restarts: int,
    seed: int,
    retain_sets: bool = False,
) -> NibbleOutcome:
    """Re-run nibble_run with derived seeds until a verified success.

    Attempt t uses seed mix(seed, t). Exhausting the budget is reported via
    ``success=False`` on the last outcome, not raised. A successful run is
    gated through the verifier before being returned; at parameters far from
    the guaranteed regime the procedure's own success flag can overstate the
    conclusion, and such attempts count as failures.
    """
    if max_restarts < 1:
        raise ValueError("max_restarts must be >= 1")
    witness_sets = select_witness_sets(g, sigma0, f0, params)
    out = None
    for attempt in range(1, max_restarts + 1):
        out = nibble_run(g, sigma0, witness_sets, params, mix(seed, attempt), retain_sets)
        out.attempts = attempt
        if out.success:
            if check_conflict_free(g, out.colouring, conclusion_spec(g, params)).all_pass:
                return out
            out.success = False
    assert out is not None
    return out

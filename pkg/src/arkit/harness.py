"""Brute-force oracles for tiny instances and stress probes of the stability theorem.

Oracles here share no code with the solvers they check: the rainbow and
matching oracles enumerate matchings directly.

Random probes draw from numpy's PCG64.  Trial ``i`` of a run with seed ``s``
uses the substream ``SeedSequence(s, spawn_key=(i,))``, so every trial is
reproducible on its own and across platforms.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from .colored_graph import ColoredGraph, Edge, iter_pairs, pair_index
from .errors import BudgetExceeded, InstanceTooLarge, RegimeError
from .extremal import (
    construct_extremal_coloring,
    construct_turan_graph,
    in_regime,
    join_graph,
    rainbow_plus_one,
    regime_variant,
    theorem_range,
    threshold_g,
)
from .rainbow import has_rainbow_matching
from .structures import find_mono_clique, find_mono_join, theorem_verdict

TURAN_ORACLE_LIMIT = 7
ANTI_RAMSEY_ORACLE_LIMIT = 5
RAINBOW_ORACLE_LIMIT = 10


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("ARKIT_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_map(func, items):
    workers = worker_count()
    if workers == 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


# ---------------------------------------------------------------------------
# Exhaustive oracles


def _rainbow_extends(edges: list[Edge], colors: list[int], need: int,
                     used_vertices: int, used_colors: frozenset, start: int) -> bool:
    if need == 0:
        return True
    for i in range(start, len(edges)):
        u, v = edges[i]
        c = colors[i]
        if used_vertices >> u & 1 or used_vertices >> v & 1 or c in used_colors:
            continue
        if _rainbow_extends(edges, colors, need - 1, used_vertices | 1 << u | 1 << v,
                            used_colors | {c}, i + 1):
            return True
    return False


def brute_force_max_rainbow(h: ColoredGraph) -> int:
    """Largest rainbow matching by enumerating every matching of K_n (n <= 10)."""
    if h.n > RAINBOW_ORACLE_LIMIT:
        raise InstanceTooLarge(f"rainbow oracle supports n <= {RAINBOW_ORACLE_LIMIT}")
    cols = h.colors.tolist()
    best = 0

    def walk(v: int, used: int, colors: frozenset, size: int) -> None:
        nonlocal best
        while v < h.n and used >> v & 1:
            v += 1
        if v >= h.n:
            best = max(best, size)
            return
        walk(v + 1, used | 1 << v, colors, size)  # v stays unmatched
        for u in range(v + 1, h.n):
            if used >> u & 1:
                continue
            c = cols[pair_index(h.n, v, u)]
            if c not in colors:
                walk(v + 1, used | 1 << v | 1 << u, colors | {c}, size + 1)

    walk(0, 0, frozenset(), 0)
    return best


def _has_matching(adj: list[int], alive: int, k: int) -> bool:
    if k == 0:
        return True
    if alive.bit_count() < 2 * k:
        return False
    v = (alive & -alive).bit_length() - 1
    rest = alive & ~(1 << v)
    nbrs = adj[v] & rest
    while nbrs:
        u = (nbrs & -nbrs).bit_length() - 1
        nbrs &= nbrs - 1
        if _has_matching(adj, rest & ~(1 << u), k - 1):
            return True
    return _has_matching(adj, rest, k)


def oracle_turan(n: int, k: int) -> int:
    """ex(n, M_k) by exhaustive search over edge subsets (n <= 7).

    Edges are added in lexicographic order; a branch dies as soon as it holds
    k disjoint edges (adding edges never destroys a matching) or cannot beat
    the best count found.
    """
    if n > TURAN_ORACLE_LIMIT:
        raise InstanceTooLarge(f"oracle_turan supports n <= {TURAN_ORACLE_LIMIT}")
    if k < 1:
        raise RegimeError("k must be positive")
    pairs = list(iter_pairs(n))
    m = len(pairs)
    adj = [0] * n
    full = (1 << n) - 1
    best = 0

    def walk(i: int, count: int) -> None:
        nonlocal best
        if count + (m - i) <= best:
            return
        if i == m:
            best = count
            return
        u, v = pairs[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if not _has_matching(adj, full, k):
            walk(i + 1, count + 1)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        walk(i + 1, count)

    walk(0, 0)
    return best


def _rainbow_free_coloring_exists(n: int, s: int, blocks: int) -> bool:
    """Is there a partition of E(K_n) into exactly ``blocks`` classes with no rainbow M_s?

    Restricted growth strings over the edges in lexicographic order; a prefix is
    abandoned once its assigned edges already contain a rainbow M_s.
    """
    pairs = list(iter_pairs(n))
    m = len(pairs)
    labels: list[int] = []

    def closes_rainbow(i: int) -> bool:
        # a new rainbow M_s must use edge i
        u, v = pairs[i]
        return _rainbow_extends(pairs[:i], labels[:i], s - 1, 1 << u | 1 << v,
                                frozenset({labels[i]}), 0)

    def walk(i: int, used: int) -> bool:
        if used + (m - i) < blocks:
            return False
        if i == m:
            return used == blocks
        for label in range(min(used + 1, blocks)):
            labels.append(label)
            ok = not closes_rainbow(i) and walk(i + 1, max(used, label + 1))
            labels.pop()
            if ok:
                return True
        return False

    return walk(0, 0)


def oracle_anti_ramsey(n: int, s: int) -> int:
    """ar(n, M_s) by enumerating all set partitions of E(K_n) (n <= 5).

    Rainbow-ness only depends on the partition into classes, so unlabeled
    partitions cover every coloring.
    """
    if n > ANTI_RAMSEY_ORACLE_LIMIT:
        raise InstanceTooLarge(f"oracle_anti_ramsey supports n <= {ANTI_RAMSEY_ORACLE_LIMIT}")
    if s < 1 or n < 2 * s:
        raise RegimeError(f"need s >= 1 and n >= 2s, got n={n}, s={s}")
    for blocks in range(1, comb(n, 2) + 1):
        if not _rainbow_free_coloring_exists(n, s, blocks):
            return blocks
    raise RegimeError(f"every color count admits a rainbow-free coloring (n={n}, s={s})")


# ---------------------------------------------------------------------------
# Probe reports


@dataclass
class ProbeReport:
    instance: dict
    trials: int = 0
    outcomes: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    observations: list[dict] = field(default_factory=list)
    inconclusive: int = 0
    base: dict | None = None

    def to_json(self) -> dict:
        return asdict(self)

    def canonical(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    def summary(self) -> str:
        lines = [f"instance: {json.dumps(self.instance, sort_keys=True)}",
                 f"trials: {self.trials}",
                 f"counterexamples: {len(self.counterexamples)}",
                 f"out-of-range observations: {len(self.observations)}",
                 f"inconclusive: {self.inconclusive}"]
        if self.base is not None:
            lines.append("base: " + " ".join(f"{k}={v}" for k, v in self.base.items()))
        return "\n".join(lines)


def _tally(report: ProbeReport, outcome: dict, h: ColoredGraph) -> None:
    report.outcomes.append(outcome)
    verdict = outcome.get("verdict")
    if verdict == "inconclusive":
        report.inconclusive += 1
    elif verdict == "counterexample":
        report.counterexamples.append({"trial": outcome["trial"], "coloring": h.colors.tolist()})
    elif verdict == "out-of-range-violation":
        report.observations.append({"trial": outcome["trial"], "coloring": h.colors.tolist()})


def _base_check(h: ColoredGraph, s: int, budget_ms) -> dict:
    g = threshold_g(h.n, s, permissive=True).g
    try:
        found, _ = has_rainbow_matching(h, s + 2, budget_ms=budget_ms)
        rainbow: bool | None = found
    except BudgetExceeded:
        rainbow = None
    clique = find_mono_clique(h, h.n - s) is not None
    join = find_mono_join(h, s) is not None
    colors = h.num_colors()
    return {"colors": colors, "g": g, "rainbow_found": rainbow, "clique": clique,
            "join": join,
            "tight": colors == g - 1 and rainbow is False and not clique and not join}


def _recolor_trial(args) -> dict:
    h, s, trial, edge, budget_ms = args
    recolored = h.recolored({edge: h.fresh_color()})
    rep = theorem_verdict(recolored, s, permissive=True, budget_ms=budget_ms)
    return {"trial": trial, "edge": list(edge), "colors": rep.color_count,
            "rainbow_found": None if rep.hypothesis_rainbow is None else not rep.hypothesis_rainbow,
            "clique": rep.conclusion_clique, "join": rep.conclusion_join,
            "verdict": rep.verdict}


def recolor_boundary_probe(n: int, s: int, variant: str | None = None,
                           permissive: bool = False,
                           budget_ms: float | None = None) -> ProbeReport:
    """Recolor each color-0 edge of the tight construction with a fresh color.

    The base coloring has g - 1 colors; each trial has exactly g colors and
    goes through :func:`theorem_verdict`.
    """
    variant = (variant or regime_variant(n, s)).upper()
    if not permissive and not in_regime(n, s, variant):
        raise RegimeError(f"(n={n}, s={s}) is outside the {variant} regime")
    h = construct_extremal_coloring(n, s, variant, permissive=permissive)
    report = ProbeReport({"probe": "boundary", "n": n, "s": s, "variant": variant,
                          "in_theorem_range": theorem_range(n, s)})
    report.base = _base_check(h, s, budget_ms)
    zero_edges = [(u, v) for u, v, c in h.colored_edges() if c == 0]
    jobs = [(h, s, i, e, budget_ms) for i, e in enumerate(zero_edges)]
    for (_, _, _, edge, _), outcome in zip(jobs, _parallel_map(_recolor_trial, jobs)):
        report.trials += 1
        _tally(report, outcome, h.recolored({edge: h.fresh_color()}))
    return report


# ---------------------------------------------------------------------------
# Random mutation walks


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def walk_bases(n: int, s: int) -> list[tuple[str, ColoredGraph]]:
    """Starting colorings: the tight construction and rainbow-plus-one over both
    M_{s+1}-free extremal graphs."""
    variant = regime_variant(n, s)
    bases = [(variant, construct_extremal_coloring(n, s, variant, permissive=True)),
             ("rainbow-plus-one:G(n,s)", rainbow_plus_one(n, construct_turan_graph(n, s)))]
    if n >= 2 * s + 1:
        bases.append(("rainbow-plus-one:K_{2s+1}", rainbow_plus_one(n, join_graph(0, [2 * s + 1], n - 2 * s - 1))))
    return bases


def mutate(colors: np.ndarray, n: int, rng: np.random.Generator) -> tuple[np.ndarray, dict]:
    """One random merge, split or single-edge recolor; returns the new colors and a description."""
    out = colors.copy()
    used, counts = np.unique(colors, return_counts=True)
    fresh = int(used.max()) + 1
    roll = rng.random()
    if roll < 0.3 and used.size >= 2:
        a, b = (int(x) for x in rng.choice(used, size=2, replace=False))
        out[out == b] = a
        return out, {"op": "merge", "into": a, "from": b}
    if roll < 0.65 and (counts >= 2).any():
        big = used[counts >= 2]
        c = int(big[rng.integers(big.size)])
        idx = np.flatnonzero(colors == c)
        if rng.random() < 0.5:
            v = int(rng.integers(n))
            star = [i for i in idx if v in _pair_at(n, int(i))]
            moved = np.array(star if 0 < len(star) < idx.size else [], dtype=np.int64)
        else:
            moved = idx[rng.random(idx.size) < 0.5]
        if moved.size == 0 or moved.size == idx.size:
            moved = idx[:1]
        out[moved] = fresh
        return out, {"op": "split", "color": c, "moved": int(moved.size)}
    i = int(rng.integers(colors.size))
    if rng.random() < 0.5 or used.size < 2:
        new = fresh
    else:
        others = used[used != colors[i]]
        new = int(others[rng.integers(others.size)])
    out[i] = new
    u, v = _pair_at(n, i)
    return out, {"op": "recolor", "edge": [u, v], "to": new}


def _pair_at(n: int, index: int) -> Edge:
    u = 0
    while index >= n - u - 1:
        index -= n - u - 1
        u += 1
    return (u, u + 1 + index)


def random_stability_search(n: int, s: int, samples: int, seed: int,
                            permissive: bool = False, budget_ms: float | None = None,
                            walk_length: int = 25) -> ProbeReport:
    """Mutation walks that stay free of rainbow M_{s+2}.

    Walk ``w`` restarts from base ``w mod #bases`` every ``walk_length`` trials.
    A mutation is kept only when an exact search finds no rainbow M_{s+2}; a
    kept coloring with at least g(n, s) colors is passed to the verdict.
    """
    if not permissive and not theorem_range(n, s):
        raise RegimeError(f"n={n}, s={s} is outside n >= max(2s+5, 40); use permissive mode")
    if n < 2 * s + 2:
        raise RegimeError("need n >= 2s+2")
    g = threshold_g(n, s, permissive=True).g
    bases = walk_bases(n, s)
    report = ProbeReport({"probe": "random", "n": n, "s": s, "samples": samples,
                          "seed": seed, "walk_length": walk_length, "g": g,
                          "bases": [name for name, _ in bases],
                          "in_theorem_range": theorem_range(n, s)})
    current = bases[0][1]
    for trial in range(samples):
        if trial % walk_length == 0:
            current = bases[(trial // walk_length) % len(bases)][1]
        rng = trial_rng(seed, trial)
        colors, move = mutate(current.colors, n, rng)
        candidate = ColoredGraph(n, colors)
        outcome = {"trial": trial, "move": move}
        try:
            found, _ = has_rainbow_matching(candidate, s + 2, budget_ms=budget_ms)
        except BudgetExceeded:
            outcome["verdict"] = "inconclusive"
            report.trials += 1
            _tally(report, outcome, candidate)
            continue
        outcome["accepted"] = not found
        if not found:
            current = candidate
            outcome["colors"] = candidate.num_colors()
            if outcome["colors"] >= g:
                rep = theorem_verdict(candidate, s, permissive=True, budget_ms=budget_ms)
                outcome.update(clique=rep.conclusion_clique, join=rep.conclusion_join,
                               verdict=rep.verdict)
        report.trials += 1
        _tally(report, outcome, candidate)
    return report

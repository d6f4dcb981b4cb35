"""Closed-form thresholds and the extremal graphs / colorings they come from.

All arithmetic is exact integer arithmetic.

Construction layout (fixed so certificates are comparable across runs):
hub vertices first, then the clique part, then the independent part.

* ``H1(n, s)``: F1 = K_{s-1} v (K_3 u co-K_{n-s-2}); hubs ``0..s-2``,
  triangle ``s-1..s+1``, independent ``s+2..n-1``.
* ``H2(n, s)``: F2 = K_1 v (K_{2s-1} u co-K_{n-2s}); hub ``0``, clique
  ``1..2s-1``, independent ``2s..n-1``.

In both, the edges of F are colored ``1..e(F)`` in lexicographic order and
every other edge gets color 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

import numpy as np

from .colored_graph import ColoredGraph, Graph, pair_count, pair_index
from .errors import RegimeError

Variant = Literal["H1", "H2"]


def turan_matching(n: int, k: int) -> int:
    """ex(n, M_k): most edges in an n-vertex graph without k disjoint edges."""
    if k < 1 or n < 2 * k:
        raise RegimeError(f"turan_matching needs k >= 1 and n >= 2k, got n={n}, k={k}")
    m = k - 1
    return max(comb(n, 2) - comb(n - m, 2), comb(2 * k - 1, 2))


def anti_ramsey_matching(n: int, s: int) -> int:
    """ar(n, M_s) for s >= 2, n >= 2s."""
    if s < 2 or n < 2 * s:
        raise RegimeError(f"anti_ramsey_matching needs s >= 2 and n >= 2s, got n={n}, s={s}")
    if n == 4 and s == 2:
        return 4
    if n == 2 * s and s >= 7:
        return turan_matching(n, s - 1) + 3
    return turan_matching(n, s - 1) + 2


def g1(n: int, s: int) -> int:
    return comb(n, 2) - comb(n - s + 1, 2) + 5


def g2(n: int, s: int) -> int:
    return comb(2 * s - 1, 2) + n + 1


@dataclass(frozen=True)
class ThresholdValues:
    g1: int
    g2: int
    g: int
    regime: str
    in_range: bool

    def __str__(self):
        return f"g1={self.g1} g2={self.g2} g={self.g}"


def threshold_g(n: int, s: int, permissive: bool = False) -> ThresholdValues:
    """The color threshold g(n, s) = max(g1, g2) and which term dominates.

    Outside ``n >= 2s + 5`` the values are still computed when ``permissive``
    is set, with ``in_range`` False.
    """
    if s < 1 or n < 1:
        raise RegimeError("n and s must be positive")
    in_range = n >= 2 * s + 5
    if not in_range and not permissive:
        raise RegimeError(f"threshold_g needs n >= 2s+5 (got n={n}, s={s}); use permissive mode")
    a, b = g1(n, s), g2(n, s)
    regime = "equal" if a == b else ("g1-dominant" if a > b else "g2-dominant")
    return ThresholdValues(a, b, max(a, b), regime, in_range)


def theorem_range(n: int, s: int) -> bool:
    return n >= max(2 * s + 5, 40)


# ---------------------------------------------------------------------------
# Graph constructions


def join_graph(hubs: int, cliques: list[int], isolated: int) -> Graph:
    """K_hubs v (K_c1 u K_c2 u ... u co-K_isolated), vertices laid out in that order."""
    n = hubs + sum(cliques) + isolated
    edges = [(h, v) for h in range(hubs) for v in range(h + 1, n)]
    start = hubs
    for size in cliques:
        edges.extend((u, v) for u in range(start, start + size) for v in range(u + 1, start + size))
        start += size
    return Graph.from_edges(n, edges)


def construct_turan_graph(n: int, s: int) -> Graph:
    """G(n, s) = K_s v co-K_{n-s}."""
    if not 0 <= s <= n:
        raise RegimeError(f"construct_turan_graph needs 0 <= s <= n, got n={n}, s={s}")
    return join_graph(s, [], n - s)


def f1_graph(n: int, s: int) -> Graph:
    if s < 1 or n < s + 2:
        raise RegimeError(f"F1 needs s >= 1 and n >= s + 2, got n={n}, s={s}")
    return join_graph(s - 1, [3], n - s - 2)


def f2_graph(n: int, s: int) -> Graph:
    if s < 1 or n < 2 * s:
        raise RegimeError(f"F2 needs s >= 1 and n >= 2s, got n={n}, s={s}")
    return join_graph(1, [2 * s - 1], n - 2 * s)


def in_regime(n: int, s: int, variant: Variant) -> bool:
    """Whether (n, s) lies where the variant is the tight construction."""
    if n < 2 * s + 5:
        return False
    if variant == "H1":
        return 2 * n >= 5 * s + 3
    if variant == "H2":
        return 2 * n <= 5 * s + 3
    raise ValueError(f"unknown variant {variant!r}")


def regime_variant(n: int, s: int) -> Variant:
    return "H1" if 2 * n >= 5 * s + 3 else "H2"


def rainbow_plus_one(n: int, base: Graph) -> ColoredGraph:
    """Color the edges of ``base`` 1..e(base) in lexicographic order, all others 0."""
    if base.n != n:
        raise ValueError(f"base graph has {base.n} vertices, expected {n}")
    colors = np.zeros(pair_count(n), dtype=np.int64)
    for i, (u, v) in enumerate(base.edges(), start=1):
        colors[pair_index(n, u, v)] = i
    return ColoredGraph(n, colors)


def construct_extremal_coloring(n: int, s: int, variant: Variant,
                                permissive: bool = False) -> ColoredGraph:
    """H1 or H2 with g(n, s) - 1 colors and no rainbow M_{s+2}."""
    variant = variant.upper()
    if variant not in ("H1", "H2"):
        raise ValueError(f"unknown variant {variant!r}")
    if not permissive and not in_regime(n, s, variant):
        raise RegimeError(f"(n={n}, s={s}) is outside the {variant} regime; use permissive mode")
    base = f1_graph(n, s) if variant == "H1" else f2_graph(n, s)
    return rainbow_plus_one(n, base)


def f1_edge_count(n: int, s: int) -> int:
    return comb(s - 1, 2) + (s - 1) * (n - s + 1) + 3


def f2_edge_count(n: int, s: int) -> int:
    return comb(2 * s - 1, 2) + (n - 1)

"""Exact rainbow-matching search on edge-colored complete graphs.

Search outline
--------------
A color class with a single available edge never conflicts with any other
edge on color, so all such classes are pooled into one plain graph ``S`` and
handled by one maximum-matching computation.  Branching happens only over
classes with two or more available edges, smallest class first: use one of
its edges, or discard the class.

Upper bound at a node, for every threshold ``theta`` in the chain of distinct
class sizes::

    nu(S + edges of classes of size <= theta) + #(classes of size > theta)

``theta = 0`` is ``nu(S) + #classes`` and the last threshold is the matching
number of everything still available.  The chain reuses one matching and only
augments it, so the whole chain costs about one matching computation.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass

from .colored_graph import ColoredGraph, Edge, Graph, Matching
from .errors import BudgetExceeded
from .matching import maximize


@dataclass(frozen=True)
class RainbowCertificate:
    edges: tuple[Edge, ...]
    colors: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def matching(self) -> Matching:
        return Matching(self.edges)

    def validate(self, h: ColoredGraph) -> None:
        """Raise ``ValueError`` unless this is a rainbow matching of ``h``."""
        if len(self.edges) != len(self.colors):
            raise ValueError("edges and colors differ in length")
        Matching(self.edges)
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("colors are not pairwise distinct")
        for (u, v), c in zip(self.edges, self.colors):
            if h.color(u, v) != c:
                raise ValueError(f"edge ({u}, {v}) has color {h.color(u, v)}, not {c}")

    def to_json(self) -> dict:
        return {"size": self.size, "edges": [list(e) for e in self.edges],
                "colors": list(self.colors)}


def _certificate(pairs: list[tuple[Edge, int]]) -> RainbowCertificate:
    pairs = sorted(pairs)
    return RainbowCertificate(tuple(e for e, _ in pairs), tuple(c for _, c in pairs))


# ---------------------------------------------------------------------------
# Representative subgraph


@dataclass(frozen=True)
class RepresentativeSubgraph:
    graph: Graph
    chosen: dict[int, Edge]


def representative_subgraph(h: ColoredGraph, policy: str = "lexicographic",
                            seed: int | None = None) -> RepresentativeSubgraph:
    """Pick one edge from every color class.

    ``lexicographic`` takes the smallest pair of each class; ``seed-randomized``
    draws uniformly within each class from ``random.Random(seed)``, visiting
    classes in increasing color order.
    """
    classes = h.color_classes()
    if policy == "lexicographic":
        chosen = {c: edges[0] for c, edges in classes.items()}
    elif policy == "seed-randomized":
        rng = random.Random(seed)
        chosen = {c: classes[c][rng.randrange(len(classes[c]))] for c in sorted(classes)}
    else:
        raise ValueError(f"unknown policy {policy!r}")
    return RepresentativeSubgraph(Graph.from_edges(h.n, chosen.values()), chosen)


# ---------------------------------------------------------------------------
# Branch and bound


class _Found(Exception):
    pass


class _Search:
    def __init__(self, h: ColoredGraph, target: int | None, budget_s: float | None):
        self.n = h.n
        self.target = target
        self.deadline = None if budget_s is None else time.monotonic() + budget_s
        self.classes = h.color_classes()
        self.best: list[tuple[Edge, int]] = []
        self.nodes = 0

    # -- helpers -----------------------------------------------------------

    def _record(self, chosen: list[tuple[Edge, int]]) -> None:
        if len(chosen) > len(self.best):
            self.best = list(chosen)
            if self.target is not None and len(self.best) >= self.target:
                raise _Found

    def _adjacency(self, edges) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    # -- main recursion ----------------------------------------------------

    def run(self) -> None:
        singles = []
        multi = []
        for c, edges in self.classes.items():
            if len(edges) == 1:
                singles.append((edges[0], c))
            else:
                multi.append((c, edges))
        self._node((1 << self.n) - 1, singles, multi, [])

    def _node(self, free: int, singles, multi, chosen) -> None:
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(best=_certificate(self.best))

        singles = [(e, c) for e, c in singles if free >> e[0] & 1 and free >> e[1] & 1]
        live = []
        for c, edges in multi:
            eff = [e for e in edges if free >> e[0] & 1 and free >> e[1] & 1]
            if len(eff) == 1:
                singles.append((eff[0], c))
            elif eff:
                live.append((c, eff))
        live.sort(key=lambda item: (len(item[1]), item[0]))

        adj = self._adjacency(e for e, _ in singles)
        mate = maximize(adj)
        nu_s = sum(1 for v, w in enumerate(mate) if w > v)

        # incumbent: the S-matching plus greedy picks on exposed vertices
        single_color = {e: c for e, c in singles}
        greedy = list(chosen)
        greedy.extend(((v, w), single_color[(v, w)]) for v, w in enumerate(mate) if w > v)
        exposed = [m == -1 for m in mate]
        for c, eff in live:
            for u, v in eff:
                if exposed[u] and exposed[v]:
                    exposed[u] = exposed[v] = False
                    greedy.append(((u, v), c))
                    break
        self._record(greedy)

        if not live:
            return
        need = self._need(len(chosen))
        if self._upper_bound(free, nu_s, adj, mate, live, need) < need:
            return

        c, eff = live[0]
        rest = live[1:]
        covered = [m != -1 for m in mate]
        for u, v in sorted(eff, key=lambda e: (covered[e[0]] + covered[e[1]], e)):
            chosen.append(((u, v), c))
            self._node(free & ~(1 << u) & ~(1 << v), singles, rest, chosen)
            chosen.pop()
            if self._need(len(chosen)) > nu_s + len(live):
                return
        self._node(free, singles, rest, chosen)

    def _need(self, depth: int) -> int:
        goal = self.target if self.target is not None else len(self.best) + 1
        return goal - depth

    def _upper_bound(self, free: int, nu_s: int, adj, mate, live, need: int) -> int:
        ub = min(nu_s + len(live), free.bit_count() // 2)
        if ub < need:
            return ub
        # live is sorted by class size; add one size-group at a time and augment
        adj = [list(a) for a in adj]
        mate = list(mate)
        i = 0
        while i < len(live):
            j = i
            while j < len(live) and len(live[j][1]) == len(live[i][1]):
                j += 1
            for _, eff in live[i:j]:
                for u, v in eff:
                    adj[u].append(v)
                    adj[v].append(u)
            maximize(adj, mate)
            nu = sum(1 for v, w in enumerate(mate) if w > v)
            ub = min(ub, nu + len(live) - j)
            if ub < need:
                break
            i = j
        return ub


def _solve(h: ColoredGraph, target: int | None, budget_ms: float | None) -> _Search:
    search = _Search(h, target, None if budget_ms is None else budget_ms / 1000.0)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, len(search.classes) + 200))
    try:
        search.run()
    except _Found:
        pass
    finally:
        sys.setrecursionlimit(limit)
    return search


def max_rainbow_matching(h: ColoredGraph, budget_ms: float | None = None) -> RainbowCertificate:
    """A maximum rainbow matching of ``h``.

    The search is complete.  If ``budget_ms`` runs out first,
    :class:`~arkit.errors.BudgetExceeded` is raised carrying the best
    matching found so far; a partial result is never returned as exact.
    """
    return _certificate(_solve(h, None, budget_ms).best)


def has_rainbow_matching(h: ColoredGraph, k: int,
                         budget_ms: float | None = None) -> tuple[bool, RainbowCertificate | None]:
    """Decide whether ``h`` has a rainbow matching with ``k`` edges.

    Returns ``(True, certificate)`` with a certificate of exactly ``k`` edges,
    or ``(False, None)``.  Raises :class:`~arkit.errors.BudgetExceeded` when the
    budget runs out before a decision.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return True, RainbowCertificate((), ())
    best = _solve(h, k, budget_ms).best
    if len(best) >= k:
        return True, _certificate(best[:k])
    return False, None

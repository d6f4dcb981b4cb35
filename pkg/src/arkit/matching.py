"""Maximum matchings in general graphs and the structure around them.

``max_matching`` runs Edmonds' blossom algorithm.  ``brute_force_nu`` is an
independent exhaustive oracle used to check it.  The Gallai-Edmonds
decomposition is computed from the avoidable-vertex characterization
(``D = {v : nu(G - v) = nu(G)}``) and certified before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .colored_graph import Graph, Matching, _bits
from .errors import InstanceTooLarge

BRUTE_FORCE_LIMIT = 14


# ---------------------------------------------------------------------------
# Edmonds' blossom algorithm


def _augment_from(root: int, adj: Sequence[Sequence[int]], mate: list[int]) -> bool:
    """Search an augmenting path from the exposed vertex ``root``; flip it if found."""
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if base[v] == base[w] or mate[v] == w:
                continue
            if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                b = lca(v, w)
                blossom = [False] * n
                mark(v, b, w, blossom)
                mark(w, b, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = b
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[w] == -1:
                parent[w] = v
                if mate[w] == -1:
                    # flip the alternating path ending at w
                    while w != -1:
                        pv = parent[w]
                        nxt = mate[pv]
                        mate[w] = pv
                        mate[pv] = w
                        w = nxt
                    return True
                in_tree[mate[w]] = True
                queue.append(mate[w])
    return False


def maximize(adj: Sequence[Sequence[int]], mate: list[int] | None = None) -> list[int]:
    """Grow ``mate`` (vertex -> partner or -1) into a maximum matching of ``adj``.

    ``mate`` must already be a valid matching of ``adj``; it is modified in place
    and returned.  A vertex with no augmenting path now never gets one later, so
    each vertex is tried once.
    """
    n = len(adj)
    if mate is None:
        mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break
    for v in range(n):
        if mate[v] == -1 and adj[v]:
            _augment_from(v, adj, mate)
    return mate


def _adj_lists(g: Graph) -> list[list[int]]:
    return [list(_bits(m)) for m in g.adj]


def max_matching(g: Graph) -> Matching:
    mate = maximize(_adj_lists(g))
    return Matching(tuple((v, w) for v, w in enumerate(mate) if w > v))


def matching_number(g: Graph) -> int:
    return sum(1 for v, w in enumerate(maximize(_adj_lists(g))) if w > v)


# ---------------------------------------------------------------------------
# Exhaustive oracle


def brute_force_nu(g: Graph) -> int:
    """Matching number by exhaustive search over matchings (n <= 14)."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise InstanceTooLarge(f"brute_force_nu supports n <= {BRUTE_FORCE_LIMIT}, got {g.n}")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(alive: int) -> int:
        # lowest alive vertex is either left unmatched or matched to an alive neighbor
        while alive and not adj[(alive & -alive).bit_length() - 1] & alive:
            alive &= alive - 1
        if not alive:
            return 0
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        result = best(rest)
        for u in _bits(adj[v] & rest):
            result = max(result, 1 + best(rest & ~(1 << u)))
        return result

    return best((1 << g.n) - 1)


# ---------------------------------------------------------------------------
# Factor-criticality, Gallai-Edmonds, Berge


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    target = (g.n - 1) // 2
    return all(matching_number(g.without_vertices([v])) == target for v in range(g.n))


def odd_components(g: Graph, removed: int) -> int:
    """Number of odd-order components of ``G - S`` where ``S`` is the bitmask ``removed``."""
    within = ((1 << g.n) - 1) & ~removed
    return sum(1 for comp in g.components(within) if len(comp) % 2)


def _sort_components(comps: list[list[int]]) -> list[list[int]]:
    return sorted((sorted(c) for c in comps), key=lambda c: (-len(c), c[0]))


@dataclass(frozen=True)
class GEDecomposition:
    D: tuple[int, ...]
    A: tuple[int, ...]
    C: tuple[int, ...]
    components_of_D: tuple[tuple[int, ...], ...]
    nu: int


@dataclass(frozen=True)
class BergeWitness:
    T: tuple[int, ...]
    odd_components: tuple[tuple[int, ...], ...]
    nu: int

    @property
    def t(self) -> int:
        return len(self.T)

    @property
    def q(self) -> int:
        return len(self.odd_components)

    @property
    def k(self) -> tuple[int, ...]:
        return tuple((len(c) - 1) // 2 for c in self.odd_components)

    @property
    def deficiency(self) -> int:
        return self.q - self.t

    def to_json(self) -> dict:
        return {"T": list(self.T),
                "odd_components": [list(c) for c in self.odd_components],
                "nu": self.nu}


def gallai_edmonds(g: Graph) -> GEDecomposition:
    nu = matching_number(g)
    D = [v for v in range(g.n) if matching_number(g.without_vertices([v])) == nu]
    d_mask = 0
    for v in D:
        d_mask |= 1 << v
    a_mask = 0
    for v in D:
        a_mask |= g.adj[v]
    a_mask &= ~d_mask
    A = list(_bits(a_mask))
    C = [v for v in range(g.n) if not (d_mask | a_mask) >> v & 1]
    comps = _sort_components(g.components(d_mask))
    decomposition = GEDecomposition(tuple(D), tuple(A), tuple(C),
                                    tuple(tuple(c) for c in comps), nu)
    _certify(g, decomposition)
    return decomposition


def _certify(g: Graph, ge: GEDecomposition) -> None:
    if sorted(ge.D + ge.A + ge.C) != list(range(g.n)):
        raise AssertionError("D, A, C do not partition V")
    for comp in ge.components_of_D:
        sub, _ = g.induced(comp)
        if not is_factor_critical(sub):
            raise AssertionError(f"component {comp} of G[D] is not factor-critical")
    a_mask = sum(1 << v for v in ge.A)
    if g.n - 2 * ge.nu != odd_components(g, a_mask) - len(ge.A):
        raise AssertionError("Berge equality fails with S = A")


def berge_witness(g: Graph) -> BergeWitness:
    """T = A of Gallai-Edmonds with the odd components of G - T, largest first."""
    ge = gallai_edmonds(g)
    a_mask = sum(1 << v for v in ge.A)
    within = ((1 << g.n) - 1) & ~a_mask
    odd = [c for c in g.components(within) if len(c) % 2]
    witness = BergeWitness(ge.A, tuple(tuple(c) for c in _sort_components(odd)), ge.nu)
    if witness.deficiency != g.n - 2 * ge.nu:
        raise AssertionError("Berge equality fails for the witness")
    return witness


def brute_force_deficiency(g: Graph) -> int:
    """max over all S of odd(G - S) - |S|, by enumeration of all 2^n subsets."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise InstanceTooLarge(f"subset enumeration supports n <= {BRUTE_FORCE_LIMIT}")
    return max(odd_components(g, s) - s.bit_count() for s in range(1 << g.n))


# ---------------------------------------------------------------------------
# Bipartite matchings


@dataclass(frozen=True)
class BipartiteInstance:
    """Bipartite graph; ``adj[i]`` lists the B-side neighbors of A-side vertex ``i``."""

    a: int
    b: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.a:
            raise ValueError("adj must have one row per A-side vertex")
        rows = []
        for i, row in enumerate(self.adj):
            row = tuple(sorted(set(row)))
            if row and not (0 <= row[0] and row[-1] < self.b):
                raise ValueError(f"A-vertex {i} has a neighbor outside [0, {self.b})")
            rows.append(row)
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_edges(cls, a: int, b: int, edges) -> BipartiteInstance:
        rows: list[list[int]] = [[] for _ in range(a)]
        for i, j in edges:
            rows[i].append(j)
        return cls(a, b, tuple(tuple(r) for r in rows))

    def degree(self, i: int) -> int:
        return len(self.adj[i])


@dataclass(frozen=True)
class HallViolator:
    """A-side set S with |N(S)| < |S|."""

    S: tuple[int, ...]
    neighborhood: tuple[int, ...]


def hall_matching(b: BipartiteInstance) -> Matching | HallViolator:
    """Matching covering the A side, or a Hall violator when none exists.

    Matching edges are returned as ``(i, a + j)`` so both sides share one id space.
    """
    match_b = [-1] * b.b

    def try_kuhn(i: int, seen: list[bool]) -> bool:
        for j in b.adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_b[j] == -1 or try_kuhn(match_b[j], seen):
                match_b[j] = i
                return True
        return False

    for i in range(b.a):
        seen = [False] * b.b
        if not try_kuhn(i, seen):
            # every A-vertex reached by alternating paths from i had all its
            # neighbors visited, and each visited B-vertex is matched into S
            reached = [j for j in range(b.b) if seen[j]]
            S = sorted({i} | {match_b[j] for j in reached})
            return HallViolator(tuple(S), tuple(reached))
    return Matching(tuple((i, b.a + j) for j, i in enumerate(match_b) if i != -1))


def staircase_check(b: BipartiteInstance) -> bool:
    """True iff the A-vertex with 1-based index i has degree at least i, for every i."""
    return all(b.degree(i) >= i + 1 for i in range(b.a))

"""Monochromatic conclusion structures and the combined theorem verdict.

Two structures are detected exactly:

* a monochromatic clique on ``q`` vertices;
* a monochromatic join K_{n-2s-1} v co-K_{2s+1}.  Its edges are exactly the
  edges incident to the (n-2s-1)-side, so it exists for color ``c`` iff at
  least n-2s-1 vertices have all n-1 incident edges colored ``c``.

Certificates always use the lexicographically smallest vertex sets, searching
colors in increasing order.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .colored_graph import ColoredGraph, _bits
from .errors import BudgetExceeded, RegimeError
from .extremal import theorem_range, threshold_g
from .rainbow import RainbowCertificate, has_rainbow_matching

# cover-branching is used when at most this many vertices may be left out
COVER_PARAMETER_CAP = 20


@dataclass(frozen=True)
class MonoStructureCertificate:
    kind: str
    color: int
    clique_vertices: tuple[int, ...] = ()
    A_set: tuple[int, ...] = ()
    B_set: tuple[int, ...] = ()

    def validate(self, h: ColoredGraph, s: int | None = None) -> None:
        if self.kind == "clique":
            vs = self.clique_vertices
            for i, u in enumerate(vs):
                for v in vs[i + 1:]:
                    if h.color(u, v) != self.color:
                        raise ValueError(f"pair ({u}, {v}) is not color {self.color}")
        elif self.kind == "join":
            if sorted(self.A_set + self.B_set) != list(range(h.n)):
                raise ValueError("A_set and B_set do not partition V")
            if s is not None and (len(self.A_set) != h.n - 2 * s - 1
                                  or len(self.B_set) != 2 * s + 1):
                raise ValueError("part sizes do not match n-2s-1 and 2s+1")
            for a in self.A_set:
                for v in range(h.n):
                    if v != a and h.color(a, v) != self.color:
                        raise ValueError(f"edge ({a}, {v}) is not color {self.color}")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    def to_json(self) -> dict:
        out = {"found": True, "kind": self.kind, "color": self.color}
        if self.kind == "clique":
            out["clique_vertices"] = list(self.clique_vertices)
        else:
            out["A_set"] = list(self.A_set)
            out["B_set"] = list(self.B_set)
        return out


def _color_masks(h: ColoredGraph) -> dict[int, list[int]]:
    """Per color, neighbor bitsets of that color's graph."""
    masks: dict[int, list[int]] = {}
    for u, v, c in h.colored_edges():
        adj = masks.get(c)
        if adj is None:
            adj = masks[c] = [0] * h.n
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return masks


# ---------------------------------------------------------------------------
# Clique search


def _cover_feasible(missing: list[int], alive: int, budget: int) -> bool:
    """Can at most ``budget`` vertices of ``alive`` cover every non-edge inside ``alive``?

    ``missing[v]`` is the bitset of vertices NOT adjacent to ``v`` (excluding ``v``).
    """
    if budget < 0:
        return False
    # vertices with more than ``budget`` non-neighbors must go
    for v in _bits(alive):
        if (missing[v] & alive).bit_count() > budget:
            return _cover_feasible(missing, alive & ~(1 << v), budget - 1)
    for u in _bits(alive):
        row = missing[u] & alive
        if row:
            w = (row & -row).bit_length() - 1
            return (_cover_feasible(missing, alive & ~(1 << u), budget - 1)
                    or _cover_feasible(missing, alive & ~(1 << w), budget - 1))
    return True


def _clique_by_cover(adj: list[int], n: int, q: int) -> list[int] | None:
    full = (1 << n) - 1
    missing = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    if not _cover_feasible(missing, full, n - q):
        return None
    # grow the lexicographically smallest clique one vertex at a time
    alive = full
    picked: list[int] = []
    for v in range(n):
        if len(picked) == q:
            break
        if not alive >> v & 1:
            continue
        trial = alive & ~missing[v]
        if _cover_feasible(missing, trial, trial.bit_count() - q):
            picked.append(v)
            alive = trial
        else:
            alive &= ~(1 << v)
    return picked


def _greedy_color_bound(adj: list[int], cand: int) -> int:
    colors = 0
    while cand:
        colors += 1
        avail = cand
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            cand &= ~(1 << v)
    return colors


def _clique_by_search(adj: list[int], n: int, q: int) -> list[int] | None:
    """Depth-first search in increasing vertex order; the first hit is lex-smallest."""
    picked: list[int] = []

    def extend(cand: int) -> bool:
        if len(picked) == q:
            return True
        if len(picked) + cand.bit_count() < q:
            return False
        if len(picked) + _greedy_color_bound(adj, cand) < q:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            if len(picked) + 1 + cand.bit_count() < q:
                return False
            picked.append(v)
            if extend(cand & adj[v]):
                return True
            picked.pop()
        return False

    return picked if extend((1 << n) - 1) else None


def clique_in(adj: list[int], n: int, q: int) -> list[int] | None:
    """Lexicographically smallest q-clique of the graph ``adj``, or None."""
    if q <= 0:
        return []
    if q > n:
        return None
    degree_ok = sum(1 for v in range(n) if adj[v].bit_count() >= q - 1)
    if degree_ok < q:
        return None
    if n - q <= COVER_PARAMETER_CAP:
        return _clique_by_cover(adj, n, q)
    return _clique_by_search(adj, n, q)


def find_mono_clique(h: ColoredGraph, q: int) -> MonoStructureCertificate | None:
    if not 1 <= q <= max(h.n, 1):
        raise RegimeError(f"q must lie in [1, n], got q={q}, n={h.n}")
    if q == 1:
        color = int(h.colors.min()) if h.n > 1 else 0
        return MonoStructureCertificate("clique", color, (0,))
    need_edges = q * (q - 1) // 2
    for c, adj in sorted(_color_masks(h).items()):
        if sum(a.bit_count() for a in adj) // 2 < need_edges:
            continue
        found = clique_in(adj, h.n, q)
        if found is not None:
            return MonoStructureCertificate("clique", c, tuple(found))
    return None


def max_mono_clique(h: ColoredGraph) -> int:
    """Size of the largest monochromatic clique (at least 2 when n >= 2)."""
    lo = 1 if h.n else 0
    hi = h.n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if find_mono_clique(h, mid) is not None:
            lo = mid
        else:
            hi = mid - 1
    return lo


# ---------------------------------------------------------------------------
# Join detection


def full_color_vertices(h: ColoredGraph) -> dict[int, list[int]]:
    """Color c -> vertices all of whose n-1 edges have color c."""
    out: dict[int, list[int]] = {}
    if h.n < 2:
        return out
    for v in range(h.n):
        first = h.color(v, 0 if v else 1)
        if all(h.color(v, u) == first for u in range(h.n) if u != v):
            out.setdefault(first, []).append(v)
    return out


def find_mono_join(h: ColoredGraph, s: int) -> MonoStructureCertificate | None:
    if s < 0 or h.n < 2 * s + 2:
        raise RegimeError(f"find_mono_join needs n >= 2s+2, got n={h.n}, s={s}")
    size = h.n - 2 * s - 1
    for c, verts in sorted(full_color_vertices(h).items()):
        if len(verts) >= size:
            a_set = tuple(verts[:size])
            b_set = tuple(v for v in range(h.n) if v not in set(a_set))
            return MonoStructureCertificate("join", c, A_set=a_set, B_set=b_set)
    return None


# ---------------------------------------------------------------------------
# Verdict


@dataclass
class VerdictReport:
    n: int
    s: int
    color_count: int
    g: int
    in_range: bool
    hypothesis_colors: bool
    hypothesis_rainbow: bool | None
    conclusion_clique: bool
    conclusion_join: bool
    verdict: str
    rainbow_certificate: RainbowCertificate | None = field(default=None, repr=False)
    clique_certificate: MonoStructureCertificate | None = field(default=None, repr=False)
    join_certificate: MonoStructureCertificate | None = field(default=None, repr=False)

    @property
    def is_counterexample(self) -> bool:
        return self.verdict == "counterexample"

    def to_json(self) -> dict:
        out = asdict(self)
        for key in ("rainbow_certificate", "clique_certificate", "join_certificate"):
            cert = getattr(self, key)
            out[key] = cert.to_json() if cert is not None else {"found": False}
        return out


def theorem_verdict(h: ColoredGraph, s: int, permissive: bool = False,
                    budget_ms: float | None = None) -> VerdictReport:
    """Check hypotheses and conclusions of the stability statement on ``h``.

    Verdicts: ``counterexample`` (both hypotheses hold, both conclusions fail,
    n in the theorem's range), ``out-of-range-violation`` (the same outside
    that range, permissive mode only), ``hypothesis-not-met``, ``consistent``
    and ``inconclusive`` (rainbow search ran out of budget).
    """
    n = h.n
    in_range = theorem_range(n, s)
    if not in_range and not permissive:
        raise RegimeError(f"n={n}, s={s} is outside n >= max(2s+5, 40); use permissive mode")
    if n < 2 * s + 2:
        raise RegimeError(f"need n >= 2s+2, got n={n}, s={s}")
    g = threshold_g(n, s, permissive=True).g
    colors = h.num_colors()
    hyp_colors = colors >= g

    clique = find_mono_clique(h, n - s)
    join = find_mono_join(h, s)

    cert = None
    try:
        found, cert = has_rainbow_matching(h, s + 2, budget_ms=budget_ms)
        hyp_rainbow: bool | None = not found
    except BudgetExceeded:
        hyp_rainbow = None

    if hyp_rainbow is None:
        verdict = "inconclusive"
    elif not (hyp_colors and hyp_rainbow):
        verdict = "hypothesis-not-met"
    elif clique is None and join is None:
        verdict = "counterexample" if in_range else "out-of-range-violation"
    else:
        verdict = "consistent"
    return VerdictReport(n, s, colors, g, in_range, hyp_colors, hyp_rainbow,
                         clique is not None, join is not None, verdict, cert, clique, join)

"""Plain graphs and totally edge-colored complete graphs.

Vertices are dense integers ``0..n-1``.  A :class:`ColoredGraph` is always a
complete graph: every unordered pair carries exactly one non-negative color.
Colors need not be contiguous; "number of colors" means distinct used values.

Both types are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import FormatError

Edge = tuple[int, int]

MAX_VERTICES = 10_000


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, u: int, v: int) -> int:
    """Rank of the pair ``{u, v}`` in lexicographic order of ``(min, max)``."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def iter_pairs(n: int) -> Iterator[Edge]:
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Plain graphs


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex neighbor bitsets."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside [0, n)")
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def without_vertices(self, removed: Iterable[int]) -> Graph:
        """Same vertex ids, all edges at ``removed`` deleted."""
        mask = 0
        for v in removed:
            mask |= 1 << v
        keep = ~mask
        return Graph(self.n, tuple(0 if mask >> v & 1 else a & keep
                                   for v, a in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Subgraph on ``vertices`` re-indexed ``0..k-1``, plus the map back."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges), list(vertices)

    def components(self, within: int | None = None) -> list[list[int]]:
        """Connected components of the subgraph induced on the bitmask ``within``."""
        remaining = (1 << self.n) - 1 if within is None else within
        comps = []
        while remaining:
            start = remaining & -remaining
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                nxt &= remaining & ~comp
                comp |= nxt
                frontier = nxt
            remaining &= ~comp
            comps.append(list(_bits(comp)))
        return comps


# ---------------------------------------------------------------------------
# Colored complete graphs


@dataclass(frozen=True)
class ColorCensus:
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return len(self.counts)

    @property
    def edge_total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """Complete graph K_n with one color per unordered pair.

    ``colors`` is a flat array in pair-rank order (see :func:`pair_index`).
    """

    n: int
    colors: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"n must lie in [0, {MAX_VERTICES}]")
        arr = np.array(self.colors, dtype=np.int64).reshape(-1)
        if arr.size != pair_count(self.n):
            raise ValueError(f"expected {pair_count(self.n)} colors, got {arr.size}")
        if arr.size and arr.min() < 0:
            raise ValueError("colors must be non-negative")
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)

    @classmethod
    def from_mapping(cls, n: int, coloring: Mapping[Edge, int]) -> ColoredGraph:
        arr = np.full(pair_count(n), -1, dtype=np.int64)
        for (u, v), c in coloring.items():
            arr[pair_index(n, u, v)] = c
        if (arr < 0).any():
            raise ValueError("coloring is not total")
        return cls(n, arr)

    @classmethod
    def monochromatic(cls, n: int, color: int = 0) -> ColoredGraph:
        return cls(n, np.full(pair_count(n), color, dtype=np.int64))

    @classmethod
    def rainbow(cls, n: int) -> ColoredGraph:
        return cls(n, np.arange(pair_count(n), dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.colors, other.colors)

    def __hash__(self):
        return hash((self.n, self.colors.tobytes()))

    def color(self, u: int, v: int) -> int:
        return int(self.colors[pair_index(self.n, u, v)])

    def colored_edges(self) -> Iterator[tuple[int, int, int]]:
        cols = self.colors.tolist()
        for i, (u, v) in enumerate(iter_pairs(self.n)):
            yield u, v, cols[i]

    def color_classes(self) -> dict[int, list[Edge]]:
        """Color -> edges of that color, edges in lexicographic order."""
        classes: dict[int, list[Edge]] = {}
        for u, v, c in self.colored_edges():
            classes.setdefault(c, []).append((u, v))
        return classes

    def used_colors(self) -> list[int]:
        return [int(c) for c in np.unique(self.colors)]

    def num_colors(self) -> int:
        return int(np.unique(self.colors).size)

    def color_graph(self, c: int) -> Graph:
        return Graph.from_edges(self.n, [(u, v) for u, v, col in self.colored_edges() if col == c])

    def recolored(self, changes: Mapping[Edge, int]) -> ColoredGraph:
        arr = self.colors.copy()
        for (u, v), c in changes.items():
            arr[pair_index(self.n, u, v)] = c
        return ColoredGraph(self.n, arr)

    def fresh_color(self) -> int:
        return int(self.colors.max()) + 1 if self.colors.size else 0


def color_census(g: ColoredGraph) -> ColorCensus:
    values, counts = np.unique(g.colors, return_counts=True)
    return ColorCensus({int(c): int(k) for c, k in zip(values, counts)})


def induced(g: ColoredGraph, vertices: Iterable[int]) -> tuple[ColoredGraph, list[int]]:
    """Colored complete graph on ``vertices`` (re-indexed in the given order).

    Returns the subgraph and the list mapping new ids to parent ids.
    """
    verts = list(vertices)
    if not verts:
        raise ValueError("induced subgraph needs at least one vertex")
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertex in induced set")
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    k = len(verts)
    arr = np.empty(pair_count(k), dtype=np.int64)
    i = 0
    for a in range(k):
        for b in range(a + 1, k):
            arr[i] = g.colors[pair_index(g.n, verts[a], verts[b])]
            i += 1
    return ColoredGraph(k, arr), verts


# ---------------------------------------------------------------------------
# Matchings


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    def __post_init__(self):
        normed = tuple(sorted(norm_edge(u, v) for u, v in self.edges))
        seen: set[int] = set()
        for u, v in normed:
            if u in seen or v in seen:
                raise ValueError(f"edges share a vertex at ({u}, {v})")
            seen.update((u, v))
        object.__setattr__(self, "edges", normed)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in e}


# ---------------------------------------------------------------------------
# Text I/O


def _tokens(text: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = []
        col = 0
        for part in raw.split():
            col = raw.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        yield lineno, toks


def _int(tok: tuple[int, str], lineno: int, what: str) -> int:
    col, s = tok
    try:
        value = int(s)
    except ValueError:
        raise FormatError(f"expected integer {what}, got {s!r}", lineno, col) from None
    if value < 0:
        raise FormatError(f"{what} must be non-negative", lineno, col)
    return value


def _header(lines, magic: str) -> int:
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise FormatError("empty document") from None
    if [t for _, t in toks] != [magic, "1"]:
        raise FormatError(f"expected header '{magic} 1'", lineno, 1)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise FormatError("missing 'n <N>' line") from None
    if len(toks) != 2 or toks[0][1] != "n":
        raise FormatError("expected 'n <N>'", lineno, 1)
    n = _int(toks[1], lineno, "vertex count")
    if n > MAX_VERTICES:
        raise FormatError(f"vertex count exceeds {MAX_VERTICES}", lineno, toks[1][0])
    return n


def _edge_line(toks, lineno: int, n: int, arity: int) -> list[int]:
    if toks[0][1] != "e" or len(toks) != arity + 1:
        raise FormatError(f"expected edge line with {arity} fields", lineno, toks[0][0])
    u = _int(toks[1], lineno, "vertex id")
    v = _int(toks[2], lineno, "vertex id")
    for tok, x in ((toks[1], u), (toks[2], v)):
        if x >= n:
            raise FormatError(f"vertex id {x} out of range for n={n}", lineno, tok[0])
    if u >= v:
        raise FormatError("edge endpoints must satisfy u < v", lineno, toks[1][0])
    rest = [_int(toks[3], lineno, "color")] if arity == 3 else []
    return [u, v, *rest]


def parse_colored_graph(text: str) -> ColoredGraph:
    lines = _tokens(text)
    n = _header(lines, "cg")
    arr = np.full(pair_count(n), -1, dtype=np.int64)
    for lineno, toks in lines:
        u, v, c = _edge_line(toks, lineno, n, 3)
        idx = pair_index(n, u, v)
        if arr[idx] >= 0:
            raise FormatError(f"duplicate pair ({u}, {v})", lineno, toks[1][0])
        arr[idx] = c
    missing = int((arr < 0).sum())
    if missing:
        raise FormatError(f"incomplete coloring ({missing} pairs missing)")
    return ColoredGraph(n, arr)


def serialize(g: ColoredGraph) -> str:
    out = ["cg 1", f"n {g.n}"]
    out.extend(f"e {u} {v} {c}" for u, v, c in g.colored_edges())
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _tokens(text)
    n = _header(lines, "g")
    seen: set[Edge] = set()
    for lineno, toks in lines:
        u, v = _edge_line(toks, lineno, n, 2)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno, toks[1][0])
        seen.add((u, v))
    return Graph.from_edges(n, seen)


def serialize_graph(g: Graph) -> str:
    out = ["g 1", f"n {g.n}"]
    out.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_document(text: str) -> Graph | ColoredGraph:
    """Dispatch on the magic line."""
    for _, toks in _tokens(text):
        if toks[0][1] == "cg":
            return parse_colored_graph(text)
        if toks[0][1] == "g":
            return parse_graph(text)
        break
    raise FormatError("unknown document type (expected 'cg 1' or 'g 1')", 1, 1)

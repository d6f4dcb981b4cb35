import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from arkit.colored_graph import ColoredGraph
from arkit.errors import RegimeError
from arkit.extremal import construct_extremal_coloring
from arkit.structures import (MonoStructureCertificate, clique_in, find_mono_clique,
                              find_mono_join, full_color_vertices, max_mono_clique,
                              theorem_verdict)

from conftest import colored_graphs, random_coloring


def brute_clique(h: ColoredGraph, q: int):
    """Smallest (color, vertex tuple) of a monochromatic q-clique, by enumeration."""
    best = None
    for c in sorted(set(h.used_colors())):
        for vs in combinations(range(h.n), q):
            if all(h.color(u, v) == c for u, v in combinations(vs, 2)):
                return c, vs
    return best


def brute_join(h: ColoredGraph, s: int):
    size = h.n - 2 * s - 1
    for c in sorted(set(h.used_colors())):
        for a_set in combinations(range(h.n), size):
            if all(h.color(a, v) == c for a in a_set for v in range(h.n) if v != a):
                return c, a_set
    return None


def test_clique_examples():
    cert = find_mono_clique(ColoredGraph.monochromatic(5), 5)
    assert cert.clique_vertices == (0, 1, 2, 3, 4)
    h1 = construct_extremal_coloring(12, 3, "H1")
    assert find_mono_clique(h1, 9) is None
    assert max_mono_clique(h1) == 8
    cert = find_mono_clique(h1, 8)
    assert cert.color == 0 and cert.clique_vertices == (2, 5, 6, 7, 8, 9, 10, 11)
    assert find_mono_clique(ColoredGraph.rainbow(6), 3) is None


def test_join_examples():
    for n, s in [(9, 2), (12, 3), (15, 1)]:
        cert = find_mono_join(ColoredGraph.monochromatic(n, 3), s)
        assert cert.color == 3
        assert full_color_vertices(ColoredGraph.monochromatic(n, 3)) == {3: list(range(n))}
        cert.validate(ColoredGraph.monochromatic(n, 3), s)
    h2 = construct_extremal_coloring(21, 8, "H2")
    assert find_mono_join(h2, 8) is None
    assert 0 not in full_color_vertices(h2)
    assert find_mono_join(construct_extremal_coloring(12, 3, "H1"), 3) is None
    with pytest.raises(RegimeError):
        find_mono_join(ColoredGraph.monochromatic(7), 3)


def test_verdict_examples():
    h1 = construct_extremal_coloring(12, 3, "H1")
    rep = theorem_verdict(h1, 3, permissive=True)
    assert not rep.hypothesis_colors and rep.color_count == 25 == rep.g - 1
    assert not rep.conclusion_clique and not rep.conclusion_join
    assert rep.verdict == "hypothesis-not-met"

    rep = theorem_verdict(ColoredGraph.monochromatic(45), 10)
    assert not rep.hypothesis_colors and rep.color_count == 1
    assert rep.conclusion_clique

    big = construct_extremal_coloring(40, 10, "H1")
    zero = next((u, v) for u, v, c in big.colored_edges() if c == 0)
    rep = theorem_verdict(big.recolored({zero: big.fresh_color()}), 10)
    assert rep.hypothesis_colors and rep.color_count == 320
    assert rep.verdict != "counterexample"


def test_verdict_strict_range():
    with pytest.raises(RegimeError):
        theorem_verdict(construct_extremal_coloring(12, 3, "H1"), 3)


def test_certificates_validate():
    cert = MonoStructureCertificate("clique", 1, (0, 1, 2))
    with pytest.raises(ValueError):
        cert.validate(ColoredGraph.rainbow(4))
    bad = MonoStructureCertificate("join", 0, A_set=(0,), B_set=(1, 2))
    with pytest.raises(ValueError):
        bad.validate(ColoredGraph.monochromatic(4))


def test_clique_detector_matches_enumeration():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randint(2, 12)
        h = random_coloring(rng, n, rng.randint(1, 4))
        q = rng.randint(2, min(n, 6))
        cert = find_mono_clique(h, q)
        expected = brute_clique(h, q)
        if expected is None:
            assert cert is None
        else:
            cert.validate(h)
            assert (cert.color, cert.clique_vertices) == expected


@given(st.integers(1, 40), st.data())
def test_cover_and_search_agree(n, data):
    p = data.draw(st.sampled_from([0.5, 0.8, 0.95]))
    rnd = random.Random(data.draw(st.integers(0, 10 ** 6)))
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rnd.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    from arkit.structures import _clique_by_cover, _clique_by_search
    q = data.draw(st.integers(max(1, n - 8), n))
    assert _clique_by_cover(adj, n, q) == _clique_by_search(adj, n, q)
    assert clique_in(adj, n, q) == _clique_by_search(adj, n, q)


def near_join(rng: random.Random, n: int, s: int) -> ColoredGraph:
    """Colorings where a few vertices are nearly full in one color."""
    base = random_coloring(rng, n, 3)
    changes = {}
    for a in rng.sample(range(n), rng.randint(0, n)):
        for v in range(n):
            if v != a and rng.random() < 0.9:
                changes[(min(a, v), max(a, v))] = 1
    return base.recolored(changes)


def test_join_detector_matches_partition_enumeration():
    rng = random.Random(29)
    for _ in range(300):
        s = rng.randint(0, 3)
        n = rng.randint(2 * s + 2, 9)
        h = near_join(rng, n, s)
        cert = find_mono_join(h, s)
        expected = brute_join(h, s)
        if expected is None:
            assert cert is None
        else:
            cert.validate(h, s)
            assert (cert.color, cert.A_set) == expected


@given(colored_graphs(min_n=5, max_n=9, max_palette=4))
def test_certificates_revalidate(h):
    for q in range(2, h.n + 1):
        cert = find_mono_clique(h, q)
        if cert:
            cert.validate(h)
    for s in range(0, (h.n - 2) // 2 + 1):
        cert = find_mono_join(h, s)
        if cert:
            cert.validate(h, s)


@given(colored_graphs(min_n=7, max_n=10, max_palette=30))
def test_verdict_never_counterexample_on_small_corpus(h):
    rep = theorem_verdict(h, 1, permissive=True)
    assert rep.verdict != "counterexample"

import random

import pytest
from hypothesis import settings, strategies as st

from arkit.colored_graph import ColoredGraph, Graph, pair_count

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def random_coloring(rng: random.Random, n: int, palette: int) -> ColoredGraph:
    return ColoredGraph(n, [rng.randrange(palette) for _ in range(pair_count(n))])


@st.composite
def colored_graphs(draw, min_n=2, max_n=9, max_palette=12):
    n = draw(st.integers(min_n, max_n))
    palette = draw(st.integers(1, max_palette))
    colors = draw(st.lists(st.integers(0, palette - 1), min_size=pair_count(n),
                           max_size=pair_count(n)))
    return ColoredGraph(n, colors)


@st.composite
def plain_graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion: call ``record(ok, detail)`` once."""
    number = request.node.get_closest_marker("criterion").args[0]

    def record(ok: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS[number] = (ok, detail)
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")

    ACCEPTANCE_RESULTS[number] = (False, "did not complete")
    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")

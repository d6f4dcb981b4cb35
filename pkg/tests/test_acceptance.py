"""The ten acceptance criteria, each at its stated tolerance and time limit.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
import time

import numpy as np
import pytest

from arkit.colored_graph import ColoredGraph, Graph, pair_count
from arkit.errors import BudgetExceeded
from arkit.extremal import construct_extremal_coloring, threshold_g, turan_matching
from arkit.harness import (brute_force_max_rainbow, oracle_anti_ramsey, oracle_turan,
                           random_stability_search, recolor_boundary_probe)
from arkit.matching import (BipartiteInstance, HallViolator, berge_witness, brute_force_deficiency,
                            brute_force_nu, gallai_edmonds, hall_matching, is_factor_critical,
                            max_matching, odd_components, staircase_check)
from arkit.audit import audit_proof_inequalities
from arkit.cli import run
from arkit.rainbow import max_rainbow_matching
from arkit.structures import find_mono_clique, find_mono_join

SEED = 1


@pytest.mark.criterion(1)
def test_anti_ramsey_oracle(criterion, capsys):
    start = time.perf_counter()
    values = {(4, 2): oracle_anti_ramsey(4, 2), (4, 1): oracle_anti_ramsey(4, 1),
              (5, 2): oracle_anti_ramsey(5, 2)}
    code = run(["oracle", "ar", "--n", "4", "--s", "2"])
    cli_out = capsys.readouterr().out.strip()
    elapsed = time.perf_counter() - start
    ok = (values == {(4, 2): 4, (4, 1): 1, (5, 2): 2} and code == 0 and cli_out == "4"
          and elapsed < 60)
    criterion(ok, f"ar(4,M2)={values[4, 2]} (cli: {cli_out}) ar(4,M1)={values[4, 1]} "
                  f"ar(5,M2)={values[5, 2]} in {elapsed:.2f}s (limit 60s)")
    assert ok


@pytest.mark.criterion(2)
def test_turan_oracle_matches_formula(criterion):
    start = time.perf_counter()
    mismatches = []
    cases = 0
    for n in range(2, 8):
        for k in range(1, n // 2 + 1):
            cases += 1
            if oracle_turan(n, k) != turan_matching(n, k):
                mismatches.append((n, k))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300
    criterion(ok, f"{cases} (n,k) pairs with n<=7, mismatches={mismatches} "
                  f"in {elapsed:.2f}s (limit 300s)")
    assert ok


@pytest.mark.criterion(3)
def test_matching_engine(criterion):
    rng = np.random.Generator(np.random.PCG64(SEED))
    failures = []
    berge_full = 0
    for i in range(1000):
        n = int(rng.integers(1, 13))
        p = float(rng.choice([0.08, 0.15, 0.25, 0.4, 0.6]))
        mask = rng.random(pair_count(n)) < p
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
        nu = len(max_matching(g))
        if nu != brute_force_nu(g):
            failures.append((i, "nu"))
            continue
        ge = gallai_edmonds(g)
        w = berge_witness(g)
        removed = sum(1 << v for v in w.T)
        if (w.T != ge.A or 2 * nu != n - (odd_components(g, removed) - len(w.T))
                or not all(is_factor_critical(g.induced(list(c))[0]) for c in ge.components_of_D)):
            failures.append((i, "berge"))
            continue
        if n <= 10:
            berge_full += 1
            if brute_force_deficiency(g) != odd_components(g, removed) - len(w.T):
                failures.append((i, "deficiency"))
    ok = not failures
    criterion(ok, f"1000 random graphs n<=12 nu exact, Berge equality on all, "
                  f"brute-force max over S on {berge_full} with n<=10; failures={failures[:5]}")
    assert ok


@pytest.mark.criterion(4)
def test_staircase_instances_covered(criterion):
    rng = np.random.Generator(np.random.PCG64(SEED))
    violations = []
    for trial in range(10_000):
        a = int(rng.integers(1, 13))
        b = a + int(rng.integers(0, 6))
        rows = []
        for i in range(a):
            d = int(rng.integers(i + 1, b + 1))  # d(i) >= i in 1-indexed terms
            rows.append(tuple(int(x) for x in rng.choice(b, size=d, replace=False)))
        inst = BipartiteInstance(a, b, tuple(rows))
        assert staircase_check(inst)
        result = hall_matching(inst)
        if isinstance(result, HallViolator) or len(result) != a:
            violations.append(trial)
    ok = not violations
    criterion(ok, f"10000 staircase instances, uncovered={len(violations)}")
    assert ok


@pytest.mark.criterion(5)
def test_constructions(criterion):
    start = time.perf_counter()
    rows = []
    ok = True
    for n, s, variant in [(12, 3, "H1"), (40, 10, "H1"), (21, 8, "H2"), (25, 10, "H2")]:
        h = construct_extremal_coloring(n, s, variant)
        g = threshold_g(n, s, permissive=True).g
        colors = h.num_colors()
        size = max_rainbow_matching(h).size
        clique = find_mono_clique(h, n - s)
        join = find_mono_join(h, s)
        good = colors == g - 1 and size == s + 1 and clique is None and join is None
        ok &= good
        rows.append(f"({n},{s},{variant}) colors={colors}/g-1={g - 1} rainbow={size} "
                    f"clique={clique is not None} join={join is not None}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 600
    criterion(ok, "; ".join(rows) + f" in {elapsed:.2f}s (limit 600s)")
    assert ok


@pytest.mark.criterion(6)
def test_boundary_probes(criterion):
    h1 = recolor_boundary_probe(12, 3, "H1")
    h2 = recolor_boundary_probe(21, 8, "H2")
    ok = (h1.trials == 42 and h2.trials == 85
          and not h1.counterexamples and not h2.counterexamples
          and h1.inconclusive == 0 and h2.inconclusive == 0)
    criterion(ok, f"H1(12,3) trials={h1.trials} counterexamples={len(h1.counterexamples)} "
                  f"inconclusive={h1.inconclusive}; H2(21,8) trials={h2.trials} "
                  f"counterexamples={len(h2.counterexamples)} inconclusive={h2.inconclusive}")
    assert ok


@pytest.mark.criterion(7)
def test_inequality_audit(criterion):
    start = time.perf_counter()
    rep = audit_proof_inequalities((2, 60), 400)
    elapsed = time.perf_counter() - start
    identity = rep.checked.get("h.p2_t2_identity", 0)
    ok = rep.passed and identity == rep.cells and elapsed < 120
    criterion(ok, f"cells={rep.cells} checks={sum(rep.checked.values())} "
                  f"violations={len(rep.violations)} p2 identity checked at {identity} cells "
                  f"in {elapsed:.2f}s (limit 120s)")
    assert ok


@pytest.mark.criterion(8)
def test_rainbow_solver_equivalence(criterion):
    rng = random.Random(SEED)
    mismatches = []
    for i in range(500):
        n = rng.randint(2, 10)
        palette = rng.choice([1, 2, 3, n, 2 * n, pair_count(n)])
        h = ColoredGraph(n, [rng.randrange(palette) for _ in range(pair_count(n))])
        cert = max_rainbow_matching(h)
        cert.validate(h)
        if cert.size != brute_force_max_rainbow(h):
            mismatches.append(i)
    ok = not mismatches
    criterion(ok, f"500 random colorings n<=10, mismatches={mismatches[:5]}")
    assert ok


@pytest.mark.criterion(9)
def test_stability_stress(criterion):
    first = random_stability_search(40, 10, 1000, SEED)
    second = random_stability_search(40, 10, 1000, SEED)
    checked = sum(1 for o in first.outcomes if "verdict" in o)
    ok = (first.trials == 1000 and not first.counterexamples
          and first.digest() == second.digest())
    criterion(ok, f"trials={first.trials} counterexamples={len(first.counterexamples)} "
                  f"verdicts={checked} inconclusive={first.inconclusive} "
                  f"digests equal={first.digest() == second.digest()} ({first.digest()[:16]})")
    assert ok


@pytest.mark.criterion(10)
def test_h1_40_10_performance(criterion):
    h = construct_extremal_coloring(40, 10, "H1")
    start = time.perf_counter()
    try:
        size = max_rainbow_matching(h, budget_ms=10_000).size
        outcome = f"size={size}"
    except BudgetExceeded:
        size = None
        outcome = "inconclusive"
    elapsed = time.perf_counter() - start
    edges, colors = pair_count(40), h.num_colors()
    ok = size == 11 and elapsed < 10 and (edges, colors) == (780, 319)
    criterion(ok, f"H1(40,10) {edges} edges {colors} colors: {outcome} in {elapsed:.3f}s "
                  "(limit 10s)")
    assert ok

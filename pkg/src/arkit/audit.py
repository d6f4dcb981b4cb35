"""Grid re-verification of the counting inequalities behind the stability proof.

Every check is exact integer arithmetic.  Half-integer expressions are
compared after doubling both sides.  Where the argument bounds a quadratic by
its endpoint values, the auditor takes the true maximum over the integer
range and checks the endpoint bounds separately.

Check ids are grouped by letter:

a  g(n,s) against ar(n, M_{s+1})
b  f(n,t) = C(n,2) - C(n-t,2) + C(2s+3-2t,2): expanded form, max over t in [4, s-2]
c  edge counts of the dense configurations for t in {0, 1, 2, 3}
d  counting steps of the t = 1 case
e  h1 on [1, s-1]
f  h2 on [3, s+1] and h3 on [2, s]
g  the t = s+1 and t = s leftover-edge identities
h  the t in {2, 3} case: p1, p2 and the t = 3 color count
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from math import comb

from .errors import RegimeError
from .extremal import anti_ramsey_matching, g1, g2, turan_matching

_RELATIONS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


@dataclass(frozen=True)
class CheckRecord:
    check: str
    n: int
    s: int
    param: int | None
    lhs: int
    relation: str
    rhs: int
    passed: bool

    @property
    def margin(self) -> int:
        if self.relation in ("<", "<="):
            return self.rhs - self.lhs
        return self.lhs - self.rhs

    def to_json(self) -> dict:
        return {"check": self.check, "n": self.n, "s": self.s, "param": self.param,
                "lhs": self.lhs, "relation": self.relation, "rhs": self.rhs,
                "passed": self.passed, "margin": self.margin}


@dataclass
class AuditReport:
    s_range: tuple[int, int]
    n_cap: int
    cells: int = 0
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[CheckRecord] = field(default_factory=list)
    tightest: dict[str, CheckRecord] = field(default_factory=dict)
    records: list[CheckRecord] | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, rec: CheckRecord) -> None:
        self.checked[rec.check] = self.checked.get(rec.check, 0) + 1
        if not rec.passed:
            self.violations.append(rec)
        if rec.relation != "==":
            best = self.tightest.get(rec.check)
            if best is None or rec.margin < best.margin:
                self.tightest[rec.check] = rec
        if self.records is not None:
            self.records.append(rec)

    def to_json(self) -> dict:
        out = {
            "grid": {"s_min": self.s_range[0], "s_max": self.s_range[1],
                     "n_min_rule": "max(2s+5, 40)", "n_cap": self.n_cap, "cells": self.cells},
            "checked": dict(sorted(self.checked.items())),
            "violations": [r.to_json() for r in self.violations],
            "tightest": {k: r.to_json() for k, r in sorted(self.tightest.items())},
            "passed": self.passed,
        }
        if self.records is not None:
            out["records"] = [r.to_json() for r in self.records]
        return out

    def table(self) -> str:
        rows = [f"{'check':<24}{'checked':>9}{'failed':>8}{'min margin':>12}  at (n, s, param)"]
        failed: dict[str, int] = {}
        for v in self.violations:
            failed[v.check] = failed.get(v.check, 0) + 1
        for check in sorted(self.checked):
            tight = self.tightest.get(check)
            where = f"({tight.n}, {tight.s}, {tight.param})" if tight else "identity"
            margin = str(tight.margin) if tight else "0"
            rows.append(f"{check:<24}{self.checked[check]:>9}{failed.get(check, 0):>8}"
                        f"{margin:>12}  {where}")
        rows.append(f"cells={self.cells} violations={len(self.violations)}")
        return "\n".join(rows)


# ---------------------------------------------------------------------------
# The functions being audited


def f_value(n: int, s: int, t: int) -> int:
    return comb(n, 2) - comb(n - t, 2) + comb(2 * s + 3 - 2 * t, 2)


def f_expanded_doubled(n: int, s: int, t: int) -> int:
    """2 f(n, t) from the expanded quadratic 3/2 t^2 + (n - 4s - 11/2) t + 2s^2 + 5s + 3."""
    return 3 * t * t + (2 * n - 8 * s - 11) * t + 4 * s * s + 10 * s + 6


def h1(n: int, s: int, j: int) -> int:
    return comb(s - 1, 2) + (s - 1 - j) * (n - s + 1) + j * (j + 6) + 10


def h2(n: int, s: int, j: int) -> int:
    return comb(s + 1, 2) + (s + 1 - j) * (n - s - 1) + j * (j + 2) + 3


def h3(n: int, s: int, j: int) -> int:
    return comb(s, 2) + (s - j) * (n - s) + j * (j + 4) + 3


def p1(n: int, s: int, t: int) -> int:
    m = s - t
    return max(comb(2 * m + 1, 2), m * (m + 3) + comb(m, 2)) + (t + 1) + t * (n - t) + comb(t, 2)


def p2(n: int, s: int, t: int) -> int:
    return comb(2 * s - 2 * t + 3, 2) + (t - 1) * (n - t + 1) + comb(t - 1, 2) + 1


def join_edges(n: int, hubs: int, cliques: list[int]) -> int:
    """e(K_hubs v (K_c1 u ... u independent rest)) on n vertices."""
    return comb(hubs, 2) + hubs * (n - hubs) + sum(comb(c, 2) for c in cliques)


# ---------------------------------------------------------------------------
# The grid


def _argmax(fn, lo: int, hi: int) -> tuple[int, int]:
    best_j, best = lo, fn(lo)
    for j in range(lo + 1, hi + 1):
        val = fn(j)
        if val > best:
            best_j, best = j, val
    return best_j, best


def audit_cell(n: int, s: int, report: AuditReport) -> None:
    a, b = g1(n, s), g2(n, s)
    g = max(a, b)
    g1_regime = 2 * n >= 5 * s + 3

    def check(cid, lhs, rel, rhs, param=None):
        report.add(CheckRecord(cid, n, s, param, lhs, rel, rhs, _RELATIONS[rel](lhs, rhs)))

    # a: the color count beats ar(n, M_{s+1}) = ex(n, M_s) + 2
    ex_s = turan_matching(n, s)
    ar_next = anti_ramsey_matching(n, s + 1)
    check("a.g_gt_ar", g, ">", ar_next)
    check("a.ar_is_ex_plus_2", ar_next, "==", ex_s + 2)
    check("a.display", max(comb(n, 2) - comb(n - s + 1, 2) + 2, comb(2 * s - 1, 2) + 2),
          "==", ex_s + 2)

    # b: f(n, t)
    for t in range(0, s + 2):
        check("b.f_expanded", 2 * f_value(n, s, t), "==", f_expanded_doubled(n, s, t), t)
    if s >= 6:
        t_star, f_max = _argmax(lambda t: f_value(n, s, t), 4, s - 2)
        check("b.f_max_lt_g", f_max, "<", g, t_star)
        f4, fs2 = f_value(n, s, 4), f_value(n, s, s - 2)
        check("b.f4_closed_form", f4, "==", 4 * n + 2 * s * s - 11 * s + 5, 4)
        check("b.f_s-2_closed_form", 2 * fs2, "==", 2 * n * s - 4 * n - s * s + 3 * s + 40, s - 2)
        if g1_regime:
            check("b.f_endpoints_lt_g1", max(f4, fs2), "<", a)
        else:
            check("b.f_endpoint_max_is_f4", max(f4, fs2), "==", f4)
            check("b.f4_lt_g2", f4, "<", b)

    # c: dense configurations
    check("c.t0_bound", comb(2 * s - 1, 2) + 10, "<", b)
    if s >= 4:
        lhs = comb(2 * s - 3, 2) + n + 9
        check("c.t1_count", join_edges(n, 1, [2 * s - 3, 5]), "==", lhs)
        check("c.t1_lt_g2", lhs, "<", b)
        check("c.t1_single_triangle", join_edges(n, 1, [2 * s - 1, 3]), "==", b + 1)
        check("c.t1_hub_degree", b - comb(2 * s - 1, 2) - 3, ">=", n - 2)
        lhs = 2 * n + 2 * s * s - 7 * s + 6
        check("c.t2_count", join_edges(n, 2, [2 * s - 3, 3]), "==", lhs)
        check("c.t2_lt_g", lhs, "<", g)
    if s >= 5:
        lhs = 3 * n + 2 * s * s - 11 * s + 12
        check("c.t3_count", join_edges(n, 3, [2 * s - 5, 3]), "==", lhs)
        check("c.t3_lt_g", lhs, "<", g)

    # d: t = 1 counting steps
    if n >= 2 * s + 7:
        lhs = b - (n - 2 * s - 2) - 2
        check("d.case1_count", lhs, "==", 2 * s * s - s + 2)
        check("d.case1_gt_ex", lhs, ">", turan_matching(2 * s + 2, s))
    if n == 2 * s + 6:
        lhs = b - (n - 1) - 1
        check("d.case1_n2s6_count", lhs, "==", comb(2 * s - 1, 2) + 1)
        check("d.case1_n2s6_gt_ex", lhs, ">", turan_matching(2 * s + 1, s))
    if n == 2 * s + 5:
        check("d.case1_n2s5_identity", comb(2 * s, 2) + 6, "==", comb(2 * s - 1, 2) + n)
        check("d.case1_n2s5_star", join_edges(2 * s + 2, 1, [2 * s - 1]) + 4, "<=",
              comb(2 * s, 2) + 6)
        lhs = b - 3 - 2 * s - 2
        check("d.case1_n2s5_count", lhs, "==", comb(2 * s - 1, 2) + 1)
        check("d.case1_n2s5_gt_ex", lhs, ">", turan_matching(2 * s, s))
    check("d.case1_2_count", b - (n - 2 * s - 2) - 2 * s - 2, ">", comb(2 * s - 1, 2))

    # e: h1
    if s >= 2:
        j_star, h_max = _argmax(lambda j: h1(n, s, j), 1, s - 1)
        check("e.h1_max_lt_g", h_max, "<", g, j_star)
        left, right = h1(n, s, 1), h1(n, s, s - 1)
        check("e.h1_left_lt_g1", left, "<", a, 1)
        check("e.h1_left_closed_form", left, "==", comb(s - 1, 2) + (s - 2) * (n - s + 1) + 17, 1)
        check("e.h1_right_lt_g2", right, "<", b, s - 1)
        check("e.h1_right_closed_form", 2 * right, "==", 3 * s * s + 5 * s + 12, s - 1)

    # f: h2, h3
    j_star, h_max = _argmax(lambda j: h2(n, s, j), 3, max(3, s + 1))
    check("f.h2_max_lt_g", h_max, "<", g, j_star)
    left, right = h2(n, s, 3), h2(n, s, s + 1)
    check("f.h2_left_lt_g1", left, "<", a, 3)
    check("f.h2_left_closed_form", 2 * left, "==", 2 * n * s - 4 * n - s * s + 3 * s + 40, 3)
    check("f.h2_right_lt_g2", right, "<", b, s + 1)
    check("f.h2_right_closed_form", 2 * right, "==", 3 * s * s + 9 * s + 12, s + 1)

    j_star, h_max = _argmax(lambda j: h3(n, s, j), 2, max(2, s))
    check("f.h3_max_lt_g", h_max, "<", g, j_star)
    check("f.h3_left_lt_g1", h3(n, s, 2), "<", a, 2)
    check("f.h3_left_closed_form", h3(n, s, 2), "==", comb(s, 2) + (s - 2) * (n - s) + 15, 2)
    check("f.h3_right_lt_g2", h3(n, s, s), "<", b, s)

    # g: leftover edges once the hub part is full
    check("g.case3_leftover", a - comb(s - 1, 2) - (s - 1) * (n - s + 1), "==", 5)
    check("g.case4_leftover", a - comb(s, 2) - (s - 1) * (n - s) - 3, "==", 2)

    # h: t in {2, 3}
    if s >= 5:
        lhs = comb(2 * s - 3, 2) + (n - 2 * s + 3) + 3 * (2 * s - 3)
        check("h.case5_t3_count", lhs, "==", n + 2 * s * s - 3 * s, 3)
        check("h.case5_t3_lt_g2", lhs, "<", b, 3)
    for t in (2, 3):
        m = s - t
        if m < 2:
            continue
        val = p1(n, s, t)
        check("h.p1_lt_g", val, "<", g, t)
        if m >= 3:
            check("h.p1_first_term", val, "==",
                  comb(2 * m + 1, 2) + (t + 1) + t * (n - t) + comb(t, 2), t)
        else:
            check("h.p1_s-t=2_form", val, "==", 12 + t + t * (n - t) + comb(t, 2), t)
            check("h.p1_s-t=2_lt_g1", val, "<", a, t)
    check("h.p2_t2_identity", p2(n, s, 2), "==", b - 1, 2)
    if s >= 5:
        val = p2(n, s, 3)
        check("h.p2_t3_closed_form", val, "==", comb(2 * s - 3, 2) + 2 * n - 2, 3)
        check("h.p2_t3_lt_g", val, "<", g, 3)


def audit_proof_inequalities(s_range: tuple[int, int] = (2, 60), n_cap: int = 400,
                             keep_records: bool = False) -> AuditReport:
    """Run every check on each (n, s) with s in ``s_range`` and
    max(2s+5, 40) <= n <= ``n_cap``.  Cells are visited in (s, n) order."""
    lo, hi = s_range
    if not (2 <= lo <= hi <= 200):
        raise RegimeError(f"s_range must lie within [2, 200], got {s_range}")
    report = AuditReport((lo, hi), n_cap, records=[] if keep_records else None)
    for s in range(lo, hi + 1):
        for n in range(max(2 * s + 5, 40), n_cap + 1):
            report.cells += 1
            audit_cell(n, s, report)
    return report

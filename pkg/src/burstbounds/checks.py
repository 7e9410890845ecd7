"""Invariant suites run by ``burstbounds verify``.

Each suite returns a :class:`SuiteResult`; ``failures`` holds hard
assertion failures, ``reports`` holds informational discrepancy reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import bounds, oracle
from .combinatorics import count_run_at_most, count_run_exact


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    reports: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)


def combinatorics_suite(max_x: int = 14) -> SuiteResult:
    res = SuiteResult("combinatorics")
    for x in range(max_x + 1):
        for y in range(x + 1):
            total = 0
            for z in range(x - y + 1):
                got = count_run_exact(x, y, z)
                want = oracle.oracle_run_exact_count(x, y, z)
                total += got
                res.expect(got == want, f"B({x},{y},{z}) = {got}, enumeration gives {want}")
            res.expect(total == comb(x, y), f"sum_z B({x},{y},z) = {total} != C({x},{y})")
            prev = -1
            for e in range(-1, x + 1):
                a = count_run_at_most(x, y, e)
                res.expect(a >= prev, f"A({x},{y},e) decreases at e={e}")
                if e >= x - y:
                    res.expect(a == comb(x, y), f"A({x},{y},{e}) != C({x},{y})")
                prev = a
            if x > y:
                res.expect(count_run_at_most(x, y, -1) == 0, f"A({x},{y},-1) != 0")
    return res


def abramson_regime(n: int):
    """Burst lengths u >= 2 with u - 2 < floor(n/2 - 2), where the single-burst bound is Abramson's."""
    return [u for u in range(2, n) if u - 2 < (n - 4) // 2]


def identities_suite(max_corollary_x: int = 16, max_hamming_n: int = 64) -> SuiteResult:
    res = SuiteResult("identities")
    for x in range(max_corollary_x + 1):
        n = 3 * x + 10
        res.expect(oracle.verify_corollary2(x, n), f"interior sum at x={x}, n={n} != 2^{x}")
    for n in (15, 31, 63):
        for u in abramson_regime(n):
            res.expect(
                bounds.sbc_rhs(n, u) == bounds.abramson_rhs(n, u),
                f"single-burst bound differs from Abramson at n={n}, u={u}",
            )
    for t in range(1, 7):
        for v in range(1, 11):
            for M in range(1, t + 1):
                res.expect(
                    bounds.full_subblock_rhs(t, v, M) == bounds.mpbc_nogap_rhs(t, v, M, v),
                    f"full-subblock bound differs from E=v at t={t}, v={v}, M={M}",
                )
    for n in range(1, max_hamming_n + 1):
        ball = 1
        for E in range(1, n + 1):
            ball += comb(n, E)
            res.expect(
                bounds.mpbc_nogap_rhs(1, n, 1, E) == ball,
                f"single-subblock bound is not the Hamming ball at n={n}, E={E}",
            )
    return res


def subblock_suite(max_v: int = 12) -> SuiteResult:
    """Hard-fails only inside the CBC regime; beyond it mismatches are reported."""
    res = SuiteResult("subblock")
    for v in range(3, max_v + 1):
        for u in range(2, v):
            report = oracle.compare_subblock_counts(v, u)
            if bounds.is_cbc_conforming(v, u):
                res.expect(report.consistent, f"v={v}, u={u}: {len(report.mismatches)} mismatches")
            else:
                res.checked += 1
                if report.mismatches:
                    res.reports.append(report)
                if any(m.pattern.weight != 2 for m in report.mismatches):
                    res.failures.append(f"v={v}, u={u}: mismatch outside weight-2 patterns")
    return res


def theorem1_suite(max_v: int = 12) -> SuiteResult:
    res = SuiteResult("theorem1")
    for v in range(3, max_v + 1):
        for u in range(2, v):
            chk = oracle.verify_theorem1(v, u)
            res.expect(
                chk.holds,
                f"v={v}, u={u}: lightest burst has weight {chk.achieved_min} < {chk.bound}",
            )
    return res


SUITES = ("combinatorics", "identities", "subblock", "theorem1")


def run_suite(name: str, max_x: int = 14, max_v: int = 12) -> SuiteResult:
    if name == "combinatorics":
        return combinatorics_suite(max_x)
    if name == "identities":
        return identities_suite()
    if name == "subblock":
        return subblock_suite(max_v)
    if name == "theorem1":
        return theorem1_suite(max_v)
    raise ValueError(f"unknown suite {name!r}")

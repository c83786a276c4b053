"""Acceptance gate: eleven criteria, each printed as one PASS/FAIL line.

Random inputs come from ``random.Random`` with fixed seeds (independent of the
package's own generator) unless the criterion is about the package's seeded
harness itself.
"""

import io
import random
import time
from fractions import Fraction as F

import pytest

from conftest import ACCEPTANCE_LINES
from newtonmac.cli import run
from newtonmac.counterexamples import (
    construct_case1, construct_case2, construct_highk, default_grid, sweep,
)
from newtonmac.harness import run_suite
from newtonmac.inequalities import AllEqual, RatioMinusAlpha, newton_gap
from newtonmac.operators import Binomial, QuadCoef, TwoShift, shift_identity_check
from newtonmac.polyalgebra import (
    UniPoly, identity_sample, sturm_real_roots, verify_eq32, verify_eq33,
    verify_lemma21, verify_sos_n5,
)
from newtonmac.symcore import SymPoint, sigma_all, sigma_oracle
from newtonmac.symcore import binomial as C


def record(num, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] C{num:<2} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def rational(rng, num=1000, den=20):
    return F(rng.randint(-num, num), rng.randint(1, den))


def positive(rng, num=1000, den=20):
    return F(rng.randint(1, num), rng.randint(1, den))


def test_c1_oracle_equivalence():
    rng = random.Random(101)
    start = time.perf_counter()
    mismatches = checked = 0
    for n in range(1, 13):
        for _ in range(1000):
            x = SymPoint.of([rational(rng) for _ in range(n)])
            table = sigma_all(x)
            for k in range(n + 1):
                checked += 1
                mismatches += table.sigma[k] != sigma_oracle(x, k)
    elapsed = time.perf_counter() - start
    record(1, "sigma_all == enumeration oracle", mismatches == 0 and elapsed < 30,
           f"{mismatches} mismatches over {checked} values, {elapsed:.1f}s (limit 30s)")


def test_c2_two_shift_gap():
    start = time.perf_counter()
    summary = run_suite("theorem11", 9, 10_000, seed=2024)
    elapsed = time.perf_counter() - start
    record(2, "two-shift gap >= 0, n in [4,9], k in [3,n-1]",
           summary.failures == 0 and elapsed < 120,
           f"{summary.failures} violations in {summary.trials} instances, {elapsed:.1f}s (limit 120s)")


def test_c3_binomial_gap():
    summary = run_suite("theorem14", 9, 10_000, seed=2024)
    record(3, "binomial gap >= 0, s in [1,4], n in [s+2,9], k in [s+1,n-1]",
           summary.failures == 0, f"{summary.failures} violations in {summary.trials} instances")


def test_c4_equality_cases():
    rng = random.Random(404)
    bad = {"all_equal": 0, "two_shift": 0, "binomial": 0}
    for _ in range(500):
        n = rng.randint(4, 9)
        x = SymPoint.of([rational(rng)] * n)
        s = rng.randint(1, min(4, n - 2))
        specs = [(TwoShift(rational(rng), rational(rng)), 3), (Binomial(rational(rng), s), s + 1)]
        for spec, lo in specs:
            for k in range(lo, n):
                r = newton_gap(x, spec, k)
                bad["all_equal"] += not (r.gap == 0 and r.equality == AllEqual())

        # n - 2 entries at -alpha, the other two strictly above it
        alpha = rational(rng) or F(1)
        u = -alpha + positive(rng)
        v = u + positive(rng)
        x = SymPoint.of([-alpha] * (n - 2) + [u, v])
        for k in range(3, n):
            r = newton_gap(x, TwoShift(alpha, alpha), k)
            bad["two_shift"] += not (r.gap == 0 and r.equality == RatioMinusAlpha(alpha))

        extra = sorted(-alpha + positive(rng) for _ in range(s))
        x = SymPoint.of([-alpha] * (n - s) + extra)
        for k in range(s + 1, n):
            r = newton_gap(x, Binomial(alpha, s), k)
            bad["binomial"] += not (r.gap == 0 and r.equality == RatioMinusAlpha(alpha))
    record(4, "equality cases (all-equal, two-shift ratio, binomial ratio)", not any(bad.values()),
           f"500 instances each, failures {bad}")


def test_c5_chains():
    summary = run_suite("chain", 9, 2000, seed=2024)
    record(5, "Maclaurin chains and low-index gaps in the positive orthant",
           summary.failures == 0, f"{summary.failures} failures in {summary.trials} instances")


def test_c6_counterexamples():
    start = time.perf_counter()
    problems = []
    ns = range(4, 13)
    for case in ("1", "2"):
        for r in sweep(case, ns):
            if not (r.gap == r.closed_form and r.gap < 0):
                problems.append((case, r.n, r.c, r.d))
            if case == "2" and r.c * r.d < 0:
                problems.append(("sign", r.n, r.c, r.d))
    spots = (construct_case1(5, 1, 1).gap, construct_case2(5, F(1, 2), 1).gap)
    if spots != (F(-27, 100), F(-567, 800)):
        problems.append(("spots", spots))
    highk = [(4, n) for n in range(5, 13)] + [(5, n) for n in range(6, 10)]
    for k, n in highk:
        for c, d in default_grid("highk"):
            if not construct_highk(n, k, c, d).gap < 0:
                problems.append(("highk", k, n, c, d))
    elapsed = time.perf_counter() - start
    record(6, "counterexample closed forms, negativity and spot values",
           not problems and elapsed < 30,
           f"{2 * 25 * len(ns)} k=3 witnesses, {25 * len(highk)} high-k witnesses, "
           f"{len(problems)} problems, spots {spots[0]}, {spots[1]}, {elapsed:.1f}s (limit 30s)")


def test_c7_identities():
    start = time.perf_counter()
    results = {
        "lemma21": verify_lemma21(),
        "sos5": verify_sos_n5(),
        **{f"eq32 k={k}": verify_eq32(k) for k in range(2, 7)},
        **{f"eq33 k={k}": verify_eq33(k) for k in range(2, 6)},
        **{f"sample {name} k={k}": identity_sample(name, k, 100, seed=7)
           for name in ("eq32", "eq33") for k in (7, 8)},
    }
    elapsed = time.perf_counter() - start
    false = [name for name, ok in results.items() if not ok]
    record(7, "symbolic identities and sampled identities", not false and elapsed < 180,
           f"{len(results) - len(false)}/{len(results)} true{f' (false: {false})' if false else ''}, "
           f"{elapsed:.1f}s (limit 180s)")


def test_c8_real_rootedness():
    summary = run_suite("lemma22", 10, 2000, seed=2024)
    control = sturm_real_roots(UniPoly((1, 0, 1)))
    record(8, "derivative reductions stay real-rooted (Sturm)",
           summary.failures == 0 and not control.all_roots_real,
           f"{summary.failures} failures in {summary.trials} polynomials, "
           f"t^2+1 all_roots_real={control.all_roots_real}")


def test_c9_shift_identity():
    rng = random.Random(909)
    failures = 0
    for _ in range(2000):
        n = rng.randint(1, 10)
        x = SymPoint.of([rational(rng) for _ in range(n)])
        alpha = rational(rng)
        k = rng.randint(0, n)
        shifted = SymPoint.of([v + alpha for v in x])
        # both sides from the enumeration oracle as an independent route
        lhs = sigma_oracle(shifted, k) / C(n, k)
        rhs = sum(C(k, i) * alpha ** (k - i) * sigma_oracle(x, i) / C(n, i) for i in range(k + 1))
        failures += not (lhs == rhs and shift_identity_check(x, alpha, k))
    record(9, "shift expansion of E_k(x + alpha e)", failures == 0,
           f"{failures} failures in 2000 instances")


def test_c10_separation():
    rng = random.Random(1010)
    failures = 0
    for i in range(500):
        n = rng.randint(4, 12)
        c, d = rational(rng, 50, 6), rational(rng, 50, 6)
        big = max(abs(c), abs(d)) or F(1)
        small = min(abs(c), abs(d)) or big / 2
        if i % 2 == 0:
            r = construct_case1(n, big * (1 if c >= 0 else -1), small * (1 if d >= 0 else -1))
        else:
            r = construct_case2(n, c / 2 if abs(c) < big else small / 2, big * (1 if d >= 0 else -1))
        spread = positive(rng, 50, 6)
        # same a, real roots: a double root at -c, then two split real roots
        real_pairs = [(r.c, r.c), (r.c - spread, r.c + spread)]
        for alpha, beta in real_pairs:
            assert alpha + beta == r.a
            failures += newton_gap(r.z0, QuadCoef(alpha + beta, alpha * beta), 3).gap < 0
        failures += not r.gap < 0
    record(10, "complex-root sign flip disappears for real roots with the same a",
           failures == 0, f"{failures} failures over 500 witnesses")


def test_c11_determinism():
    argv = ["randomtest", "all", "--n-max", "8", "--trials", "40", "--seed", "99"]
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        code = run(argv, stdout=buf)
        outputs.append((code, buf.getvalue().encode()))
    same = outputs[0] == outputs[1] and outputs[0][0] == 0
    record(11, "randomtest output is byte-identical across runs", same,
           f"{len(outputs[0][1])} bytes, exit {outputs[0][0]}")

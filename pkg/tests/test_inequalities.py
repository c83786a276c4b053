from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from conftest import small_rationals, vectors
from newtonmac.errors import PreconditionError
from newtonmac.inequalities import (
    AllEqual, BothSidesZero, RatioMinusAlpha, Strict, ZeroUnclassified,
    classify_equality, corollary_product, gap_low_k, maclaurin_chain, newton_gap,
)
from newtonmac.operators import Binomial, QuadCoef, TwoShift
from newtonmac.symcore import SymPoint, sigma_oracle
from newtonmac.symcore import binomial as C

positive = st.builds(F, st.integers(1, 40), st.integers(1, 7))
nonneg = st.builds(F, st.integers(0, 40), st.integers(1, 7))


def mean(x, j):
    return sigma_oracle(x, j) / C(x.n, j) if 0 <= j <= x.n else 0


def test_classical_gap():
    report = newton_gap(SymPoint.of([1, 2, 3]), TwoShift(0, 0), 2)
    assert report.gap == F(121, 9) - 12 == F(13, 9)
    assert report.equality == Strict()


@pytest.mark.parametrize("spec", [TwoShift(0, 0), TwoShift(3, F(-1, 2)), QuadCoef(1, 5), Binomial(2, 2)])
def test_all_equal_vector(spec):
    report = newton_gap(SymPoint.of([5] * 5), spec, 3)
    assert report.gap == 0
    assert report.equality == AllEqual()


def test_lemma_point_ratio():
    report = newton_gap(SymPoint.of([-1, -1, 2, 3]), TwoShift(1, 1), 3)
    assert (report.s_km1, report.s_k, report.s_kp1) == (2, -2, 2)
    assert report.gap == 0
    assert report.equality == RatioMinusAlpha(1)


def test_binomial_ratio_example():
    # n - s = 2 entries equal to -alpha
    x = SymPoint.of([-1, -1, 2, 3, 7])
    report = newton_gap(x, Binomial(1, 3), 4)
    assert report.gap == 0
    assert report.equality == RatioMinusAlpha(1)


def test_binomial_three_entries_at_minus_alpha():
    # one entry too many collapses S_3, S_4, S_5 to zero
    report = newton_gap(SymPoint.of([-1, -1, -1, 2, 7]), Binomial(1, 3), 4)
    assert (report.s_km1, report.s_k, report.s_kp1) == (0, 0, 0)
    assert report.equality == BothSidesZero()


def test_zero_unclassified_for_complex_quadratic():
    # t^2 + 1: no real double root, so a zero gap has no ratio explanation
    x = SymPoint.of([1, -1, 0])
    report = newton_gap(x, QuadCoef(0, 1), 1)
    if report.gap == 0 and report.s_k != 0:
        assert report.equality == ZeroUnclassified()
    assert classify_equality(x, QuadCoef(0, 1), report) == report.equality


def test_double_root_quadratic_uses_its_alpha():
    report = newton_gap(SymPoint.of([-1, -1, 2, 3]), QuadCoef(2, 1), 3)
    assert report.equality == RatioMinusAlpha(1)


@pytest.mark.parametrize("k", [0, 4])
def test_gap_index_range(k):
    with pytest.raises(PreconditionError):
        newton_gap(SymPoint.of([1, 2, 3, 4]), TwoShift(0, 0), k)


@given(vectors(min_size=2, max_size=7), small_rationals, small_rationals, st.integers(1, 6))
def test_gap_report_is_consistent(xs, alpha, beta, k):
    x = SymPoint.of(xs)
    assume(k <= x.n - 1)
    r = newton_gap(x, TwoShift(alpha, beta), k)
    assert r.gap == r.recomputed_gap()
    S = lambda m: mean(x, m) + (alpha + beta) * mean(x, m - 1) + alpha * beta * mean(x, m - 2)
    assert (r.s_km1, r.s_k, r.s_kp1) == (S(k - 1), S(k), S(k + 1))
    assert (r.gap == 0) == (r.equality != Strict())


@given(vectors(min_size=4, max_size=8), small_rationals, small_rationals, st.data())
def test_two_shift_gap_nonnegative(xs, alpha, beta, data):
    x = SymPoint.of(xs)
    k = data.draw(st.integers(3, x.n - 1))
    assert newton_gap(x, TwoShift(alpha, beta), k).gap >= 0


@given(st.integers(1, 4), small_rationals, st.data())
def test_binomial_gap_nonnegative(s, alpha, data):
    xs = data.draw(vectors(min_size=s + 2, max_size=8))
    x = SymPoint.of(xs)
    k = data.draw(st.integers(s + 1, x.n - 1))
    assert newton_gap(x, Binomial(alpha, s), k).gap >= 0


@given(st.integers(4, 8), small_rationals, positive, positive, st.data())
def test_two_shift_equality_construction(n, alpha, du, dv, data):
    # alpha = 0 puts zeros at -alpha, which collapses S_k to 0 instead
    assume(alpha != 0)
    u, v = -alpha + du, -alpha + du + dv
    x = SymPoint.of([-alpha] * (n - 2) + [u, v])
    for k in range(3, n):
        r = newton_gap(x, TwoShift(alpha, alpha), k)
        assert r.gap == 0
        assert r.equality == RatioMinusAlpha(alpha)


@given(st.integers(1, 4), small_rationals, positive, positive, st.data())
def test_binomial_equality_construction(s, alpha, du, dv, data):
    assume(alpha != 0)
    n = data.draw(st.integers(s + 2, 8))
    extra = [-alpha + du + i * dv for i in range(s)]
    x = SymPoint.of([-alpha] * (n - s) + extra)
    for k in range(s + 1, n):
        r = newton_gap(x, Binomial(alpha, s), k)
        assert r.gap == 0
        assert r.equality == RatioMinusAlpha(alpha)


def test_classical_chain():
    chain = maclaurin_chain(SymPoint.of([1, 2, 3]), TwoShift(0, 0), 3)
    assert chain.values == (2, F(11, 3), 6)
    assert chain.monotone is True and chain.hypothesis_failures == ()


def test_constant_chain():
    chain = maclaurin_chain(SymPoint.of([F(3, 2)] * 4), TwoShift(0, 0), 4)
    assert chain.values == tuple(F(3, 2) ** m for m in range(1, 5))
    assert chain.monotone is True


def test_chain_reports_failed_hypothesis():
    chain = maclaurin_chain(SymPoint.of([1, 1, -1]), TwoShift(0, 0), 2)
    assert chain.hypothesis_failures == ("E_2 >= 0",)
    assert chain.monotone is None


def test_chain_negative_shift():
    chain = maclaurin_chain(SymPoint.of([1, 2, 3]), Binomial(-1, 2), 3)
    assert "alpha >= 0" in chain.hypothesis_failures


def test_chain_rejects_quadratic_and_range():
    with pytest.raises(PreconditionError):
        maclaurin_chain(SymPoint.of([1, 2]), QuadCoef(1, 1), 2)
    with pytest.raises(PreconditionError):
        maclaurin_chain(SymPoint.of([1, 2]), TwoShift(0, 0), 3)


@given(vectors(min_size=1, max_size=7, elements=positive), nonneg, nonneg, st.integers(1, 4))
def test_chain_monotone_in_positive_orthant(xs, alpha, beta, s):
    x = SymPoint.of(xs)
    for spec in (TwoShift(alpha, beta), Binomial(alpha, s)):
        chain = maclaurin_chain(x, spec, x.n)
        assert chain.hypothesis_failures == ()
        assert chain.monotone is True


def test_corollary_examples():
    assert corollary_product(SymPoint.of([1, 2, 3, 4]), TwoShift(0, 0), 3, 4).holds
    r = corollary_product(SymPoint.of([1, 2, 3, 4, 5]), TwoShift(1, 1), 3, 4)
    assert r.holds and r.hypothesis_ok
    assert corollary_product(SymPoint.of([2] * 5), Binomial(1, 2), 3, 5).holds


def test_corollary_index_range():
    with pytest.raises(PreconditionError):
        corollary_product(SymPoint.of([1, 2, 3, 4]), TwoShift(0, 0), 2, 4)
    with pytest.raises(PreconditionError):
        corollary_product(SymPoint.of([1, 2, 3, 4]), Binomial(0, 2), 3, 3)


@given(vectors(min_size=4, max_size=7, elements=positive), nonneg, nonneg, st.data())
def test_corollary_under_hypotheses(xs, alpha, beta, data):
    x = SymPoint.of(xs)
    l = data.draw(st.integers(3, x.n - 1))
    k = data.draw(st.integers(l + 1, x.n))
    r = corollary_product(x, TwoShift(alpha, beta), l, k)
    assert r.hypothesis_ok and r.holds


def test_low_gap_two_shift():
    x = SymPoint.of([1, 2, 3])
    r = gap_low_k(x, TwoShift(1, 1), 1)
    # S_1 = E_1 + 2, S_0 = 1, S_2 = E_2 + 2 E_1 + 1
    assert r.gap == (2 + 2) ** 2 - (F(11, 3) + 4 + 1) == F(22, 3)
    assert r.hypothesis_failures == ()


def test_low_gap_binomial_and_range():
    r = gap_low_k(SymPoint.of([1, 1, 1, 1]), Binomial(1, 3), 2)
    assert r.gap >= 0 and r.hypothesis_failures == ()
    with pytest.raises(PreconditionError):
        gap_low_k(SymPoint.of([1, 2, 3]), TwoShift(0, 0), 3)
    with pytest.raises(PreconditionError):
        gap_low_k(SymPoint.of([1, 2, 3]), QuadCoef(0, 0), 1)


def test_low_gap_lists_failures():
    r = gap_low_k(SymPoint.of([1, 1, -5]), TwoShift(-1, 0), 1)
    assert "alpha >= 0" in r.hypothesis_failures
    assert "E_1 >= 0" in r.hypothesis_failures


@given(vectors(min_size=1, max_size=7), nonneg, nonneg, st.integers(1, 2))
def test_classical_low_gap_any_vector(xs, alpha, beta, k):
    r = gap_low_k(SymPoint.of(xs), TwoShift(0, 0), 1)
    assert r.gap >= 0
    r = gap_low_k(SymPoint.of(xs), TwoShift(alpha, beta), k)
    if not r.hypothesis_failures:
        assert r.gap >= 0


def test_float_mode_gap():
    r = newton_gap(SymPoint.of([1.0, 2.0, 3.0]), TwoShift(0.0, 0.0), 2)
    assert r.gap == pytest.approx(13 / 9, rel=1e-12)
    r = newton_gap(SymPoint.of([0.1] * 4), TwoShift(0.0, 0.0), 2)
    assert r.equality == AllEqual()

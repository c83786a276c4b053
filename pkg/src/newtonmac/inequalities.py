"""Newton-type gaps, Maclaurin chains and equality-case classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvariantError, PreconditionError
from .operators import (
    Binomial,
    OperatorSpec,
    QuadCoef,
    RealRoots,
    TwoShift,
    classify_quadratic,
    evaluate,
)
from .symcore import Scalar, SymPoint, as_point, format_scalar, sigma_all, to_scalar

FLOAT_GAP_TOL = 1e-9


@dataclass(frozen=True)
class Strict:
    tag = "strict"


@dataclass(frozen=True)
class AllEqual:
    tag = "all_equal"


@dataclass(frozen=True)
class BothSidesZero:
    tag = "both_sides_zero"


@dataclass(frozen=True)
class RatioMinusAlpha:
    alpha: Scalar
    tag = "ratio_minus_alpha"


@dataclass(frozen=True)
class ZeroUnclassified:
    tag = "zero_unclassified"


EqualityCase = Union[Strict, AllEqual, BothSidesZero, RatioMinusAlpha, ZeroUnclassified]


def equality_json(case: EqualityCase) -> dict:
    out = {"equality": case.tag}
    if isinstance(case, RatioMinusAlpha):
        out["alpha"] = format_scalar(case.alpha)
    return out


@dataclass(frozen=True)
class GapReport:
    k: int
    s_km1: Scalar
    s_k: Scalar
    s_kp1: Scalar
    gap: Scalar
    equality: EqualityCase = Strict()
    hypothesis_failures: Optional[tuple] = None

    def recomputed_gap(self) -> Scalar:
        return self.s_k * self.s_k - self.s_km1 * self.s_kp1

    def to_json(self) -> dict:
        out = {
            "k": self.k,
            "s_km1": format_scalar(self.s_km1),
            "s_k": format_scalar(self.s_k),
            "s_kp1": format_scalar(self.s_kp1),
            "gap": format_scalar(self.gap),
            **equality_json(self.equality),
        }
        if self.hypothesis_failures is not None:
            out["hypothesis_failures"] = list(self.hypothesis_failures)
        return out


@dataclass(frozen=True)
class ChainReport:
    k_max: int
    values: tuple
    hypothesis_failures: tuple = ()
    monotone: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "k_max": self.k_max,
            "values": [format_scalar(v) for v in self.values],
            "hypothesis_failures": list(self.hypothesis_failures),
        }
        if self.monotone is not None:
            out["monotone"] = self.monotone
        return out


def _is_zero(value, scale=1.0) -> bool:
    if isinstance(value, float):
        return abs(value) <= FLOAT_GAP_TOL * max(1.0, scale)
    return value == 0


def _close(u, v) -> bool:
    if isinstance(u, float) or isinstance(v, float):
        return math.isclose(u, v, rel_tol=FLOAT_GAP_TOL, abs_tol=FLOAT_GAP_TOL)
    return u == v


def _equal_shift(spec: OperatorSpec, mode: str):
    """The alpha for which a zero gap may come from ratios equal to -alpha."""
    if isinstance(spec, TwoShift):
        al, be = to_scalar(spec.alpha, mode), to_scalar(spec.beta, mode)
        return al if _close(al, be) else None
    if isinstance(spec, Binomial):
        return to_scalar(spec.alpha, mode)
    roots = classify_quadratic(to_scalar(spec.a, mode), to_scalar(spec.b, mode))
    if isinstance(roots, RealRoots) and _close(roots.alpha, roots.beta):
        return roots.alpha
    return None


def _zero_gap(report: GapReport) -> bool:
    scale = max(abs(report.s_k * report.s_k), abs(report.s_km1 * report.s_kp1))
    return _is_zero(report.gap, scale)


def classify_equality(x, spec: OperatorSpec, report: GapReport) -> EqualityCase:
    """Equality-case label for a gap; the first matching case wins.

    Order: AllEqual, BothSidesZero, RatioMinusAlpha, else ZeroUnclassified.
    """
    x = as_point(x)
    if not _zero_gap(report):
        return Strict()
    if all(v == x.entries[0] for v in x.entries):
        return AllEqual()
    if _is_zero(report.s_k) and _is_zero(report.s_km1 * report.s_kp1):
        return BothSidesZero()
    alpha = _equal_shift(spec, x.mode)
    if alpha is not None and not _is_zero(report.s_km1) and not _is_zero(report.s_k):
        if _close(report.s_k / report.s_km1, -alpha) and _close(report.s_kp1 / report.s_k, -alpha):
            return RatioMinusAlpha(alpha)
    return ZeroUnclassified()


def _gap(x: SymPoint, spec: OperatorSpec, k: int, table=None) -> GapReport:
    table = table or sigma_all(x)
    lo, mid, hi = (evaluate(spec, table, j) for j in (k - 1, k, k + 1))
    report = GapReport(k, lo, mid, hi, mid * mid - lo * hi)
    eq = classify_equality(x, spec, report)
    return GapReport(k, lo, mid, hi, report.gap, eq)


def newton_gap(x, spec: OperatorSpec, k: int) -> GapReport:
    """S_k^2 - S_{k-1} S_{k+1} for the operator family of ``spec``."""
    x = as_point(x)
    if not 1 <= k <= x.n - 1:
        raise PreconditionError(f"gap index k={k} outside 1..{x.n - 1}")
    return _gap(x, spec, k)


def _nonneg(value) -> bool:
    return value >= 0 or (isinstance(value, float) and value >= -FLOAT_GAP_TOL)


def _family_hypotheses(x: SymPoint, spec: OperatorSpec, table, upto: int) -> list[str]:
    """Named hypotheses of the chain theorems that fail at ``x``.

    ``upto`` is the largest operator index the hypotheses must cover.
    """
    mode = x.mode
    failures = []
    if isinstance(spec, TwoShift):
        if not _nonneg(to_scalar(spec.alpha, mode)):
            failures.append("alpha >= 0")
        if not _nonneg(to_scalar(spec.beta, mode)):
            failures.append("beta >= 0")
        e_upto, s_from = 2, 3
    elif isinstance(spec, Binomial):
        if not _nonneg(to_scalar(spec.alpha, mode)):
            failures.append("alpha >= 0")
        e_upto, s_from = spec.s, spec.s + 1
    else:
        raise PreconditionError("no chain theorem applies to QuadCoef operators")
    for m in range(1, e_upto + 1):
        if not _nonneg(table.e_at(m)):
            failures.append(f"E_{m} >= 0")
    for m in range(s_from, upto + 1):
        if not _nonneg(evaluate(spec, table, m)):
            failures.append(f"S_{m} >= 0")
    return failures


def _power_ge(u, p: int, v, q: int) -> bool:
    """u^p >= v^q for non-negative u, v (relative tolerance in float mode)."""
    lhs, rhs = u**p, v**q
    if isinstance(lhs, float):
        return lhs >= rhs - FLOAT_GAP_TOL * max(1.0, abs(rhs))
    return lhs >= rhs


def maclaurin_chain(x, spec: OperatorSpec, k: int) -> ChainReport:
    """Decide S_1 >= S_2^(1/2) >= ... >= S_k^(1/k) by exact cross-powers."""
    x = as_point(x)
    if isinstance(spec, QuadCoef):
        raise PreconditionError("no chain theorem applies to QuadCoef operators")
    if not 1 <= k <= x.n:
        raise PreconditionError(f"chain length k={k} outside 1..{x.n}")
    table = sigma_all(x)
    values = tuple(evaluate(spec, table, m) for m in range(1, k + 1))
    failures = _family_hypotheses(x, spec, table, k)
    if not failures:
        # unreachable when the theory holds; a negative value has no real root
        failures = [f"S_{m} >= 0" for m, v in enumerate(values, start=1) if not _nonneg(v)]
    if failures:
        return ChainReport(k, values, tuple(failures), None)
    monotone = all(
        _power_ge(values[m - 1], m + 1, values[m], m) for m in range(1, k)
    )
    if monotone and not _power_ge(values[0], k, values[k - 1], 1):
        raise InvariantError("consecutive chain comparisons hold but S_1^k < S_k")
    return ChainReport(k, values, (), monotone)


@dataclass(frozen=True)
class CorollaryResult:
    holds: bool
    hypothesis_ok: bool

    def to_json(self) -> dict:
        return {"holds": self.holds, "hypothesis_ok": self.hypothesis_ok}


def corollary_product(x, spec: OperatorSpec, l: int, k: int) -> CorollaryResult:
    """S_l S_{k-1} >= S_{l-1} S_k, with the S_l..S_{k-1} >= 0 hypothesis."""
    x = as_point(x)
    if isinstance(spec, TwoShift):
        lo = 3
    elif isinstance(spec, Binomial):
        lo = spec.s + 1
    else:
        raise PreconditionError("the product corollary needs a TwoShift or Binomial operator")
    if not lo <= l < k <= x.n:
        raise PreconditionError(f"need {lo} <= l < k <= {x.n}, got l={l}, k={k}")
    table = sigma_all(x)
    S = lambda m: evaluate(spec, table, m)
    hypothesis_ok = all(_nonneg(S(q)) for q in range(l, k))
    lhs, rhs = S(l) * S(k - 1), S(l - 1) * S(k)
    holds = lhs >= rhs or (isinstance(lhs, float) and _close(lhs, rhs))
    return CorollaryResult(holds, hypothesis_ok)


def gap_low_k(x, spec: OperatorSpec, k: int) -> GapReport:
    """Gap at the low indices covered by the chain hypotheses.

    TwoShift: k in {1, 2}; Binomial: 1 <= k <= s.  The report lists failed
    hypotheses; when none fail the gap must be non-negative.
    """
    x = as_point(x)
    if isinstance(spec, TwoShift):
        valid = k in (1, 2)
    elif isinstance(spec, Binomial):
        valid = 1 <= k <= spec.s
    else:
        raise PreconditionError("low-index gaps are defined for TwoShift and Binomial only")
    if not valid:
        raise PreconditionError(f"k={k} outside the low-index range of {spec.kind}")
    table = sigma_all(x)
    failures = _family_hypotheses(x, spec, table, 0)
    report = _gap(x, spec, k, table)
    if not failures and not _nonneg(report.gap):
        raise InvariantError(f"low-index gap {report.gap} < 0 although every hypothesis holds")
    return GapReport(report.k, report.s_km1, report.s_k, report.s_kp1, report.gap,
                     report.equality, tuple(failures))

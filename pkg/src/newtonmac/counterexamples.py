"""Explicit points where the quadratic-coefficient gap turns negative.

When t^2 + a t + b has complex roots -c +/- i d, the operator
E_k + a E_{k-1} + b E_{k-2} = E_k + 2c E_{k-1} + (c^2 + d^2) E_{k-2} can violate
the Newton-type inequality.  The constructors below build the witness vector
z0 = (m*u, m*u, -u, ..., -u) with m = n - k, evaluate the gap directly, and
compare against closed forms where those are known (k = 3).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InvariantError, PreconditionError
from .inequalities import GapReport, newton_gap
from .operators import QuadCoef
from .symcore import EXACT, Scalar, SymPoint, common_mode, format_scalar, sigma_all, to_scalar

HIGHK_K5_MAX_N = 9
SWEEP_HEADER = ("n", "k", "c", "d", "gap", "negative")


@dataclass(frozen=True)
class CounterexampleReport:
    case: str
    n: int
    k: int
    c: Scalar
    d: Scalar
    z0: SymPoint
    gap: Scalar
    closed_form: Optional[Scalar]
    negative: bool
    exploratory: bool = False

    @property
    def a(self) -> Scalar:
        return 2 * self.c

    @property
    def b(self) -> Scalar:
        return self.c * self.c + self.d * self.d

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "k": self.k,
            "c": format_scalar(self.c),
            "d": format_scalar(self.d),
            "z0": self.z0.to_json(),
            "gap": format_scalar(self.gap),
            "closed_form": None if self.closed_form is None else format_scalar(self.closed_form),
            "negative": self.negative,
            "exploratory": self.exploratory,
        }

    def csv_row(self) -> tuple:
        return (self.n, self.k, format_scalar(self.c), format_scalar(self.d),
                format_scalar(self.gap), str(self.negative).lower())


def witness(n: int, k: int, u) -> SymPoint:
    """((n-k)u, (n-k)u, -u, ..., -u) with n - 2 trailing entries."""
    return SymPoint.of([(n - k) * u] * 2 + [-u] * (n - 2))


def complex_gap(z0: SymPoint, c, d, k: int) -> Scalar:
    """[S'_k]^2 - S'_{k-1} S'_{k+1} with a = 2c, b = c^2 + d^2."""
    return newton_gap(z0, QuadCoef(2 * c, c * c + d * d), k).gap


def witness_means(n: int, u) -> tuple:
    """Closed forms of E_1..E_4 at the k = 3 witness built from ``u``."""
    return (
        Fraction(n - 4, n) * u,
        Fraction(-(n - 3), n - 1) * u**2,
        Fraction(-(n - 3) * (n - 4), n * (n - 1)) * u**3,
        Fraction(5 * n * n - 25 * n + 32, n * (n - 1)) * u**4,
    )


def case1_closed_form(n: int, c, d) -> Scalar:
    return (2 * (n - 2) ** 3 * c**2 * d**2 * (-2 * (n - 2) * c**2 + (n - 1) * d**2)
            / (n**2 * (n - 1) ** 2))


def case2_bracket(n: int, c, d) -> Scalar:
    return (n - 1) * c**4 + 2 * (n - 4) * c**2 * d**2 - 4 * (n - 4) * c * d**3 - 4 * d**4


def case2_closed_form(n: int, c, d) -> Scalar:
    return 2 * (n - 2) ** 3 * d**2 * case2_bracket(n, c, d) / (n**2 * (n - 1) ** 2)


def case1_operator_values(n: int, c, d) -> tuple:
    """Closed forms of S'_2, S'_3, S'_4 at the Case 1 witness."""
    den = n * (n - 1)
    return (
        (2 * (n - 2) ** 2 * c**2 + n * (n - 1) * d**2) / den,
        (-2 * (n - 2) ** 2 * c**3 + (n * n - 5 * n + 4) * c * d**2) / den,
        (2 * (n - 2) ** 2 * c**4 - n * (n - 3) * c**2 * d**2) / den,
    )


def case2_operator_values(n: int, c, d) -> tuple:
    """Closed forms of S'_2, S'_3, S'_4 at the Case 2 witness."""
    den = n * (n - 1)
    return (
        (n * (n - 1) * c**2 + 2 * (n * n - 5 * n + 4) * c * d + 2 * n * d**2) / den,
        ((n * n - 5 * n + 4) * c**2 * d - 2 * n * (n - 3) * c * d**2 + 2 * (n - 4) * d**3) / den,
        (-n * (n - 3) * c**2 * d**2 - 2 * (n * n - 7 * n + 12) * c * d**3
         + 2 * (2 * n * n - 11 * n + 16) * d**4) / den,
    )


def _exact_pair(c, d) -> tuple:
    mode = common_mode(c, d)
    if mode != EXACT:
        raise PreconditionError("counterexample construction runs in exact mode")
    return to_scalar(c, mode), to_scalar(d, mode)


def _cross_check(z0: SymPoint, n: int, u, ops_closed: tuple, c, d, closed_gap) -> Scalar:
    table = sigma_all(z0)
    direct_means = tuple(table.e_at(m) for m in range(1, 5))
    if direct_means != witness_means(n, u):
        raise InvariantError(f"witness means {direct_means} disagree with closed forms")
    report = newton_gap(z0, QuadCoef(2 * c, c * c + d * d), 3)
    if (report.s_km1, report.s_k, report.s_kp1) != ops_closed:
        raise InvariantError("operator values disagree with their closed forms")
    if report.gap != closed_gap:
        raise InvariantError(f"direct gap {report.gap} != closed form {closed_gap}")
    return report.gap


def construct_case1(n: int, c, d) -> CounterexampleReport:
    """k = 3 witness for |c| >= |d| built from c."""
    c, d = _exact_pair(c, d)
    if n < 4:
        raise PreconditionError("Case 1 requires n >= 4")
    if c == 0 or d == 0:
        raise PreconditionError("Case 1 requires c != 0 and d != 0")
    if abs(c) < abs(d):
        raise PreconditionError("Case 1 requires |c| >= |d|")
    z0 = witness(n, 3, c)
    closed = case1_closed_form(n, c, d)
    gap = _cross_check(z0, n, c, case1_operator_values(n, c, d), c, d, closed)
    if not gap < 0:
        raise InvariantError(f"Case 1 gap {gap} is not negative")
    return CounterexampleReport("1", n, 3, c, d, z0, gap, closed, True)


def normalize_sign(c, d) -> tuple:
    """Flip d so that c*d >= 0; the roots -c +/- i d do not change."""
    return (c, -d) if c * d < 0 else (c, d)


def construct_case2(n: int, c, d) -> CounterexampleReport:
    """k = 3 witness for |c| < |d| built from d, after sign normalisation."""
    c, d = _exact_pair(c, d)
    if n < 4:
        raise PreconditionError("Case 2 requires n >= 4")
    if not abs(c) < abs(d):
        raise PreconditionError("Case 2 requires |c| < |d|")
    c, d = normalize_sign(c, d)
    z0 = witness(n, 3, d)
    closed = case2_closed_form(n, c, d)
    gap = _cross_check(z0, n, d, case2_operator_values(n, c, d), c, d, closed)
    if not gap < 0:
        raise InvariantError(f"Case 2 gap {gap} is not negative")
    return CounterexampleReport("2", n, 3, c, d, z0, gap, closed, True)


def construct_highk(n: int, k: int, c, d) -> CounterexampleReport:
    """k in {4, 5} witness ((n-k)c, (n-k)c, -c, ...); sign observed, not assumed.

    For k = 5 the negative sign is only claimed for n <= 9; larger n is
    reported as exploratory.
    """
    c, d = _exact_pair(c, d)
    if k not in (4, 5):
        raise PreconditionError("high-k witnesses exist for k = 4 and k = 5 only")
    if n <= k:
        raise PreconditionError(f"need n >= k + 1 = {k + 1}")
    if d == 0:
        raise PreconditionError("complex roots require d != 0")
    if abs(c) < abs(d):
        raise PreconditionError("the high-k witness requires |c| >= |d|")
    z0 = witness(n, k, c)
    gap = complex_gap(z0, c, d, k)
    exploratory = k == 5 and n > HIGHK_K5_MAX_N
    return CounterexampleReport("highk", n, k, c, d, z0, gap, None, gap < 0, exploratory)


def probe_gap(x, a, b, k: int) -> GapReport:
    """Unconstrained S'_k gap for arbitrary (a, b); no sign is asserted."""
    return newton_gap(x, QuadCoef(a, b), k)


CASE1_C = [Fraction(1), Fraction(-1), Fraction(2), Fraction(3, 2), Fraction(-5, 2)]
CASE1_RATIO = [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 3), Fraction(2, 3)]
CASE2_D = CASE1_C
CASE2_RATIO = [Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(2, 3), Fraction(-9, 10)]


def default_grid(case: str) -> list[tuple]:
    """25 deterministic (c, d) pairs satisfying the case's hypothesis."""
    if case in ("1", "highk"):
        return [(c, c * r) for c in CASE1_C for r in CASE1_RATIO]
    if case == "2":
        return [(d * r, d) for d in CASE2_D for r in CASE2_RATIO]
    raise PreconditionError(f"unknown case {case!r}")


def sweep(case: str, ns: Iterable[int], pairs: Iterable[tuple] | None = None,
          k: int = 3) -> list[CounterexampleReport]:
    pairs = list(pairs) if pairs is not None else default_grid(case)
    out = []
    for n in ns:
        for c, d in pairs:
            if case == "1":
                out.append(construct_case1(n, c, d))
            elif case == "2":
                out.append(construct_case2(n, c, d))
            elif case == "highk":
                out.append(construct_highk(n, k, c, d))
            else:
                raise PreconditionError(f"unknown case {case!r}")
    return out


def sweep_csv(reports: Iterable[CounterexampleReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()

"""Linear combinations of consecutive symmetric means.

Three operator families are supported, each a fixed combination
``sum_i w_i * E_{k-i}(x)``:

* :class:`TwoShift` ``(alpha, beta)``: ``E_k + (alpha+beta) E_{k-1} + alpha*beta E_{k-2}``
* :class:`QuadCoef` ``(a, b)``: ``E_k + a E_{k-1} + b E_{k-2}``
* :class:`Binomial` ``(alpha, s)``: ``sum_{i=0}^{s} C(s, i) alpha^i E_{k-i}``

Indices outside ``0..n`` contribute zero, so every family is defined for all
integer ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PreconditionError
from .symcore import (
    EXACT,
    FLOAT,
    Scalar,
    SigmaTable,
    SymPoint,
    as_point,
    binomial,
    common_mode,
    format_scalar,
    parse_scalar,
    shift_vector,
    sigma_all,
    to_scalar,
)


@dataclass(frozen=True)
class TwoShift:
    alpha: Scalar
    beta: Scalar

    kind = "two_shift"

    def weights(self, mode: str) -> list:
        al, be = to_scalar(self.alpha, mode), to_scalar(self.beta, mode)
        return [to_scalar(1, mode), al + be, al * be]

    def params(self) -> tuple:
        return (self.alpha, self.beta)

    def to_json(self) -> dict:
        return {"kind": self.kind, "alpha": format_scalar(self.alpha), "beta": format_scalar(self.beta)}


@dataclass(frozen=True)
class QuadCoef:
    a: Scalar
    b: Scalar

    kind = "quad"

    def weights(self, mode: str) -> list:
        return [to_scalar(1, mode), to_scalar(self.a, mode), to_scalar(self.b, mode)]

    def params(self) -> tuple:
        return (self.a, self.b)

    def to_json(self) -> dict:
        return {"kind": self.kind, "a": format_scalar(self.a), "b": format_scalar(self.b)}


@dataclass(frozen=True)
class Binomial:
    alpha: Scalar
    s: int

    kind = "binomial"

    def __post_init__(self):
        if isinstance(self.s, bool) or not isinstance(self.s, int) or self.s < 1:
            raise PreconditionError(f"Binomial operator needs integer s >= 1, got {self.s!r}")

    def weights(self, mode: str) -> list:
        al = to_scalar(self.alpha, mode)
        return [binomial(self.s, i) * al**i for i in range(self.s + 1)]

    def params(self) -> tuple:
        return (self.alpha,)

    def to_json(self) -> dict:
        return {"kind": self.kind, "alpha": format_scalar(self.alpha), "s": self.s}


OperatorSpec = Union[TwoShift, QuadCoef, Binomial]


def spec_from_json(obj: dict, mode: str = EXACT) -> OperatorSpec:
    kind = obj.get("kind")
    num = lambda v: v if isinstance(v, (int, float, Fraction)) else parse_scalar(str(v), mode)
    if kind == "two_shift":
        return TwoShift(num(obj["alpha"]), num(obj["beta"]))
    if kind == "quad":
        return QuadCoef(num(obj["a"]), num(obj["b"]))
    if kind == "binomial":
        return Binomial(num(obj["alpha"]), int(obj["s"]))
    raise PreconditionError(f"unknown operator kind {kind!r}")


def _table(x) -> SigmaTable:
    if isinstance(x, SigmaTable):
        return x
    return sigma_all(as_point(x))


def _mode_for(table: SigmaTable, spec: OperatorSpec) -> str:
    for p in spec.params():
        to_scalar(p, table.mode)  # raises ModeError on a mixed-mode spec
    return table.mode


def evaluate(spec: OperatorSpec, x, k: int) -> Scalar:
    """Value of ``spec``'s operator of index ``k`` at ``x`` (point or SigmaTable)."""
    table = _table(x)
    mode = _mode_for(table, spec)
    total = to_scalar(0, mode)
    for i, w in enumerate(spec.weights(mode)):
        total += w * table.e_at(k - i)
    return total


def eval_S(x, alpha, beta, k: int) -> Scalar:
    """E_k + (alpha + beta) E_{k-1} + alpha*beta E_{k-2}."""
    return evaluate(TwoShift(alpha, beta), x, k)


def eval_S_prime(x, a, b, k: int) -> Scalar:
    """E_k + a E_{k-1} + b E_{k-2}."""
    return evaluate(QuadCoef(a, b), x, k)


def eval_S_ks(x, alpha, s: int, k: int) -> Scalar:
    """sum_{i=0}^{s} C(s, i) alpha^i E_{k-i}."""
    return evaluate(Binomial(alpha, s), x, k)


@dataclass(frozen=True)
class RealRoots:
    """t^2 + a t + b = (t + alpha)(t + beta) with rational alpha <= beta."""

    alpha: Scalar
    beta: Scalar

    kind = "real_roots"

    def to_json(self) -> dict:
        return {"kind": self.kind, "alpha": format_scalar(self.alpha), "beta": format_scalar(self.beta)}


@dataclass(frozen=True)
class RealIrrational:
    discriminant: Scalar

    kind = "real_irrational"

    def to_json(self) -> dict:
        return {"kind": self.kind, "discriminant": format_scalar(self.discriminant)}


@dataclass(frozen=True)
class ComplexRoots:
    """Roots -c +/- i*d with d^2 = b - a^2/4 > 0."""

    c: Scalar
    d_squared: Scalar

    kind = "complex_roots"

    def to_json(self) -> dict:
        return {"kind": self.kind, "c": format_scalar(self.c), "d_squared": format_scalar(self.d_squared)}


QuadRootClass = Union[RealRoots, RealIrrational, ComplexRoots]


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def classify_quadratic(a, b) -> QuadRootClass:
    """Classify the roots of t^2 + a t + b, reporting them as -alpha, -beta."""
    mode = common_mode(a, b)
    a, b = to_scalar(a, mode), to_scalar(b, mode)
    disc = a * a - 4 * b
    if mode == FLOAT:
        tol = 1e-12 * max(a * a, abs(b))
        if disc < -tol:
            return ComplexRoots(a / 2, b - a * a / 4)
        root = math.sqrt(disc) if disc > tol else 0.0
        return RealRoots((a - root) / 2, (a + root) / 2)
    if disc < 0:
        return ComplexRoots(a / 2, b - a * a / 4)
    root = rational_sqrt(disc)
    if root is None:
        return RealIrrational(disc)
    return RealRoots((a - root) / 2, (a + root) / 2)


def shift_identity_check(x, alpha, k: int) -> bool:
    """Check E_k(x + alpha*e) == sum_{i<=k} C(k, i) alpha^(k-i) E_i(x)."""
    x = as_point(x)
    if not 0 <= k <= x.n:
        raise PreconditionError(f"shift identity index k={k} outside 0..{x.n}")
    alpha = x.scalar(alpha)
    lhs = sigma_all(shift_vector(x, alpha)).e_at(k)
    table = sigma_all(x)
    rhs = sum((binomial(k, i) * alpha ** (k - i) * table.e_at(i) for i in range(k + 1)), x.scalar(0))
    if x.mode == FLOAT:
        return math.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-9)
    return lhs == rhs
